#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace edgecut {

/// Subset of a graph's edges, addressed by edge index.
///
/// Bits at positions >= owner_m() are always clear, so complement and
/// cardinality are well defined relative to the owning graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int owner_m);
  EdgeSet(int owner_m, std::initializer_list<int> edges);

  /// Builds a set from the low owner_m bits of `mask` (owner_m <= 64).
  static EdgeSet from_mask(int owner_m, std::uint64_t mask);
  static EdgeSet full(int owner_m);

  int owner_m() const noexcept { return owner_m_; }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(int e) const;
  void insert(int e);
  void erase(int e);

  EdgeSet with(int e) const;
  EdgeSet without(int e) const;
  EdgeSet complement() const;

  bool intersects(const EdgeSet& other) const;
  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet operator&(const EdgeSet& other) const;
  EdgeSet operator|(const EdgeSet& other) const;

  /// Edge indices in ascending order.
  std::vector<int> indices() const;

  /// Low 64 bits; throws PreconditionError if owner_m() > 64.
  std::uint64_t to_mask() const;

  /// Lexicographic order on the ascending index tuple.
  static bool lex_less(const EdgeSet& a, const EdgeSet& b);

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  void check_owner(const EdgeSet& other) const;
  void check_index(int e) const;

  int owner_m_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ascending-tuple lexicographic comparison of two equally sized masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace edgecut
