#include "edgecut/edge_set.hpp"

#include <algorithm>

#include "edgecut/error.hpp"

namespace edgecut {

namespace {

std::size_t word_count(int m) { return (static_cast<std::size_t>(m) + 63) / 64; }

}  // namespace

EdgeSet::EdgeSet(int owner_m) : owner_m_(owner_m) {
  if (owner_m < 0) throw PreconditionError("edge set owner size must be non-negative");
  words_.assign(word_count(owner_m), 0);
}

EdgeSet::EdgeSet(int owner_m, std::initializer_list<int> edges) : EdgeSet(owner_m) {
  for (int e : edges) insert(e);
}

EdgeSet EdgeSet::from_mask(int owner_m, std::uint64_t mask) {
  if (owner_m > 64) throw PreconditionError("from_mask needs at most 64 edges");
  EdgeSet s(owner_m);
  if (owner_m == 0) return s;
  if (owner_m < 64) mask &= (std::uint64_t{1} << owner_m) - 1;
  s.words_[0] = mask;
  return s;
}

EdgeSet EdgeSet::full(int owner_m) {
  EdgeSet s(owner_m);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (int tail = owner_m % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

int EdgeSet::size() const noexcept {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

void EdgeSet::check_index(int e) const {
  if (e < 0 || e >= owner_m_) {
    throw PreconditionError("edge index " + std::to_string(e) + " out of range for " +
                            std::to_string(owner_m_) + " edges");
  }
}

void EdgeSet::check_owner(const EdgeSet& other) const {
  if (other.owner_m_ != owner_m_) throw PreconditionError("edge sets belong to different graphs");
}

bool EdgeSet::contains(int e) const {
  check_index(e);
  return (words_[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1U;
}

void EdgeSet::insert(int e) {
  check_index(e);
  words_[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(int e) {
  check_index(e);
  words_[static_cast<std::size_t>(e) / 64] &= ~(std::uint64_t{1} << (e % 64));
}

EdgeSet EdgeSet::with(int e) const {
  EdgeSet out = *this;
  out.insert(e);
  return out;
}

EdgeSet EdgeSet::without(int e) const {
  EdgeSet out = *this;
  out.erase(e);
  return out;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet out = full(owner_m_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  check_owner(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

EdgeSet EdgeSet::operator&(const EdgeSet& other) const {
  check_owner(other);
  EdgeSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

EdgeSet EdgeSet::operator|(const EdgeSet& other) const {
  check_owner(other);
  EdgeSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::uint64_t EdgeSet::to_mask() const {
  if (owner_m_ > 64) throw PreconditionError("to_mask needs at most 64 edges");
  return words_.empty() ? 0 : words_[0];
}

bool EdgeSet::lex_less(const EdgeSet& a, const EdgeSet& b) {
  auto ia = a.indices();
  auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace edgecut
