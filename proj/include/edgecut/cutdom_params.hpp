#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgecut/classical_params.hpp"
#include "edgecut/kernels.hpp"
#include "edgecut/predicates.hpp"

namespace edgecut {

/// gamma_ct by ascending-cardinality search starting at lambda(g). The
/// witness is the lexicographically first edge cut dominating subset of
/// minimum size. Requires g connected, n >= 2, m <= caps.subset_search.
ParamResult gamma_ct(const Graph& g, const SearchCaps& caps = {});

/// Minimum or maximum of one set family; `value` is empty when the family is.
struct Extremum {
  std::optional<int> value;
  EdgeSet witness;
};

/// The six edge-cut parameters of a graph under one interpretation mode.
struct CtProfile {
  Mode mode = Mode::literal;
  Extremum gamma_ct;        // min over minimal edge cut dominating sets
  Extremum upper_gamma_ct;  // Gamma_ct: max over minimal edge cut dominating sets
  Extremum ir_ct;           // min over maximal edge cut irredundant sets
  Extremum upper_ir_ct;     // IR_ct
  Extremum i_ct;            // min over maximal edge cut independent sets
  Extremum beta_ct;         // max over maximal edge cut independent sets
  std::uint64_t minimal_ecd_count = 0;
  std::uint64_t maximal_ec_irredundant_count = 0;
  std::uint64_t maximal_ec_independent_count = 0;
};

struct ScanOptions {
  SearchCaps caps;
  /// Threads for the 2^m scan; the result does not depend on this.
  unsigned workers = 1;
  kernels::Isa isa = kernels::Isa::automatic;
};

/// Classification of all 2^m edge subsets of one graph.
///
/// Flags are evaluated once per subset with the bit-parallel kernels; the
/// minimality and maximality queries then only look up single-edge
/// neighbours of a mask.
class SubsetScan {
 public:
  /// Requires g connected, n >= 2 and m <= options.caps.full_scan.
  SubsetScan(const Graph& g, const ScanOptions& options = {});

  int m() const noexcept { return m_; }
  std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << m_; }

  bool dominating(std::uint64_t set) const { return flags_[set] & kDominating; }
  bool cut(std::uint64_t set) const { return flags_[set] & kCut; }
  bool ecd(std::uint64_t set) const { return (flags_[set] & kEcd) == kEcd; }
  bool ec_irredundant(std::uint64_t set, Mode mode) const { return holds(set, kEcIrredundant, mode); }
  bool ec_independent(std::uint64_t set, Mode mode) const { return holds(set, kEcIndependent, mode); }

  bool minimal_ecd(std::uint64_t set) const;
  bool maximal_ec_irredundant(std::uint64_t set, Mode mode) const;
  bool maximal_ec_independent(std::uint64_t set, Mode mode) const;

  CtProfile profile(Mode mode) const;

 private:
  static constexpr std::uint8_t kDominating = 1;
  static constexpr std::uint8_t kCut = 2;
  static constexpr std::uint8_t kEcd = kDominating | kCut;
  static constexpr std::uint8_t kEcIrredundant = 4;  // literal reading
  static constexpr std::uint8_t kEcIndependent = 8;  // literal reading

  bool holds(std::uint64_t set, std::uint8_t flag, Mode mode) const {
    const std::uint8_t f = flags_[set];
    return (f & flag) && (mode == Mode::literal || (f & kCut));
  }
  template <typename Member>
  bool maximal(std::uint64_t set, Member&& member) const;

  Graph graph_;
  int m_;
  unsigned workers_;
  std::vector<std::uint8_t> flags_;
};

/// Full-scan profile. Requires g connected, n >= 2, m <= options.caps.full_scan.
CtProfile ct_profile(const Graph& g, Mode mode = Mode::literal, const ScanOptions& options = {});

/// All minimal edge cut dominating sets in ascending mask order.
std::vector<EdgeSet> enumerate_minimal_ecd(const Graph& g, const ScanOptions& options = {});
std::vector<EdgeSet> enumerate_maximal_ec_irredundant(const Graph& g, Mode mode,
                                                      const ScanOptions& options = {});
std::vector<EdgeSet> enumerate_maximal_ec_independent(const Graph& g, Mode mode,
                                                      const ScanOptions& options = {});

}  // namespace edgecut
