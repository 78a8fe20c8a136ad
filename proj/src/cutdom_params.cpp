#include "edgecut/cutdom_params.hpp"

#include <array>

#include "edgecut/error.hpp"
#include "edgecut/subsets.hpp"
#include "parallel.hpp"

namespace edgecut {

namespace {

void require_cut_domain(const Graph& g) {
  if (g.n() < 2) throw PreconditionError("a single vertex has no edge cut");
  if (!is_connected(g)) throw PreconditionError("edge cut parameters need a connected graph");
}

void self_check(bool ok, const char* what) {
  if (!ok) throw Error(std::string("internal check failed: witness is not ") + what);
}

// Running min/max over one set family with lexicographic tie-breaking.
struct Tally {
  std::uint64_t count = 0;
  int min_size = 0;
  std::uint64_t min_set = 0;
  int max_size = 0;
  std::uint64_t max_set = 0;

  void add(std::uint64_t set) {
    const int size = std::popcount(set);
    if (count == 0 || size < min_size || (size == min_size && mask_lex_less(set, min_set))) {
      min_size = size;
      min_set = set;
    }
    if (count == 0 || size > max_size || (size == max_size && mask_lex_less(set, max_set))) {
      max_size = size;
      max_set = set;
    }
    ++count;
  }

  void merge(const Tally& other) {
    if (other.count == 0) return;
    const std::uint64_t total = count + other.count;
    add(other.min_set);
    add(other.max_set);
    count = total;
  }

  Extremum low(int m) const {
    if (count == 0) return {std::nullopt, EdgeSet(m)};
    return {min_size, EdgeSet::from_mask(m, min_set)};
  }
  Extremum high(int m) const {
    if (count == 0) return {std::nullopt, EdgeSet(m)};
    return {max_size, EdgeSet::from_mask(m, max_set)};
  }
};

constexpr std::uint64_t kKernelBlock = 4096;

}  // namespace

ParamResult gamma_ct(const Graph& g, const SearchCaps& caps) {
  require_cut_domain(g);
  if (g.m() > caps.subset_search) throw CapExceeded("subset-search", caps.subset_search, g.m());
  const int lambda = edge_connectivity(g).value;
  const auto masks = kernels::EdgeMasks::build(g);
  ParamResult out{"gamma_ct", 0, g.empty_set(), 0};
  for (int k = lambda; k <= g.m(); ++k) {
    std::uint64_t found = 0;
    bool hit = false;
    out.subsets_examined += for_each_k_subset(g.m(), k, [&](std::uint64_t set) {
      if (!kernels::dominates(masks, set) || !kernels::disconnects(masks, set)) return false;
      found = set;
      return hit = true;
    });
    if (hit) {
      out.value = k;
      out.witness = EdgeSet::from_mask(g.m(), found);
      self_check(is_edge_cut_dominating(g, out.witness), "edge cut dominating");
      return out;
    }
  }
  throw Error("no edge cut dominating set found");  // unreachable for n >= 2: E qualifies
}

SubsetScan::SubsetScan(const Graph& g, const ScanOptions& options)
    : graph_(g), m_(g.m()), workers_(std::max(1U, options.workers)) {
  require_cut_domain(g);
  if (g.m() > options.caps.full_scan) throw CapExceeded("full-scan", options.caps.full_scan, g.m());
  const auto masks = kernels::EdgeMasks::build(g);
  const kernels::Isa isa = kernels::resolve(options.isa);
  const std::uint64_t total = subset_count();
  flags_.assign(total, 0);

  detail::parallel_ranges(total, workers_, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::array<std::uint8_t, kKernelBlock> dom{};
    std::array<std::uint8_t, kKernelBlock> cut{};
    for (std::uint64_t at = begin; at < end; at += kKernelBlock) {
      const std::size_t len = static_cast<std::size_t>(std::min(kKernelBlock, end - at));
      kernels::dominating_flags(masks, at, std::span(dom.data(), len), isa);
      kernels::cut_flags(masks, at, std::span(cut.data(), len), isa);
      for (std::size_t i = 0; i < len; ++i) {
        flags_[at + i] = static_cast<std::uint8_t>((dom[i] ? kDominating : 0) | (cut[i] ? kCut : 0));
      }
    }
  });

  // Member-wise conditions need cut flags of every f - {e}, so they run as a
  // second pass once the first is complete.
  const std::vector<std::uint64_t> nbr = neighbor_masks(g);
  const std::uint64_t all = masks.all_edges;
  detail::parallel_ranges(total, workers_, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t set = begin; set < end; ++set) {
      std::uint64_t isolated = 0;  // members independent in set
      for (std::uint64_t s = set; s != 0; s &= s - 1) {
        const int e = std::countr_zero(s);
        if ((nbr[e] & set) == 0) isolated |= std::uint64_t{1} << e;
      }
      std::uint64_t with_private = isolated;
      for (std::uint64_t out = all & ~set; out != 0; out &= out - 1) {
        const std::uint64_t touching = nbr[std::countr_zero(out)] & set;
        if (touching != 0 && (touching & (touching - 1)) == 0) with_private |= touching;
      }
      std::uint64_t keeps_cut = 0;  // members whose removal leaves a cut
      for (std::uint64_t s = set; s != 0; s &= s - 1) {
        const int e = std::countr_zero(s);
        if (flags_[set & ~(std::uint64_t{1} << e)] & kCut) keeps_cut |= std::uint64_t{1} << e;
      }
      std::uint8_t extra = 0;
      if ((keeps_cut & ~with_private) == 0) extra |= kEcIrredundant;
      if ((keeps_cut & ~isolated) == 0) extra |= kEcIndependent;
      flags_[set] |= extra;
    }
  });
}

bool SubsetScan::minimal_ecd(std::uint64_t set) const {
  if (!ecd(set)) return false;
  for (std::uint64_t s = set; s != 0; s &= s - 1) {
    if (ecd(set & ~(s & (~s + 1)))) return false;
  }
  return true;
}

template <typename Member>
bool SubsetScan::maximal(std::uint64_t set, Member&& member) const {
  if (!member(set)) return false;
  const std::uint64_t all = (std::uint64_t{1} << m_) - 1;
  for (std::uint64_t out = all & ~set; out != 0; out &= out - 1) {
    if (member(set | (out & (~out + 1)))) return false;
  }
  return true;
}

bool SubsetScan::maximal_ec_irredundant(std::uint64_t set, Mode mode) const {
  return maximal(set, [&](std::uint64_t s) { return ec_irredundant(s, mode); });
}

bool SubsetScan::maximal_ec_independent(std::uint64_t set, Mode mode) const {
  return maximal(set, [&](std::uint64_t s) { return ec_independent(s, mode); });
}

CtProfile SubsetScan::profile(Mode mode) const {
  struct Partial {
    Tally minimal_ecd, irredundant, independent;
  };
  std::vector<Partial> partials(workers_);
  detail::parallel_ranges(subset_count(), workers_,
                          [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
                            Partial& p = partials[w];
                            for (std::uint64_t set = begin; set < end; ++set) {
                              if (minimal_ecd(set)) p.minimal_ecd.add(set);
                              if (maximal_ec_irredundant(set, mode)) p.irredundant.add(set);
                              if (maximal_ec_independent(set, mode)) p.independent.add(set);
                            }
                          });
  Partial total;
  for (const auto& p : partials) {
    total.minimal_ecd.merge(p.minimal_ecd);
    total.irredundant.merge(p.irredundant);
    total.independent.merge(p.independent);
  }

  CtProfile out;
  out.mode = mode;
  out.gamma_ct = total.minimal_ecd.low(m_);
  out.upper_gamma_ct = total.minimal_ecd.high(m_);
  out.ir_ct = total.irredundant.low(m_);
  out.upper_ir_ct = total.irredundant.high(m_);
  out.i_ct = total.independent.low(m_);
  out.beta_ct = total.independent.high(m_);
  out.minimal_ecd_count = total.minimal_ecd.count;
  out.maximal_ec_irredundant_count = total.irredundant.count;
  out.maximal_ec_independent_count = total.independent.count;

  // Re-verify every witness through the direct predicates.
  const Graph& g = graph_;
  for (const Extremum* x : {&out.gamma_ct, &out.upper_gamma_ct}) {
    if (x->value) self_check(is_edge_cut_dominating(g, x->witness) && is_minimal_ecd(g, x->witness),
                             "a minimal edge cut dominating set");
  }
  for (const Extremum* x : {&out.ir_ct, &out.upper_ir_ct}) {
    if (x->value) self_check(is_ec_irredundant(g, x->witness, mode) &&
                                 is_maximal_ec_irredundant(g, x->witness, mode),
                             "a maximal edge cut irredundant set");
  }
  for (const Extremum* x : {&out.i_ct, &out.beta_ct}) {
    if (x->value) self_check(is_ec_independent(g, x->witness, mode) &&
                                 is_maximal_ec_independent(g, x->witness, mode),
                             "a maximal edge cut independent set");
  }
  return out;
}

CtProfile ct_profile(const Graph& g, Mode mode, const ScanOptions& options) {
  return SubsetScan(g, options).profile(mode);
}

namespace {

template <typename Keep>
std::vector<EdgeSet> collect(const SubsetScan& scan, Keep&& keep) {
  std::vector<EdgeSet> out;
  for (std::uint64_t set = 0; set < scan.subset_count(); ++set) {
    if (keep(set)) out.push_back(EdgeSet::from_mask(scan.m(), set));
  }
  return out;
}

}  // namespace

std::vector<EdgeSet> enumerate_minimal_ecd(const Graph& g, const ScanOptions& options) {
  SubsetScan scan(g, options);
  return collect(scan, [&](std::uint64_t s) { return scan.minimal_ecd(s); });
}

std::vector<EdgeSet> enumerate_maximal_ec_irredundant(const Graph& g, Mode mode,
                                                      const ScanOptions& options) {
  SubsetScan scan(g, options);
  return collect(scan, [&](std::uint64_t s) { return scan.maximal_ec_irredundant(s, mode); });
}

std::vector<EdgeSet> enumerate_maximal_ec_independent(const Graph& g, Mode mode,
                                                      const ScanOptions& options) {
  SubsetScan scan(g, options);
  return collect(scan, [&](std::uint64_t s) { return scan.maximal_ec_independent(s, mode); });
}

}  // namespace edgecut
