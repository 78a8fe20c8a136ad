#pragma once

#include <cstdint>
#include <string>

#include "edgecut/edge_set.hpp"
#include "edgecut/graph.hpp"

namespace edgecut {

/// One parameter's exact value, a witness achieving it, and how much work the
/// search did (subsets tested, or augmenting paths for max-flow).
struct ParamResult {
  std::string name;
  int value = 0;
  EdgeSet witness;
  std::uint64_t subsets_examined = 0;
};

/// Size limits for the exponential searches.
struct SearchCaps {
  /// Ascending-cardinality subset searches (gamma', gamma_ct, constrained searches).
  int subset_search = 28;
  /// Full 2^m scans behind the extremal parameters.
  int full_scan = 20;
};

/// lambda(g) as the smallest unit-capacity max-flow from vertex 0 to any other
/// vertex; the witness is the min cut of the first minimizing target.
ParamResult edge_connectivity(const Graph& g);

/// beta_1 by include/exclude branch and bound over edges in index order.
ParamResult max_matching(const Graph& g);

/// alpha_1 = n - beta_1; the witness extends a maximum matching by the
/// lowest-index edge at each unmatched vertex. No isolated vertices allowed.
ParamResult edge_cover_number(const Graph& g);

/// gamma' by ascending-cardinality search; witness is the lexicographically
/// first dominating subset of minimum size. Requires m >= 1.
ParamResult edge_domination_number(const Graph& g, const SearchCaps& caps = {});

/// Every vertex is an endpoint of some member.
bool is_edge_cover(const Graph& g, const EdgeSet& f);

/// No two members share an endpoint.
bool is_matching(const Graph& g, const EdgeSet& f);

}  // namespace edgecut
