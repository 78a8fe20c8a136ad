#pragma once

// Brute-force reference computations for tests. Everything here enumerates
// all 2^m edge subsets and decides properties with union-find connectivity
// and plain loops, never touching the searches or kernels under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "edgecut/graph.hpp"

namespace oracle {

using edgecut::EdgeSet;
using edgecut::Graph;

inline EdgeSet subset(const Graph& g, std::uint64_t mask) { return EdgeSet::from_mask(g.m(), mask); }

inline bool disconnects(const Graph& g, std::uint64_t mask) {
  return edgecut::component_count(g, subset(g, mask)) >= 2;
}

inline bool shares_endpoint(const Graph& g, int a, int b) {
  auto [u1, v1] = g.edge(a);
  auto [u2, v2] = g.edge(b);
  return u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
}

inline bool dominating(const Graph& g, std::uint64_t mask) {
  for (int e = 0; e < g.m(); ++e) {
    if ((mask >> e) & 1U) continue;
    bool hit = false;
    for (int f = 0; f < g.m() && !hit; ++f) hit = ((mask >> f) & 1U) && shares_endpoint(g, e, f);
    if (!hit) return false;
  }
  return true;
}

inline bool matching(const Graph& g, std::uint64_t mask) {
  for (int a = 0; a < g.m(); ++a)
    for (int b = a + 1; b < g.m(); ++b)
      if (((mask >> a) & (mask >> b) & 1U) && shares_endpoint(g, a, b)) return false;
  return true;
}

template <typename Pred>
std::optional<int> min_size(const Graph& g, Pred&& pred) {
  std::optional<int> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
    const int size = std::popcount(mask);
    if ((!best || size < *best) && pred(mask)) best = size;
  }
  return best;
}

template <typename Pred>
std::optional<int> max_size(const Graph& g, Pred&& pred) {
  std::optional<int> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
    const int size = std::popcount(mask);
    if ((!best || size > *best) && pred(mask)) best = size;
  }
  return best;
}

inline int edge_connectivity(const Graph& g) {
  return *min_size(g, [&](std::uint64_t s) { return disconnects(g, s); });
}

inline int matching_number(const Graph& g) {
  return *max_size(g, [&](std::uint64_t s) { return matching(g, s); });
}

inline int edge_domination(const Graph& g) {
  return *min_size(g, [&](std::uint64_t s) { return dominating(g, s); });
}

inline int gamma_ct(const Graph& g) {
  return *min_size(g, [&](std::uint64_t s) { return dominating(g, s) && disconnects(g, s); });
}

// Member-wise clauses straight from the definitions.
inline bool independent_in(const Graph& g, std::uint64_t set, int e) {
  for (int f = 0; f < g.m(); ++f)
    if (f != e && ((set >> f) & 1U) && shares_endpoint(g, e, f)) return false;
  return true;
}

inline bool has_private(const Graph& g, std::uint64_t set, int e) {
  if (independent_in(g, set, e)) return true;
  for (int out = 0; out < g.m(); ++out) {
    if (((set >> out) & 1U) || !shares_endpoint(g, out, e)) continue;
    bool other = false;
    for (int f = 0; f < g.m() && !other; ++f)
      other = f != e && ((set >> f) & 1U) && shares_endpoint(g, out, f);
    if (!other) return true;
  }
  return false;
}

inline bool ec_irredundant(const Graph& g, std::uint64_t set, bool strict) {
  if (strict && !disconnects(g, set)) return false;
  for (int e = 0; e < g.m(); ++e) {
    if (!((set >> e) & 1U)) continue;
    if (!has_private(g, set, e) && disconnects(g, set & ~(std::uint64_t{1} << e))) return false;
  }
  return true;
}

inline bool ec_independent(const Graph& g, std::uint64_t set, bool strict) {
  if (strict && !disconnects(g, set)) return false;
  for (int e = 0; e < g.m(); ++e) {
    if (!((set >> e) & 1U)) continue;
    if (!independent_in(g, set, e) && disconnects(g, set & ~(std::uint64_t{1} << e))) return false;
  }
  return true;
}

inline bool ecd(const Graph& g, std::uint64_t set) { return dominating(g, set) && disconnects(g, set); }

inline bool minimal_ecd(const Graph& g, std::uint64_t set) {
  if (!ecd(g, set)) return false;
  for (int e = 0; e < g.m(); ++e)
    if (((set >> e) & 1U) && ecd(g, set & ~(std::uint64_t{1} << e))) return false;
  return true;
}

template <typename Member>
bool maximal(const Graph& g, std::uint64_t set, Member&& member) {
  if (!member(set)) return false;
  for (int e = 0; e < g.m(); ++e)
    if (!((set >> e) & 1U) && member(set | (std::uint64_t{1} << e))) return false;
  return true;
}

struct Profile {
  std::optional<int> gamma_ct, upper_gamma_ct, ir_ct, upper_ir_ct, i_ct, beta_ct;
};

inline Profile profile(const Graph& g, bool strict) {
  auto irr = [&](std::uint64_t s) { return ec_irredundant(g, s, strict); };
  auto ind = [&](std::uint64_t s) { return ec_independent(g, s, strict); };
  auto is_min_ecd = [&](std::uint64_t s) { return minimal_ecd(g, s); };
  auto is_max_irr = [&](std::uint64_t s) { return maximal(g, s, irr); };
  auto is_max_ind = [&](std::uint64_t s) { return maximal(g, s, ind); };
  return {min_size(g, is_min_ecd), max_size(g, is_min_ecd), min_size(g, is_max_irr),
          max_size(g, is_max_irr), min_size(g, is_max_ind), max_size(g, is_max_ind)};
}

/// Random connected graph: a random spanning tree plus extra edges.
inline Graph random_connected(std::mt19937& rng, int n, double extra_density) {
  std::vector<edgecut::VertexPair> pairs;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    pairs.emplace_back(u, v);
    used[u][v] = used[v][u] = true;
  }
  std::bernoulli_distribution coin(extra_density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[u][v] && coin(rng)) pairs.emplace_back(u, v);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return Graph(n, pairs).relabeled(perm);
}

}  // namespace oracle
