#include <random>

#include "doctest.h"
#include "edgecut/classical_params.hpp"
#include "edgecut/error.hpp"
#include "edgecut/families.hpp"
#include "edgecut/predicates.hpp"
#include "oracles.hpp"

using namespace edgecut;

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(complete(6)).value == 5);
  CHECK(edge_connectivity(complete_bipartite(4, 3)).value == 3);
  for (const Graph& t : all_trees(7)) CHECK(edge_connectivity(t).value == 1);
  auto r = edge_connectivity(wheel(6));
  CHECK(r.value == 3);
  CHECK(is_edge_cut(wheel(6), r.witness));
  CHECK_THROWS_AS(edge_connectivity(Graph(1, {})), PreconditionError);
  CHECK_THROWS_AS(edge_connectivity(Graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("matching and edge cover") {
  CHECK(max_matching(cycle(6)).value == 3);
  CHECK(max_matching(complete_bipartite(5, 1)).value == 1);
  CHECK(max_matching(complete(4)).value == 2);
  CHECK(edge_cover_number(cycle(6)).value == 3);
  CHECK(edge_cover_number(complete_bipartite(5, 1)).value == 5);
  CHECK(edge_cover_number(path(4)).value == 2);
  CHECK_THROWS_AS(edge_cover_number(Graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("edge domination number") {
  CHECK(edge_domination_number(complete(5)).value == 2);
  CHECK(edge_domination_number(complete(6)).value == 3);
  CHECK(edge_domination_number(cycle(6)).value == 2);
  CHECK(edge_domination_number(path(7)).value == 2);
  CHECK_THROWS_AS(edge_domination_number(Graph(2, {})), PreconditionError);
  SearchCaps tight{5, 5};
  CHECK_THROWS_AS(edge_domination_number(complete(5), tight), CapExceeded);
}

TEST_CASE("witnesses pass their predicates and match brute force on the catalogue") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : all_connected_graphs(n)) {
      auto lam = edge_connectivity(g);
      auto beta = max_matching(g);
      auto alpha = edge_cover_number(g);
      auto dom = edge_domination_number(g);
      CHECK(lam.value == oracle::edge_connectivity(g));
      CHECK(beta.value == oracle::matching_number(g));
      CHECK(dom.value == oracle::edge_domination(g));
      CHECK(alpha.value + beta.value == g.n());
      CHECK(lam.witness.size() == lam.value);
      CHECK(is_edge_cut(g, lam.witness));
      CHECK(is_matching(g, beta.witness));
      CHECK(beta.witness.size() == beta.value);
      CHECK(is_edge_cover(g, alpha.witness));
      CHECK(alpha.witness.size() == alpha.value);
      CHECK(is_edge_dominating(g, dom.witness));
    }
}

TEST_CASE("domination witness is the lexicographically first optimum") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_connected(rng, 4 + trial % 4, 0.3);
    auto dom = edge_domination_number(g);
    std::optional<std::uint64_t> first;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask)
      if (std::popcount(mask) == dom.value && oracle::dominating(g, mask) &&
          (!first || mask_lex_less(mask, *first)))
        first = mask;
    REQUIRE(first);
    CHECK(dom.witness.to_mask() == *first);
  }
}
