#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "edgecut/error.hpp"
#include "edgecut/families.hpp"
#include "edgecut/graph.hpp"
#include "oracles.hpp"

using namespace edgecut;

TEST_CASE("construction normalizes and rejects bad pairs") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(c4.m() == 4);
  CHECK(c4.edge_index(3, 0) == c4.edge_index(0, 3));
  Graph k2(2, {{1, 0}});
  CHECK(k2.m() == 1);
  CHECK(k2.edge(0) == VertexPair{0, 1});
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(0, {}), PreconditionError);
}

TEST_CASE("edge sets") {
  EdgeSet s(70, {0, 3, 65});
  CHECK(s.size() == 3);
  CHECK(s.indices() == std::vector<int>{0, 3, 65});
  CHECK(s.complement().size() == 67);
  CHECK_THROWS_AS(s.insert(70), PreconditionError);
  CHECK_THROWS_AS((void)(s & EdgeSet(5)), PreconditionError);
  CHECK(EdgeSet::lex_less(EdgeSet(5, {0, 4}), EdgeSet(5, {1, 2})));
  CHECK(mask_lex_less(0b10001, 0b00110));
  CHECK_FALSE(mask_lex_less(0b00110, 0b10001));
}

TEST_CASE("component counts") {
  Graph c4 = cycle(4);
  CHECK(component_count(c4, c4.edge_set({{0, 1}, {2, 3}})) == 2);
  Graph k4 = complete(4);
  CHECK(component_count(k4, k4.empty_set()) == 1);
  auto fig2 = figure2();
  CHECK(component_count(fig2.graph, fig2.named) == 2);
  CHECK(is_connected(path(5)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(figure1().graph));
}

TEST_CASE("removing more edges never merges components") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(rng, 2 + trial % 7, 0.4);
    CHECK(component_count(g, g.all_edges()) == g.n());
    EdgeSet removed = g.empty_set();
    int prev = component_count(g, removed);
    std::vector<int> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int e : order) {
      removed.insert(e);
      int now = component_count(g, removed);
      CHECK(now >= prev);
      CHECK(now <= prev + 1);
      prev = now;
    }
  }
}

TEST_CASE("edge neighbours") {
  Graph p3 = path(3);
  CHECK(edge_neighbors(p3, 0) == EdgeSet(2, {1}));
  Graph k4 = complete(4);
  for (int e = 0; e < k4.m(); ++e) CHECK(edge_neighbors(k4, e).size() == 4);
  auto fig1 = figure1();
  const Graph& g = fig1.graph;
  CHECK(edge_neighbors(g, g.edge_index(2, 3)) == g.edge_set({{1, 2}, {2, 4}, {3, 4}}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph r = oracle::random_connected(rng, 6, 0.5);
    for (int a = 0; a < r.m(); ++a)
      for (int b = 0; b < r.m(); ++b)
        CHECK(edge_neighbors(r, a).contains(b) == edge_neighbors(r, b).contains(a));
  }
}

TEST_CASE("canonical form is a complete invariant on small graphs") {
  Graph c4 = cycle(4);
  std::vector<int> perm{2, 0, 3, 1};
  CHECK(canonical_form(c4) == canonical_form(c4.relabeled(perm)));
  CHECK(canonical_form(path(4)) != canonical_form(complete_bipartite(3, 1)));

  std::set<std::string> labelings;
  std::vector<int> p{0, 1, 2};
  do labelings.insert(canonical_form(path(3).relabeled(p)));
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(labelings.size() == 1);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(rng, 2 + trial % 7, 0.3);
    std::vector<int> q(g.n());
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(q.begin(), q.end(), rng);
    const std::string code = canonical_form(g);
    CHECK(canonical_form(g.relabeled(q)) == code);
    Graph back = from_canonical_form(code);
    CHECK(canonical_form(back) == code);
    CHECK(back.m() == g.m());
  }
}
