#include <set>

#include "doctest.h"
#include "edgecut/error.hpp"
#include "edgecut/families.hpp"

using namespace edgecut;

namespace {

int bridges(const Graph& g) {
  int count = 0;
  for (int e = 0; e < g.m(); ++e) count += component_count(g, EdgeSet(g.m(), {e})) > 1;
  return count;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(complete(4).m() == 6);
  CHECK(cycle(3) == complete(3));
  CHECK(path(1).n() == 1);
  CHECK(path(1).m() == 0);
  CHECK(cycle(12).m() == 12);
  CHECK_THROWS_AS(cycle(2), PreconditionError);

  CHECK(canonical_form(wheel(3)) == canonical_form(complete(4)));
  Graph w5 = wheel(5);
  CHECK(w5.n() == 6);
  CHECK(w5.m() == 10);
  Graph w6 = wheel(6);
  CHECK(w6.degree(6) == 6);
  for (int v = 0; v < 6; ++v) CHECK(w6.degree(v) == 3);

  CHECK(complete_bipartite(3, 3).m() == 9);
  CHECK(canonical_form(complete_bipartite(4, 1)) ==
        canonical_form(Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})));
  CHECK_THROWS_AS(complete_bipartite(2, 3), PreconditionError);
}

TEST_CASE("two cliques joined by a short path") {
  Graph a = two_cliques(3, 3, 1);
  CHECK(a.m() == 7);
  CHECK(a.adjacent(0, 3));
  CHECK(bridges(a) == 1);
  Graph b = two_cliques(4, 4, 2);
  CHECK(b.n() == 9);
  CHECK(b.m() == 14);
  CHECK(bridges(b) == 2);
  CHECK_THROWS_AS(two_cliques(2, 3, 1), PreconditionError);
  CHECK_THROWS_AS(two_cliques(3, 3, 3), PreconditionError);
}

TEST_CASE("figure fixtures") {
  auto f1 = figure1();
  CHECK(f1.graph.m() == 6);
  CHECK(is_connected(f1.graph));
  CHECK(f1.named == f1.graph.edge_set({{1, 2}, {2, 3}}));
  auto f2 = figure2();
  CHECK(f2.graph.m() == 6);
  CHECK(is_connected(f2.graph));
  CHECK(f2.named.size() == 3);
}

TEST_CASE("family names and specs") {
  for (Family f : {Family::complete, Family::cycle, Family::path, Family::wheel,
                   Family::complete_bipartite, Family::two_cliques, Family::figure1, Family::figure2})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("petersen"), PreconditionError);
  CHECK(generate({Family::two_cliques, 4, 4, 2}) == two_cliques(4, 4, 2));
}

TEST_CASE("tree enumeration matches the unlabeled tree census") {
  const int census[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    auto trees = all_trees(n);
    CHECK(trees.size() == static_cast<std::size_t>(census[n]));
    std::set<std::string> forms;
    for (const Graph& t : trees) {
      CHECK(t.m() == n - 1);
      CHECK(is_connected(t));
      if (n <= kMaxCanonicalOrder) forms.insert(canonical_form(t));
    }
    if (n <= kMaxCanonicalOrder) CHECK(forms.size() == trees.size());
  }
  CHECK(labeled_tree_count(7) == 16807);
}

TEST_CASE("connected graph enumeration matches the census") {
  const std::size_t census[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 2; n <= 6; ++n) {
    auto graphs = all_connected_graphs(n);
    CHECK(graphs.size() == census[n]);
    CHECK(all_connected_graphs_brute(n) == graphs);
    if (n >= 3) CHECK(extend_connected(all_connected_graphs(n - 1)) == graphs);
  }
  CHECK(all_connected_graphs(7, true).size() == census[7]);
  CHECK_THROWS_AS(all_connected_graphs(7), PreconditionError);
}
