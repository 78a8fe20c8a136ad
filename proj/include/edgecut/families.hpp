#pragma once

#include <string>
#include <vector>

#include "edgecut/edge_set.hpp"
#include "edgecut/graph.hpp"

namespace edgecut {

enum class Family { complete, cycle, path, wheel, complete_bipartite, two_cliques, figure1, figure2 };

/// Named family plus its integer parameters. Unused parameters stay 0.
struct FamilySpec {
  Family family;
  int n = 0;
  int m = 0;
  int path_len = 0;

  /// e.g. "cycle(7)", "complete_bipartite(4,2)", "two_cliques(3,4,2)".
  std::string label() const;
};

std::string family_name(Family f);
/// Throws PreconditionError for an unknown name.
Family family_from_name(const std::string& name);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

/// Hub n joined to rim 0..n-1; the rim is C_n. Order n + 1, size 2n.
Graph wheel(int n);

/// Parts {0..m-1} and {m..m+n-1}; requires m >= n >= 1.
Graph complete_bipartite(int m, int n);

/// K_m on {0..m-1} and K_n on {m..m+n-1} joined by a path of 1 or 2 edges.
/// Length 1 adds (0, m); length 2 adds vertex m+n with (0, m+n) and (m, m+n).
Graph two_cliques(int m, int n, int path_len);

/// A fixture graph plus the edge set named in its caption.
struct Fixture {
  Graph graph;
  EdgeSet named;
};

/// n = 6; named set {a, b} = {(1,2), (2,3)}.
Fixture figure1();
/// n = 5; named set {a, b, c} = {(1,2), (2,4), (3,4)}.
Fixture figure2();

Graph generate(const FamilySpec& spec);

/// All non-isomorphic trees on n vertices (1 <= n <= 9), from every Pruefer
/// sequence. Each tree is returned in a canonical labeling, sorted by code.
std::vector<Graph> all_trees(int n);

/// Number of labeled trees decoded by all_trees(n), i.e. n^(n-2).
long long labeled_tree_count(int n);

/// Canonical parenthesis code of a tree, invariant under relabeling.
std::string tree_code(const Graph& tree);

/// All non-isomorphic connected graphs on n vertices (2 <= n <= 6, or n = 7
/// when allow_n7 is set), canonical labelings sorted by canonical_form.
std::vector<Graph> all_connected_graphs(int n, bool allow_n7 = false);

/// Brute labeled enumeration route, usable for n <= 6 only.
std::vector<Graph> all_connected_graphs_brute(int n);

/// Every connected graph on k+1 vertices, given every connected graph on k
/// vertices: attach a new vertex to each nonempty vertex subset, then dedup.
/// This is the n = 7 route of all_connected_graphs. Requires k + 1 <= 8.
std::vector<Graph> extend_connected(const std::vector<Graph>& smaller);

}  // namespace edgecut
