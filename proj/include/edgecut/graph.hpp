#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgecut/edge_set.hpp"

namespace edgecut {

using VertexPair = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as (u, v) with u < v, sorted lexicographically. The edge
/// index assigned at construction is the edge's identity everywhere else in
/// the library.
class Graph {
 public:
  /// Normalizes each pair to (min, max) and sorts. Throws PreconditionError on
  /// an endpoint out of range, a loop, a duplicate pair, or n < 1.
  Graph(int n, std::span<const VertexPair> pairs);
  Graph(int n, std::initializer_list<VertexPair> pairs)
      : Graph(n, std::span<const VertexPair>(pairs.begin(), pairs.size())) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  const VertexPair& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  /// Edge indices incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  /// Index of edge {u, v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  EdgeSet empty_set() const { return EdgeSet(m()); }
  EdgeSet all_edges() const { return EdgeSet::full(m()); }
  /// Set built from vertex pairs; throws PreconditionError if a pair is not an edge.
  EdgeSet edge_set(std::initializer_list<VertexPair> pairs) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// "(0,1) (1,2)" style rendering of an edge set.
  std::string describe(const EdgeSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int count);

  int find(int x);
  /// Returns true if x and y were in different sets.
  bool unite(int x, int y);
  int set_count() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Components of the spanning subgraph (V, E - removed); isolated vertices count.
int component_count(const Graph& g, const EdgeSet& removed);

/// A single vertex with no edges counts as connected.
bool is_connected(const Graph& g);

/// Edges other than e sharing an endpoint with e.
EdgeSet edge_neighbors(const Graph& g, int e);

/// Bit i of entry e is set iff edge i shares an endpoint with edge e (i != e).
/// Requires m <= 64.
std::vector<std::uint64_t> neighbor_masks(const Graph& g);

/// Number of permutations canonical_form scans is n!, so n is capped here.
inline constexpr int kMaxCanonicalOrder = 8;

/// Isomorphism-invariant code: minimum upper-triangle adjacency bit string
/// over all vertex permutations. Byte 0 holds n; the bit string follows,
/// most significant bit first, zero padded. Requires n <= 8.
std::string canonical_form(const Graph& g);

/// The graph whose adjacency matrix is encoded by a canonical_form string.
Graph from_canonical_form(const std::string& code);

/// Lowercase hex rendering of a byte string.
std::string to_hex(const std::string& bytes);

}  // namespace edgecut
