#include "edgecut/graph.hpp"

#include <algorithm>
#include <numeric>

#include "edgecut/error.hpp"

namespace edgecut {

Graph::Graph(int n, std::span<const VertexPair> pairs) : n_(n) {
  if (n < 1) throw PreconditionError("graph must have at least one vertex");
  edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("endpoint out of range in pair (" + std::to_string(u) + "," +
                              std::to_string(v) + ") for n=" + std::to_string(n));
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw PreconditionError("duplicate pair (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");
  }
  incidence_.resize(static_cast<std::size_t>(n));
  for (int e = 0; e < m(); ++e) {
    incidence_[static_cast<std::size_t>(edges_[e].first)].push_back(e);
    incidence_[static_cast<std::size_t>(edges_[e].second)].push_back(e);
  }
}

int Graph::edge_index(int u, int v) const {
  VertexPair key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

EdgeSet Graph::edge_set(std::initializer_list<VertexPair> pairs) const {
  EdgeSet s(m());
  for (auto [u, v] : pairs) {
    int e = edge_index(u, v);
    if (e < 0) {
      throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not an edge");
    }
    s.insert(e);
  }
  return s;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw PreconditionError("permutation size does not match vertex count");
  }
  std::vector<VertexPair> pairs;
  pairs.reserve(edges_.size());
  for (auto [u, v] : edges_) pairs.emplace_back(perm[u], perm[v]);
  return Graph(n_, pairs);
}

std::string Graph::describe(const EdgeSet& s) const {
  std::string out;
  s.for_each([&](int e) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(edges_[e].first) + ',' + std::to_string(edges_[e].second) + ')';
  });
  return out.empty() ? "{}" : out;
}

DisjointSets::DisjointSets(int count)
    : parent_(static_cast<std::size_t>(count)), size_(static_cast<std::size_t>(count), 1),
      sets_(count) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

int component_count(const Graph& g, const EdgeSet& removed) {
  if (removed.owner_m() != g.m()) throw PreconditionError("edge set belongs to a different graph");
  DisjointSets sets(g.n());
  for (int e = 0; e < g.m(); ++e) {
    if (!removed.contains(e)) sets.unite(g.edge(e).first, g.edge(e).second);
  }
  return sets.set_count();
}

bool is_connected(const Graph& g) { return component_count(g, g.empty_set()) == 1; }

EdgeSet edge_neighbors(const Graph& g, int e) {
  if (e < 0 || e >= g.m()) throw PreconditionError("edge index " + std::to_string(e) + " out of range");
  EdgeSet out(g.m());
  auto [u, v] = g.edge(e);
  for (int f : g.incident(u)) out.insert(f);
  for (int f : g.incident(v)) out.insert(f);
  out.erase(e);
  return out;
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  if (g.m() > 64) throw PreconditionError("neighbor masks need at most 64 edges");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g.m()), 0);
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t at_v = 0;
    for (int e : g.incident(v)) at_v |= std::uint64_t{1} << e;
    for (int e : g.incident(v)) out[e] |= at_v & ~(std::uint64_t{1} << e);
  }
  return out;
}

std::string canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCanonicalOrder) {
    throw PreconditionError("canonical_form supports at most " +
                            std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  std::uint32_t rows[kMaxCanonicalOrder] = {};
  for (auto [u, v] : g.edges()) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
  const int bits = n * (n - 1) / 2;
  int perm[kMaxCanonicalOrder];
  std::iota(perm, perm + n, 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t code = 0;
    for (int j = 1; j < n; ++j) {
      const std::uint32_t row = rows[perm[j]];
      for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> perm[i]) & 1U);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm, perm + n));

  std::string out(1 + static_cast<std::size_t>((bits + 7) / 8), '\0');
  out[0] = static_cast<char>(n);
  for (int k = 0; k < bits; ++k) {
    if ((best >> (bits - 1 - k)) & 1U) out[1 + k / 8] |= static_cast<char>(0x80 >> (k % 8));
  }
  return out;
}

Graph from_canonical_form(const std::string& code) {
  if (code.empty()) throw PreconditionError("empty canonical code");
  const int n = static_cast<unsigned char>(code[0]);
  const int bits = n * (n - 1) / 2;
  if (n < 1 || n > kMaxCanonicalOrder || code.size() != 1 + static_cast<std::size_t>((bits + 7) / 8)) {
    throw PreconditionError("malformed canonical code");
  }
  std::vector<VertexPair> pairs;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (static_cast<unsigned char>(code[1 + k / 8]) & (0x80 >> (k % 8))) pairs.emplace_back(i, j);
    }
  }
  return Graph(n, pairs);
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

}  // namespace edgecut
