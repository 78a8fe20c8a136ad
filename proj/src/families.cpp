#include "edgecut/families.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

#include "edgecut/error.hpp"

namespace edgecut {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

constexpr std::array<const char*, 8> kFamilyNames = {
    "complete", "cycle", "path", "wheel", "complete_bipartite", "two_cliques", "figure1", "figure2"};

}  // namespace

std::string family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

Family family_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (name == kFamilyNames[i]) return static_cast<Family>(i);
  }
  throw PreconditionError("unknown family '" + name + "'");
}

std::string FamilySpec::label() const {
  std::string name = family_name(family);
  switch (family) {
    case Family::complete_bipartite:
      return name + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::two_cliques:
      return name + "(" + std::to_string(m) + "," + std::to_string(n) + "," +
             std::to_string(path_len) + ")";
    case Family::figure1:
    case Family::figure2:
      return name;
    default:
      return name + "(" + std::to_string(n) + ")";
  }
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<VertexPair> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<VertexPair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

Graph wheel(int n) {
  require(n >= 3, "wheel needs a rim of n >= 3 vertices");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) {
    pairs.emplace_back(i, (i + 1) % n);
    pairs.emplace_back(i, n);
  }
  return Graph(n + 1, pairs);
}

Graph complete_bipartite(int m, int n) {
  require(n >= 1, "complete bipartite graph needs both sides non-empty");
  require(m >= n, "complete_bipartite(m, n) needs m >= n (larger side first)");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) pairs.emplace_back(i, m + j);
  return Graph(m + n, pairs);
}

Graph two_cliques(int m, int n, int path_len) {
  require(m > 2 && n > 2, "two_cliques needs both cliques of order > 2");
  require(path_len == 1 || path_len == 2, "two_cliques path length must be 1 or 2");
  std::vector<VertexPair> pairs;
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(m + i, m + j);
  if (path_len == 1) {
    pairs.emplace_back(0, m);
    return Graph(m + n, pairs);
  }
  pairs.emplace_back(0, m + n);
  pairs.emplace_back(m, m + n);
  return Graph(m + n + 1, pairs);
}

Fixture figure1() {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  EdgeSet named = g.edge_set({{1, 2}, {2, 3}});
  return {std::move(g), std::move(named)};
}

Fixture figure2() {
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  EdgeSet named = g.edge_set({{1, 2}, {2, 4}, {3, 4}});
  return {std::move(g), std::move(named)};
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::path: return path(spec.n);
    case Family::wheel: return wheel(spec.n);
    case Family::complete_bipartite: return complete_bipartite(spec.m, spec.n);
    case Family::two_cliques: return two_cliques(spec.m, spec.n, spec.path_len);
    case Family::figure1: return figure1().graph;
    case Family::figure2: return figure2().graph;
  }
  throw PreconditionError("unknown family");
}

// ---------------------------------------------------------------------------
// Trees

namespace {

constexpr int kMaxTreeOrder = 9;

// Parenthesis code: bit string of length `len`, stored right-aligned.
struct ParenCode {
  std::uint32_t bits = 0;
  int len = 0;
};

bool paren_less(const ParenCode& a, const ParenCode& b) {
  // Codes are prefix-free, so comparing left-aligned words is lexicographic.
  return (std::uint64_t{a.bits} << (32 - a.len)) < (std::uint64_t{b.bits} << (32 - b.len));
}

using Adjacency = std::array<std::array<int, kMaxTreeOrder>, kMaxTreeOrder>;

ParenCode rooted_code(const Adjacency& adj, const std::array<int, kMaxTreeOrder>& deg, int v,
                      int parent) {
  std::array<ParenCode, kMaxTreeOrder> kids;
  int count = 0;
  for (int i = 0; i < deg[v]; ++i) {
    int w = adj[v][i];
    if (w != parent) kids[count++] = rooted_code(adj, deg, w, v);
  }
  std::sort(kids.begin(), kids.begin() + count, paren_less);
  ParenCode out{1, 1};
  for (int i = 0; i < count; ++i) {
    out.bits = (out.bits << kids[i].len) | kids[i].bits;
    out.len += kids[i].len;
  }
  out.bits <<= 1;
  out.len += 1;
  return out;
}

ParenCode tree_paren_code(int n, const std::vector<VertexPair>& edges) {
  Adjacency adj{};
  std::array<int, kMaxTreeOrder> deg{};
  for (auto [u, v] : edges) {
    adj[u][deg[u]++] = v;
    adj[v][deg[v]++] = u;
  }
  // Peel leaves until one or two centers remain.
  std::array<int, kMaxTreeOrder> remaining = deg;
  std::array<bool, kMaxTreeOrder> gone{};
  int alive = n;
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (remaining[v] <= 1) layer.push_back(v);
  while (alive > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = true;
      --alive;
      for (int i = 0; i < deg[v]; ++i) {
        int w = adj[v][i];
        if (!gone[w] && --remaining[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  ParenCode best;
  bool have = false;
  for (int v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ParenCode c = rooted_code(adj, deg, v, -1);
    if (!have || paren_less(c, best)) best = c;
    have = true;
  }
  return best;
}

std::string pack_tree_code(int n, const ParenCode& code) {
  std::string out(1, static_cast<char>(n));
  for (int shift = 24; shift >= 0; shift -= 8) out += static_cast<char>((code.bits >> shift) & 0xFF);
  return out;
}

Graph tree_from_code(const std::string& packed) {
  const int n = static_cast<unsigned char>(packed[0]);
  std::uint32_t bits = 0;
  for (int i = 1; i <= 4; ++i) bits = (bits << 8) | static_cast<unsigned char>(packed[i]);
  std::vector<VertexPair> pairs;
  std::vector<int> stack;
  int next_label = 0;
  for (int k = 2 * n - 1; k >= 0; --k) {
    if ((bits >> k) & 1U) {
      int v = next_label++;
      if (!stack.empty()) pairs.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return Graph(n, pairs);
}

std::vector<VertexPair> decode_pruefer(int n, const std::vector<int>& seq) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[x];
  std::vector<VertexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n - 1));
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    pairs.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        pairs.emplace_back(u, v);
        break;
      }
    }
  }
  return pairs;
}

}  // namespace

std::string tree_code(const Graph& tree) {
  require(tree.n() <= kMaxTreeOrder, "tree_code supports at most 9 vertices");
  require(tree.m() == tree.n() - 1 && is_connected(tree), "tree_code needs a tree");
  return pack_tree_code(tree.n(), tree_paren_code(tree.n(), tree.edges()));
}

long long labeled_tree_count(int n) {
  require(n >= 1 && n <= kMaxTreeOrder, "tree order must be in 1..9");
  long long total = 1;
  for (int i = 0; i < n - 2; ++i) total *= n;
  return total;
}

std::vector<Graph> all_trees(int n) {
  require(n >= 1 && n <= kMaxTreeOrder, "tree order must be in 1..9");
  if (n == 1) return {Graph(1, {})};
  std::set<std::string> codes;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    codes.insert(pack_tree_code(n, tree_paren_code(n, decode_pruefer(n, seq))));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(tree_from_code(c));
  return out;
}

// ---------------------------------------------------------------------------
// Connected graphs

namespace {

constexpr int kMaxBruteOrder = 6;
constexpr int kMaxCatalogueOrder = 7;

bool rows_connected(const std::vector<std::uint32_t>& rows) {
  const std::uint32_t all = (1U << rows.size()) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

std::vector<Graph> decode_all(const std::set<std::string>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(from_canonical_form(c));
  return out;
}

}  // namespace

std::vector<Graph> all_connected_graphs_brute(int n) {
  require(n >= 1 && n <= kMaxBruteOrder, "brute enumeration supports 1 <= n <= 6");
  const int bits = n * (n - 1) / 2;
  std::vector<VertexPair> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::string> codes;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  std::vector<VertexPair> pairs;
  for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    pairs.clear();
    for (int k = 0; k < bits; ++k) {
      if ((mask >> k) & 1U) {
        auto [u, v] = slots[k];
        rows[u] |= 1U << v;
        rows[v] |= 1U << u;
        pairs.push_back(slots[k]);
      }
    }
    if (!rows_connected(rows)) continue;
    codes.insert(canonical_form(Graph(n, pairs)));
  }
  return decode_all(codes);
}

std::vector<Graph> extend_connected(const std::vector<Graph>& smaller) {
  std::set<std::string> codes;
  for (const Graph& g : smaller) {
    const int k = g.n();
    require(k + 1 <= kMaxCanonicalOrder, "extend_connected supports results up to 8 vertices");
    std::vector<VertexPair> pairs(g.edges().begin(), g.edges().end());
    const std::size_t base = pairs.size();
    for (std::uint32_t subset = 1; subset < (1U << k); ++subset) {
      pairs.resize(base);
      for (int v = 0; v < k; ++v)
        if ((subset >> v) & 1U) pairs.emplace_back(v, k);
      codes.insert(canonical_form(Graph(k + 1, pairs)));
    }
  }
  return decode_all(codes);
}

std::vector<Graph> all_connected_graphs(int n, bool allow_n7) {
  require(n >= 2 && n <= kMaxCatalogueOrder, "connected graph catalogue supports 2 <= n <= 7");
  if (n == kMaxCatalogueOrder) {
    require(allow_n7, "n = 7 catalogue must be requested explicitly");
    return extend_connected(all_connected_graphs_brute(kMaxBruteOrder));
  }
  return all_connected_graphs_brute(n);
}

}  // namespace edgecut
