#include "edgecut/classical_params.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "edgecut/error.hpp"
#include "edgecut/kernels.hpp"
#include "edgecut/subsets.hpp"

namespace edgecut {

namespace {

// Unit-capacity residual network; arcs 2e (u->v) and 2e+1 (v->u) each start
// with capacity 1, and pushing along one arc frees its partner.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), capacity_(2 * static_cast<std::size_t>(g.m()), 1) {}

  int max_flow(int source, int sink, std::uint64_t& augmentations) {
    std::fill(capacity_.begin(), capacity_.end(), 1);
    int flow = 0;
    while (augment(source, sink)) {
      ++flow;
      ++augmentations;
    }
    return flow;
  }

  // Vertices reachable from source in the current residual network.
  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(static_cast<std::size_t>(g_.n()), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g_.incident(v)) {
        auto [arc, to] = outgoing(e, v);
        if (capacity_[arc] > 0 && !seen[to]) {
          seen[to] = true;
          queue.push_back(to);
        }
      }
    }
    return seen;
  }

 private:
  std::pair<std::size_t, int> outgoing(int e, int from) const {
    auto [u, v] = g_.edge(e);
    return from == u ? std::pair{2 * static_cast<std::size_t>(e), v}
                     : std::pair{2 * static_cast<std::size_t>(e) + 1, u};
  }

  bool augment(int source, int sink) {
    std::vector<std::size_t> via(static_cast<std::size_t>(g_.n()), kNone);
    std::vector<int> prev(static_cast<std::size_t>(g_.n()), -1);
    std::deque<int> queue{source};
    prev[source] = source;
    while (!queue.empty() && prev[sink] < 0) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g_.incident(v)) {
        auto [arc, to] = outgoing(e, v);
        if (capacity_[arc] > 0 && prev[to] < 0) {
          prev[to] = v;
          via[to] = arc;
          queue.push_back(to);
        }
      }
    }
    if (prev[sink] < 0) return false;
    for (int v = sink; v != source; v = prev[v]) {
      --capacity_[via[v]];
      ++capacity_[via[v] ^ 1];
    }
    return true;
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const Graph& g_;
  std::vector<int> capacity_;
};

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g)
      : g_(g), used_(static_cast<std::size_t>(g.n()), false), chosen_(g.m()), best_(g.m()) {}

  void run() { branch(0, 0); }
  int best_size() const { return best_size_; }
  const EdgeSet& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Free vertices that still have an undecided edge between two free vertices.
  int bound(int from) const {
    std::vector<bool> touched(static_cast<std::size_t>(g_.n()), false);
    int count = 0;
    for (int e = from; e < g_.m(); ++e) {
      auto [u, v] = g_.edge(e);
      if (used_[u] || used_[v]) continue;
      if (!touched[u]) touched[u] = true, ++count;
      if (!touched[v]) touched[v] = true, ++count;
    }
    return count / 2;
  }

  void branch(int next, int size) {
    ++nodes_;
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen_;
    }
    if (next == g_.m() || size + bound(next) <= best_size_) return;
    auto [u, v] = g_.edge(next);
    if (!used_[u] && !used_[v]) {
      used_[u] = used_[v] = true;
      chosen_.insert(next);
      branch(next + 1, size + 1);
      chosen_.erase(next);
      used_[u] = used_[v] = false;
    }
    branch(next + 1, size);
  }

  const Graph& g_;
  std::vector<bool> used_;
  EdgeSet chosen_;
  EdgeSet best_;
  int best_size_ = -1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ParamResult edge_connectivity(const Graph& g) {
  if (g.n() < 2) throw PreconditionError("edge connectivity needs at least two vertices");
  if (!is_connected(g)) throw PreconditionError("edge connectivity needs a connected graph");
  UnitFlow flow(g);
  ParamResult out{"lambda", std::numeric_limits<int>::max(), g.empty_set(), 0};
  for (int sink = 1; sink < g.n(); ++sink) {
    int value = flow.max_flow(0, sink, out.subsets_examined);
    if (value >= out.value) continue;
    out.value = value;
    auto side = flow.reachable(0);
    out.witness = g.empty_set();
    for (int e = 0; e < g.m(); ++e) {
      if (side[g.edge(e).first] != side[g.edge(e).second]) out.witness.insert(e);
    }
  }
  return out;
}

ParamResult max_matching(const Graph& g) {
  MatchingSearch search(g);
  search.run();
  return {"beta1", search.best_size(), search.best(), search.nodes()};
}

ParamResult edge_cover_number(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("vertex " + std::to_string(v) + " is isolated; no edge cover exists");
    }
  }
  ParamResult matching = max_matching(g);
  std::vector<bool> covered(static_cast<std::size_t>(g.n()), false);
  matching.witness.for_each([&](int e) {
    covered[g.edge(e).first] = true;
    covered[g.edge(e).second] = true;
  });
  EdgeSet cover = matching.witness;
  for (int v = 0; v < g.n(); ++v) {
    if (!covered[v]) cover.insert(g.incident(v).front());
  }
  return {"alpha1", g.n() - matching.value, cover, matching.subsets_examined};
}

ParamResult edge_domination_number(const Graph& g, const SearchCaps& caps) {
  if (g.m() == 0) throw PreconditionError("edge domination number needs at least one edge");
  if (g.m() > caps.subset_search) throw CapExceeded("subset-search", caps.subset_search, g.m());
  const auto masks = kernels::EdgeMasks::build(g);
  ParamResult out{"gamma_prime", 0, g.empty_set(), 0};
  for (int k = 1; k <= g.m(); ++k) {
    std::uint64_t found = 0;
    bool hit = false;
    out.subsets_examined += for_each_k_subset(g.m(), k, [&](std::uint64_t set) {
      if (!kernels::dominates(masks, set)) return false;
      found = set;
      return hit = true;
    });
    if (hit) {
      out.value = k;
      out.witness = EdgeSet::from_mask(g.m(), found);
      return out;
    }
  }
  throw Error("no edge dominating set found");  // unreachable: E dominates itself
}

bool is_edge_cover(const Graph& g, const EdgeSet& f) {
  std::vector<bool> covered(static_cast<std::size_t>(g.n()), false);
  f.for_each([&](int e) {
    covered[g.edge(e).first] = true;
    covered[g.edge(e).second] = true;
  });
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_matching(const Graph& g, const EdgeSet& f) {
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  bool ok = true;
  f.for_each([&](int e) {
    auto [u, v] = g.edge(e);
    if (used[u] || used[v]) ok = false;
    used[u] = used[v] = true;
  });
  return ok;
}

}  // namespace edgecut
