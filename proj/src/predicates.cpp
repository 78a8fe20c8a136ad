#include "edgecut/predicates.hpp"

#include "edgecut/error.hpp"

namespace edgecut {

namespace {

void require_owner(const Graph& g, const EdgeSet& f) {
  if (f.owner_m() != g.m()) throw PreconditionError("edge set belongs to a different graph");
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("edge cuts are only defined for connected graphs");
}

void require_member(const EdgeSet& f, int e) {
  if (!f.contains(e)) throw PreconditionError("edge " + std::to_string(e) + " is not in the set");
}

// Each member is independent in f, or f minus it is not a cut.
template <typename MemberOk>
bool every_member_or_not_cut(const Graph& g, const EdgeSet& f, Mode mode, MemberOk&& ok) {
  require_owner(g, f);
  require_connected(g);
  if (mode == Mode::strict && !is_edge_cut(g, f)) return false;
  bool all = true;
  f.for_each([&](int e) {
    if (all && !ok(e) && is_edge_cut(g, f.without(e))) all = false;
  });
  return all;
}

}  // namespace

const char* mode_name(Mode mode) { return mode == Mode::literal ? "literal" : "strict"; }

Mode mode_from_name(const std::string& name) {
  if (name == "literal") return Mode::literal;
  if (name == "strict") return Mode::strict;
  throw PreconditionError("unknown mode '" + name + "' (expected literal or strict)");
}

bool is_edge_dominating(const Graph& g, const EdgeSet& f) {
  require_owner(g, f);
  std::vector<bool> touched(static_cast<std::size_t>(g.n()), false);
  f.for_each([&](int e) {
    touched[g.edge(e).first] = true;
    touched[g.edge(e).second] = true;
  });
  for (int e = 0; e < g.m(); ++e) {
    if (f.contains(e)) continue;
    if (!touched[g.edge(e).first] && !touched[g.edge(e).second]) return false;
  }
  return true;
}

bool is_edge_cut(const Graph& g, const EdgeSet& f) {
  require_owner(g, f);
  require_connected(g);
  return component_count(g, f) >= 2;
}

bool is_edge_cut_dominating(const Graph& g, const EdgeSet& f) {
  return is_edge_cut(g, f) && is_edge_dominating(g, f);
}

bool is_minimal_ecd(const Graph& g, const EdgeSet& f) {
  if (!is_edge_cut_dominating(g, f)) {
    throw PreconditionError("minimality is only defined for edge cut dominating sets");
  }
  bool minimal = true;
  f.for_each([&](int e) {
    if (!minimal) return;
    EdgeSet rest = f.without(e);
    if (is_edge_dominating(g, rest) && is_edge_cut(g, rest)) minimal = false;
  });
  return minimal;
}

bool is_independent_in(const Graph& g, const EdgeSet& f, int e) {
  require_owner(g, f);
  require_member(f, e);
  return !edge_neighbors(g, e).intersects(f);
}

EdgeSet private_neighbors(const Graph& g, const EdgeSet& f, int e) {
  require_owner(g, f);
  require_member(f, e);
  EdgeSet out(g.m());
  edge_neighbors(g, e).for_each([&](int candidate) {
    if (f.contains(candidate)) return;
    EdgeSet touching = edge_neighbors(g, candidate) & f;
    if (touching.size() == 1) out.insert(candidate);  // the single member is e
  });
  return out;
}

bool has_private_neighbor(const Graph& g, const EdgeSet& f, int e) {
  return is_independent_in(g, f, e) || !private_neighbors(g, f, e).empty();
}

bool is_irredundant_set(const Graph& g, const EdgeSet& f) {
  require_owner(g, f);
  bool all = true;
  f.for_each([&](int e) {
    if (all && !has_private_neighbor(g, f, e)) all = false;
  });
  return all;
}

bool is_ec_irredundant(const Graph& g, const EdgeSet& f, Mode mode) {
  return every_member_or_not_cut(g, f, mode, [&](int e) { return has_private_neighbor(g, f, e); });
}

bool is_maximal_ec_irredundant(const Graph& g, const EdgeSet& f, Mode mode) {
  if (!is_ec_irredundant(g, f, mode)) {
    throw PreconditionError("maximality is only defined for edge cut irredundant sets");
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!f.contains(e) && is_ec_irredundant(g, f.with(e), mode)) return false;
  }
  return true;
}

bool is_ec_independent(const Graph& g, const EdgeSet& f, Mode mode) {
  return every_member_or_not_cut(g, f, mode, [&](int e) { return is_independent_in(g, f, e); });
}

bool is_maximal_ec_independent(const Graph& g, const EdgeSet& f, Mode mode) {
  if (!is_ec_independent(g, f, mode)) {
    throw PreconditionError("maximality is only defined for edge cut independent sets");
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!f.contains(e) && is_ec_independent(g, f.with(e), mode)) return false;
  }
  return true;
}

}  // namespace edgecut
