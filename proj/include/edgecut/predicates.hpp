#pragma once

#include "edgecut/edge_set.hpp"
#include "edgecut/graph.hpp"

namespace edgecut {

/// How the edge cut irredundance/independence definitions are read.
///
/// `literal` applies the member-wise conditions exactly as stated, which any
/// non-cut set satisfies vacuously. `strict` additionally requires the set to
/// be an edge cut.
enum class Mode { literal, strict };

const char* mode_name(Mode mode);
/// Accepts "literal" or "strict"; throws PreconditionError otherwise.
Mode mode_from_name(const std::string& name);

/// Every edge outside f shares an endpoint with an edge of f.
bool is_edge_dominating(const Graph& g, const EdgeSet& f);

/// Removing f disconnects g. Requires g connected.
bool is_edge_cut(const Graph& g, const EdgeSet& f);

bool is_edge_cut_dominating(const Graph& g, const EdgeSet& f);

/// Requires f to be edge cut dominating. True iff no f - {e} is still both
/// dominating and a cut.
bool is_minimal_ecd(const Graph& g, const EdgeSet& f);

/// Edges outside f adjacent to e and to no other member of f. Requires e in f.
EdgeSet private_neighbors(const Graph& g, const EdgeSet& f, int e);

/// e is independent in f, or private_neighbors(g, f, e) is non-empty.
bool has_private_neighbor(const Graph& g, const EdgeSet& f, int e);

/// e shares no endpoint with another member of f. Requires e in f.
bool is_independent_in(const Graph& g, const EdgeSet& f, int e);

/// Every member has a private neighbor.
bool is_irredundant_set(const Graph& g, const EdgeSet& f);

bool is_ec_irredundant(const Graph& g, const EdgeSet& f, Mode mode = Mode::literal);

/// Requires is_ec_irredundant(g, f, mode).
bool is_maximal_ec_irredundant(const Graph& g, const EdgeSet& f, Mode mode = Mode::literal);

bool is_ec_independent(const Graph& g, const EdgeSet& f, Mode mode = Mode::literal);

/// Requires is_ec_independent(g, f, mode).
bool is_maximal_ec_independent(const Graph& g, const EdgeSet& f, Mode mode = Mode::literal);

}  // namespace edgecut
