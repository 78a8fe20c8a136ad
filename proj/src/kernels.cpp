#include "edgecut/kernels.hpp"

#include <cstdlib>

#include "edgecut/error.hpp"

namespace edgecut::kernels {

EdgeMasks EdgeMasks::build(const Graph& g) {
  if (g.n() > 64 || g.m() > kMaxMaskEdges) {
    throw PreconditionError("mask kernels need n <= 64 and m <= " + std::to_string(kMaxMaskEdges));
  }
  EdgeMasks out;
  out.n = g.n();
  out.m = g.m();
  out.all_edges = (std::uint64_t{1} << g.m()) - 1;
  out.all_vertices = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  out.closed_neighbors = neighbor_masks(g);
  out.endpoints.resize(static_cast<std::size_t>(g.m()));
  for (int e = 0; e < g.m(); ++e) {
    out.closed_neighbors[e] |= std::uint64_t{1} << e;
    out.endpoints[e] = (std::uint64_t{1} << g.edge(e).first) | (std::uint64_t{1} << g.edge(e).second);
  }
  return out;
}

bool disconnects(const EdgeMasks& g, std::uint64_t set) {
  if (g.n <= 1) return false;
  std::uint64_t reach = 1;
  std::uint64_t before;
  do {
    before = reach;
    for (int e = 0; e < g.m; ++e) {
      if (((set >> e) & 1U) == 0 && (reach & g.endpoints[e]) != 0) reach |= g.endpoints[e];
    }
  } while (reach != before && reach != g.all_vertices);
  return reach != g.all_vertices;
}

namespace detail {

void dominating_flags_scalar(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dominates(g, first + i) ? 1 : 0;
}

void cut_flags_scalar(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = disconnects(g, first + i) ? 1 : 0;
}

}  // namespace detail

namespace {

bool force_scalar() {
  static const bool forced = [] {
    const char* v = std::getenv("EDGECUT_FORCE_SCALAR");
    return v != nullptr && v[0] != '\0' && v[0] != '0';
  }();
  return forced;
}

}  // namespace

Isa resolve(Isa requested) {
  if (requested == Isa::avx2 && !avx2_available()) {
    throw PreconditionError("AVX2 kernels are not available on this machine");
  }
  if (requested != Isa::automatic) return requested;
  return (!force_scalar() && avx2_available()) ? Isa::avx2 : Isa::scalar;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::automatic: return "automatic";
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

void dominating_flags(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out, Isa isa) {
  if (resolve(isa) == Isa::avx2) {
    detail::dominating_flags_avx2(g, first, out);
  } else {
    detail::dominating_flags_scalar(g, first, out);
  }
}

void cut_flags(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out, Isa isa) {
  if (resolve(isa) == Isa::avx2) {
    detail::cut_flags_avx2(g, first, out);
  } else {
    detail::cut_flags_scalar(g, first, out);
  }
}

}  // namespace edgecut::kernels
