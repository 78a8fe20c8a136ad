#pragma once

// Bit-parallel predicates over edge masks (bit e set = edge e in the set).
//
// The batch entry points evaluate a contiguous run of masks
// [first, first + out.size()) and write one flag byte per mask. Each has a
// scalar reference and an AVX2 variant; `Isa::automatic` picks the widest
// variant the running CPU supports. All variants produce identical output.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "edgecut/graph.hpp"

namespace edgecut::kernels {

enum class Isa { automatic, scalar, avx2 };

/// Per-graph tables the kernels read. Requires n <= 64 and m <= 63.
struct EdgeMasks {
  int n = 0;
  int m = 0;
  std::uint64_t all_edges = 0;
  std::uint64_t all_vertices = 0;
  /// Edge e together with every edge sharing an endpoint with it.
  std::vector<std::uint64_t> closed_neighbors;
  /// Vertex bitmask {u, v} of edge e.
  std::vector<std::uint64_t> endpoints;

  static EdgeMasks build(const Graph& g);
};

inline constexpr int kMaxMaskEdges = 63;

/// Whether the AVX2 variant can run on this machine (compiled in and supported).
bool avx2_available();
/// The variant `Isa::automatic` resolves to. EDGECUT_FORCE_SCALAR=1 in the
/// environment forces the scalar path.
Isa resolve(Isa requested);
const char* isa_name(Isa isa);

/// Single-mask scalar predicates, used by the ascending searches.
inline bool dominates(const EdgeMasks& g, std::uint64_t set) {
  std::uint64_t covered = 0;
  for (std::uint64_t s = set; s != 0; s &= s - 1) covered |= g.closed_neighbors[std::countr_zero(s)];
  return covered == g.all_edges;
}

/// Removing `set` disconnects the graph (reachability from vertex 0).
bool disconnects(const EdgeMasks& g, std::uint64_t set);

/// out[i] = 1 iff mask first+i is edge dominating.
void dominating_flags(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out,
                      Isa isa = Isa::automatic);

/// out[i] = 1 iff removing mask first+i disconnects the graph.
void cut_flags(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out,
               Isa isa = Isa::automatic);

namespace detail {
void dominating_flags_scalar(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out);
void cut_flags_scalar(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out);
void dominating_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out);
void cut_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out);
}  // namespace detail

}  // namespace edgecut::kernels
