// Built with -mavx2 on x86-64 only; callers reach it through runtime dispatch.
#include "edgecut/kernels.hpp"

#if defined(EDGECUT_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace edgecut::kernels {

#if defined(EDGECUT_HAVE_AVX2)

bool avx2_available() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
}

namespace detail {

namespace {

// Four consecutive masks first, first+1, first+2, first+3 in 64-bit lanes.
inline __m256i lane_masks(std::uint64_t first) {
  return _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(first)),
                          _mm256_setr_epi64x(0, 1, 2, 3));
}

inline int lanes_equal(__m256i a, __m256i b) {
  return _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(a, b)));
}

inline void store_flags(int bits, std::uint8_t* out) {
  out[0] = bits & 1;
  out[1] = (bits >> 1) & 1;
  out[2] = (bits >> 2) & 1;
  out[3] = (bits >> 3) & 1;
}

}  // namespace

void dominating_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i all = _mm256_set1_epi64x(static_cast<long long>(g.all_edges));
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    const __m256i sets = lane_masks(first + i);
    __m256i covered = zero;
    for (int e = 0; e < g.m; ++e) {
      const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << e));
      const __m256i absent = _mm256_cmpeq_epi64(_mm256_and_si256(sets, bit), zero);
      const __m256i nbrs = _mm256_set1_epi64x(static_cast<long long>(g.closed_neighbors[e]));
      covered = _mm256_or_si256(covered, _mm256_andnot_si256(absent, nbrs));
    }
    store_flags(lanes_equal(covered, all), out.data() + i);
  }
  dominating_flags_scalar(g, first + i, out.subspan(i));
}

void cut_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  if (g.n <= 1) {
    cut_flags_scalar(g, first, out);
    return;
  }
  const __m256i zero = _mm256_setzero_si256();
  const __m256i everyone = _mm256_set1_epi64x(static_cast<long long>(g.all_vertices));
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    const __m256i sets = lane_masks(first + i);
    __m256i reach = _mm256_set1_epi64x(1);
    __m256i before;
    do {
      before = reach;
      for (int e = 0; e < g.m; ++e) {
        const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << e));
        const __m256i kept = _mm256_cmpeq_epi64(_mm256_and_si256(sets, bit), zero);
        const __m256i ends = _mm256_set1_epi64x(static_cast<long long>(g.endpoints[e]));
        const __m256i untouched = _mm256_cmpeq_epi64(_mm256_and_si256(reach, ends), zero);
        const __m256i grow = _mm256_andnot_si256(untouched, kept);
        reach = _mm256_or_si256(reach, _mm256_and_si256(grow, ends));
      }
    } while (lanes_equal(reach, before) != 0xF && lanes_equal(reach, everyone) != 0xF);
    store_flags(~lanes_equal(reach, everyone) & 0xF, out.data() + i);
  }
  cut_flags_scalar(g, first + i, out.subspan(i));
}

}  // namespace detail

#else

bool avx2_available() { return false; }

namespace detail {

void dominating_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  dominating_flags_scalar(g, first, out);
}

void cut_flags_avx2(const EdgeMasks& g, std::uint64_t first, std::span<std::uint8_t> out) {
  cut_flags_scalar(g, first, out);
}

}  // namespace detail

#endif

}  // namespace edgecut::kernels
