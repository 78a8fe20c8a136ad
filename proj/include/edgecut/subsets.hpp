#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace edgecut {

/// Visits every k-subset of {0..m-1} as a bitmask, in lexicographic order of
/// the ascending index tuple, until `visit` returns true. Requires m <= 64.
/// Returns the number of subsets visited.
template <typename Visit>
std::uint64_t for_each_k_subset(int m, int k, Visit&& visit) {
  if (k < 0 || k > m) return 0;
  std::array<int, 64> idx{};
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    idx[i] = i;
    mask |= std::uint64_t{1} << i;
  }
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (visit(mask)) return visited;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return visited;
    for (int j = i; j < k; ++j) mask &= ~(std::uint64_t{1} << idx[j]);
    ++idx[i];
    mask |= std::uint64_t{1} << idx[i];
    for (int j = i + 1; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
      mask |= std::uint64_t{1} << idx[j];
    }
  }
}

}  // namespace edgecut
