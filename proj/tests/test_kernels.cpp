#include <random>
#include <vector>

#include "doctest.h"
#include "edgecut/families.hpp"
#include "edgecut/kernels.hpp"
#include "oracles.hpp"

using namespace edgecut;
namespace k = edgecut::kernels;

namespace {

void compare_batches(const Graph& g, std::uint64_t first, std::size_t count) {
  const auto masks = k::EdgeMasks::build(g);
  std::vector<std::uint8_t> dom_s(count), dom_v(count), cut_s(count), cut_v(count);
  k::detail::dominating_flags_scalar(masks, first, dom_s);
  k::detail::dominating_flags_avx2(masks, first, dom_v);
  k::detail::cut_flags_scalar(masks, first, cut_s);
  k::detail::cut_flags_avx2(masks, first, cut_v);
  CHECK(dom_s == dom_v);
  CHECK(cut_s == cut_v);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t set = first + i;
    CHECK(bool(dom_s[i]) == oracle::dominating(g, set));
    CHECK(bool(cut_s[i]) == oracle::disconnects(g, set));
    CHECK(k::dominates(masks, set) == bool(dom_s[i]));
    CHECK(k::disconnects(masks, set) == bool(cut_s[i]));
  }
}

}  // namespace

TEST_CASE("isa selection") {
  CHECK(k::resolve(k::Isa::scalar) == k::Isa::scalar);
  if (!k::avx2_available()) CHECK(k::resolve(k::Isa::avx2) == k::Isa::scalar);
  MESSAGE("avx2 available: " << k::avx2_available());
}

TEST_CASE("vector kernels agree with scalar kernels and with union-find") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected(rng, 3 + trial % 6, 0.35);
    if (g.m() > 14) continue;
    compare_batches(g, 0, std::size_t{1} << g.m());
  }
  // Unaligned starts and odd lengths exercise the tail handling.
  Graph w = wheel(8);
  for (std::uint64_t first : {0ULL, 1ULL, 3ULL, 4097ULL, 60001ULL})
    for (std::size_t count : {1U, 3U, 5U, 17U, 250U}) compare_batches(w, first, count);
}

TEST_CASE("dispatching entry points match the reference path") {
  Graph g = two_cliques(4, 4, 2);
  const auto masks = k::EdgeMasks::build(g);
  std::vector<std::uint8_t> a(1000), b(1000);
  for (k::Isa isa : {k::Isa::automatic, k::Isa::avx2}) {
    k::dominating_flags(masks, 12345, a, k::Isa::scalar);
    k::dominating_flags(masks, 12345, b, isa);
    CHECK(a == b);
    k::cut_flags(masks, 12345, a, k::Isa::scalar);
    k::cut_flags(masks, 12345, b, isa);
    CHECK(a == b);
  }
}
