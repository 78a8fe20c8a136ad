#include <random>

#include "doctest.h"
#include "edgecut/cutdom_params.hpp"
#include "edgecut/error.hpp"
#include "edgecut/families.hpp"
#include "oracles.hpp"

using namespace edgecut;

namespace {

std::optional<int> value(const Extremum& x) { return x.value; }

void check_against_oracle(const Graph& g, unsigned workers) {
  ScanOptions options;
  options.workers = workers;
  SubsetScan scan(g, options);
  for (Mode mode : {Mode::literal, Mode::strict}) {
    const bool strict = mode == Mode::strict;
    CtProfile p = scan.profile(mode);
    oracle::Profile o = oracle::profile(g, strict);
    CHECK(value(p.gamma_ct) == o.gamma_ct);
    CHECK(value(p.upper_gamma_ct) == o.upper_gamma_ct);
    CHECK(value(p.ir_ct) == o.ir_ct);
    CHECK(value(p.upper_ir_ct) == o.upper_ir_ct);
    CHECK(value(p.i_ct) == o.i_ct);
    CHECK(value(p.beta_ct) == o.beta_ct);
  }
}

}  // namespace

TEST_CASE("closed-form values") {
  CHECK(gamma_ct(complete(5)).value == 4);
  CHECK(gamma_ct(cycle(7)).value == 3);
  CHECK(gamma_ct(wheel(6)).value == 4);
  CHECK(gamma_ct(complete_bipartite(3, 2)).value == 2);
  CHECK(gamma_ct(path(7)).value == 2);
  auto f2 = figure2();
  auto r = gamma_ct(f2.graph);
  CHECK(r.value == 2);
  CHECK(r.witness == f2.graph.edge_set({{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(gamma_ct(Graph(1, {})), PreconditionError);
  CHECK_THROWS_AS(gamma_ct(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
  CHECK_THROWS_AS(gamma_ct(complete(8), SearchCaps{20, 20}), CapExceeded);
}

TEST_CASE("profiles") {
  CtProfile c4 = ct_profile(cycle(4), Mode::literal);
  for (const Extremum* x : {&c4.gamma_ct, &c4.upper_gamma_ct, &c4.ir_ct, &c4.upper_ir_ct, &c4.i_ct,
                            &c4.beta_ct})
    CHECK(x->value == 2);
  for (Mode mode : {Mode::literal, Mode::strict}) {
    CtProfile k2 = ct_profile(complete(2), mode);
    for (const Extremum* x : {&k2.gamma_ct, &k2.upper_gamma_ct, &k2.ir_ct, &k2.upper_ir_ct,
                              &k2.i_ct, &k2.beta_ct})
      CHECK(x->value == 1);
  }
  auto f2 = figure2();
  CtProfile p = ct_profile(f2.graph, Mode::literal);
  CHECK(p.gamma_ct.value == 2);
  CHECK(*p.upper_gamma_ct.value >= 3);
  CHECK_THROWS_AS(ct_profile(complete(7), Mode::literal, {SearchCaps{28, 20}, 1}), CapExceeded);
}

TEST_CASE("enumeration") {
  auto k2 = enumerate_minimal_ecd(complete(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == EdgeSet(1, {0}));
  Graph c4 = cycle(4);
  auto sets = enumerate_minimal_ecd(c4);
  auto has = [&](const EdgeSet& s) { return std::find(sets.begin(), sets.end(), s) != sets.end(); };
  CHECK(has(c4.edge_set({{0, 1}, {2, 3}})));
  CHECK(has(c4.edge_set({{0, 1}, {1, 2}})));
  auto f2 = figure2();
  auto fig = enumerate_minimal_ecd(f2.graph);
  CHECK(std::find(fig.begin(), fig.end(), f2.named) != fig.end());
  for (const EdgeSet& s : fig) CHECK(is_minimal_ecd(f2.graph, s));
  for (Mode mode : {Mode::literal, Mode::strict}) {
    for (const EdgeSet& s : enumerate_maximal_ec_irredundant(f2.graph, mode))
      CHECK(is_maximal_ec_irredundant(f2.graph, s, mode));
    for (const EdgeSet& s : enumerate_maximal_ec_independent(f2.graph, mode))
      CHECK(is_maximal_ec_independent(f2.graph, s, mode));
  }
}

TEST_CASE("scan classification matches the predicates module subset by subset") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = oracle::random_connected(rng, 3 + trial % 5, 0.35);
    if (g.m() > 10) continue;
    SubsetScan scan(g);
    for (std::uint64_t mask = 0; mask < scan.subset_count(); ++mask) {
      EdgeSet f = oracle::subset(g, mask);
      CHECK(scan.ecd(mask) == is_edge_cut_dominating(g, f));
      if (scan.ecd(mask)) CHECK(scan.minimal_ecd(mask) == is_minimal_ecd(g, f));
      for (Mode mode : {Mode::literal, Mode::strict}) {
        CHECK(scan.ec_irredundant(mask, mode) == is_ec_irredundant(g, f, mode));
        CHECK(scan.ec_independent(mask, mode) == is_ec_independent(g, f, mode));
        if (scan.ec_irredundant(mask, mode))
          CHECK(scan.maximal_ec_irredundant(mask, mode) == is_maximal_ec_irredundant(g, f, mode));
        if (scan.ec_independent(mask, mode))
          CHECK(scan.maximal_ec_independent(mask, mode) == is_maximal_ec_independent(g, f, mode));
      }
    }
  }
}

TEST_CASE("profiles match the brute oracle on the five-vertex catalogue") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_connected_graphs(n)) check_against_oracle(g, 1);
}

TEST_CASE("worker count, instruction set and mode do not change results") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_connected(rng, 4 + trial % 4, 0.4);
    if (g.m() > 14) continue;
    ScanOptions one, three, scalar;
    three.workers = 3;
    scalar.isa = kernels::Isa::scalar;
    for (Mode mode : {Mode::literal, Mode::strict}) {
      CtProfile a = ct_profile(g, mode, one), b = ct_profile(g, mode, three),
                c = ct_profile(g, mode, scalar);
      for (const CtProfile* other : {&b, &c}) {
        CHECK(a.gamma_ct.witness == other->gamma_ct.witness);
        CHECK(a.upper_gamma_ct.witness == other->upper_gamma_ct.witness);
        CHECK(a.ir_ct.witness == other->ir_ct.witness);
        CHECK(a.upper_ir_ct.witness == other->upper_ir_ct.witness);
        CHECK(a.i_ct.witness == other->i_ct.witness);
        CHECK(a.beta_ct.witness == other->beta_ct.witness);
        CHECK(a.maximal_ec_irredundant_count == other->maximal_ec_irredundant_count);
      }
    }
    CtProfile lit = ct_profile(g, Mode::literal), str = ct_profile(g, Mode::strict);
    CHECK(lit.gamma_ct.value == str.gamma_ct.value);
    CHECK(lit.upper_gamma_ct.value == str.upper_gamma_ct.value);
    auto direct = gamma_ct(g);
    CHECK(direct.value == *lit.gamma_ct.value);
    CHECK(direct.witness == lit.gamma_ct.witness);
    CHECK(direct.value == oracle::gamma_ct(g));
  }
}
