#include "edgecut/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "edgecut/error.hpp"
#include "edgecut/graph_io.hpp"
#include "edgecut/subsets.hpp"

namespace edgecut::harness {

namespace {

const std::vector<ClaimInfo> kCatalogue = {
    {1, "gamma'(G) <= gamma_ct(G)", true, false},
    {2, "lambda(G) <= gamma_ct(G)", true, false},
    {3, "gamma_ct(K_n) = n - 1", true, false},
    {4, "gamma_ct(C_n) = ceil(n/3) for n >= 4 (C_3 checked as K_3)", true, false},
    {5, "gamma_ct(W_n) = ceil((n-4)/3) + 3", false, false},
    {6, "gamma_ct(K_{m,n}) = n for m >= n", true, false},
    {7, "gamma_ct(T) = gamma'(T) for trees", true, false},
    {8, "gamma_ct(P_n) = ceil((n-1)/3)", true, false},
    {9, "gamma_ct(G) <= m - beta_1(G) for m > 1", true, false},
    {10, "gamma_ct(T) <= alpha_1(T) - 1 for trees with m > 1", true, false},
    {11, "two cliques joined by a path of length 1 or 2: gamma' = gamma_ct iff m or n even, "
         "with |E_i| matching the floor formulas",
     true, false},
    {12, "every minimal edge cut dominating set is maximal edge cut irredundant", true, false},
    {13, "every maximal edge cut independent set is a minimal edge cut dominating set", false,
     true},
    {14, "ir_ct <= gamma_ct <= i_ct <= beta_ct <= Gamma_ct <= IR_ct", false, true},
    {15, "figure fixtures satisfy exactly their caption properties", true, false},
};

int ceil_div(int a, int b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

bool is_tree(const Graph& g) { return g.m() == g.n() - 1 && is_connected(g); }

Json edge_list_json(const Graph& g, const EdgeSet& s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(Json::array({g.edge(e).first, g.edge(e).second})); });
  return out;
}

// Values shared by several claims on one graph, computed on first use.
class Facts {
 public:
  Facts(const Graph& g, const RunOptions& options) : g_(g), options_(options) {}

  const Graph& graph() const { return g_; }
  bool subset_cap_ok() const { return g_.m() <= options_.caps.subset_search; }
  bool scan_cap_ok() const { return g_.m() <= options_.caps.full_scan; }
  const SearchCaps& caps() const { return options_.caps; }

  const ParamResult& gamma_prime() {
    return lazy(gamma_prime_, [&] { return edge_domination_number(g_, options_.caps); });
  }
  const ParamResult& gamma_ct() {
    return lazy(gamma_ct_, [&] { return edgecut::gamma_ct(g_, options_.caps); });
  }
  const ParamResult& lambda() { return lazy(lambda_, [&] { return edge_connectivity(g_); }); }
  const ParamResult& beta1() { return lazy(beta1_, [&] { return max_matching(g_); }); }
  const ParamResult& alpha1() { return lazy(alpha1_, [&] { return edge_cover_number(g_); }); }

  const SubsetScan& scan() {
    if (!scan_) {
      ScanOptions so;
      so.caps = options_.caps;
      scan_.emplace(g_, so);
    }
    return *scan_;
  }

  const CtProfile& profile(Mode mode) {
    auto& slot = profiles_[mode == Mode::literal ? 0 : 1];
    if (!slot) slot = scan().profile(mode);
    return *slot;
  }

 private:
  template <typename Fn>
  const ParamResult& lazy(std::optional<ParamResult>& slot, Fn&& fn) {
    if (!slot) slot = fn();
    return *slot;
  }

  const Graph& g_;
  const RunOptions& options_;
  std::optional<ParamResult> gamma_prime_, gamma_ct_, lambda_, beta1_, alpha1_;
  std::optional<SubsetScan> scan_;
  std::optional<CtProfile> profiles_[2];
};

enum class Needs { nothing, subset_search, full_scan };

struct Context {
  const WorkItem& item;
  Facts& facts;
  std::optional<Mode> mode;
  ClaimReport& report;

  const Graph& g() const { return *item.graph; }
  void fail(std::vector<EdgeSet> witnesses) {
    report.status = Status::counterexample;
    report.witnesses = std::move(witnesses);
  }
};

// Shared shape of the closed-form claims C3..C6, C8.
void check_closed_form(Context& c, int expected) {
  const ParamResult& ct = c.facts.gamma_ct();
  c.report.values["gamma_ct"] = ct.value;
  c.report.values["expected"] = expected;
  if (ct.value != expected) c.fail({ct.witness});
}

void check_c1(Context& c) {
  const ParamResult& gp = c.facts.gamma_prime();
  const ParamResult& ct = c.facts.gamma_ct();
  c.report.values["gamma_prime"] = gp.value;
  c.report.values["gamma_ct"] = ct.value;
  if (gp.value > ct.value) c.fail({ct.witness, gp.witness});
}

void check_c2(Context& c) {
  const ParamResult& lambda = c.facts.lambda();
  const ParamResult& ct = c.facts.gamma_ct();
  c.report.values["lambda"] = lambda.value;
  c.report.values["gamma_ct"] = ct.value;
  if (lambda.value > ct.value) c.fail({ct.witness, lambda.witness});
}

void check_c3(Context& c) { check_closed_form(c, c.item.family->n - 1); }

void check_c4(Context& c) {
  const int n = c.item.family->n;
  check_closed_form(c, n >= 4 ? ceil_div(n, 3) : 2);  // C_3 = K_3
}

void check_c5(Context& c) { check_closed_form(c, ceil_div(c.item.family->n - 4, 3) + 3); }

void check_c6(Context& c) { check_closed_form(c, c.item.family->n); }

void check_c7(Context& c) {
  const ParamResult& gp = c.facts.gamma_prime();
  const ParamResult& ct = c.facts.gamma_ct();
  c.report.values["gamma_prime"] = gp.value;
  c.report.values["gamma_ct"] = ct.value;
  if (gp.value != ct.value) c.fail({ct.witness, gp.witness});
}

void check_c8(Context& c) { check_closed_form(c, ceil_div(c.item.family->n - 1, 3)); }

void check_c9(Context& c) {
  const ParamResult& ct = c.facts.gamma_ct();
  const ParamResult& beta = c.facts.beta1();
  c.report.values["gamma_ct"] = ct.value;
  c.report.values["m"] = c.g().m();
  c.report.values["beta1"] = beta.value;
  if (ct.value > c.g().m() - beta.value) c.fail({ct.witness, beta.witness});
}

void check_c10(Context& c) {
  const ParamResult& ct = c.facts.gamma_ct();
  const ParamResult& alpha = c.facts.alpha1();
  c.report.values["gamma_ct"] = ct.value;
  c.report.values["alpha1"] = alpha.value;
  if (ct.value > alpha.value - 1) c.fail({ct.witness, alpha.witness});
}

void check_c11(Context& c) {
  const FamilySpec& spec = *c.item.family;
  const Graph& g = c.g();
  const int m = spec.m, n = spec.n;
  const ParamResult& gp = c.facts.gamma_prime();
  const ParamResult& ct = c.facts.gamma_ct();
  const SearchCaps& caps = c.facts.caps();
  std::vector<int> searched, formula;
  if (spec.path_len == 1) {
    const EdgeSet bridge = g.edge_set({{0, m}});
    searched.push_back(constrained_gamma_prime(g, g.empty_set(), bridge, caps).value);
    searched.push_back(constrained_gamma_prime(g, bridge, g.empty_set(), caps).value);
    formula = {m / 2 + n / 2, 1 + (m - 1) / 2 + (n - 1) / 2};
  } else {
    const EdgeSet d = g.edge_set({{0, m + n}});
    const EdgeSet e = g.edge_set({{m, m + n}});
    const EdgeSet none = g.empty_set();
    searched.push_back(constrained_gamma_prime(g, none, d | e, caps).value);
    searched.push_back(constrained_gamma_prime(g, d, e, caps).value);
    searched.push_back(constrained_gamma_prime(g, e, d, caps).value);
    searched.push_back(constrained_gamma_prime(g, d | e, none, caps).value);
    formula = {m / 2 + n / 2, 1 + (m - 1) / 2 + n / 2, 1 + m / 2 + (n - 1) / 2,
               2 + (m - 1) / 2 + (n - 1) / 2};
  }
  c.report.values["gamma_prime"] = gp.value;
  c.report.values["gamma_ct"] = ct.value;
  c.report.values["E_searched"] = searched;
  c.report.values["E_formula"] = formula;
  const bool equal = gp.value == ct.value;
  const bool parity = m % 2 == 0 || n % 2 == 0;
  c.report.values["equal"] = equal;
  c.report.values["m_or_n_even"] = parity;
  const bool min_ok = gp.value == *std::min_element(searched.begin(), searched.end());
  if (equal != parity || searched != formula || !min_ok) c.fail({ct.witness, gp.witness});
}

void check_c12(Context& c) {
  const Graph& g = c.g();
  const SubsetScan& scan = c.facts.scan();
  std::uint64_t checked = 0, failures = 0;
  std::optional<EdgeSet> first;
  for (std::uint64_t set = 0; set < scan.subset_count(); ++set) {
    if (!scan.minimal_ecd(set)) continue;
    ++checked;
    EdgeSet f = EdgeSet::from_mask(g.m(), set);
    const bool ok = is_ec_irredundant(g, f, Mode::literal) &&
                    is_maximal_ec_irredundant(g, f, Mode::literal);
    if (!ok && failures++ == 0) first = f;
  }
  c.report.values["minimal_ecd_sets"] = checked;
  c.report.values["failures"] = failures;
  if (first) c.fail({*first});
}

void check_c13(Context& c) {
  const Graph& g = c.g();
  const Mode mode = *c.mode;
  const SubsetScan& scan = c.facts.scan();
  std::uint64_t checked = 0, not_ecd = 0, not_minimal = 0;
  std::optional<EdgeSet> first;
  for (std::uint64_t set = 0; set < scan.subset_count(); ++set) {
    if (!scan.maximal_ec_independent(set, mode)) continue;
    ++checked;
    EdgeSet f = EdgeSet::from_mask(g.m(), set);
    bool ok = true;
    if (!is_edge_cut_dominating(g, f)) {
      ++not_ecd;
      ok = false;
    } else if (!is_minimal_ecd(g, f)) {
      ++not_minimal;
      ok = false;
    }
    if (!ok && !first) first = f;
  }
  c.report.values["maximal_ec_independent_sets"] = checked;
  c.report.values["not_ecd"] = not_ecd;
  c.report.values["not_minimal"] = not_minimal;
  if (first) c.fail({*first});
}

const std::vector<std::pair<const char*, Extremum CtProfile::*>> kChain = {
    {"ir_ct", &CtProfile::ir_ct},   {"gamma_ct", &CtProfile::gamma_ct},
    {"i_ct", &CtProfile::i_ct},     {"beta_ct", &CtProfile::beta_ct},
    {"Gamma_ct", &CtProfile::upper_gamma_ct}, {"IR_ct", &CtProfile::upper_ir_ct},
};

void check_c14(Context& c) {
  const CtProfile& p = c.facts.profile(*c.mode);
  bool defined = true;
  for (auto [name, member] : kChain) {
    const auto& v = (p.*member).value;
    c.report.values[name] = v ? Json(*v) : Json(nullptr);
    defined = defined && v.has_value();
  }
  if (!defined) {
    c.report.status = Status::skipped_not_applicable;
    return;
  }
  Json broken = Json::array();
  for (std::size_t i = 0; i + 1 < kChain.size(); ++i) {
    if (*(p.*kChain[i].second).value > *(p.*kChain[i + 1].second).value) {
      broken.push_back(std::string(kChain[i].first) + " > " + kChain[i + 1].first);
    }
  }
  c.report.values["violations"] = broken;
  if (!broken.empty()) {
    std::vector<EdgeSet> witnesses;
    for (auto [name, member] : kChain) witnesses.push_back((p.*member).witness);
    c.fail(std::move(witnesses));
  }
}

void check_c15(Context& c) {
  const bool first = c.item.family->family == Family::figure1;
  Fixture fx = first ? figure1() : figure2();
  bool ok;
  if (first) {
    const bool irr = is_ec_irredundant(fx.graph, fx.named, Mode::literal);
    const bool maximal = irr && is_maximal_ec_irredundant(fx.graph, fx.named, Mode::literal);
    const bool ecd = is_edge_cut_dominating(fx.graph, fx.named);
    c.report.values["maximal_ec_irredundant"] = maximal;
    c.report.values["ecd"] = ecd;
    ok = maximal && !ecd;
  } else {
    const bool ecd = is_edge_cut_dominating(fx.graph, fx.named);
    const bool minimal = ecd && is_minimal_ecd(fx.graph, fx.named);
    const bool independent = is_ec_independent(fx.graph, fx.named, Mode::literal);
    c.report.values["minimal_ecd"] = minimal;
    c.report.values["ec_independent"] = independent;
    ok = minimal && !independent;
  }
  if (!ok) c.fail({fx.named});
}

struct ClaimRule {
  std::function<bool(const WorkItem&)> applies;
  Needs needs;
  std::function<void(Context&)> check;
};

bool family_is(const WorkItem& item, Family f) { return item.family && item.family->family == f; }

bool general_origin(const WorkItem& item) {
  return item.origin == Origin::family || item.origin == Origin::catalogue ||
         item.origin == Origin::stream;
}

bool scan_origin(const WorkItem& item) {
  return item.origin == Origin::catalogue || item.origin == Origin::stream ||
         family_is(item, Family::figure1) || family_is(item, Family::figure2);
}

const ClaimRule& rule(int id) {
  static const std::map<int, ClaimRule> rules = {
      {1, {general_origin, Needs::subset_search, check_c1}},
      {2, {general_origin, Needs::subset_search, check_c2}},
      {3, {[](const WorkItem& i) { return family_is(i, Family::complete); }, Needs::subset_search, check_c3}},
      {4, {[](const WorkItem& i) { return family_is(i, Family::cycle); }, Needs::subset_search, check_c4}},
      {5, {[](const WorkItem& i) { return family_is(i, Family::wheel); }, Needs::subset_search, check_c5}},
      {6, {[](const WorkItem& i) { return family_is(i, Family::complete_bipartite); },
           Needs::subset_search, check_c6}},
      {7, {[](const WorkItem& i) { return is_tree(*i.graph); }, Needs::subset_search, check_c7}},
      {8, {[](const WorkItem& i) { return family_is(i, Family::path); }, Needs::subset_search, check_c8}},
      {9, {general_origin, Needs::subset_search, check_c9}},
      {10, {[](const WorkItem& i) { return is_tree(*i.graph) && i.graph->m() > 1; },
            Needs::subset_search, check_c10}},
      {11, {[](const WorkItem& i) { return family_is(i, Family::two_cliques); }, Needs::subset_search,
            check_c11}},
      {12, {scan_origin, Needs::full_scan, check_c12}},
      {13, {scan_origin, Needs::full_scan, check_c13}},
      {14, {scan_origin, Needs::full_scan, check_c14}},
      {15, {[](const WorkItem& i) {
              return family_is(i, Family::figure1) || family_is(i, Family::figure2);
            },
            Needs::nothing, check_c15}},
  };
  return rules.at(id);
}

// Claims that make sense for an arbitrary input graph; a disconnected input
// gets one skipped report for each of these.
bool general_claim(int id) { return id == 1 || id == 2 || id == 9 || (id >= 12 && id <= 14); }

ClaimReport new_report(int id, const WorkItem& item, std::optional<Mode> mode, Status status) {
  ClaimReport r;
  r.claim = id;
  r.graph_id = item.graph_id;
  r.mode = mode;
  r.status = status;
  r.graph = item.graph;
  return r;
}

std::vector<ClaimReport> run_item(const WorkItem& item, const std::vector<int>& claims,
                                  const RunOptions& options) {
  std::vector<ClaimReport> out;
  const Graph& g = *item.graph;
  const bool usable = g.n() >= 2 && is_connected(g);
  Facts facts(g, options);
  for (int id : claims) {
    const ClaimInfo& info = claim_info(id);
    std::vector<std::optional<Mode>> modes;
    if (info.per_mode) {
      for (Mode m : options.modes) modes.emplace_back(m);
    } else if (id == 12 || id == 15) {
      modes.emplace_back(Mode::literal);
    } else {
      modes.emplace_back(std::nullopt);
    }
    if (!usable) {
      if (!general_claim(id)) continue;
      for (auto mode : modes) {
        ClaimReport r = new_report(id, item, mode, Status::skipped_not_applicable);
        r.values["reason"] = g.n() < 2 ? "single vertex" : "disconnected";
        out.push_back(std::move(r));
      }
      continue;
    }
    const ClaimRule& cr = rule(id);
    if (!cr.applies(item)) continue;
    if (id == 9 && g.m() <= 1) {
      // The bound is stated for m > 1; say so rather than dropping the graph.
      ClaimReport r = new_report(id, item, std::nullopt, Status::skipped_not_applicable);
      r.values["reason"] = "needs m > 1";
      out.push_back(std::move(r));
      continue;
    }
    for (auto mode : modes) {
      ClaimReport r = new_report(id, item, mode, Status::verified);
      const bool capped = (cr.needs == Needs::subset_search && !facts.subset_cap_ok()) ||
                          (cr.needs == Needs::full_scan && !facts.scan_cap_ok());
      if (capped) {
        r.status = Status::skipped_cap;
        r.values["m"] = g.m();
        r.values["cap"] = cr.needs == Needs::full_scan ? options.caps.full_scan
                                                       : options.caps.subset_search;
        out.push_back(std::move(r));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      Context ctx{item, facts, mode, r};
      cr.check(ctx);
      if (options.timing) {
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

int mode_rank(const std::optional<Mode>& m) { return m ? (*m == Mode::literal ? 1 : 2) : 0; }

}  // namespace

const std::vector<ClaimInfo>& claim_catalogue() { return kCatalogue; }

const ClaimInfo& claim_info(int id) {
  if (id < 1 || id > static_cast<int>(kCatalogue.size())) {
    throw PreconditionError("unknown claim C" + std::to_string(id));
  }
  return kCatalogue[static_cast<std::size_t>(id - 1)];
}

std::string claim_name(int id) { return "C" + std::to_string(id); }

int parse_claim(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'C' || digits[0] == 'c')) digits.erase(0, 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw PreconditionError("invalid claim id '" + text + "'");
  }
  const int id = std::stoi(digits);
  claim_info(id);
  return id;
}

const char* status_name(Status status) {
  switch (status) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::skipped_not_applicable: return "skipped-not-applicable";
    case Status::skipped_cap: return "skipped-cap";
  }
  return "unknown";
}

std::string graph_id(const Graph& g) {
  if (g.n() <= kMaxCanonicalOrder) return "c:" + to_hex(canonical_form(g));
  return "g6:" + write_graph6(g);
}

std::vector<WorkItem> builtin_source(int max_n, bool with_n7) {
  if (max_n < 2 || max_n > 7) throw PreconditionError("--max-n must be in 2..7");
  if (max_n == 7 && !with_n7) throw PreconditionError("n = 7 catalogue needs --with-n7");
  std::vector<WorkItem> out;
  auto add_family = [&](FamilySpec spec) {
    out.push_back({spec.label(), std::make_shared<const Graph>(generate(spec)), Origin::family, spec});
  };
  for (int n = 2; n <= 8; ++n) add_family({Family::complete, n});
  for (int n = 3; n <= 12; ++n) add_family({Family::cycle, n});
  for (int n = 2; n <= 12; ++n) add_family({Family::path, n});
  for (int n = 3; n <= 9; ++n) add_family({Family::wheel, n});
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= m; ++n) add_family({Family::complete_bipartite, n, m});
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n)
      for (int len = 1; len <= 2; ++len) add_family({Family::two_cliques, n, m, len});
  add_family({Family::figure1});
  add_family({Family::figure2});

  std::set<std::string> seen;
  for (int n = 2; n <= max_n; ++n) {
    for (Graph& g : all_connected_graphs(n, with_n7)) {
      std::string id = graph_id(g);
      seen.insert(id);
      out.push_back({std::move(id), std::make_shared<const Graph>(std::move(g)), Origin::catalogue, {}});
    }
  }
  for (int n = 2; n <= 9; ++n) {
    for (Graph& t : all_trees(n)) {
      std::string id = graph_id(t);
      if (seen.count(id) != 0) continue;  // already covered by the catalogue
      out.push_back({std::move(id), std::make_shared<const Graph>(std::move(t)), Origin::tree, {}});
    }
  }
  return out;
}

std::vector<WorkItem> graph6_source(std::istream& in) {
  std::vector<WorkItem> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = parse_graph6(line, line_no);
    std::string id = graph_id(g);
    out.push_back({std::move(id), std::make_shared<const Graph>(std::move(g)), Origin::stream, {}});
  }
  if (in.bad()) throw Error("I/O error while reading graph6 stream");
  return out;
}

std::vector<ClaimReport> run_claims(const std::vector<WorkItem>& source, const RunOptions& options) {
  std::vector<int> claims = options.claims;
  if (claims.empty()) {
    for (const auto& info : kCatalogue) claims.push_back(info.id);
  }
  std::sort(claims.begin(), claims.end());
  claims.erase(std::unique(claims.begin(), claims.end()), claims.end());
  for (int id : claims) claim_info(id);

  std::vector<std::vector<ClaimReport>> per_item(source.size());
  std::vector<std::exception_ptr> errors(source.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < source.size(); i = next++) {
      try {
        per_item[i] = run_item(source[i], claims, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<ClaimReport> out;
  for (auto& batch : per_item)
    for (auto& r : batch) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const ClaimReport& a, const ClaimReport& b) {
    if (a.claim != b.claim) return a.claim < b.claim;
    if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
    return mode_rank(a.mode) < mode_rank(b.mode);
  });
  return out;
}

ParamResult constrained_gamma_prime(const Graph& g, const EdgeSet& forced_in,
                                    const EdgeSet& forced_out, const SearchCaps& caps) {
  if (forced_in.owner_m() != g.m() || forced_out.owner_m() != g.m()) {
    throw PreconditionError("edge set belongs to a different graph");
  }
  if (forced_in.intersects(forced_out)) {
    throw PreconditionError("an edge cannot be both forced in and forced out");
  }
  if (g.m() > caps.subset_search) throw CapExceeded("subset-search", caps.subset_search, g.m());
  const auto masks = kernels::EdgeMasks::build(g);
  const std::uint64_t in = forced_in.to_mask();
  const std::uint64_t out_mask = forced_out.to_mask();
  std::vector<int> free_edges;
  for (int e = 0; e < g.m(); ++e) {
    if (((in | out_mask) >> e & 1U) == 0) free_edges.push_back(e);
  }
  const int free_count = static_cast<int>(free_edges.size());
  ParamResult result{"gamma_prime_constrained", 0, g.empty_set(), 0};
  for (int extra = 0; extra <= free_count; ++extra) {
    std::uint64_t found = 0;
    bool hit = false;
    result.subsets_examined += for_each_k_subset(free_count, extra, [&](std::uint64_t pick) {
      std::uint64_t set = in;
      for (std::uint64_t p = pick; p != 0; p &= p - 1) {
        set |= std::uint64_t{1} << free_edges[std::countr_zero(p)];
      }
      if (!kernels::dominates(masks, set)) return false;
      found = set;
      return hit = true;
    });
    if (hit) {
      result.value = std::popcount(found);
      result.witness = EdgeSet::from_mask(g.m(), found);
      return result;
    }
  }
  throw PreconditionError("no edge dominating set satisfies the constraints");
}

bool revalidate(const ClaimReport& report) {
  if (report.status != Status::counterexample || report.witnesses.empty() || !report.graph) {
    return false;
  }
  const Graph& g = *report.graph;
  const auto& w = report.witnesses;
  const Json& v = report.values;
  auto ecd_of_size = [&](const EdgeSet& s, const char* key) {
    return is_edge_cut_dominating(g, s) && s.size() == v.at(key).get<int>();
  };
  switch (report.claim) {
    case 1:
      return ecd_of_size(w[0], "gamma_ct") && is_edge_dominating(g, w[1]) &&
             w[1].size() == v.at("gamma_prime").get<int>() &&
             v.at("gamma_prime").get<int>() > v.at("gamma_ct").get<int>();
    case 2:
      return ecd_of_size(w[0], "gamma_ct") && component_count(g, w[1]) >= 2 &&
             w[1].size() == v.at("lambda").get<int>() &&
             v.at("lambda").get<int>() > v.at("gamma_ct").get<int>();
    case 3: case 4: case 5: case 6: case 8:
      return ecd_of_size(w[0], "gamma_ct") && v.at("gamma_ct") != v.at("expected");
    case 7: case 11:
      return ecd_of_size(w[0], "gamma_ct") && is_edge_dominating(g, w[1]) &&
             w[1].size() == v.at("gamma_prime").get<int>() &&
             (report.claim == 11 || v.at("gamma_prime") != v.at("gamma_ct"));
    case 9:
      return ecd_of_size(w[0], "gamma_ct") && is_matching(g, w[1]) &&
             w[1].size() == v.at("beta1").get<int>() &&
             v.at("gamma_ct").get<int>() > g.m() - v.at("beta1").get<int>();
    case 10:
      return ecd_of_size(w[0], "gamma_ct") && is_edge_cover(g, w[1]) &&
             w[1].size() == v.at("alpha1").get<int>() &&
             v.at("gamma_ct").get<int>() > v.at("alpha1").get<int>() - 1;
    case 12:
      return is_edge_cut_dominating(g, w[0]) && is_minimal_ecd(g, w[0]) &&
             !(is_ec_irredundant(g, w[0]) && is_maximal_ec_irredundant(g, w[0]));
    case 13: {
      const Mode mode = report.mode.value_or(Mode::literal);
      return is_ec_independent(g, w[0], mode) && is_maximal_ec_independent(g, w[0], mode) &&
             !(is_edge_cut_dominating(g, w[0]) && is_minimal_ecd(g, w[0]));
    }
    case 14: {
      const Mode mode = report.mode.value_or(Mode::literal);
      if (w.size() != kChain.size()) return false;
      for (std::size_t i = 0; i < kChain.size(); ++i) {
        if (w[i].size() != v.at(kChain[i].first).get<int>()) return false;
      }
      const bool sets_ok = is_minimal_ecd(g, w[1]) && is_minimal_ecd(g, w[4]) &&
                           is_maximal_ec_irredundant(g, w[0], mode) &&
                           is_maximal_ec_irredundant(g, w[5], mode) &&
                           is_maximal_ec_independent(g, w[2], mode) &&
                           is_maximal_ec_independent(g, w[3], mode);
      bool broken = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) broken = broken || w[i].size() > w[i + 1].size();
      return sets_ok && broken;
    }
    case 15: {
      if (g == figure1().graph) {
        return !(is_ec_irredundant(g, w[0]) && is_maximal_ec_irredundant(g, w[0]) &&
                 !is_edge_cut_dominating(g, w[0]));
      }
      return !(is_edge_cut_dominating(g, w[0]) && is_minimal_ecd(g, w[0]) &&
               !is_ec_independent(g, w[0]));
    }
    default:
      return false;
  }
}

int exit_code(const std::vector<ClaimReport>& reports, bool strict_claims) {
  for (const auto& r : reports) {
    if (r.status == Status::counterexample && (strict_claims || claim_info(r.claim).hard)) return 1;
  }
  return 0;
}

Json to_json(const ClaimReport& report) {
  Json out = Json::object();
  out["claim"] = claim_name(report.claim);
  out["graph"] = report.graph_id;
  out["mode"] = report.mode ? Json(mode_name(*report.mode)) : Json(nullptr);
  out["status"] = status_name(report.status);
  out["values"] = report.values;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(edge_list_json(*report.graph, w));
  out["witness_edges"] = witnesses;
  out["ms"] = report.ms ? Json(*report.ms) : Json(nullptr);
  return out;
}

std::string format_table(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.graph_id.size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  os << pad("claim", 6) << pad("graph", width + 2) << pad("mode", 9) << pad("status", 24)
     << "values\n";
  std::map<int, std::map<Status, int>> totals;
  for (const auto& r : reports) {
    ++totals[r.claim][r.status];
    std::string values;
    for (const auto& [key, val] : r.values.items()) {
      if (!values.empty()) values += ' ';
      values += key + "=" + (val.is_string() ? val.get<std::string>() : val.dump());
    }
    os << pad(claim_name(r.claim), 6) << pad(r.graph_id, width + 2)
       << pad(r.mode ? mode_name(*r.mode) : "-", 9) << pad(status_name(r.status), 24) << values
       << '\n';
    for (const auto& w : r.witnesses) os << "      witness: " << r.graph->describe(w) << '\n';
  }
  os << "\nsummary\n";
  for (const auto& [claim, counts] : totals) {
    os << pad(claim_name(claim), 6) << pad(claim_info(claim).hard ? "hard" : "soft", 6);
    for (Status s : {Status::verified, Status::counterexample, Status::skipped_not_applicable,
                     Status::skipped_cap}) {
      auto it = counts.find(s);
      os << ' ' << status_name(s) << '=' << (it == counts.end() ? 0 : it->second);
    }
    os << '\n';
  }
  return os.str();
}

SurveyRow survey_row(const Graph& g, const SearchCaps& caps) {
  SurveyRow row;
  row.graph6 = write_graph6(g);
  row.n = g.n();
  row.m = g.m();
  if (g.n() < 2 || !is_connected(g)) {
    row.status = "skipped-disconnected";
    return row;
  }
  row.lambda = edge_connectivity(g).value;
  if (g.m() > caps.subset_search) {
    row.status = "skipped-cap";
    return row;
  }
  row.gamma_prime = edge_domination_number(g, caps).value;
  row.gamma_ct = gamma_ct(g, caps).value;
  row.alpha1 = edge_cover_number(g).value;
  row.status = "ok";
  return row;
}

namespace {

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::optional<bool> flag(const std::optional<int>& a, const std::optional<int>& b,
                         bool (*rel)(int, int)) {
  if (!a || !b) return std::nullopt;
  return rel(*a, *b);
}

struct Flags {
  std::optional<bool> gp_eq_ct, lambda_eq_ct, ct_le_a1m1, ct_eq_a1m1;
};

Flags flags_of(const SurveyRow& row) {
  std::optional<int> a1m1 = row.alpha1 ? std::optional<int>(*row.alpha1 - 1) : std::nullopt;
  auto eq = [](int x, int y) { return x == y; };
  auto le = [](int x, int y) { return x <= y; };
  return {flag(row.gamma_prime, row.gamma_ct, eq), flag(row.lambda, row.gamma_ct, eq),
          flag(row.gamma_ct, a1m1, le), flag(row.gamma_ct, a1m1, eq)};
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

Json json_flag(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }
Json json_opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string format_survey_row(const SurveyRow& row) {
  const Flags f = flags_of(row);
  std::ostringstream os;
  os << row.graph6 << ' ' << row.n << ' ' << row.m << " gamma'=" << opt_str(row.gamma_prime)
     << " lambda=" << opt_str(row.lambda) << " gamma_ct=" << opt_str(row.gamma_ct)
     << " alpha1=" << opt_str(row.alpha1) << " gamma'=gamma_ct:" << yes_no(f.gp_eq_ct)
     << " lambda=gamma_ct:" << yes_no(f.lambda_eq_ct) << " gamma_ct<=alpha1-1:" << yes_no(f.ct_le_a1m1)
     << " gamma_ct=alpha1-1:" << yes_no(f.ct_eq_a1m1);
  if (row.status != "ok") os << ' ' << row.status;
  return os.str();
}

Json to_json(const SurveyRow& row) {
  const Flags f = flags_of(row);
  Json out = Json::object();
  out["graph6"] = row.graph6;
  out["n"] = row.n;
  out["m"] = row.m;
  out["status"] = row.status;
  out["gamma_prime"] = json_opt(row.gamma_prime);
  out["lambda"] = json_opt(row.lambda);
  out["gamma_ct"] = json_opt(row.gamma_ct);
  out["alpha1"] = json_opt(row.alpha1);
  out["gamma_prime_eq_gamma_ct"] = json_flag(f.gp_eq_ct);
  out["lambda_eq_gamma_ct"] = json_flag(f.lambda_eq_ct);
  out["gamma_ct_le_alpha1_minus_1"] = json_flag(f.ct_le_a1m1);
  out["gamma_ct_eq_alpha1_minus_1"] = json_flag(f.ct_eq_a1m1);
  return out;
}

}  // namespace edgecut::harness
