// edgecut: compute, generate, verify and survey edge cut domination parameters.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "edgecut/classical_params.hpp"
#include "edgecut/cutdom_params.hpp"
#include "edgecut/error.hpp"
#include "edgecut/families.hpp"
#include "edgecut/graph_io.hpp"
#include "edgecut/harness.hpp"
#include "json.hpp"

namespace {

using edgecut::harness::Json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string input = "-";
  std::string format = "edgelist";
  std::vector<std::string> params;
  std::string mode = "literal";
  int subset_cap = edgecut::SearchCaps{}.subset_search;
  int scan_cap = edgecut::SearchCaps{}.full_scan;
  bool json = false;
  bool witness = false;
  int max_n = 6;
  bool with_n7 = false;
  bool strict_claims = false;
  bool timing = false;
  std::vector<std::string> claims;
  std::string graph6_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  std::string family;
  int n = 0;
  int m = 0;
  int len = 0;

  edgecut::SearchCaps caps() const {
    if (subset_cap < 1 || scan_cap < 1) throw edgecut::PreconditionError("caps must be positive");
    return {subset_cap, scan_cap};
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw edgecut::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

edgecut::Graph parse_single(const std::string& text, const std::string& format) {
  if (format == "edgelist") return edgecut::parse_edgelist(text);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return edgecut::parse_graph6(line, line_no);
  }
  throw edgecut::ParseError(line_no == 0 ? 1 : line_no, 0, "no graph6 line found");
}

std::string cap_flag(const std::string& cap_name) {
  return cap_name == "full-scan" ? "--scan-cap" : "--subset-cap";
}

Json witness_json(const edgecut::Graph& g, const edgecut::EdgeSet& s) {
  Json out = Json::array();
  s.for_each([&](int e) { out.push_back(Json::array({g.edge(e).first, g.edge(e).second})); });
  return out;
}

// ---------------------------------------------------------------------------

int run_compute(const CliConfig& cfg) {
  const edgecut::Graph g = parse_single(read_input(cfg.input), cfg.format);
  const edgecut::SearchCaps caps = cfg.caps();
  const edgecut::Mode mode = edgecut::mode_from_name(cfg.mode);

  Json doc = Json::object();
  doc["n"] = g.n();
  doc["m"] = g.m();
  Json params = Json::object();
  std::ostringstream text;

  auto emit = [&](const std::string& name, const std::optional<int>& value,
                  const edgecut::EdgeSet& witness) {
    Json entry = Json::object();
    entry["value"] = value ? Json(*value) : Json(nullptr);
    if (cfg.witness) entry["witness"] = value ? witness_json(g, witness) : Json(nullptr);
    params[name] = entry;
    text << name << " = " << (value ? std::to_string(*value) : "undefined");
    if (cfg.witness && value) text << "  witness: " << g.describe(witness);
    text << '\n';
  };

  for (const std::string& p : cfg.params) {
    if (p == "gamma_prime") {
      auto r = edgecut::edge_domination_number(g, caps);
      emit(p, r.value, r.witness);
    } else if (p == "lambda") {
      auto r = edgecut::edge_connectivity(g);
      emit(p, r.value, r.witness);
    } else if (p == "beta1") {
      auto r = edgecut::max_matching(g);
      emit(p, r.value, r.witness);
    } else if (p == "alpha1") {
      auto r = edgecut::edge_cover_number(g);
      emit(p, r.value, r.witness);
    } else if (p == "gamma_ct") {
      auto r = edgecut::gamma_ct(g, caps);
      emit(p, r.value, r.witness);
    } else if (p == "profile") {
      edgecut::ScanOptions so;
      so.caps = caps;
      so.workers = cfg.jobs;
      const edgecut::CtProfile prof = edgecut::ct_profile(g, mode, so);
      text << "profile (" << edgecut::mode_name(mode) << ")\n";
      emit("gamma_ct", prof.gamma_ct.value, prof.gamma_ct.witness);
      emit("Gamma_ct", prof.upper_gamma_ct.value, prof.upper_gamma_ct.witness);
      emit("ir_ct", prof.ir_ct.value, prof.ir_ct.witness);
      emit("IR_ct", prof.upper_ir_ct.value, prof.upper_ir_ct.witness);
      emit("i_ct", prof.i_ct.value, prof.i_ct.witness);
      emit("beta_ct", prof.beta_ct.value, prof.beta_ct.witness);
      Json counts = Json::object();
      counts["minimal_ecd"] = prof.minimal_ecd_count;
      counts["maximal_ec_irredundant"] = prof.maximal_ec_irredundant_count;
      counts["maximal_ec_independent"] = prof.maximal_ec_independent_count;
      doc["mode"] = edgecut::mode_name(mode);
      doc["counts"] = counts;
    } else {
      throw edgecut::PreconditionError("unknown parameter '" + p +
                                       "' (expected gamma_prime, lambda, beta1, alpha1, gamma_ct, profile)");
    }
  }
  doc["params"] = params;
  if (cfg.json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text.str();
  }
  return kExitOk;
}

int run_gen(const CliConfig& cfg) {
  edgecut::FamilySpec spec{edgecut::family_from_name(cfg.family), cfg.n, cfg.m, cfg.len};
  const edgecut::Graph g = edgecut::generate(spec);
  if (cfg.format == "graph6") {
    std::cout << edgecut::write_graph6(g) << '\n';
  } else {
    std::cout << edgecut::write_edgelist(g);
  }
  return kExitOk;
}

int run_check(const CliConfig& cfg) {
  namespace h = edgecut::harness;
  h::RunOptions options;
  options.caps = cfg.caps();
  options.workers = cfg.jobs;
  options.timing = cfg.timing;
  for (const auto& c : cfg.claims) options.claims.push_back(h::parse_claim(c));
  if (cfg.mode == "both") {
    options.modes = {edgecut::Mode::literal, edgecut::Mode::strict};
  } else {
    options.modes = {edgecut::mode_from_name(cfg.mode)};
  }

  std::vector<h::WorkItem> source;
  if (!cfg.graph6_path.empty()) {
    std::istringstream in(read_input(cfg.graph6_path));
    source = h::graph6_source(in);
  } else {
    source = h::builtin_source(cfg.max_n, cfg.with_n7);
  }
  const auto reports = h::run_claims(source, options);
  if (cfg.json) {
    std::string out;
    for (const auto& r : reports) out += h::to_json(r).dump() + '\n';
    std::cout << out;
  } else {
    std::cout << h::format_table(reports);
  }
  return h::exit_code(reports, cfg.strict_claims) == 0 ? kExitOk : kExitCounterexample;
}

int run_survey(const CliConfig& cfg) {
  namespace h = edgecut::harness;
  const edgecut::SearchCaps caps = cfg.caps();
  std::istringstream in(read_input(cfg.input));
  std::vector<edgecut::Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  bool decode_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(edgecut::parse_graph6(line, line_no));
    } catch (const edgecut::ParseError& e) {
      std::cerr << "edgecut survey: " << e.what() << '\n';
      decode_failed = true;
    }
  }

  std::vector<h::SurveyRow> rows(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) rows[i] = h::survey_row(graphs[i], caps);
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < cfg.jobs; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::string out;
  for (const auto& row : rows) out += (cfg.json ? h::to_json(row).dump() : h::format_survey_row(row)) + '\n';
  std::cout << out;
  return decode_failed ? kExitUsage : kExitOk;
}

void add_caps(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--subset-cap", cfg.subset_cap, "Max edges for ascending subset searches")
      ->capture_default_str();
  cmd->add_option("--scan-cap", cfg.scan_cap, "Max edges for full 2^m scans")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Exact edge cut domination parameters and claim verification"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute parameters of one graph");
  compute->add_option("input", cfg.input, "Input file, or - for standard input")->capture_default_str();
  compute->add_option("--format", cfg.format)->check(CLI::IsMember({"edgelist", "graph6"}))->capture_default_str();
  compute->add_option("--params", cfg.params, "gamma_prime, lambda, beta1, alpha1, gamma_ct, profile")
      ->delimiter(',')
      ->required();
  compute->add_option("--mode", cfg.mode)->check(CLI::IsMember({"literal", "strict"}))->capture_default_str();
  compute->add_flag("--witness", cfg.witness, "Print witness edge sets");
  compute->add_flag("--json", cfg.json, "Emit one JSON object");
  compute->add_option("--jobs", cfg.jobs, "Worker threads for the profile scan");
  add_caps(compute, cfg);

  auto* gen = app.add_subcommand("gen", "Generate a family graph");
  gen->add_option("--family", cfg.family)
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "wheel", "complete_bipartite", "two_cliques",
                             "figure1", "figure2"}));
  gen->add_option("--n", cfg.n, "Order (or smaller side / second clique)");
  gen->add_option("--m", cfg.m, "Larger side / first clique");
  gen->add_option("--len", cfg.len, "two_cliques path length (1 or 2)");
  gen->add_option("--format", cfg.format)->check(CLI::IsMember({"edgelist", "graph6"}))->capture_default_str();

  auto* check = app.add_subcommand("check", "Verify the claim catalogue");
  check->add_option("--max-n", cfg.max_n, "Largest order of the connected-graph catalogue")->capture_default_str();
  check->add_flag("--with-n7", cfg.with_n7, "Allow --max-n 7");
  check->add_option("--claims", cfg.claims, "Subset of claims, e.g. C1,C15")->delimiter(',');
  check->add_option("--graph6", cfg.graph6_path, "Check graphs from a graph6 stream (- for stdin)");
  check->add_option("--mode", cfg.mode)->check(CLI::IsMember({"literal", "strict", "both"}));
  check->add_flag("--json", cfg.json, "Emit JSON lines");
  check->add_flag("--strict-claims", cfg.strict_claims, "Treat soft-claim counterexamples as failures");
  check->add_flag("--timing", cfg.timing, "Record per-report elapsed milliseconds");
  check->add_option("--jobs", cfg.jobs, "Worker threads");
  add_caps(check, cfg);

  auto* survey = app.add_subcommand("survey", "Tabulate gamma', lambda, gamma_ct over a graph6 stream");
  survey->add_option("input", cfg.input, "graph6 stream, or - for standard input")->capture_default_str();
  survey->add_flag("--json", cfg.json, "Emit JSON lines");
  survey->add_option("--jobs", cfg.jobs, "Worker threads");
  add_caps(survey, cfg);

  cfg.mode.clear();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (cfg.mode.empty()) cfg.mode = check->parsed() ? "both" : "literal";
  cfg.jobs = std::max(1U, cfg.jobs);

  try {
    if (compute->parsed()) return run_compute(cfg);
    if (gen->parsed()) return run_gen(cfg);
    if (check->parsed()) return run_check(cfg);
    return run_survey(cfg);
  } catch (const edgecut::CapExceeded& e) {
    std::cerr << "edgecut: " << e.what() << " (raise it with " << cap_flag(e.cap_name()) << ")\n";
  } catch (const edgecut::Error& e) {
    std::cerr << "edgecut: " << e.what() << '\n';
  }
  return kExitUsage;
}
