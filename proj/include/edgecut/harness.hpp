#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edgecut/classical_params.hpp"
#include "edgecut/cutdom_params.hpp"
#include "edgecut/families.hpp"
#include "edgecut/predicates.hpp"
#include "json.hpp"

namespace edgecut::harness {

using Json = nlohmann::ordered_json;

/// One entry of the claim catalogue (ids 1..15, printed as C1..C15).
struct ClaimInfo {
  int id;
  const char* description;
  /// Hard claims fail the run on a counterexample; soft ones are findings.
  bool hard;
  /// Claims whose outcome depends on the interpretation mode.
  bool per_mode;
};

const std::vector<ClaimInfo>& claim_catalogue();
const ClaimInfo& claim_info(int id);
std::string claim_name(int id);
/// Parses "C7" or "7"; throws PreconditionError otherwise.
int parse_claim(const std::string& text);

enum class Status { verified, counterexample, skipped_not_applicable, skipped_cap };
const char* status_name(Status status);

struct ClaimReport {
  int claim = 0;
  std::string graph_id;
  std::optional<Mode> mode;
  Status status = Status::verified;
  /// Computed values, in a fixed key order.
  Json values = Json::object();
  /// Witness edge sets; present for every counterexample.
  std::vector<EdgeSet> witnesses;
  std::shared_ptr<const Graph> graph;
  std::optional<double> ms;
};

/// Where a graph came from; decides which claims apply to it.
enum class Origin { family, tree, catalogue, stream };

struct WorkItem {
  std::string graph_id;
  std::shared_ptr<const Graph> graph;
  Origin origin = Origin::catalogue;
  std::optional<FamilySpec> family;
};

/// "c:<hex canonical form>" for n <= 8, otherwise "g6:<graph6>".
std::string graph_id(const Graph& g);

/// Family generators at their default coverage, every tree with 2..9
/// vertices, and every connected graph with 2..max_n vertices.
std::vector<WorkItem> builtin_source(int max_n = 6, bool with_n7 = false);

/// One item per graph6 line; blank lines are skipped. Decode failures
/// propagate as ParseError with the line number.
std::vector<WorkItem> graph6_source(std::istream& in);

struct RunOptions {
  /// Claim ids to run; empty means the whole catalogue.
  std::vector<int> claims;
  std::vector<Mode> modes = {Mode::literal, Mode::strict};
  SearchCaps caps;
  unsigned workers = 1;
  bool timing = false;
};

/// Runs every selected claim on every item it applies to. The result is
/// sorted by (claim, graph_id, mode) and does not depend on `workers`.
std::vector<ClaimReport> run_claims(const std::vector<WorkItem>& source, const RunOptions& options);

/// Minimum-size edge dominating set containing forced_in and avoiding
/// forced_out. Throws PreconditionError when the constraints overlap or no
/// such set exists.
ParamResult constrained_gamma_prime(const Graph& g, const EdgeSet& forced_in,
                                    const EdgeSet& forced_out, const SearchCaps& caps = {});

/// Re-derives a counterexample from its witnesses using the predicates
/// module alone. True when the violation is confirmed.
bool revalidate(const ClaimReport& report);

/// 0 when no hard claim (every claim, with strict_claims) has a counterexample; 1 otherwise.
int exit_code(const std::vector<ClaimReport>& reports, bool strict_claims);

Json to_json(const ClaimReport& report);
std::string format_table(const std::vector<ClaimReport>& reports);

/// One survey row: classical and gamma_ct values with equality flags.
struct SurveyRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::string status;  // "ok", "skipped-disconnected" or "skipped-cap"
  std::optional<int> gamma_prime, lambda, gamma_ct, alpha1;
};

SurveyRow survey_row(const Graph& g, const SearchCaps& caps = {});
std::string format_survey_row(const SurveyRow& row);
Json to_json(const SurveyRow& row);

}  // namespace edgecut::harness
