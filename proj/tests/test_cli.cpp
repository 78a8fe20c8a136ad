#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

// Runs a shell pipeline in which CLI stands for the built binary.
Outcome sh(std::string command) {
  const std::string bin = EDGECUT_CLI_PATH;
  for (std::size_t pos; (pos = command.find("CLI")) != std::string::npos;)
    command.replace(pos, 3, bin);
  if (command.find("2>&1") == std::string::npos) command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) {
  int count = 0;
  for (char c : s) count += c == '\n';
  return count;
}

}  // namespace

TEST_CASE("compute") {
  auto c7 = sh("CLI gen --family cycle --n 7 | CLI compute --format edgelist --params gamma_ct");
  CHECK(c7.code == 0);
  CHECK(c7.out == "gamma_ct = 3\n");
  auto k6 = sh("CLI gen --family complete --n 6 | CLI compute --params lambda");
  CHECK(k6.out == "lambda = 5\n");
  auto c4 = sh("CLI gen --family cycle --n 4 | CLI compute --params profile --mode literal --json");
  CHECK(c4.code == 0);
  auto doc = nlohmann::json::parse(c4.out);
  for (const auto& [name, entry] : doc["params"].items()) CHECK(entry["value"] == 2);
  CHECK(doc["params"].size() == 6);
  auto witness = sh("CLI gen --family figure2 | CLI compute --params gamma_ct --witness --json");
  CHECK(nlohmann::json::parse(witness.out)["params"]["gamma_ct"]["witness"].size() == 2);
}

TEST_CASE("gen composes with every format") {
  auto fig = sh("CLI gen --family figure2 --format edgelist");
  CHECK(fig.out == "5 6\n0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n");
  auto tc = sh("CLI gen --family two_cliques --m 4 --n 4 --len 2");
  CHECK(tc.out.rfind("9 14\n", 0) == 0);
  auto g6 = sh("CLI gen --family wheel --n 6 --format graph6 | CLI compute --format graph6 --params gamma_ct");
  CHECK(g6.out == "gamma_ct = 4\n");
}

TEST_CASE("errors exit with code 2 and no partial output") {
  CHECK(sh("CLI gen --family cycle --n 2").code == 2);
  auto bad = sh("printf '3 2\\n0 1\\n' | CLI compute --params lambda --json");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  auto capped = sh("CLI gen --family complete --n 8 | CLI compute --params profile --json");
  CHECK(capped.code == 2);
  CHECK(capped.out.empty());
  auto msg = sh("CLI gen --family complete --n 8 | CLI compute --params profile 2>&1");
  CHECK(msg.out.find("--scan-cap") != std::string::npos);
  CHECK(sh("CLI compute").code == 2);
}

TEST_CASE("check and survey") {
  auto figs = sh("CLI check --claims C15 --json");
  CHECK(figs.code == 0);
  CHECK(lines(figs.out) == 2);
  CHECK(figs.out.find("counterexample") == std::string::npos);
  auto piped = sh("printf 'A_\\nBw\\nC~\\n' | CLI check --graph6 - --claims C9 --json");
  CHECK(piped.code == 0);
  CHECK(lines(piped.out) == 3);
  auto survey = sh("CLI gen --family complete --n 4 --format graph6 | CLI survey -");
  CHECK(survey.out.find("lambda=gamma_ct:yes") != std::string::npos);
  CHECK(survey.out.find("gamma'=gamma_ct:no") != std::string::npos);
  auto empty = sh("printf '' | CLI survey -");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
}
