#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env = {}) {
  const std::string command = env + " " + std::string(TOPOCHECK_CLI) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

const std::string kExample1 =
    R"({"points": ["k","l","m"], "opens": [[], ["k"], ["l"], ["k","l"], ["k","l","m"]]})";

}  // namespace

TEST_CASE("classify renders the reference table shape") {
  const auto path = write_temp("topocheck_example1.json", kExample1);
  auto result = run_cli("classify --input " + path.string() + " --format markdown");
  CHECK(result.exit_code == 0);
  // the five closed rows are fully checked
  CHECK(result.output.find("| ∅ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ |") != std::string::npos);
  CHECK(result.output.find("| {m} | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ |") != std::string::npos);
  CHECK(result.output.find("| {k,m} | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ |") != std::string::npos);
  CHECK(result.output.find("| {l,m} | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ |") != std::string::npos);
  CHECK(result.output.find("| {k,l,m} | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ | ✓ |") != std::string::npos);
  // {k}: semi-closed yes, closed/pre-closed/g-closed no
  CHECK(result.output.find("| {k} |  | ✓ |  |  |") != std::string::npos);
}

TEST_CASE("classify rejects a family missing the full set with exit 2") {
  const auto path = write_temp("topocheck_bad.json",
                               R"({"points": ["a","b"], "opens": [[], ["a"]]})");
  auto result = run_cli("classify --input " + path.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("missing-full-set") != std::string::npos);
  CHECK(result.output.find("full set") != std::string::npos);
}

TEST_CASE("verify reports the implication outcome through its exit code") {
  // The exit code is the mathematical outcome: 0 for verified-exhaustively,
  // 1 for counterexample-found. Both commands scan levels 1..4 (389 spaces)
  // unless a failing level stops the scan early.
  auto verified = run_cli(
      "verify --hypothesis t1 --hypothesis meekly-sc-star-normal "
      "--conclusion softly-regular --n 1..4");
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("verified over 389 spaces") != std::string::npos);

  auto refuted = run_cli(
      "verify --hypothesis sc-star-normal --conclusion meekly-sc-star-normal --n 1..4");
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.output.find("counterexample") != std::string::npos);

  auto json_run = run_cli(
      "verify --hypothesis sc-star-normal --conclusion meekly-sc-star-normal "
      "--n 1..4 --format json");
  CHECK(json_run.exit_code == 1);
  json report = json::parse(json_run.output);
  CHECK(report["outcome"] == "counterexample");
  CHECK(report["checked_count"] == 34);
  CHECK(report["counterexample"]["space"]["points"].size() == 3);
}

TEST_CASE("unknown axiom names exit 2") {
  auto result = run_cli("verify --hypothesis bogus --conclusion normal --n 1..2");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("unknown axiom") != std::string::npos);
}

TEST_CASE("TOPOCHECK_MAX_N caps the requested range") {
  auto result = run_cli("verify --hypothesis normal --conclusion normal --n 1..4",
                        "TOPOCHECK_MAX_N=3");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("TOPOCHECK_MAX_N") != std::string::npos);
  auto ok = run_cli("verify --hypothesis normal --conclusion normal --n 1..3",
                    "TOPOCHECK_MAX_N=3");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("classification cells agree across csv and json") {
  const auto path = write_temp("topocheck_example1.json", kExample1);
  auto js = run_cli("classify --input " + path.string() + " --format json");
  auto csv = run_cli("classify --input " + path.string() + " --format csv");
  auto md = run_cli("classify --input " + path.string() + " --format markdown");
  REQUIRE(js.exit_code == 0);
  REQUIRE(csv.exit_code == 0);
  REQUIRE(md.exit_code == 0);

  json doc = json::parse(js.output);
  // parse csv into cell values
  std::istringstream lines(csv.output);
  std::string line;
  std::getline(lines, line);  // header
  std::size_t row_index = 0;
  std::size_t md_checks = 0;
  for (; std::getline(lines, line); ++row_index) {
    REQUIRE(row_index < doc["rows"].size());
    const auto& row = doc["rows"][row_index];
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, ',');  // space index
    std::getline(fields, field, ',');  // subset: may contain commas inside {}
    while (!field.empty() && field.front() == '{' && field.back() != '}') {
      std::string more;
      std::getline(fields, more, ',');
      field += "," + more;
    }
    for (const auto& cls : doc["classes"]) {
      REQUIRE(std::getline(fields, field, ','));
      const bool json_value = row["cells"][cls.get<std::string>()].get<bool>();
      CHECK(field == (json_value ? "true" : "false"));
      ++md_checks;
    }
  }
  CHECK(row_index == doc["rows"].size());
  CHECK(md_checks == 8 * 7);
}

TEST_CASE("axiom verdict cells agree across csv and json") {
  const auto path = write_temp("topocheck_example1.json", kExample1);
  auto js = run_cli("axioms --input " + path.string() + " --format json");
  auto csv = run_cli("axioms --input " + path.string() + " --format csv");
  REQUIRE(js.exit_code == 0);
  REQUIRE(csv.exit_code == 0);
  json doc = json::parse(js.output);
  std::istringstream lines(csv.output);
  std::string line;
  std::getline(lines, line);
  std::size_t index = 0;
  while (std::getline(lines, line)) {
    REQUIRE(index < doc["verdicts"].size());
    const auto& verdict = doc["verdicts"][index];
    const std::string expected = "0," + verdict["axiom"].get<std::string>() + "," +
                                 (verdict["holds"].get<bool>() ? "true" : "false");
    CHECK(line == expected);
    ++index;
  }
  CHECK(index == doc["verdicts"].size());
}

TEST_CASE("enumerate output re-ingests through classify") {
  auto enumerated = run_cli("enumerate --n 3 --format json");
  REQUIRE(enumerated.exit_code == 0);
  json spaces = json::parse(enumerated.output);
  CHECK(spaces.size() == 29);
  const auto path = write_temp("topocheck_enumerated.json", enumerated.output);
  auto classified = run_cli("classify --input " + path.string() + " --format csv");
  CHECK(classified.exit_code == 0);
  // 29 spaces x 8 subsets + header
  std::size_t lines = 0;
  for (char c : classified.output) lines += c == '\n';
  CHECK(lines == 1 + 29 * 8);
}

TEST_CASE("worker count never changes rendered output") {
  const std::string base =
      "verify --hypothesis sc-star-normal --conclusion meekly-sc-star-normal "
      "--n 1..4 --format json";
  auto one = run_cli(base + " --jobs 1");
  auto four = run_cli(base + " --jobs 4");
  CHECK(one.exit_code == four.exit_code);
  CHECK(one.output == four.output);
}

TEST_CASE("search exits 0 and reports the separating space when one exists") {
  auto found = run_cli(
      "search --hypothesis sc-star-normal --conclusion meekly-sc-star-normal "
      "--n 1..3 --format json");
  CHECK(found.exit_code == 0);
  json report = json::parse(found.output);
  CHECK(report["outcome"] == "counterexample");

  auto none = run_cli(
      "search --hypothesis meekly-sc-star-normal --conclusion sc-star-normal "
      "--n 1..3 --format json");
  CHECK(none.exit_code == 0);
  report = json::parse(none.output);
  CHECK(report["outcome"] == "verified-exhaustively");
}

TEST_CASE("audit renders divergences in every format") {
  auto md = run_cli("audit --target section-6-4");
  REQUIRE(md.exit_code == 0);
  CHECK(md.output.find("Finite (Trivial)") != std::string::npos);
  CHECK(md.output.find("NO") != std::string::npos);  // flagged divergence
  auto js = run_cli("audit --format json");
  REQUIRE(js.exit_code == 0);
  json reports = json::parse(js.output);
  CHECK(reports.size() == 4);
  auto csv = run_cli("audit --format csv --target example-1-families");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.find("false,true,false") != std::string::npos);
}

TEST_CASE("meekly option flags are honored") {
  const auto path = write_temp(
      "topocheck_partition.json",
      R"({"points": ["k","l","m"], "opens": [[], ["k"], ["l","m"], ["k","l","m"]]})");
  auto strict = run_cli("axioms --input " + path.string() +
                        " --format json --meekly-operands both-closed");
  auto relaxed = run_cli("axioms --input " + path.string() +
                         " --format json --meekly-operands relaxed");
  REQUIRE(strict.exit_code == 0);
  REQUIRE(relaxed.exit_code == 0);
  auto holds = [](const json& doc, const std::string& axiom) {
    for (const auto& verdict : doc["verdicts"]) {
      if (verdict["axiom"] == axiom) return verdict["holds"].get<bool>();
    }
    return false;
  };
  CHECK(holds(json::parse(strict.output), "meekly-sc-star-normal"));
  CHECK(holds(json::parse(relaxed.output), "meekly-sc-star-normal"));
  auto bad = run_cli("axioms --input " + path.string() + " --meekly-operands sideways");
  CHECK(bad.exit_code == 2);
}
