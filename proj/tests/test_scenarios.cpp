#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scenarios.hpp"

using namespace qecost;
using scenarios::RunOptions;

namespace {

long long count_lines(const std::string& text) {
  long long n = 0;
  for (char c : text) n += (c == '\n');
  return n;
}

errc code_of(const std::string& config) {
  try {
    scenarios::run_scenario_text(config, RunOptions{});
  } catch (const error& e) {
    return e.code();
  }
  return errc::ok;
}

std::string message_of(const std::string& config) {
  try {
    scenarios::run_scenario_text(config, RunOptions{});
  } catch (const error& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("scenario registry is stable") {
  const auto infos = scenarios::list_scenarios();
  REQUIRE(infos.size() == 8);
  CHECK(infos.front().name == "single-gate-pmin");
  CHECK(infos.back().name == "kmax-scan");
  bool has_ft = false;
  for (const auto& info : infos) {
    CHECK_FALSE(info.description.empty());
    if (info.name == "ft-qft-pmin") has_ft = true;
  }
  CHECK(has_ft);
}

TEST_CASE("kmax-scan scenario output") {
  const auto r = scenarios::run_scenario_text("scenario = kmax-scan\n", RunOptions{});
  CHECK(r.scenario == "kmax-scan");
  CHECK(r.feasible);
  REQUIRE(r.files.size() == 1);
  CHECK(r.files[0].name == "kmax-scan.csv");
  // Header plus k = 0..8 rows.
  CHECK(count_lines(r.files[0].content) == 10);
  CHECK(r.files[0].content.rfind("k,eta_k,p_l_k\n", 0) == 0);
  // 17-significant-digit scientific formatting of the k = 0 fixture noise.
  CHECK(r.files[0].content.find("1.0000000000000000e-08") != std::string::npos);
  const auto summary = nlohmann::json::parse(r.summary_json);
  CHECK(summary["k_max"] == 0);
  bool has3 = false;
  for (const auto& k : summary["local_minima"])
    if (k == 3) has3 = true;
  CHECK(has3);
}

TEST_CASE("config comments, spacing, and key overrides") {
  const std::string text =
      "# choose the fixture scan\n"
      "scenario = kmax-scan   # trailing comment\n"
      "\n"
      "  k_range = 4\n";
  const auto r = scenarios::run_scenario_text(text, RunOptions{});
  CHECK(count_lines(r.files[0].content) == 6); // header + k = 0..4
}

TEST_CASE("parse errors carry line and column information") {
  CHECK(code_of("scenario kmax-scan\n") == errc::parse_error); // missing '='
  CHECK(message_of("scenario = kmax-scan\nk_range\n").find("line 2") != std::string::npos);
  CHECK(code_of("scenario = kmax-scan\n= 4\n") == errc::parse_error); // empty key
  CHECK(code_of("scenario = kmax-scan\nk_range =\n") == errc::parse_error); // empty value
  // Duplicate key.
  CHECK(code_of("scenario = kmax-scan\nk_range = 3\nk_range = 4\n") == errc::parse_error);
  CHECK(message_of("scenario = kmax-scan\nk_range = 3\nk_range = 4\n").find("duplicate") !=
        std::string::npos);
  // Non-numeric value for a numeric key.
  CHECK(code_of("scenario = kmax-scan\neta_thr = abc\n") == errc::parse_error);
  // Unknown key for this scenario, with its location.
  const std::string unknown = "scenario = kmax-scan\nm_target = 0.1\n";
  CHECK(code_of(unknown) == errc::parse_error);
  CHECK(message_of(unknown).find("unknown key 'm_target'") != std::string::npos);
  CHECK(message_of(unknown).find("line 2") != std::string::npos);
  // Unknown or missing scenario name.
  CHECK(code_of("scenario = not-a-thing\n") == errc::parse_error);
  CHECK(code_of("k_range = 3\n") == errc::parse_error);
}

TEST_CASE("invalid run options are rejected") {
  RunOptions opts;
  opts.threads = 0;
  CHECK_THROWS_AS(scenarios::run_scenario_text("scenario = kmax-scan\n", opts), error);
}

TEST_CASE("single-gate scenario produces a complete table and summary") {
  RunOptions opts;
  opts.grid_scale = optimizer::GridScale::coarse;
  const auto r = scenarios::run_scenario_text("scenario = single-gate-pmin\n", opts);
  CHECK(r.feasible);
  const auto summary = nlohmann::json::parse(r.summary_json);
  CHECK(summary["scenario"] == "single-gate-pmin");
  CHECK(summary["feasible"] == true);
  CHECK(summary["p_min"].get<double>() > 0.0);
  CHECK(summary.contains("argmin"));
  CHECK(summary["argmin"].contains("t1_k"));
  CHECK(summary["constraint_residual"].get<double>() < 1e-6);
  REQUIRE(r.files.size() == 1);
  // Every data line has exactly the 7 declared columns.
  const std::string& csv = r.files[0].content;
  size_t pos = csv.find('\n') + 1;
  long long rows = 0;
  while (pos < csv.size()) {
    const size_t end = csv.find('\n', pos);
    const std::string line = csv.substr(pos, end - pos);
    long long commas = 0;
    for (char c : line) commas += (c == ',');
    CHECK(commas == 6);
    ++rows;
    pos = end + 1;
  }
  CHECK(rows >= 20);
}

TEST_CASE("crosstalk-accuracy scenario tabulates all lattice families") {
  const auto r = scenarios::run_scenario_text("scenario = crosstalk-accuracy\n", RunOptions{});
  CHECK(r.feasible);
  // 6 (d, z) pairs x 9 qubit counts plus the header line.
  CHECK(count_lines(r.files[0].content) == 55);
  const auto summary = nlohmann::json::parse(r.summary_json);
  CHECK(summary.contains("worst_ratio_gap_at_any_n"));
  CHECK(summary["worst_ratio_gap_at_any_n"].get<double>() > 0.0);
}

TEST_CASE("ft-qft-pmin outputs are byte-identical across thread counts") {
  RunOptions one;
  one.grid_scale = optimizer::GridScale::coarse;
  RunOptions two = one;
  two.threads = 2;
  const std::string cfg = "scenario = ft-qft-pmin\nq_l = 64\n";
  const auto r1 = scenarios::run_scenario_text(cfg, one);
  const auto r2 = scenarios::run_scenario_text(cfg, two);
  CHECK(r1.summary_json == r2.summary_json);
  REQUIRE(r1.files.size() == 1);
  REQUIRE(r2.files.size() == 1);
  CHECK(r1.files[0].content == r2.files[0].content);
  CHECK(r1.feasible);
}

TEST_CASE("generated schema document covers every scenario") {
  const std::string doc = scenarios::schemas_markdown();
  CHECK(doc.rfind("# Output schemas", 0) == 0);
  for (const auto& info : scenarios::list_scenarios())
    CHECK(doc.find("## " + info.name) != std::string::npos);
  CHECK(doc.find("| k_range | 8 |") != std::string::npos);
  CHECK(doc.find("CSV columns: ") != std::string::npos);
}
