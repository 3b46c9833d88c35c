#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qecost.h"

namespace {

// Exit codes: 0 success, 1 internal, 2 config/parse, 3 infeasible, 4 I/O.
int exit_code_for(qecost_status status) {
  switch (status) {
    case QECOST_OK: return 0;
    case QECOST_PARSE_ERROR:
    case QECOST_INVALID_ARGUMENT: return 2;
    case QECOST_INFEASIBLE: return 3;
    case QECOST_IO_ERROR: return 4;
    default: return 1;
  }
}

int report(qecost_status status) {
  std::cerr << "error: " << qecost_last_error() << "\n";
  return exit_code_for(status);
}

std::string fetch_text(qecost_status (*fn)(char*, size_t, size_t*), qecost_status* status) {
  size_t needed = 0;
  *status = fn(nullptr, 0, &needed);
  if (*status != QECOST_OK) return {};
  std::vector<char> buf(needed);
  *status = fn(buf.data(), buf.size(), &needed);
  return std::string(buf.data());
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

int run_command(const std::string& config, const std::string& out_dir, int threads,
                const std::string& grid_scale) {
  qecost_run_t* run = nullptr;
  qecost_status status =
      qecost_run_config_file(config.c_str(), threads, grid_scale.c_str(), &run);
  if (status != QECOST_OK) return report(status);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << out_dir << "': " << ec.message()
              << "\n";
    qecost_run_free(run);
    return 4;
  }

  const char* scenario = nullptr;
  const char* summary = nullptr;
  size_t file_count = 0;
  int feasible = 0;
  if ((status = qecost_run_scenario(run, &scenario)) != QECOST_OK ||
      (status = qecost_run_summary_json(run, &summary)) != QECOST_OK ||
      (status = qecost_run_file_count(run, &file_count)) != QECOST_OK ||
      (status = qecost_run_feasible(run, &feasible)) != QECOST_OK) {
    const int code = report(status);
    qecost_run_free(run);
    return code;
  }

  // Copy out of the handle before freeing it.
  const std::string summary_text = summary;
  const std::string scenario_name = scenario;
  bool io_ok = write_file(std::filesystem::path(out_dir) / (scenario_name + ".summary.json"),
                          summary_text + "\n");
  for (size_t i = 0; i < file_count && io_ok; ++i) {
    const char* name = nullptr;
    const char* content = nullptr;
    if (qecost_run_file_name(run, i, &name) != QECOST_OK ||
        qecost_run_file_content(run, i, &content) != QECOST_OK) {
      io_ok = false;
      break;
    }
    io_ok = write_file(std::filesystem::path(out_dir) / name, content);
  }
  qecost_run_free(run);
  if (!io_ok) {
    std::cerr << "error: failed writing outputs to '" << out_dir << "'\n";
    return 4;
  }
  std::cout << summary_text << "\n";
  if (!feasible) {
    std::cerr << "scenario completed without a feasible optimum\n";
    return 3;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power and accuracy estimator for fault-tolerant quantum computation"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = ".";
  int threads = 1;
  std::string grid_scale = "default";

  auto* run = app.add_subcommand("run", "Run a scenario from a config file");
  run->add_option("--config", config, "Path to the key = value config file")->required();
  run->add_option("--out", out_dir, "Output directory (created if missing)");
  run->add_option("--threads", threads, "Worker threads (never changes results)")
      ->check(CLI::PositiveNumber);
  run->add_option("--grid-scale", grid_scale, "Grid density: coarse, default or fine")
      ->check(CLI::IsMember({"coarse", "default", "fine"}));

  auto* list = app.add_subcommand("list", "List registered scenarios");

  std::string schemas_out;
  auto* schemas = app.add_subcommand("schemas", "Print generated output-schema documentation");
  schemas->add_option("-o,--output", schemas_out, "Write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(config, out_dir, threads, grid_scale);

  if (list->parsed()) {
    qecost_status status = QECOST_OK;
    const std::string text = fetch_text(&qecost_list_scenarios, &status);
    if (status != QECOST_OK) return report(status);
    std::cout << text;
    return 0;
  }

  if (schemas->parsed()) {
    qecost_status status = QECOST_OK;
    const std::string text = fetch_text(&qecost_schemas_markdown, &status);
    if (status != QECOST_OK) return report(status);
    if (schemas_out.empty()) {
      std::cout << text;
    } else if (!write_file(schemas_out, text)) {
      std::cerr << "error: cannot write '" << schemas_out << "'\n";
      return 4;
    }
    return 0;
  }
  return 1;
}
