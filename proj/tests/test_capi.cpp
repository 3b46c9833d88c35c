// Exercises the C API exactly as an external consumer would: through the
// shared library's header only, with a plain main and no C++ internals.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qecost.h"

static int failures = 0;

#define EXPECT(cond)                                                        \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                           \
    }                                                                       \
  } while (0)

static bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fabs(b);
}

static std::string fetch(qecost_status (*fn)(char*, size_t, size_t*)) {
  size_t needed = 0;
  if (fn(nullptr, 0, &needed) != QECOST_OK) return {};
  std::vector<char> buf(needed);
  if (fn(buf.data(), buf.size(), &needed) != QECOST_OK) return {};
  return std::string(buf.data());
}

static void test_numeric_ops() {
  double v = 0.0;
  // Threshold fixed point and a two-level contraction.
  EXPECT(qecost_logical_error(1e-4, 1e-4, 5, &v) == QECOST_OK);
  EXPECT(close_rel(v, 1e-4, 1e-12));
  EXPECT(qecost_logical_error(1e-5, 1e-4, 2, &v) == QECOST_OK);
  EXPECT(close_rel(v, 1e-8, 1e-10)); // 1e-5 -> 1e-6 -> 1e-8 under the recursion
  EXPECT(qecost_logical_error(-1.0, 1e-4, 1, &v) == QECOST_INVALID_ARGUMENT);
  EXPECT(std::strlen(qecost_last_error()) > 0);

  // Bose-Einstein occupation: zero at T = 0, 1 at x = ln 2.
  EXPECT(qecost_bose_einstein(0.0, 2.0 * 3.141592653589793 * 6e9, &v) == QECOST_OK);
  EXPECT(v == 0.0);
  const double kB = 1.380649e-23, hbar = 1.054571817e-34;
  EXPECT(qecost_bose_einstein(1.0, std::log(2.0) * kB / hbar, &v) == QECOST_OK);
  EXPECT(close_rel(v, 1.0, 1e-12));
  EXPECT(qecost_bose_einstein(-1.0, 1e9, &v) == QECOST_INVALID_ARGUMENT);

  // Pauli strength (1 + 2n) * gamma * tau / 4.
  EXPECT(qecost_pauli_strength(1.5, 1e3, 1e-7, &v) == QECOST_OK);
  EXPECT(close_rel(v, 4.0 * 1e3 * 1e-7 / 4.0, 1e-12));

  // Drive power of the reference pi pulse lands in the expected decade.
  EXPECT(qecost_gate_drive_power(1e3, 2.0 * 3.141592653589793 * 6e9, 3.141592653589793, 25e-9,
                                 &v) == QECOST_OK);
  EXPECT(v > 0.5e-11 && v < 5e-11);
  EXPECT(qecost_gate_drive_power(1e3, 1e9, 1.0, 0.0, &v) == QECOST_INVALID_ARGUMENT);

  // Cable conduction: coax from 10 K to 300 K over 0.2 m is a few mW.
  EXPECT(qecost_conduction(10.0, 300.0, 1, 0.2, &v) == QECOST_OK);
  EXPECT(v > 2e-3 && v < 6e-3);
  double coax = v, strip = 0.0;
  EXPECT(qecost_conduction(10.0, 300.0, 2, 0.2, &strip) == QECOST_OK);
  EXPECT(strip < coax);
  EXPECT(qecost_conduction(10.0, 5.0, 1, 0.2, &v) == QECOST_INVALID_ARGUMENT);
  EXPECT(qecost_conduction(0.0, 10.0, 7, 0.2, &v) == QECOST_INVALID_ARGUMENT);

  // Angular coefficient: C_0 = 1, C_1 = 2 ln cot(pi/8).
  EXPECT(qecost_cz_coefficient(0.0, &v) == QECOST_OK);
  EXPECT(close_rel(v, 1.0, 1e-10));
  EXPECT(qecost_cz_coefficient(1.0, &v) == QECOST_OK);
  EXPECT(close_rel(v, 2.0 * std::log(1.0 / std::tan(3.141592653589793 / 8.0)), 1e-10));
  EXPECT(qecost_cz_coefficient(2.5, &v) == QECOST_INVALID_ARGUMENT);

  // Null output pointers are invalid, never a crash.
  EXPECT(qecost_logical_error(1e-5, 1e-4, 1, nullptr) == QECOST_INVALID_ARGUMENT);
}

static void test_catalogs() {
  const std::string list = fetch(&qecost_list_scenarios);
  EXPECT(list.find("ft-qft-pmin") != std::string::npos);
  EXPECT(list.find("kmax-scan") != std::string::npos);
  const std::string schemas = fetch(&qecost_schemas_markdown);
  EXPECT(schemas.rfind("# Output schemas", 0) == 0);

  // Two-call buffer contract: truncation still NUL-terminates.
  size_t needed = 0;
  EXPECT(qecost_list_scenarios(nullptr, 0, &needed) == QECOST_OK);
  EXPECT(needed == list.size() + 1);
  char tiny[8];
  EXPECT(qecost_list_scenarios(tiny, sizeof(tiny), &needed) == QECOST_OK);
  EXPECT(tiny[7] == '\0' || std::strlen(tiny) < sizeof(tiny));
  EXPECT(std::strncmp(tiny, list.c_str(), std::strlen(tiny)) == 0);
}

static void test_runs() {
  qecost_run_t* run = nullptr;
  EXPECT(qecost_run_config_text("scenario = kmax-scan\n", 1, nullptr, &run) == QECOST_OK);
  const char* name = nullptr;
  EXPECT(qecost_run_scenario(run, &name) == QECOST_OK);
  EXPECT(std::string(name) == "kmax-scan");
  int feasible = 0;
  EXPECT(qecost_run_feasible(run, &feasible) == QECOST_OK);
  EXPECT(feasible == 1);
  const char* json = nullptr;
  EXPECT(qecost_run_summary_json(run, &json) == QECOST_OK);
  EXPECT(std::string(json).find("\"k_max\": 0") != std::string::npos);
  size_t count = 0;
  EXPECT(qecost_run_file_count(run, &count) == QECOST_OK);
  EXPECT(count == 1);
  const char* fname = nullptr;
  const char* content = nullptr;
  EXPECT(qecost_run_file_name(run, 0, &fname) == QECOST_OK);
  EXPECT(std::string(fname) == "kmax-scan.csv");
  EXPECT(qecost_run_file_content(run, 0, &content) == QECOST_OK);
  EXPECT(std::string(content).rfind("k,eta_k,p_l_k\n", 0) == 0);
  EXPECT(qecost_run_file_name(run, 5, &fname) == QECOST_INVALID_ARGUMENT);
  qecost_run_free(run);
  qecost_run_free(nullptr); // must be a safe no-op

  // Error paths map onto distinct status codes.
  run = nullptr;
  EXPECT(qecost_run_config_text("scenario = nope\n", 1, nullptr, &run) == QECOST_PARSE_ERROR);
  EXPECT(run == nullptr);
  EXPECT(std::strlen(qecost_last_error()) > 0);
  EXPECT(qecost_run_config_text("scenario = kmax-scan\nbogus = 1\n", 1, nullptr, &run) ==
         QECOST_PARSE_ERROR);
  EXPECT(qecost_run_config_text(nullptr, 1, nullptr, &run) == QECOST_INVALID_ARGUMENT);
  EXPECT(qecost_run_config_text("scenario = kmax-scan\n", 0, nullptr, &run) ==
         QECOST_INVALID_ARGUMENT);
  EXPECT(qecost_run_config_text("scenario = kmax-scan\n", 1, "huge", &run) ==
         QECOST_INVALID_ARGUMENT);
  EXPECT(qecost_run_config_file("/nonexistent/qecost.cfg", 1, nullptr, &run) == QECOST_IO_ERROR);

  // grid_scale spellings accepted by the API.
  for (const char* scale : {"coarse", "default", "fine"}) {
    run = nullptr;
    EXPECT(qecost_run_config_text("scenario = kmax-scan\n", 1, scale, &run) == QECOST_OK);
    qecost_run_free(run);
  }
}

int main() {
  test_numeric_ops();
  test_catalogs();
  test_runs();
  if (failures == 0) std::printf("all C API checks passed\n");
  return failures == 0 ? 0 : 1;
}
