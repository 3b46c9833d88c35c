#include "qecost.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "crosstalk.hpp"
#include "errors.hpp"
#include "ftcore.hpp"
#include "hardware.hpp"
#include "noise.hpp"
#include "scenarios.hpp"

struct qecost_run {
  qecost::scenarios::RunResult result;
};

namespace {

thread_local std::string last_error_message;

qecost_status status_of(qecost::errc code) {
  switch (code) {
    case qecost::errc::ok: return QECOST_OK;
    case qecost::errc::invalid_argument: return QECOST_INVALID_ARGUMENT;
    case qecost::errc::out_of_regime: return QECOST_OUT_OF_REGIME;
    case qecost::errc::resource_limit: return QECOST_RESOURCE_LIMIT;
    case qecost::errc::infeasible: return QECOST_INFEASIBLE;
    case qecost::errc::parse_error: return QECOST_PARSE_ERROR;
    case qecost::errc::io_error: return QECOST_IO_ERROR;
    case qecost::errc::internal: return QECOST_INTERNAL_ERROR;
  }
  return QECOST_INTERNAL_ERROR;
}

template <typename Fn>
qecost_status wrap(const Fn& fn) {
  try {
    fn();
    last_error_message.clear();
    return QECOST_OK;
  } catch (const qecost::error& e) {
    last_error_message = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error_message = e.what();
    return QECOST_INTERNAL_ERROR;
  } catch (...) {
    last_error_message = "unknown error";
    return QECOST_INTERNAL_ERROR;
  }
}

qecost_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buf && cap > 0) {
    const size_t n = std::min(cap - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return QECOST_OK;
}

qecost::scenarios::RunOptions options_from(int threads, const char* grid_scale) {
  qecost::scenarios::RunOptions options;
  qecost::require(threads >= 1, qecost::errc::invalid_argument, "threads must be >= 1");
  options.threads = threads;
  const std::string scale = grid_scale ? grid_scale : "default";
  if (scale == "coarse")
    options.grid_scale = qecost::optimizer::GridScale::coarse;
  else if (scale == "default")
    options.grid_scale = qecost::optimizer::GridScale::normal;
  else if (scale == "fine")
    options.grid_scale = qecost::optimizer::GridScale::fine;
  else
    qecost::fail(qecost::errc::invalid_argument,
                 "grid_scale must be 'coarse', 'default' or 'fine'");
  return options;
}

} // namespace

extern "C" {

const char* qecost_last_error(void) { return last_error_message.c_str(); }

qecost_status qecost_run_config_text(const char* config_text, int threads,
                                     const char* grid_scale, qecost_run_t** out) {
  return wrap([&] {
    qecost::require(config_text && out, qecost::errc::invalid_argument,
                    "config_text and out must not be null");
    const auto options = options_from(threads, grid_scale);
    auto* run = new qecost_run{qecost::scenarios::run_scenario_text(config_text, options)};
    *out = run;
  });
}

qecost_status qecost_run_config_file(const char* path, int threads, const char* grid_scale,
                                     qecost_run_t** out) {
  return wrap([&] {
    qecost::require(path && out, qecost::errc::invalid_argument,
                    "path and out must not be null");
    std::ifstream in(path);
    qecost::require(static_cast<bool>(in), qecost::errc::io_error,
                    std::string("cannot open config file: ") + path);
    std::ostringstream text;
    text << in.rdbuf();
    const auto options = options_from(threads, grid_scale);
    auto* run = new qecost_run{qecost::scenarios::run_scenario_text(text.str(), options)};
    *out = run;
  });
}

qecost_status qecost_run_scenario(const qecost_run_t* run, const char** name) {
  return wrap([&] {
    qecost::require(run && name, qecost::errc::invalid_argument, "null argument");
    *name = run->result.scenario.c_str();
  });
}

qecost_status qecost_run_feasible(const qecost_run_t* run, int* feasible) {
  return wrap([&] {
    qecost::require(run && feasible, qecost::errc::invalid_argument, "null argument");
    *feasible = run->result.feasible ? 1 : 0;
  });
}

qecost_status qecost_run_summary_json(const qecost_run_t* run, const char** json) {
  return wrap([&] {
    qecost::require(run && json, qecost::errc::invalid_argument, "null argument");
    *json = run->result.summary_json.c_str();
  });
}

qecost_status qecost_run_file_count(const qecost_run_t* run, size_t* count) {
  return wrap([&] {
    qecost::require(run && count, qecost::errc::invalid_argument, "null argument");
    *count = run->result.files.size();
  });
}

qecost_status qecost_run_file_name(const qecost_run_t* run, size_t index, const char** name) {
  return wrap([&] {
    qecost::require(run && name, qecost::errc::invalid_argument, "null argument");
    qecost::require(index < run->result.files.size(), qecost::errc::invalid_argument,
                    "file index out of range");
    *name = run->result.files[index].name.c_str();
  });
}

qecost_status qecost_run_file_content(const qecost_run_t* run, size_t index,
                                      const char** content) {
  return wrap([&] {
    qecost::require(run && content, qecost::errc::invalid_argument, "null argument");
    qecost::require(index < run->result.files.size(), qecost::errc::invalid_argument,
                    "file index out of range");
    *content = run->result.files[index].content.c_str();
  });
}

void qecost_run_free(qecost_run_t* run) { delete run; }

qecost_status qecost_list_scenarios(char* buf, size_t cap, size_t* needed) {
  return wrap([&] {
    std::ostringstream out;
    for (const auto& info : qecost::scenarios::list_scenarios())
      out << info.name << ": " << info.description << "\n";
    copy_out(out.str(), buf, cap, needed);
  });
}

qecost_status qecost_schemas_markdown(char* buf, size_t cap, size_t* needed) {
  return wrap([&] { copy_out(qecost::scenarios::schemas_markdown(), buf, cap, needed); });
}

qecost_status qecost_logical_error(double eta, double eta_thr, int k, double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    *out = qecost::ftcore::logical_error(eta, eta_thr, k);
  });
}

qecost_status qecost_bose_einstein(double temperature, double omega0, double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    *out = qecost::noise::bose_einstein(temperature, omega0);
  });
}

qecost_status qecost_pauli_strength(double n_tot, double gamma_sp, double tau, double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    *out = qecost::noise::pauli_strength(n_tot, gamma_sp, tau);
  });
}

qecost_status qecost_gate_drive_power(double gamma_sp, double omega0, double theta, double tau,
                                      double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    qecost::hardware::HardwareProfile profile;
    profile.gamma_sp = gamma_sp;
    profile.omega0 = omega0;
    *out = qecost::hardware::gate_drive_power(profile, theta, tau);
  });
}

qecost_status qecost_conduction(double t_cold, double t_hot, int model, double length,
                                double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    qecost::require(model >= 0 && model <= 2, qecost::errc::invalid_argument,
                    "model must be 0 (composite), 1 (coax) or 2 (stripline)");
    qecost::hardware::HardwareProfile profile;
    profile.cable_length = length;
    *out = qecost::hardware::conduction(t_cold, t_hot, profile,
                                        static_cast<qecost::hardware::CableModel>(model));
  });
}

qecost_status qecost_cz_coefficient(double z, double* out) {
  return wrap([&] {
    qecost::require(out != nullptr, qecost::errc::invalid_argument, "null output");
    *out = qecost::crosstalk::cz_coefficient(z);
  });
}

} // extern "C"
