#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "accounting.hpp"
#include "crosstalk.hpp"
#include "errors.hpp"
#include "ftcore.hpp"
#include "hardware.hpp"
#include "noise.hpp"
#include "workloads.hpp"

namespace qecost::scenarios {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- config ---

struct ConfigEntry {
  std::string value;
  int line = 0;
  int column = 0;
};

class Config {
public:
  void insert(const std::string& key, ConfigEntry entry) {
    if (entries_.count(key))
      fail(errc::parse_error, "line " + std::to_string(entry.line) + ", column " +
                                  std::to_string(entry.column) + ": duplicate key '" + key + "'");
    entries_.emplace(key, std::move(entry));
  }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  const std::map<std::string, ConfigEntry>& entries() const { return entries_; }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second.value;
  }
  double get_number(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const auto& e = it->second;
    try {
      size_t used = 0;
      const double v = std::stod(e.value, &used);
      if (used != e.value.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      fail(errc::parse_error, "line " + std::to_string(e.line) + ", column " +
                                  std::to_string(e.column) + ": invalid number for '" + key +
                                  "': '" + e.value + "'");
    }
  }
  long long get_integer(const std::string& key, long long fallback) const {
    const double v = get_number(key, static_cast<double>(fallback));
    const double rounded = std::round(v);
    auto it = entries_.find(key);
    if (it != entries_.end() && std::abs(v - rounded) > 1e-9)
      fail(errc::parse_error, "line " + std::to_string(it->second.line) + ", column " +
                                  std::to_string(it->second.column) + ": expected integer for '" +
                                  key + "'");
    return static_cast<long long>(rounded);
  }

private:
  std::map<std::string, ConfigEntry> entries_;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const size_t eq = line.find('=');
    const int key_col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (eq == std::string::npos)
      fail(errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                  std::to_string(key_col) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      fail(errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                  std::to_string(key_col) + ": empty key");
    if (value.empty())
      fail(errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                  std::to_string(static_cast<int>(eq) + 2) + ": empty value for '" +
                                  key + "'");
    ConfigEntry entry;
    entry.value = value;
    entry.line = line_no;
    entry.column = key_col;
    cfg.insert(key, std::move(entry));
  }
  return cfg;
}

// ------------------------------------------------------------------- csv ---

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

class Csv {
public:
  explicit Csv(const std::vector<std::string>& header) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
  }
  Csv& cell(double v) { return raw(fmt_double(v)); }
  Csv& cell(long long v) { return raw(std::to_string(v)); }
  Csv& cell(int v) { return raw(std::to_string(v)); }
  Csv& cell(bool v) { return raw(v ? "1" : "0"); }
  Csv& cell(const std::string& v) { return raw(v); }
  void endrow() {
    out_ << '\n';
    col_ = 0;
  }
  std::string str() const { return out_.str(); }

private:
  Csv& raw(const std::string& s) {
    if (col_++) out_ << ',';
    out_ << s;
    return *this;
  }
  std::ostringstream out_;
  int col_ = 0;
};

// ------------------------------------------------------------ registry ----

struct KeySpec {
  std::string key;
  std::string fallback;
  std::string doc;
};

struct ScenarioSpec {
  std::string name;
  std::string description;
  std::vector<KeySpec> keys;
  std::vector<std::string> csv_columns;
  RunResult (*run)(const Config&, const RunOptions&);
};

hardware::HardwareProfile profile_from(const Config& cfg) {
  hardware::HardwareProfile p;
  p.gamma_sp = cfg.get_number("gamma_sp_hz", p.gamma_sp);
  p.omega0 = 2.0 * constants::pi * cfg.get_number("f0_hz", 6e9);
  p.tau_1qb = cfg.get_number("tau_1qb_s", p.tau_1qb);
  p.tau_timestep = cfg.get_number("tau_timestep_s", p.tau_timestep);
  p.electronics_scale = cfg.get_number("epsilon", p.electronics_scale);
  p.efficiency_exponent = static_cast<int>(cfg.get_integer("efficiency_exponent", 1));
  p.hot_temperature = cfg.get_number("hot_temperature_k", p.hot_temperature);
  return p;
}

json argmin_json(const optimizer::OptimizationResult& r) {
  return json{{"k", r.argmin.k},
              {"t1_k", r.argmin.T1},
              {"tk_k", r.argmin.TK},
              {"attenuation", r.argmin.A},
              {"depth", r.argmin.depth},
              {"resource", r.argmin.resource},
              {"n_target_photons", r.argmin.n_target}};
}

json summary_base(const std::string& name, const optimizer::OptimizationResult& r) {
  return json{{"scenario", name},
              {"feasible", r.feasible},
              {"p_min", r.p_min},
              {"argmin", argmin_json(r)},
              {"constraint_residual", r.constraint_residual},
              {"flatness", r.flatness},
              {"feasible_cells", r.feasible_cells},
              {"infeasible_cells", r.infeasible_cells}};
}

// ------------------------------------------------------- scenario runners --

RunResult run_single_gate_pmin(const Config& cfg, const RunOptions& opt) {
  const auto profile = profile_from(cfg);
  const double m_target = cfg.get_number("m_target", 1e-3);
  const std::string metric = cfg.get_string("metric", "worst");
  require(metric == "worst" || metric == "average", errc::parse_error,
          "metric must be 'worst' or 'average'");
  const auto kind = metric == "worst" ? noise::Fidelity::worst : noise::Fidelity::average;
  const auto grid = optimizer::GridSpec::defaults(opt.grid_scale);
  const auto result =
      optimizer::minimize_power_single_gate(profile, m_target, kind, grid, opt.threads);

  Csv csv({"t_q_k", "attenuation", "n_target_photons", "power_w", "metric", "feasible", "reason"});
  for (const auto& row : result.evaluated) {
    csv.cell(row.T1).cell(row.A).cell(row.n_target).cell(row.power).cell(row.metric)
        .cell(row.feasible).cell(row.reason);
    csv.endrow();
  }
  RunResult out;
  out.scenario = "single-gate-pmin";
  out.feasible = result.feasible;
  out.summary_json = summary_base(out.scenario, result).dump(2);
  out.files.push_back({"single-gate-pmin.csv", csv.str()});
  return out;
}

RunResult run_nisq_qft_depth(const Config& cfg, const RunOptions& opt) {
  const auto profile = profile_from(cfg);
  const long long n = cfg.get_integer("n", 30);
  const double m_target = cfg.get_number("m_target", 0.34);
  const auto grid = optimizer::GridSpec::defaults(opt.grid_scale);
  const auto result =
      optimizer::minimize_power_nisq(profile, n, m_target, grid, true, opt.threads);

  Csv csv({"depth", "t_q_k", "attenuation", "n_target_photons", "power_w", "metric", "feasible",
           "reason"});
  for (const auto& row : result.evaluated) {
    csv.cell(row.depth).cell(row.T1).cell(row.A).cell(row.n_target).cell(row.power)
        .cell(row.metric).cell(row.feasible).cell(row.reason);
    csv.endrow();
  }
  RunResult out;
  out.scenario = "nisq-qft-depth";
  out.feasible = result.feasible;
  out.summary_json = summary_base(out.scenario, result).dump(2);
  out.files.push_back({"nisq-qft-depth.csv", csv.str()});
  return out;
}

RunResult run_ft_qft_pmin(const Config& cfg, const RunOptions& opt) {
  const auto profile = profile_from(cfg);
  const long long q_l = cfg.get_integer("q_l", 2048);
  const double m_target = cfg.get_number("m_target", 1e-2);
  const double eta_thr = cfg.get_number("eta_thr", 1e-4);
  const auto workload = workloads::qft_workload(q_l);
  const auto grid = optimizer::GridSpec::defaults(opt.grid_scale);
  const auto result =
      optimizer::minimize_power_ft(profile, workload, m_target, grid, eta_thr, opt.threads);

  Csv csv({"k", "t1_k", "tk_k", "attenuation", "n_target_photons", "power_w", "metric",
           "feasible", "reason"});
  for (const auto& row : result.evaluated) {
    csv.cell(row.k).cell(row.T1).cell(row.TK).cell(row.A).cell(row.n_target).cell(row.power)
        .cell(row.metric).cell(row.feasible).cell(row.reason);
    csv.endrow();
  }
  RunResult out;
  out.scenario = "ft-qft-pmin";
  out.feasible = result.feasible;
  out.summary_json = summary_base(out.scenario, result).dump(2);
  out.files.push_back({"ft-qft-pmin.csv", csv.str()});
  return out;
}

RunResult run_memory_map(const Config& cfg, const RunOptions& opt) {
  const double eta0 = cfg.get_number("eta0", 1e-5);
  const double eta_thr = cfg.get_number("eta_thr", 1e-4);
  const double m_target = cfg.get_number("m_target", 1e-2);
  const double q_lo = cfg.get_number("q_l_min", 16);
  const double q_hi = cfg.get_number("q_l_max", 16384);
  const double d_lo = cfg.get_number("d_l_min", 16);
  const double d_hi = cfg.get_number("d_l_max", 1048576);
  int per_axis = 20;
  if (opt.grid_scale == optimizer::GridScale::coarse) per_axis = 10;
  if (opt.grid_scale == optimizer::GridScale::fine) per_axis = 40;

  const auto q_grid = optimizer::log_space(q_lo, q_hi, per_axis);
  const auto d_grid = optimizer::log_space(d_lo, d_hi, per_axis);
  Csv csv({"q_l", "d_l", "n_l", "k_opt", "p_fail", "feasible"});
  long long feasible_cells = 0;
  for (double q : q_grid)
    for (double d : d_grid) {
      const double n_l = q * d;
      int k_opt = -1;
      double p_fail = 1.0;
      for (int k = 0; k <= 20; ++k) {
        const double p = ftcore::algorithm_failure(n_l, ftcore::logical_error(eta0, eta_thr, k));
        if (p <= m_target) {
          k_opt = k;
          p_fail = p;
          break;
        }
      }
      const bool ok = k_opt >= 0;
      if (ok) ++feasible_cells;
      csv.cell(q).cell(d).cell(n_l).cell(k_opt).cell(p_fail).cell(ok);
      csv.endrow();
    }
  RunResult out;
  out.scenario = "memory-map";
  out.feasible = feasible_cells > 0;
  out.summary_json = json{{"scenario", out.scenario},
                          {"feasible", out.feasible},
                          {"rows", static_cast<long long>(q_grid.size() * d_grid.size())},
                          {"feasible_cells", feasible_cells}}
                         .dump(2);
  out.files.push_back({"memory-map.csv", csv.str()});
  return out;
}

RunResult run_lifetime_sweep(const Config& cfg, const RunOptions& opt) {
  auto profile = profile_from(cfg);
  const long long q_l = cfg.get_integer("q_l", 2048);
  const double m_target = cfg.get_number("m_target", 1e-2);
  const double eta_thr = cfg.get_number("eta_thr", 1e-4);
  const auto workload = workloads::qft_workload(q_l);
  const auto grid = optimizer::GridSpec::defaults(opt.grid_scale);

  Csv csv({"gamma_sp_inv_s", "epsilon", "feasible", "p_min_w", "k_opt", "t1_k", "tk_k",
           "attenuation", "residual"});
  json combos = json::array();
  bool any = false;
  for (double gamma_inv : {1e-3, 1e-2, 1e-1})
    for (double eps : {1.0, 1e-2, 1e-4}) {
      profile.gamma_sp = 1.0 / gamma_inv;
      profile.electronics_scale = eps;
      const auto r =
          optimizer::minimize_power_ft(profile, workload, m_target, grid, eta_thr, opt.threads);
      any = any || r.feasible;
      csv.cell(gamma_inv).cell(eps).cell(r.feasible).cell(r.p_min).cell(r.argmin.k)
          .cell(r.argmin.T1).cell(r.argmin.TK).cell(r.argmin.A).cell(r.constraint_residual);
      csv.endrow();
      combos.push_back(json{{"gamma_sp_inv_s", gamma_inv},
                            {"epsilon", eps},
                            {"feasible", r.feasible},
                            {"p_min_w", r.p_min},
                            {"k_opt", r.argmin.k}});
    }
  RunResult out;
  out.scenario = "lifetime-sweep";
  out.feasible = any;
  out.summary_json =
      json{{"scenario", out.scenario}, {"feasible", any}, {"results", combos}}.dump(2);
  out.files.push_back({"lifetime-sweep.csv", csv.str()});
  return out;
}

RunResult run_ch3_energy(const Config& cfg, const RunOptions& opt) {
  const long long n = cfg.get_integer("n", 100000);
  const double p_success = cfg.get_number("p_success", 2.0 / 3.0);
  const double eta_thr = cfg.get_number("eta_thr", 1e-4);
  const double D = cfg.get_number("d_multiplier", 291.0);
  const double omega0 = 2.0 * constants::pi * cfg.get_number("f0_hz", 6e9);
  const double lo = cfg.get_number("photons_min", 1e6);
  const double hi = cfg.get_number("photons_max", 1e12);
  int points = 241;
  if (opt.grid_scale == optimizer::GridScale::coarse) points = 121;
  if (opt.grid_scale == optimizer::GridScale::fine) points = 481;

  const auto scenario = workloads::ch3_energy_scenario(n, p_success, eta_thr, D);
  ftcore::ThresholdModel thr;
  thr.eta_thr = eta_thr;
  const auto result = optimizer::minimize_resource(
      [&](double photons) { return scenario.schedule(photons); }, scenario.n_logical_gates,
      p_success, optimizer::log_space(lo, hi, points), thr);

  Csv csv({"n_photons", "metric", "k_opt", "feasible"});
  for (const auto& row : result.evaluated) {
    csv.cell(row.resource).cell(row.metric).cell(row.k).cell(row.feasible);
    csv.endrow();
  }
  const double energy =
      result.feasible ? scenario.n * scenario.n * constants::hbar * omega0 * result.p_min : 0.0;
  json summary = summary_base("ch3-energy", result);
  summary["n_min_photons"] = result.p_min;
  summary["k_opt"] = result.argmin.k;
  summary["energy_j"] = energy;
  RunResult out;
  out.scenario = "ch3-energy";
  out.feasible = result.feasible;
  out.summary_json = summary.dump(2);
  out.files.push_back({"ch3-energy.csv", csv.str()});
  return out;
}

RunResult run_crosstalk_accuracy(const Config& cfg, const RunOptions& opt) {
  crosstalk::CrosstalkParams params;
  params.delta = cfg.get_number("delta_rad_s", 1.0);
  params.a = cfg.get_number("a_m", 1e-6);
  params.t0 = cfg.get_number("t0_s", 1e-7);
  const double n_max = cfg.get_number("n_qubits_max", 1e6);
  int points = 9;
  if (opt.grid_scale == optimizer::GridScale::fine) points = 17;

  const std::vector<std::pair<int, double>> pairs = {{1, 0.25}, {1, 0.5}, {1, 0.75},
                                                     {2, 0.5},  {2, 1.0}, {2, 1.5}};
  Csv csv({"d", "z", "n_qubits", "delta_exact_rad_s", "delta_asymptotic_rad_s", "ratio"});
  double worst_gap = 0.0;
  for (const auto& [d, z] : pairs)
    for (double nq : optimizer::log_space(1e2, n_max, points)) {
      params.d = d;
      params.z = z;
      // Even qubit counts keep the 1-D window symmetric.
      double n_qubits = 2.0 * std::floor(nq / 2.0);
      params.Q_L = n_qubits;
      const double exact = crosstalk::delta_exact(params, n_qubits);
      const double asym = crosstalk::delta_asymptotic(params, 0);
      const double ratio = exact / asym;
      worst_gap = std::max(worst_gap, std::abs(ratio - 1.0));
      csv.cell(d).cell(z).cell(n_qubits).cell(exact).cell(asym).cell(ratio);
      csv.endrow();
    }
  RunResult out;
  out.scenario = "crosstalk-accuracy";
  out.feasible = true;
  out.summary_json = json{{"scenario", out.scenario},
                          {"feasible", true},
                          {"worst_ratio_gap_at_any_n", worst_gap}}
                         .dump(2);
  out.files.push_back({"crosstalk-accuracy.csv", csv.str()});
  return out;
}

RunResult run_kmax_scan(const Config& cfg, const RunOptions&) {
  const int k_range = static_cast<int>(cfg.get_integer("k_range", 8));
  ftcore::ThresholdModel thr;
  thr.eta_thr = cfg.get_number("eta_thr", 1e-4);
  thr.k_range_max = k_range;
  const auto result = ftcore::kmax_scan(noise::appendix_fixture(), thr);

  Csv csv({"k", "eta_k", "p_l_k"});
  for (const auto& pt : result.p_of_k) {
    csv.cell(pt.k).cell(pt.eta).cell(pt.p_l);
    csv.endrow();
  }
  RunResult out;
  out.scenario = "kmax-scan";
  out.feasible = true;
  out.summary_json = json{{"scenario", out.scenario},
                          {"feasible", true},
                          {"k_max", result.k_max},
                          {"p_min", result.p_min},
                          {"local_minima", result.local_minima}}
                         .dump(2);
  out.files.push_back({"kmax-scan.csv", csv.str()});
  return out;
}

// ----------------------------------------------------------- registry -----

const std::vector<ScenarioSpec>& registry() {
  static const std::vector<ScenarioSpec> specs = {
      {"single-gate-pmin",
       "Minimum power for one single-qubit gate at fixed infidelity target",
       {{"gamma_sp_hz", "1e3", "spontaneous-emission rate"},
        {"f0_hz", "6e9", "qubit frequency"},
        {"tau_1qb_s", "25e-9", "single-qubit gate duration"},
        {"m_target", "1e-3", "infidelity target"},
        {"metric", "worst", "'worst' or 'average' infidelity"},
        {"hot_temperature_k", "300", "hot reservoir temperature"}},
       {"t_q_k", "attenuation", "n_target_photons", "power_w", "metric", "feasible", "reason"},
       run_single_gate_pmin},
      {"nisq-qft-depth",
       "NISQ QFT: minimum attenuator dissipation over qubit temperature and circuit depth",
       {{"gamma_sp_hz", "1e3", "spontaneous-emission rate"},
        {"f0_hz", "6e9", "qubit frequency"},
        {"tau_timestep_s", "100e-9", "physical timestep duration"},
        {"n", "30", "QFT register size"},
        {"m_target", "0.34", "total worst-case infidelity target"},
        {"hot_temperature_k", "300", "hot reservoir temperature"}},
       {"depth", "t_q_k", "attenuation", "n_target_photons", "power_w", "metric", "feasible",
        "reason"},
       run_nisq_qft_depth},
      {"ft-qft-pmin",
       "Full-stack fault-tolerant QFT: minimum total power over (T1, TK, k)",
       {{"gamma_sp_hz", "1e3", "spontaneous-emission rate"},
        {"f0_hz", "6e9", "qubit frequency"},
        {"tau_1qb_s", "25e-9", "single-qubit gate duration"},
        {"tau_timestep_s", "100e-9", "physical timestep (cNOT) duration"},
        {"epsilon", "1", "electronics efficiency scale"},
        {"efficiency_exponent", "1", "1 = Carnot, 2 = squared variant"},
        {"hot_temperature_k", "300", "hot reservoir temperature"},
        {"q_l", "2048", "logical qubits"},
        {"m_target", "1e-2", "algorithm failure-probability target"},
        {"eta_thr", "1e-4", "fault-tolerance threshold"}},
       {"k", "t1_k", "tk_k", "attenuation", "n_target_photons", "power_w", "metric", "feasible",
        "reason"},
       run_ft_qft_pmin},
      {"memory-map",
       "Quantum-memory proxy: smallest adequate concatenation level over a (Q_L, D_L) grid",
       {{"eta0", "1e-5", "physical error probability"},
        {"eta_thr", "1e-4", "fault-tolerance threshold"},
        {"m_target", "1e-2", "memory failure-probability target"},
        {"q_l_min", "16", "smallest logical qubit count"},
        {"q_l_max", "16384", "largest logical qubit count"},
        {"d_l_min", "16", "smallest logical depth"},
        {"d_l_max", "1048576", "largest logical depth"}},
       {"q_l", "d_l", "n_l", "k_opt", "p_fail", "feasible"},
       run_memory_map},
      {"lifetime-sweep",
       "ft-qft-pmin repeated over qubit lifetime {1,10,100} ms x electronics scale {1,1e-2,1e-4}",
       {{"f0_hz", "6e9", "qubit frequency"},
        {"tau_1qb_s", "25e-9", "single-qubit gate duration"},
        {"tau_timestep_s", "100e-9", "physical timestep duration"},
        {"efficiency_exponent", "1", "1 = Carnot, 2 = squared variant"},
        {"hot_temperature_k", "300", "hot reservoir temperature"},
        {"q_l", "2048", "logical qubits"},
        {"m_target", "1e-2", "algorithm failure-probability target"},
        {"eta_thr", "1e-4", "fault-tolerance threshold"}},
       {"gamma_sp_inv_s", "epsilon", "feasible", "p_min_w", "k_opt", "t1_k", "tk_k", "attenuation",
        "residual"},
       run_lifetime_sweep},
      {"ch3-energy",
       "Pulse-energy QFT: minimum photons per logical gate reaching the success target",
       {{"n", "100000", "QFT register size"},
        {"p_success", "0.6666666666666666", "success-probability target"},
        {"eta_thr", "1e-4", "fault-tolerance threshold"},
        {"d_multiplier", "291", "per-level qubit multiplier D"},
        {"f0_hz", "6e9", "qubit frequency"},
        {"photons_min", "1e6", "resource grid lower end"},
        {"photons_max", "1e12", "resource grid upper end"}},
       {"n_photons", "metric", "k_opt", "feasible"},
       run_ch3_energy},
      {"crosstalk-accuracy",
       "Exact lattice sums vs asymptotic closed forms across qubit counts",
       {{"delta_rad_s", "1.0", "pairwise coupling scale"},
        {"a_m", "1e-6", "lattice spacing"},
        {"t0_s", "1e-7", "longest gate duration"},
        {"n_qubits_max", "1e6", "largest qubit count"}},
       {"d", "z", "n_qubits", "delta_exact_rad_s", "delta_asymptotic_rad_s", "ratio"},
       run_crosstalk_accuracy},
      {"kmax-scan",
       "Logical error vs concatenation level for the non-monotone tabulated fixture",
       {{"k_range", "8", "largest scanned level"},
        {"eta_thr", "1e-4", "fault-tolerance threshold"}},
       {"k", "eta_k", "p_l_k"},
       run_kmax_scan},
  };
  return specs;
}

} // namespace

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> infos;
  for (const auto& spec : registry()) infos.push_back({spec.name, spec.description});
  return infos;
}

RunResult run_scenario_text(const std::string& config_text, const RunOptions& options) {
  require(options.threads >= 1, errc::invalid_argument, "threads must be >= 1");
  const Config cfg = parse_config(config_text);
  require(cfg.has("scenario"), errc::parse_error, "missing required key 'scenario'");
  const std::string name = cfg.get_string("scenario", "");
  const ScenarioSpec* spec = nullptr;
  for (const auto& s : registry())
    if (s.name == name) spec = &s;
  if (!spec) fail(errc::parse_error, "unknown scenario '" + name + "'");

  // Reject unknown keys with their location.
  std::set<std::string> allowed = {"scenario"};
  for (const auto& k : spec->keys) allowed.insert(k.key);
  for (const auto& [key, entry] : cfg.entries())
    if (!allowed.count(key))
      fail(errc::parse_error, "line " + std::to_string(entry.line) + ", column " +
                                  std::to_string(entry.column) + ": unknown key '" + key +
                                  "' for scenario '" + name + "'");
  return spec->run(cfg, options);
}

std::string schemas_markdown() {
  std::ostringstream out;
  out << "# Output schemas\n\n"
      << "This file is generated by `qecost schemas`; do not edit by hand.\n\n"
      << "Configs are flat `key = value` text. `#` starts a comment. Unknown\n"
      << "keys are rejected with their line and column. Every physical key\n"
      << "carries its unit as a suffix (`_hz`, `_s`, `_k`, ...). All CSV\n"
      << "numeric fields use 17 significant digits; booleans are `1`/`0`.\n\n"
      << "Each run writes `<scenario>.csv` plus `<scenario>.summary.json` into\n"
      << "the output directory. `--threads` never changes any output byte;\n"
      << "`--grid-scale {coarse|default|fine}` selects grid density.\n";
  for (const auto& spec : registry()) {
    out << "\n## " << spec.name << "\n\n" << spec.description << ".\n\n";
    out << "| key | default | meaning |\n|---|---|---|\n";
    out << "| scenario | (required) | must be `" << spec.name << "` |\n";
    for (const auto& k : spec.keys)
      out << "| " << k.key << " | " << k.fallback << " | " << k.doc << " |\n";
    out << "\nCSV columns: ";
    for (size_t i = 0; i < spec.csv_columns.size(); ++i)
      out << (i ? ", " : "") << "`" << spec.csv_columns[i] << "`";
    out << "\n";
  }
  return out.str();
}

} // namespace qecost::scenarios
