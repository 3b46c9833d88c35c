#include "optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "errors.hpp"

namespace qecost::optimizer {

namespace {

// Evaluate `count` independent cells with `threads` workers; cell i writes
// only slot i, and the merge below is a fixed-order scan, so results are
// byte-identical for any worker count.
template <typename Fn>
std::vector<std::vector<EvalRow>> run_cells(long long count, int threads, const Fn& fn) {
  std::vector<std::vector<EvalRow>> slots(static_cast<size_t>(count));
  threads = std::max(1, threads);
  if (threads == 1 || count < 2) {
    for (long long i = 0; i < count; ++i) slots[static_cast<size_t>(i)] = fn(i);
    return slots;
  }
  std::vector<std::thread> workers;
  const long long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long long lo = t * chunk;
    const long long hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      for (long long i = lo; i < hi; ++i) slots[static_cast<size_t>(i)] = fn(i);
    });
  }
  for (auto& w : workers) w.join();
  return slots;
}

// Flatten slots in index order and pick the first strict power minimum, which
// realizes the lexicographic tie-break over the generation order.
OptimizationResult collect(std::vector<std::vector<EvalRow>> slots) {
  OptimizationResult result;
  long long best = -1;
  for (auto& cell : slots)
    for (auto& row : cell) {
      result.evaluated.push_back(std::move(row));
      const auto& r = result.evaluated.back();
      if (r.feasible) {
        ++result.feasible_cells;
        if (std::isfinite(r.power) &&
            (best < 0 || r.power < result.evaluated[static_cast<size_t>(best)].power))
          best = static_cast<long long>(result.evaluated.size()) - 1;
      } else {
        ++result.infeasible_cells;
      }
    }
  if (best < 0) return result;
  const EvalRow& r = result.evaluated[static_cast<size_t>(best)];
  result.feasible = true;
  result.p_min = r.power;
  result.argmin = {r.k, r.T1, r.TK, r.A, r.depth, r.resource, r.n_target};
  result.constraint_residual = r.metric; // overwritten by callers with residual
  return result;
}

EvalRow infeasible_row(int k, double T1, double TK, std::string reason) {
  EvalRow row;
  row.k = k;
  row.T1 = T1;
  row.TK = TK;
  row.feasible = false;
  row.reason = std::move(reason);
  return row;
}

// Analytic attenuation from the two-stage mixing constraint; nullopt-style
// return via feasible flag in `row`.
bool eliminate_attenuation(double n_req, double T_q, double hot, double omega0, double* A_out,
                           std::string* reason) {
  const double n_q = noise::bose_einstein(T_q, omega0);
  const double n_gen = noise::bose_einstein(hot, omega0);
  if (n_req <= n_q) {
    *reason = "target-below-floor";
    return false;
  }
  const double A = (n_gen - n_q) / (n_req - n_q);
  if (A < 1.0) {
    *reason = "no-root";
    return false;
  }
  *A_out = A;
  return true;
}

} // namespace

std::vector<double> log_space(double lo, double hi, int count) {
  require(lo > 0.0 && hi > lo, errc::invalid_argument, "log_space needs 0 < lo < hi");
  require(count >= 1, errc::invalid_argument, "log_space needs count >= 1");
  std::vector<double> points;
  if (count == 1) return {lo};
  const double ratio = hi / lo;
  for (int i = 0; i < count; ++i)
    points.push_back(lo * std::pow(ratio, static_cast<double>(i) / (count - 1)));
  points.back() = hi;
  return points;
}

GridSpec GridSpec::defaults(GridScale scale) {
  GridSpec grid;
  int n = 60;
  grid.depth_count = 40;
  if (scale == GridScale::coarse) {
    n = 30;
    grid.depth_count = 20;
  } else if (scale == GridScale::fine) {
    n = 120;
    grid.depth_count = 80;
  }
  grid.t1_points = log_space(0.01, 300.0, n);
  grid.tk_points = grid.t1_points;
  for (int k = 0; k <= 6; ++k) grid.k_values.push_back(k);
  return grid;
}

OptimizationResult minimize_power_ft(const hardware::HardwareProfile& profile,
                                     const workloads::Workload& workload, double M_target,
                                     const GridSpec& grid, double eta_thr, int threads) {
  require(M_target > 0.0 && M_target < 1.0, errc::invalid_argument,
          "M_target must lie in (0, 1)");
  require(!grid.t1_points.empty() && !grid.tk_points.empty() && !grid.k_values.empty(),
          errc::invalid_argument, "grid must be nonempty");
  const long long n_t1 = static_cast<long long>(grid.t1_points.size());
  const long long n_tk = static_cast<long long>(grid.tk_points.size());
  const long long n_k = static_cast<long long>(grid.k_values.size());
  const long long count = n_k * n_t1 * n_tk;

  auto eval_cell = [&](long long index) -> std::vector<EvalRow> {
    const int k = grid.k_values[static_cast<size_t>(index / (n_t1 * n_tk))];
    const long long rem = index % (n_t1 * n_tk);
    const double T1 = grid.t1_points[static_cast<size_t>(rem / n_tk)];
    const double TK = grid.tk_points[static_cast<size_t>(rem % n_tk)];
    if (TK <= T1) return {};

    double n_target;
    try {
      n_target = hardware::target_photon_number(M_target, workload.n_l, profile, eta_thr, k);
    } catch (const error&) {
      return {infeasible_row(k, T1, TK, "negative-photon-target")};
    }
    std::vector<double> roots;
    try {
      roots = hardware::solve_attenuation(T1, TK, grid.stages, n_target, profile.omega0);
    } catch (const error&) {
      return {infeasible_row(k, T1, TK, "target-below-floor")};
    }
    if (roots.empty()) return {infeasible_row(k, T1, TK, "no-root")};

    std::vector<EvalRow> rows;
    for (double A : roots) {
      StageStack stack = hardware::stage_layout(T1, TK, grid.stages, A);
      const auto coeffs = hardware::power_coefficients(stack, profile);
      EvalRow row;
      row.k = k;
      row.T1 = T1;
      row.TK = TK;
      row.A = A;
      row.n_target = n_target;
      row.power = hardware::total_power(coeffs, workload, k);
      const double n_achieved = noise::chain_noise(stack, profile.omega0);
      const double eta = noise::pauli_strength(n_achieved, profile.gamma_sp, profile.tau_timestep);
      const double p_l = ftcore::logical_error(eta, eta_thr, k);
      row.metric = ftcore::algorithm_failure(workload.n_l, p_l);
      row.feasible = true;
      rows.push_back(row);
    }
    return rows;
  };

  OptimizationResult result = collect(run_cells(count, threads, eval_cell));
  if (result.feasible) {
    result.constraint_residual =
        std::abs(result.evaluated.empty()
                     ? 0.0
                     : (result.constraint_residual - M_target) / M_target);
    // Flatness: relative power spread across roots of the argmin cell.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& row : result.evaluated)
      if (row.feasible && row.k == result.argmin.k && row.T1 == result.argmin.T1 &&
          row.TK == result.argmin.TK) {
        lo = std::min(lo, row.power);
        hi = std::max(hi, row.power);
      }
    result.flatness = (lo > 0.0 && std::isfinite(lo)) ? (hi - lo) / lo : 0.0;
  }
  return result;
}

OptimizationResult minimize_power_single_gate(const hardware::HardwareProfile& profile,
                                              double M_target, noise::Fidelity kind,
                                              const GridSpec& grid, int threads) {
  require(M_target > 0.0, errc::invalid_argument, "M_target must be positive");
  require(!grid.t1_points.empty(), errc::invalid_argument, "grid must be nonempty");
  const double gamma_tau = profile.gamma_sp * profile.tau_1qb;
  const double X = (kind == noise::Fidelity::worst) ? 1.0 : 1.0 / 3.0;
  const double Y = (kind == noise::Fidelity::worst) ? 1.0 : 2.0 / 3.0;
  const double P_g = hardware::gate_drive_power(profile, constants::pi, profile.tau_1qb);
  const long long count = static_cast<long long>(grid.t1_points.size());

  auto eval_cell = [&](long long index) -> std::vector<EvalRow> {
    const double T_q = grid.t1_points[static_cast<size_t>(index)];
    if (T_q >= profile.hot_temperature) return {};
    const double n_req = (M_target / gamma_tau - X) / Y;
    if (n_req < 0.0) return {infeasible_row(0, T_q, profile.hot_temperature,
                                            "negative-photon-target")};
    double A = 0.0;
    std::string reason;
    if (!eliminate_attenuation(n_req, T_q, profile.hot_temperature, profile.omega0, &A, &reason))
      return {infeasible_row(0, T_q, profile.hot_temperature, reason)};
    EvalRow row;
    row.k = 0;
    row.T1 = T_q;
    row.TK = profile.hot_temperature;
    row.A = A;
    row.n_target = n_req;
    row.power = carnot_cost(A * P_g, T_q, profile);
    const double n_achieved =
        noise::two_stage_noise(T_q, profile.hot_temperature, A, profile.omega0);
    row.metric = noise::infidelity(n_achieved, profile.gamma_sp, profile.tau_1qb, kind, 1);
    row.feasible = true;
    return {row};
  };

  OptimizationResult result = collect(run_cells(count, threads, eval_cell));
  if (result.feasible)
    result.constraint_residual = std::abs((result.constraint_residual - M_target) / M_target);
  return result;
}

OptimizationResult minimize_power_nisq(const hardware::HardwareProfile& profile, long long n,
                                       double M_target, const GridSpec& grid,
                                       bool include_identity, int threads) {
  require(M_target > 0.0, errc::invalid_argument, "M_target must be positive");
  require(!grid.t1_points.empty() && grid.depth_count >= 2, errc::invalid_argument,
          "grid must be nonempty");
  const double nn = static_cast<double>(n);
  const double d_min = 2.0 * (nn - 2.0) + 1.0;
  const double d_max = nn * (nn - 1.0) / 2.0;
  const std::vector<double> depths = log_space(d_min, d_max, grid.depth_count);
  const double gamma_tau = profile.gamma_sp * profile.tau_timestep;
  const double P_g = hardware::gate_drive_power(profile, constants::pi, profile.tau_timestep);
  const long long n_tq = static_cast<long long>(grid.t1_points.size());
  const long long count = static_cast<long long>(depths.size()) * n_tq;

  auto eval_cell = [&](long long index) -> std::vector<EvalRow> {
    const double depth = depths[static_cast<size_t>(index / n_tq)];
    const double T_q = grid.t1_points[static_cast<size_t>(index % n_tq)];
    if (T_q >= profile.hot_temperature) return {};
    const auto census = workloads::nisq_qft_census(n, depth);
    // Worst-case single-qubit infidelity per occupied gate slot.
    const double slots =
        2.0 * census.total_cnot + (include_identity ? census.total_identity : 0.0);
    const double n_req = M_target / (slots * gamma_tau) - 1.0;
    EvalRow row;
    row.k = 0;
    row.T1 = T_q;
    row.TK = profile.hot_temperature;
    row.depth = depth;
    if (n_req < 0.0) {
      row.feasible = false;
      row.reason = "negative-photon-target";
      return {row};
    }
    double A = 0.0;
    std::string reason;
    if (!eliminate_attenuation(n_req, T_q, profile.hot_temperature, profile.omega0, &A, &reason)) {
      row.feasible = false;
      row.reason = reason;
      return {row};
    }
    row.A = A;
    row.n_target = n_req;
    row.power = carnot_cost(A * P_g * census.avg_cnot, T_q, profile);
    const double n_achieved =
        noise::two_stage_noise(T_q, profile.hot_temperature, A, profile.omega0);
    row.metric = slots * (1.0 + n_achieved) * gamma_tau;
    row.feasible = true;
    return {row};
  };

  OptimizationResult result = collect(run_cells(count, threads, eval_cell));
  if (result.feasible)
    result.constraint_residual = std::abs((result.constraint_residual - M_target) / M_target);
  return result;
}

OptimizationResult minimize_resource(
    const std::function<noise::NoiseSchedule(double)>& schedule_family, double N_L,
    double p_target, const std::vector<double>& resource_grid,
    const ftcore::ThresholdModel& thr) {
  require(static_cast<bool>(schedule_family), errc::invalid_argument, "schedule family required");
  require(N_L >= 1.0, errc::invalid_argument, "N_L must be >= 1");
  require(p_target > 0.0 && p_target < 1.0, errc::invalid_argument,
          "p_target must lie in (0, 1)");
  require(!resource_grid.empty(), errc::invalid_argument, "resource grid must be nonempty");
  require(std::is_sorted(resource_grid.begin(), resource_grid.end()), errc::invalid_argument,
          "resource grid must be ascending");
  const double fail_target = 1.0 - p_target;

  const auto evaluate = [&](double R) {
    const auto scan = ftcore::kmax_scan(schedule_family(R), thr);
    return std::make_pair(ftcore::algorithm_failure(N_L, scan.p_min), scan.k_max);
  };

  OptimizationResult result;
  long long first_ok = -1;
  for (size_t i = 0; i < resource_grid.size(); ++i) {
    const double R = resource_grid[i];
    const auto [metric, k_opt] = evaluate(R);
    EvalRow row;
    row.resource = R;
    row.k = k_opt;
    row.metric = metric;
    row.feasible = metric <= fail_target;
    if (!row.feasible) row.reason = "target-unreached";
    result.evaluated.push_back(row);
    if (row.feasible) {
      ++result.feasible_cells;
      if (first_ok < 0) first_ok = static_cast<long long>(i);
    } else {
      ++result.infeasible_cells;
    }
  }
  if (first_ok < 0) return result;

  double r_min = resource_grid[static_cast<size_t>(first_ok)];
  if (first_ok > 0) {
    // Refine the feasibility boundary by bisection (monotone in R).
    double lo = resource_grid[static_cast<size_t>(first_ok - 1)];
    double hi = r_min;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (evaluate(mid).first <= fail_target)
        hi = mid;
      else
        lo = mid;
    }
    r_min = hi;
  }
  const auto [metric, k_opt] = evaluate(r_min);
  result.feasible = true;
  result.p_min = r_min;
  result.argmin.resource = r_min;
  result.argmin.k = k_opt;
  result.constraint_residual = std::abs(metric - fail_target) / fail_target;
  return result;
}

std::vector<PminPoint> pmin_curve(const std::function<OptimizationResult(double)>& minimizer,
                                  const std::vector<double>& targets) {
  require(static_cast<bool>(minimizer), errc::invalid_argument, "minimizer required");
  require(std::is_sorted(targets.begin(), targets.end()), errc::invalid_argument,
          "targets must be ascending");
  std::vector<PminPoint> table;
  for (double target : targets) table.push_back({target, minimizer(target)});
  return table;
}

bool max_accuracy(const std::vector<PminPoint>& table, double power_budget, double* target_out) {
  for (const auto& point : table)
    if (point.result.feasible && point.result.p_min <= power_budget) {
      if (target_out) *target_out = point.target;
      return true;
    }
  return false;
}

} // namespace qecost::optimizer
