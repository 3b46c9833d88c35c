#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ftcore.hpp"
#include "hardware.hpp"
#include "workloads.hpp"

namespace qecost::optimizer {

enum class GridScale { coarse, normal, fine };

// Brute-force search grid. Temperatures are log-spaced; the T_K > T1
// constraint is applied pairwise during evaluation.
struct GridSpec {
  std::vector<double> t1_points;
  std::vector<double> tk_points;
  std::vector<int> k_values;
  int depth_count = 40;                // depth samples for the NISQ variant
  std::vector<double> resource_points; // for minimize_resource
  int stages = 5;                      // cryostat stage count K

  static GridSpec defaults(GridScale scale = GridScale::normal);
};

// One evaluated grid cell (or root within a cell).
struct EvalRow {
  int k = -1;
  double T1 = 0.0;
  double TK = 0.0;
  double A = 0.0;
  double depth = 0.0;
  double resource = 0.0;
  double n_target = 0.0;
  double power = 0.0;
  double metric = 0.0;
  bool feasible = false;
  std::string reason; // empty when feasible
};

struct Argmin {
  int k = -1;
  double T1 = 0.0;
  double TK = 0.0;
  double A = 0.0;
  double depth = 0.0;
  double resource = 0.0;
  double n_target = 0.0;
};

struct OptimizationResult {
  bool feasible = false;
  double p_min = 0.0; // W (or resource units for minimize_resource)
  Argmin argmin;
  double constraint_residual = 0.0;
  double flatness = 0.0; // relative power spread across roots at the argmin cell
  long long feasible_cells = 0;
  long long infeasible_cells = 0;
  std::vector<EvalRow> evaluated;
};

// Full-stack FT power minimization over (T1, TK, k) at fixed accuracy target.
OptimizationResult minimize_power_ft(const hardware::HardwareProfile& profile,
                                     const workloads::Workload& workload, double M_target,
                                     const GridSpec& grid, double eta_thr = 1e-4,
                                     int threads = 1);

// Single-qubit gate example: minimize ((300-T_Q)/T_Q)*A*P_g over T_Q with A
// eliminated analytically from the infidelity constraint.
OptimizationResult minimize_power_single_gate(const hardware::HardwareProfile& profile,
                                              double M_target, noise::Fidelity kind,
                                              const GridSpec& grid, int threads = 1);

// NISQ QFT: minimize attenuator dissipation over (T_Q, depth) at fixed total
// worst-case infidelity. `include_identity` keeps idle-qubit noise in the
// metric (the paper's model); switching it off is a test hook.
OptimizationResult minimize_power_nisq(const hardware::HardwareProfile& profile, long long n,
                                       double M_target, const GridSpec& grid,
                                       bool include_identity = true, int threads = 1);

// Smallest resource R with min_k N_L * p_L(eta(k; R)) <= 1 - p_target.
OptimizationResult minimize_resource(
    const std::function<noise::NoiseSchedule(double)>& schedule_family, double N_L,
    double p_target, const std::vector<double>& resource_grid, const ftcore::ThresholdModel& thr);

struct PminPoint {
  double target = 0.0;
  OptimizationResult result;
};

// P_min(M_target) table over ascending targets.
std::vector<PminPoint> pmin_curve(
    const std::function<OptimizationResult(double)>& minimizer, const std::vector<double>& targets);

// Inverse reading of a pmin_curve table: smallest tabulated target reachable
// within the power budget; returns false if none.
bool max_accuracy(const std::vector<PminPoint>& table, double power_budget, double* target_out);

// Log-spaced helper (endpoints included).
std::vector<double> log_space(double lo, double hi, int count);

} // namespace qecost::optimizer
