#pragma once

#include <vector>

#include "noise.hpp"

namespace qecost::ftcore {

// Threshold model for concatenated error correction.
struct ThresholdModel {
  double eta_thr = 1e-4;
  int k_range_max = 20;
};

struct KmaxPoint {
  int k = 0;
  double eta = 0.0;   // physical error at level k
  double p_l = 0.0;   // logical error at level k (clamped at 1)
  double log_p = 0.0; // ln p_l before clamping/underflow
};

struct KmaxResult {
  int k_max = 0;
  double p_min = 0.0;
  std::vector<KmaxPoint> p_of_k;
  std::vector<int> local_minima;
  // Power-law analytics (NaN when produced by a plain scan).
  double k_tilde = 0.0;
  double k_st = 0.0;
};

// Logical error per gate after k concatenations: eta_thr*(eta/eta_thr)^(2^k).
double logical_error(double eta, double eta_thr, int k);

// ln of the same quantity, computed without underflow.
double log_logical_error(double eta, double eta_thr, int k);

// First-order union bound min(1, N_L * p_L).
double algorithm_failure(double n_logical_gates, double p_l);

// Scan p_L(eta(k)) over k = 0..k_range_max; global minimizer (lowest k on
// ties) plus all local minima.
KmaxResult kmax_scan(const noise::NoiseSchedule& schedule, const ThresholdModel& thr);

// Analytic optimum for eta(k) = eta0 * D^(beta k); agrees with kmax_scan.
KmaxResult kmax_powerlaw(double eta0, double eta_thr, double D, double beta);

// Largest eta0 for which one concatenation still helps: eta_thr * D^(-2 beta).
double concat_useful_bound(double eta_thr, double D, double beta);

} // namespace qecost::ftcore
