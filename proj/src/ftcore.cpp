#include "ftcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace qecost::ftcore {

namespace {
constexpr int k_overflow_guard = 1022; // 2^k must stay a finite double
}

double log_logical_error(double eta, double eta_thr, int k) {
  require(eta >= 0.0, errc::invalid_argument, "eta must be nonnegative");
  require(eta_thr > 0.0, errc::invalid_argument, "eta_thr must be positive");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(k <= k_overflow_guard, errc::invalid_argument, "k exceeds exponent-overflow guard");
  if (k == 0) return std::log(eta);
  if (eta == 0.0) return -std::numeric_limits<double>::infinity();
  const double two_k = std::ldexp(1.0, k);
  return std::log(eta_thr) + two_k * (std::log(eta) - std::log(eta_thr));
}

double logical_error(double eta, double eta_thr, int k) {
  require(eta >= 0.0, errc::invalid_argument, "eta must be nonnegative");
  require(eta_thr > 0.0, errc::invalid_argument, "eta_thr must be positive");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(k <= k_overflow_guard, errc::invalid_argument, "k exceeds exponent-overflow guard");
  if (k == 0) return eta; // exact, no exp/log round-trip
  if (eta == 0.0) return 0.0;
  return std::exp(log_logical_error(eta, eta_thr, k));
}

double algorithm_failure(double n_logical_gates, double p_l) {
  require(n_logical_gates >= 0.0, errc::invalid_argument, "gate count must be nonnegative");
  require(p_l >= 0.0 && p_l <= 1.0, errc::invalid_argument, "p_l must be a probability");
  return std::min(1.0, n_logical_gates * p_l);
}

namespace {

// Shared scan core: evaluates clamped log p_L over k = 0..k_range and fills
// global minimizer (lowest k on ties) and strict local minima.
KmaxResult scan_schedule(const noise::NoiseSchedule& schedule, double eta_thr, int k_range) {
  KmaxResult result;
  result.k_tilde = std::numeric_limits<double>::quiet_NaN();
  result.k_st = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> clamped_log;
  clamped_log.reserve(static_cast<size_t>(k_range) + 1);
  for (int k = 0; k <= k_range; ++k) {
    KmaxPoint pt;
    pt.k = k;
    pt.eta = noise::eval_schedule(schedule, k);
    pt.log_p = log_logical_error(pt.eta, eta_thr, k);
    const double lp = std::min(pt.log_p, 0.0); // p_L clamped at 1
    pt.p_l = std::exp(lp);
    clamped_log.push_back(lp);
    result.p_of_k.push_back(pt);
  }
  int best = 0;
  for (int k = 1; k <= k_range; ++k)
    if (clamped_log[static_cast<size_t>(k)] < clamped_log[static_cast<size_t>(best)]) best = k;
  result.k_max = best;
  result.p_min = result.p_of_k[static_cast<size_t>(best)].p_l;
  for (int k = 0; k <= k_range; ++k) {
    const bool left_ok = (k == 0) || clamped_log[static_cast<size_t>(k)] < clamped_log[static_cast<size_t>(k - 1)];
    const bool right_ok =
        (k == k_range) || clamped_log[static_cast<size_t>(k)] < clamped_log[static_cast<size_t>(k + 1)];
    if (left_ok && right_ok) result.local_minima.push_back(k);
  }
  return result;
}

} // namespace

KmaxResult kmax_scan(const noise::NoiseSchedule& schedule, const ThresholdModel& thr) {
  require(thr.eta_thr > 0.0 && thr.eta_thr < 1.0, errc::invalid_argument,
          "eta_thr must lie in (0, 1)");
  require(thr.k_range_max >= 0, errc::invalid_argument, "k_range_max must be nonnegative");
  return scan_schedule(schedule, thr.eta_thr, thr.k_range_max);
}

KmaxResult kmax_powerlaw(double eta0, double eta_thr, double D, double beta) {
  require(eta0 > 0.0, errc::invalid_argument, "eta0 must be positive");
  require(eta_thr > 0.0 && eta_thr < 1.0, errc::invalid_argument, "eta_thr must lie in (0, 1)");
  require(D > 1.0, errc::invalid_argument, "degenerate schedule: D must exceed 1");
  require(beta > 0.0, errc::invalid_argument,
          "degenerate schedule: beta must be positive (use kmax_scan with constant noise)");

  const double growth = beta * std::log(D);
  const double k_tilde = -(std::log(eta0 * std::pow(D, beta) / eta_thr)) / growth;
  const int k_max = std::max(0, static_cast<int>(std::ceil(k_tilde)) - 1);

  const int k_range =
      std::max(20, k_max + 3 + std::max(0, static_cast<int>(std::ceil(std::abs(k_tilde)))));
  KmaxResult result =
      scan_schedule(noise::NoiseSchedule::power_law(eta0, D, beta), eta_thr, k_range);
  result.k_max = k_max;
  result.p_min = result.p_of_k[static_cast<size_t>(k_max)].p_l;
  result.k_tilde = k_tilde;
  result.k_st = -1.0 / std::log(2.0) - std::log(eta0 / eta_thr) / growth;
  return result;
}

double concat_useful_bound(double eta_thr, double D, double beta) {
  require(eta_thr > 0.0, errc::invalid_argument, "eta_thr must be positive");
  require(D > 1.0, errc::invalid_argument, "D must exceed 1");
  require(beta >= 0.0, errc::invalid_argument, "beta must be nonnegative");
  return eta_thr * std::pow(D, -2.0 * beta);
}

} // namespace qecost::ftcore
