#include "workloads.hpp"

#include <cmath>

#include "constants.hpp"
#include "errors.hpp"

namespace qecost::workloads {

Workload qft_workload(long long q_l) {
  require(q_l >= 3, errc::invalid_argument, "QFT workload needs q_l >= 3");
  Workload w;
  w.q_l = static_cast<double>(q_l);
  w.d_l = 2.0 * (static_cast<double>(q_l) - 2.0) + 1.0;
  w.n_l = static_cast<double>(q_l) * static_cast<double>(q_l);
  w.par.cnot = static_cast<double>(q_l) / 2.0;
  return w;
}

Workload memory_workload(long long q_l, long long d_l) {
  require(q_l >= 1 && d_l >= 1, errc::invalid_argument, "memory workload needs q_l, d_l >= 1");
  Workload w;
  w.q_l = static_cast<double>(q_l);
  w.d_l = static_cast<double>(d_l);
  w.n_l = static_cast<double>(q_l) * static_cast<double>(d_l);
  w.par.identity = static_cast<double>(q_l);
  return w;
}

NisqCensus nisq_qft_census(long long n, double depth) {
  require(n >= 3, errc::invalid_argument, "NISQ QFT census needs n >= 3");
  NisqCensus c;
  const double nn = static_cast<double>(n);
  c.d_min = 2.0 * (nn - 2.0) + 1.0;
  c.d_max = nn * (nn - 1.0) / 2.0;
  require(depth >= c.d_min && depth <= c.d_max, errc::invalid_argument,
          "depth outside [d_min, d_max]");
  c.total_cnot = nn * (nn - 1.0) / 2.0;
  c.avg_cnot = c.total_cnot / depth;
  c.identity_fill = nn - 2.0 * c.avg_cnot;
  c.total_identity = nn * depth - nn * (nn - 1.0);
  return c;
}

double Ch3Scenario::eta(double n_photons, int k) const {
  require(n_photons > 0.0, errc::invalid_argument, "photon number must be positive");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  return constants::pi * constants::pi / 16.0 * std::pow(D, k) / n_photons;
}

noise::NoiseSchedule Ch3Scenario::schedule(double n_photons) const {
  require(n_photons > 0.0, errc::invalid_argument, "photon number must be positive");
  const double Dloc = D;
  // Resource law g(R) = (pi^2/16)/R with N(k) = D^k consumers:
  // eta(k) = g(n_photons / D^k) = (pi^2/16) D^k / n_photons.
  return noise::NoiseSchedule::resource(
      [](double R) { return constants::pi * constants::pi / 16.0 / R; }, n_photons,
      [Dloc](int k) { return std::pow(Dloc, k); });
}

Ch3Scenario ch3_energy_scenario(long long n, double p_target_success, double eta_thr, double D) {
  require(n >= 2, errc::invalid_argument, "scenario needs n >= 2");
  require(p_target_success >= 0.0 && p_target_success <= 1.0, errc::invalid_argument,
          "success probability must lie in [0, 1]");
  Ch3Scenario s;
  s.n = static_cast<double>(n);
  s.n_logical_gates = s.n * s.n;
  s.p_l_target = (1.0 - p_target_success) / (s.n * s.n);
  s.eta_thr = eta_thr;
  s.D = D;
  return s;
}

} // namespace qecost::workloads
