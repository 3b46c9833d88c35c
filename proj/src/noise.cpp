#include "noise.hpp"

#include <cmath>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace qecost::noise {

NoiseSchedule NoiseSchedule::constant(double eta0) {
  require(eta0 >= 0.0, errc::invalid_argument, "eta0 must be nonnegative");
  NoiseSchedule s;
  s.kind = Kind::constant;
  s.eta0 = eta0;
  return s;
}

NoiseSchedule NoiseSchedule::power_law(double eta0, double D, double beta) {
  require(eta0 >= 0.0, errc::invalid_argument, "eta0 must be nonnegative");
  require(D > 1.0, errc::invalid_argument, "power_law requires D > 1");
  require(beta >= 0.0, errc::invalid_argument, "power_law requires beta >= 0");
  NoiseSchedule s;
  s.kind = Kind::power_law;
  s.eta0 = eta0;
  s.D = D;
  s.beta = beta;
  return s;
}

NoiseSchedule NoiseSchedule::tabulated(double eta0, std::vector<std::pair<int, double>> table) {
  require(eta0 >= 0.0, errc::invalid_argument, "eta0 must be nonnegative");
  require(!table.empty(), errc::invalid_argument, "tabulated schedule needs entries");
  NoiseSchedule s;
  s.kind = Kind::tabulated;
  s.eta0 = eta0;
  s.table = std::move(table);
  return s;
}

NoiseSchedule NoiseSchedule::resource(std::function<double(double)> g, double R_total,
                                      std::function<double(int)> N_of_k) {
  require(static_cast<bool>(g) && static_cast<bool>(N_of_k), errc::invalid_argument,
          "resource schedule needs g and N_of_k");
  require(R_total > 0.0, errc::invalid_argument, "R_total must be positive");
  NoiseSchedule s;
  s.kind = Kind::resource;
  s.g = std::move(g);
  s.R_total = R_total;
  s.N_of_k = std::move(N_of_k);
  s.eta0 = s.g(s.R_total / s.N_of_k(0));
  return s;
}

double eval_schedule(const NoiseSchedule& schedule, int k) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  switch (schedule.kind) {
    case NoiseSchedule::Kind::constant:
      return schedule.eta0;
    case NoiseSchedule::Kind::power_law:
      return schedule.eta0 * std::pow(schedule.D, schedule.beta * k);
    case NoiseSchedule::Kind::tabulated:
      for (const auto& [kk, f] : schedule.table)
        if (kk == k) return schedule.eta0 * f;
      fail(errc::invalid_argument, "tabulated schedule undefined at k=" + std::to_string(k));
    case NoiseSchedule::Kind::resource:
      return schedule.g(schedule.R_total / schedule.N_of_k(k));
  }
  fail(errc::internal, "unknown schedule kind");
}

NoiseSchedule appendix_fixture() {
  std::vector<std::pair<int, double>> table;
  table.emplace_back(0, 1.0);
  for (int k = 1; k <= 20; ++k) table.emplace_back(k, std::pow(10.0, 3.0 + 0.21 * k));
  return NoiseSchedule::tabulated(1e-8, std::move(table));
}

double bose_einstein(double T, double omega0) {
  require(T >= 0.0, errc::invalid_argument, "temperature must be nonnegative");
  require(omega0 > 0.0, errc::invalid_argument, "omega0 must be positive");
  if (T == 0.0) return 0.0;
  const double x = constants::hbar * omega0 / (constants::k_B * T);
  if (x > 700.0) return 0.0; // expm1 would overflow; occupation is < 1e-304
  return 1.0 / std::expm1(x);
}

double two_stage_noise(double T_q, double T_gen, double A, double omega0) {
  require(A >= 1.0, errc::invalid_argument, "attenuation A must be >= 1");
  const double n_q = bose_einstein(T_q, omega0);
  const double n_gen = bose_einstein(T_gen, omega0);
  return ((A - 1.0) / A) * n_q + n_gen / A;
}

double chain_noise(const StageStack& stack, double omega0) {
  const auto& T = stack.temperatures;
  require(T.size() >= 2, errc::invalid_argument, "stack needs at least two stages");
  require(stack.attenuations.size() == T.size() - 1, errc::invalid_argument,
          "stack needs K-1 attenuations");
  const double boundary_T = stack.boundary_override.value_or(T.back());
  double n = bose_einstein(boundary_T, omega0);
  // n^(i) = n_BE(T_i)(A_i-1)/A_i + n^(i+1)/A_i, applied from stage K-1 down to 1.
  for (int i = static_cast<int>(T.size()) - 2; i >= 0; --i) {
    const double A = stack.attenuations[static_cast<size_t>(i)];
    require(A >= 1.0, errc::invalid_argument, "attenuations must be >= 1");
    n = bose_einstein(T[static_cast<size_t>(i)], omega0) * (A - 1.0) / A + n / A;
  }
  return n;
}

double pauli_strength(double n_tot, double gamma_sp, double tau) {
  require(n_tot >= 0.0 && gamma_sp >= 0.0 && tau >= 0.0, errc::invalid_argument,
          "pauli_strength inputs must be nonnegative");
  return (1.0 + 2.0 * n_tot) * gamma_sp * tau / 4.0;
}

double infidelity(double n_tot, double gamma_sp, double tau, Fidelity kind, int qubits) {
  require(n_tot >= 0.0 && gamma_sp >= 0.0 && tau >= 0.0, errc::invalid_argument,
          "infidelity inputs must be nonnegative");
  require(qubits == 1 || qubits == 2, errc::invalid_argument, "qubits must be 1 or 2");
  const double X = (kind == Fidelity::worst) ? 1.0 : 1.0 / 3.0;
  const double Y = (kind == Fidelity::worst) ? 1.0 : 2.0 / 3.0;
  return qubits * (X + Y * n_tot) * gamma_sp * tau;
}

double eta_from_pulse_energy(double E, double omega0) {
  require(E > 0.0, errc::invalid_argument, "pulse energy must be positive");
  require(omega0 > 0.0, errc::invalid_argument, "omega0 must be positive");
  return (constants::pi * constants::pi / 16.0) * constants::hbar * omega0 / E;
}

} // namespace qecost::noise
