#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "stages.hpp"

namespace qecost::noise {

// Scale-dependent physical-error law eta(k) = eta0 * f(k), f(0) = 1.
struct NoiseSchedule {
  enum class Kind { constant, power_law, tabulated, resource };

  Kind kind = Kind::constant;
  double eta0 = 0.0;

  // power_law: f(k) = D^(beta*k)
  double D = 291.0;
  double beta = 1.0;

  // tabulated: step-defined multipliers at integer k only
  std::vector<std::pair<int, double>> table;

  // resource: eta(k) = g(R_total / N_of_k(k))
  std::function<double(double)> g;
  double R_total = 0.0;
  std::function<double(int)> N_of_k;

  static NoiseSchedule constant(double eta0);
  static NoiseSchedule power_law(double eta0, double D, double beta);
  static NoiseSchedule tabulated(double eta0, std::vector<std::pair<int, double>> table);
  static NoiseSchedule resource(std::function<double(double)> g, double R_total,
                                std::function<double(int)> N_of_k);
};

// eta(k) for the given schedule.
double eval_schedule(const NoiseSchedule& schedule, int k);

// Non-monotone tabulated fixture: eta0 = 1e-8, f(0) = 1,
// f(k >= 1) = 10^(3 + 0.21 k), defined for k <= 20.
NoiseSchedule appendix_fixture();

// Thermal photon occupation 1/(exp(hbar*omega0/(k_B*T)) - 1); 0 at T = 0.
double bose_einstein(double T, double omega0);

// Photon number seen by a qubit behind one attenuator A at T_q driven by a
// generator thermalized at T_gen (exact mixing form).
double two_stage_noise(double T_q, double T_gen, double A, double omega0);

// Photon number after propagating the hot-boundary occupation down the full
// attenuation chain of `stack`.
double chain_noise(const StageStack& stack, double omega0);

// Pauli error strength (1 + 2 n_tot) * gamma_sp * tau / 4.
double pauli_strength(double n_tot, double gamma_sp, double tau);

enum class Fidelity { worst, average };

// Gate infidelity (X + Y*n_tot)*gamma*tau with (X,Y) = (1,1) worst or
// (1/3,2/3) average, times the qubit count (2-qubit gates double it).
double infidelity(double n_tot, double gamma_sp, double tau, Fidelity kind, int qubits);

// Fault probability of a pulse of energy E: (pi^2/16) * hbar*omega0 / E.
double eta_from_pulse_energy(double E, double omega0);

} // namespace qecost::noise
