#pragma once

#include <cstdint>

namespace qecost::crosstalk {

// Long-range pairwise coupling ||H_ij|| = delta / r_ij^z on a chain (d = 1)
// or square lattice (d = 2) with spacing a.
struct CrosstalkParams {
  double delta = 0.0; // rad/s
  double a = 1.0;     // m
  double z = 0.0;     // decay exponent
  int d = 1;          // lattice dimension, 1 or 2
  double t0 = 1.0;    // longest-gate duration, s
  double Q_L = 1.0;   // logical qubit count
  double D = 291.0;   // per-level qubit multiplier
};

// Amplitude prefactor epsilon = e^(1 + 1/(2e)) * sqrt(2) ~= 4.6189.
double epsilon_ct();

// Exact lattice sum of coupling strengths felt by the central qubit.
double delta_exact(const CrosstalkParams& params, double n_qubits);

// Asymptotic Delta^0_{z,d} * D^(k(1 - z/d)) for N_qubits(k) = Q_L * D^k.
double delta_asymptotic(const CrosstalkParams& params, int k);

// C_z = (2/(2-z)) * integral_{pi/4}^{pi/2} sin(theta)^(z-2) dtheta.
double cz_coefficient(double z);

// Effective fault amplitude epsilon * sqrt(Delta * t0).
double eta_from_delta(double delta_val, double t0);

// Level-k analog of t0*Delta under the concatenation recursion
// x_k = eps^2 x_{k-1}^2 / eta_thr^2.
double delta_k(double delta0_t0, double eta_thr, int k);

} // namespace qecost::crosstalk
