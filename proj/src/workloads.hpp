#pragma once

#include "noise.hpp"

namespace qecost::workloads {

// Average parallel logical gates per logical timestep (fractional allowed).
struct ParallelCensus {
  double cnot = 0.0;
  double single = 0.0;
  double identity = 0.0;
  double measurement = 0.0;
  // Qubit-slot weight: cNOTs occupy two logical qubits.
  double weighted_total() const { return 2.0 * cnot + single + identity; }
};

// Logical-level algorithm descriptor.
struct Workload {
  double q_l = 0.0; // logical qubits
  double d_l = 0.0; // logical depth in timesteps
  double n_l = 0.0; // total logical gates
  ParallelCensus par;
};

// QFT on q_l logical qubits: n_l = q_l^2, d_l = 2(q_l-2)+1, par.cnot = q_l/2.
Workload qft_workload(long long q_l);

// Quantum-memory proxy: all qubits idle (identity) every timestep.
Workload memory_workload(long long q_l, long long d_l);

// Depth-parameterized physical-level QFT census (NISQ example).
struct NisqCensus {
  double avg_cnot = 0.0;      // per timestep
  double identity_fill = 0.0; // per timestep
  double total_cnot = 0.0;
  double total_identity = 0.0;
  double d_min = 0.0;
  double d_max = 0.0;
};
NisqCensus nisq_qft_census(long long n, double depth);

// Pulse-energy QFT scenario: N_L = n^2 logical gates, per-gate error target,
// and the resource->noise law eta(k) = (pi^2/16) * D^k / n_photons.
struct Ch3Scenario {
  double n = 0.0;
  double n_logical_gates = 0.0;
  double p_l_target = 0.0;
  double eta_thr = 1e-4;
  double D = 291.0;
  // eta(k) for a given photon budget per logical gate.
  double eta(double n_photons, int k) const;
  noise::NoiseSchedule schedule(double n_photons) const;
};
Ch3Scenario ch3_energy_scenario(long long n, double p_target_success, double eta_thr, double D);

} // namespace qecost::workloads
