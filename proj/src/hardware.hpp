#pragma once

#include <vector>

#include "constants.hpp"
#include "stages.hpp"
#include "workloads.hpp"

namespace qecost::hardware {

// Qubit, electronics, and cryostat parameters. SI units throughout.
struct HardwareProfile {
  double gamma_sp = 1e3;                              // 1/s
  double omega0 = 2.0 * constants::pi * 6e9;          // rad/s
  double tau_1qb = 25e-9;                             // s
  double tau_timestep = 100e-9;                       // s (cNOT / physical timestep)
  double tau_meas = 100e-9;                           // s
  double electronics_scale = 1.0;                     // epsilon efficiency knob
  double q_gen_per_qubit = 5e-3;                      // W at epsilon = 1
  double q_amp_per_qubit = 50e-6;                     // W at epsilon = 1
  double qubits_per_xy_cable = 25.0;
  double cable_length = 0.2;                          // m
  int efficiency_exponent = 1;                        // 1 Carnot, 2 squared
  double hot_temperature = 300.0;                     // K

  double q_gen() const { return electronics_scale * q_gen_per_qubit; }
  double q_amp() const { return electronics_scale * q_amp_per_qubit; }
};

struct PowerCoefficients {
  double a = 0.0;      // W per physical qubit
  double b_1qb = 0.0;  // W per active single-qubit gate
  double b_cnot = 0.0; // W per active cNOT
  double b_meas = 0.0; // always 0 in this model
};

enum class CableModel { composite = 0, coax = 1, stripline = 2 };

// Electrical power to evacuate `heat` watts at temperature T.
double carnot_cost(double heat, double T, const HardwareProfile& profile);

// Heat conducted along one cable between two thermal anchors, W.
double conduction(double T_cold, double T_hot, const HardwareProfile& profile,
                  CableModel model = CableModel::composite);

// Drive power for a Rabi pulse of angle theta and duration tau.
double gate_drive_power(const HardwareProfile& profile, double theta, double tau);

// Geometric temperature ladder with uniform per-stage attenuation.
StageStack stage_layout(double T1, double TK, int K, double A_total);

// Photon number required so that N_L * p_L^(k)(pauli_strength(n)) = M_target.
double target_photon_number(double M_target, double N_L, const HardwareProfile& profile,
                            double eta_thr, int k);

// All physical total attenuations A (ascending) whose uniform split over the
// geometric ladder reproduces n_target; empty if no root.
std::vector<double> solve_attenuation(double T1, double TK, int K, double n_target,
                                      double omega0);

// Static (a) and dynamic (b) power coefficients of the stack.
PowerCoefficients power_coefficients(const StageStack& stack, const HardwareProfile& profile);

// Total electrical power for a workload at concatenation level k.
double total_power(const PowerCoefficients& coeffs, const workloads::Workload& workload, int k);

} // namespace qecost::hardware
