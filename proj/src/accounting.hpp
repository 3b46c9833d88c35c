#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>

namespace qecost::accounting {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Physical gate counts in fixed (cnot, single, identity, measurement) order.
struct GateCensus {
  bigint cnot = 0;
  bigint single = 0;
  bigint identity = 0;
  bigint measurement = 0;
  bool operator==(const GateCensus&) const = default;
};

// Same census with exact rational entries (parallel averages).
struct RationalCensus {
  bigrat cnot = 0;
  bigrat single = 0;
  bigrat identity = 0;
  bigrat measurement = 0;
  bool operator==(const RationalCensus&) const = default;
};

// Level-k growth factors of the logical power model.
struct ScalingFactors {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

struct QubitCount {
  bigint count = 0;
  bool encoded = true; // false marks the unencoded k = 0 bypass
};

struct AncillaTimesteps {
  long long steps = 0;
  double overlap = 0.0; // steps / 3^k
};

struct RejectionOverhead {
  double mean_extra = 0.0;
  long long reservoir_min = 0;
  bool perturbative_ok = true;
};

// One-level gate breakdown A, (cnot, single, identity, measurement) order,
// X_{j+1} = A * X_j convention.
std::array<std::array<int, 4>, 4> breakdown_matrix();

// Exact A^k * x0 (matrix power; the closed forms are cross-checked in tests).
GateCensus physical_gate_counts(const GateCensus& x0, int k, int k_cap = 8);

// The paper's printed closed-form expressions for A^k * x0 (exact rational
// evaluation, returned as integers). Used as a cross-check of the matrix
// power; disagreement is reported by closed_form_matches.
GateCensus closed_form_counts(const GateCensus& x0, int k);
bool closed_form_matches(const GateCensus& x0, int k);

enum class ParallelMode { exact, leading };

// Average parallel physical gates per physical timestep: exact A^k*par0/3^k,
// or the dominant-eigenvalue approximation with shared factor
// G = 2*cnot + single + identity.
RationalCensus parallel_physical_gates(const RationalCensus& par0, int k, ParallelMode mode);

// Physical qubits for q_l logical qubits at level k (ancilla factory model,
// with the no-recycling x4 included: (112/199)*199^k*q_l). k = 0 bypasses
// the formula and returns q_l marked unencoded.
QubitCount physical_qubits(const bigint& q_l, int k);

// t, u, v, w at level k.
ScalingFactors scaling_factors(int k);

// Duration of a level-k logical timestep: 3^k * tau_p.
double logical_timestep(double tau_p, int k);

// Timesteps to produce/consume one level-k ancilla: 3^k*4 - 3.
AncillaTimesteps ancilla_timesteps(int k);

// Mean extra ancillae per syndrome spot and minimum reservoir size.
RejectionOverhead rejection_overhead(double p_reject, double q_l0, double p_l_target);

double to_double(const bigint& value);
double to_double(const bigrat& value);

} // namespace qecost::accounting
