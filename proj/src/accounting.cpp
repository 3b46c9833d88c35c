#include "accounting.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qecost::accounting {

namespace {

bigint ipow(bigint base, int exp) {
  bigint result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

} // namespace

std::array<std::array<int, 4>, 4> breakdown_matrix() {
  // Rows/columns in (cnot, single, identity, measurement) order; column j is
  // the level-1 content of one logical gate of species j.
  return {{{135, 64, 64, 0}, {56, 35, 28, 0}, {72, 36, 43, 0}, {56, 28, 28, 7}}};
}

GateCensus physical_gate_counts(const GateCensus& x0, int k, int k_cap) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(x0.cnot >= 0 && x0.single >= 0 && x0.identity >= 0 && x0.measurement >= 0,
          errc::invalid_argument, "census entries must be nonnegative");
  require(k <= k_cap, errc::resource_limit,
          "k exceeds the gate-count cap (" + std::to_string(k_cap) + ")");
  const auto A = breakdown_matrix();
  std::array<bigint, 4> x = {x0.cnot, x0.single, x0.identity, x0.measurement};
  for (int step = 0; step < k; ++step) {
    std::array<bigint, 4> next = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) next[static_cast<size_t>(i)] += A[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    x = next;
  }
  return GateCensus{x[0], x[1], x[2], x[3]};
}

GateCensus closed_form_counts(const GateCensus& x0, int k) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  const bigint p199 = ipow(199, k);
  const bigint p7 = ipow(7, k);
  const bigint& Nc = x0.cnot;
  const bigint& N1 = x0.single;
  const bigint& NId = x0.identity;
  const bigint& Nm = x0.measurement;
  const bigint G = 2 * Nc + N1 + NId;

  const bigrat cnot = bigrat(p199 * G, 3) + bigrat(p7 * (Nc - NId - N1), 3);
  const bigrat single = bigrat(7 * p199 * G, 48) + bigrat(p7 * (-14 * Nc - 7 * NId + 41 * N1), 48);
  const bigrat identity = bigrat(3 * p199 * G, 16) + bigrat(p7 * (-6 * Nc + 13 * NId - 3 * N1), 16);
  const bigrat meas = bigrat(7 * (p199 - p7) * G, 48) + bigrat(p7 * Nm, 1);

  const auto as_int = [](const bigrat& r) {
    require(denominator(r) == 1, errc::internal, "closed form produced a non-integer count");
    return numerator(r);
  };
  return GateCensus{as_int(cnot), as_int(single), as_int(identity), as_int(meas)};
}

bool closed_form_matches(const GateCensus& x0, int k) {
  return physical_gate_counts(x0, k) == closed_form_counts(x0, k);
}

RationalCensus parallel_physical_gates(const RationalCensus& par0, int k, ParallelMode mode) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  if (mode == ParallelMode::exact) {
    const auto A = breakdown_matrix();
    std::array<bigrat, 4> x = {par0.cnot, par0.single, par0.identity, par0.measurement};
    for (int step = 0; step < k; ++step) {
      std::array<bigrat, 4> next = {0, 0, 0, 0};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) next[static_cast<size_t>(i)] += A[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
      x = next;
    }
    const bigrat div = bigrat(ipow(3, k), 1);
    return RationalCensus{x[0] / div, x[1] / div, x[2] / div, x[3] / div};
  }
  // Leading mode: dominant 199^k terms with shared factor G, divided by 3^k.
  const bigrat G = 2 * par0.cnot + par0.single + par0.identity;
  const bigrat growth = bigrat(ipow(199, k), ipow(3, k));
  return RationalCensus{
      bigrat(1, 3) * growth * G,
      bigrat(7, 48) * growth * G,
      bigrat(3, 16) * growth * G,
      bigrat(7, 48) * growth * G,
  };
}

QubitCount physical_qubits(const bigint& q_l, int k) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(q_l >= 1, errc::invalid_argument, "q_l must be >= 1");
  if (k == 0) return QubitCount{q_l, false};
  // (112/199)*199^k * q_l = 112 * 199^(k-1) * q_l, exact.
  return QubitCount{112 * ipow(199, k - 1) * q_l, true};
}

ScalingFactors scaling_factors(int k) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  ScalingFactors f;
  f.t = 112.0 / 199.0 * std::pow(199.0, k);
  f.u = 7.0 / 48.0 * std::pow(199.0 / 3.0, k);
  f.v = 1.0 / 3.0 * std::pow(199.0 / 3.0, k);
  f.w = f.u;
  return f;
}

double logical_timestep(double tau_p, int k) {
  require(tau_p >= 0.0, errc::invalid_argument, "tau_p must be nonnegative");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  return std::pow(3.0, k) * tau_p;
}

AncillaTimesteps ancilla_timesteps(int k) {
  require(k >= 1, errc::invalid_argument, "no ancillae at k = 0");
  require(k <= 30, errc::resource_limit, "k too large for timestep accounting");
  long long p3 = 1;
  for (int i = 0; i < k; ++i) p3 *= 3;
  AncillaTimesteps result;
  result.steps = 4 * p3 - 3;
  result.overlap = static_cast<double>(result.steps) / static_cast<double>(p3);
  return result;
}

RejectionOverhead rejection_overhead(double p_reject, double q_l0, double p_l_target) {
  require(p_reject >= 0.0 && p_reject < 1.0, errc::invalid_argument,
          "rejection probability must lie in [0, 1)");
  require(q_l0 >= 0.0, errc::invalid_argument, "q_l0 must be nonnegative");
  require(p_l_target > 0.0 && p_l_target < 1.0, errc::invalid_argument,
          "p_l_target must lie in (0, 1)");
  const double qp = q_l0 * p_reject;
  require(qp < 1.0, errc::out_of_regime,
          "Q_L0 * p_reject >= 1: perturbative rejection treatment invalid");
  RejectionOverhead result;
  result.perturbative_ok = true;
  if (p_reject == 0.0) return result;
  result.mean_extra = p_reject / (1.0 - p_reject);
  // Smallest integer M with (qp)^(M+1) < p_l_target, i.e. M+1 > ln(pt)/ln(qp).
  const double r = std::log(p_l_target) / std::log(qp);
  const double nearest = std::round(r);
  double m;
  if (std::abs(r - nearest) < 1e-9) {
    m = nearest; // boundary: equality at M+1 = r is not strict, need one more
  } else {
    m = std::floor(r);
  }
  result.reservoir_min = static_cast<long long>(std::max(0.0, m));
  return result;
}

double to_double(const bigint& value) { return value.convert_to<double>(); }
double to_double(const bigrat& value) { return value.convert_to<double>(); }

} // namespace qecost::accounting
