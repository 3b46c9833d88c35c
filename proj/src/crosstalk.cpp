#include "crosstalk.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "constants.hpp"
#include "errors.hpp"

namespace qecost::crosstalk {

namespace {
constexpr double term_budget = 1e9;
constexpr int k_overflow_guard = 1022;

void check_params(const CrosstalkParams& p) {
  require(p.z >= 0.0, errc::invalid_argument, "z must be nonnegative");
  require(p.a > 0.0, errc::invalid_argument, "lattice spacing must be positive");
  require(p.t0 > 0.0, errc::invalid_argument, "t0 must be positive");
  require(p.d == 1 || p.d == 2, errc::invalid_argument, "lattice dimension must be 1 or 2");
}
} // namespace

double epsilon_ct() {
  static const double eps = std::exp(1.0 + 1.0 / (2.0 * std::exp(1.0))) * std::sqrt(2.0);
  return eps;
}

double delta_exact(const CrosstalkParams& params, double n_qubits) {
  check_params(params);
  require(n_qubits >= 2.0, errc::invalid_argument, "need at least two qubits");
  const double z = params.z;
  if (params.d == 1) {
    const auto j_max = static_cast<int64_t>(n_qubits / 2.0);
    require(static_cast<double>(j_max) <= term_budget, errc::resource_limit,
            "1-D sum exceeds the exact-summation budget; use delta_asymptotic");
    double sum = 0.0;
    // Descending j: smallest terms first for floating-point accuracy.
    for (int64_t j = j_max; j >= 1; --j) sum += std::pow(static_cast<double>(j), -z);
    return 2.0 * params.delta * std::pow(params.a, -z) * sum;
  }
  // d = 2: square window of half-side M = floor(sqrt(N)/2), origin excluded.
  const auto M = static_cast<int64_t>(std::sqrt(n_qubits) / 2.0);
  require(M >= 1, errc::invalid_argument, "2-D window is empty; need n_qubits >= 4");
  const double n_terms = (2.0 * static_cast<double>(M) + 1.0) * (2.0 * static_cast<double>(M) + 1.0) - 1.0;
  require(n_terms <= term_budget, errc::resource_limit,
          "2-D sum exceeds the exact-summation budget; use delta_asymptotic");
  double sum = 0.0;
  // Outer shells (largest max(|i|,|j|)) first: their terms are smallest.
  for (int64_t s = M; s >= 1; --s) {
    double shell = 0.0;
    for (int64_t i = -s; i <= s; ++i) {
      const double r2_top = static_cast<double>(i * i + s * s);
      shell += 2.0 * std::pow(r2_top, -z / 2.0); // (i, +s) and (i, -s)
    }
    for (int64_t j = -s + 1; j <= s - 1; ++j) {
      const double r2_side = static_cast<double>(s * s + j * j);
      shell += 2.0 * std::pow(r2_side, -z / 2.0); // (+s, j) and (-s, j)
    }
    sum += shell;
  }
  return params.delta * std::pow(params.a, -z) * sum;
}

double cz_coefficient(double z) {
  require(z >= 0.0, errc::invalid_argument, "z must be nonnegative");
  require(z < 2.0, errc::invalid_argument, "C_z diverges for z >= 2");
  using boost::math::quadrature::gauss_kronrod;
  const auto integrand = [z](double theta) { return std::pow(std::sin(theta), z - 2.0); };
  double error = 0.0;
  const double integral = gauss_kronrod<double, 31>::integrate(
      integrand, constants::pi / 4.0, constants::pi / 2.0, 12, 1e-12, &error);
  require(error < 1e-10, errc::internal, "C_z quadrature failed to converge");
  return 2.0 / (2.0 - z) * integral;
}

double delta_asymptotic(const CrosstalkParams& params, int k) {
  check_params(params);
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(params.Q_L >= 1.0, errc::invalid_argument, "Q_L must be >= 1");
  const double z = params.z;
  require(z < static_cast<double>(params.d), errc::out_of_regime,
          "asymptotic form requires z < d (the z = d logarithmic case is not implemented)");
  double delta0;
  if (params.d == 1) {
    delta0 = params.delta * std::pow(2.0, z) * std::pow(params.Q_L, 1.0 - z) /
             (std::pow(params.a, z) * (1.0 - z));
  } else {
    delta0 = params.delta * std::pow(2.0, z) * cz_coefficient(z) *
             std::pow(params.Q_L, 1.0 - z / 2.0) / std::pow(params.a, z);
  }
  return delta0 * std::pow(params.D, k * (1.0 - z / static_cast<double>(params.d)));
}

double eta_from_delta(double delta_val, double t0) {
  require(delta_val >= 0.0 && t0 >= 0.0, errc::invalid_argument,
          "delta and t0 must be nonnegative");
  return epsilon_ct() * std::sqrt(delta_val * t0);
}

double delta_k(double delta0_t0, double eta_thr, int k) {
  require(delta0_t0 >= 0.0, errc::invalid_argument, "t0*Delta must be nonnegative");
  require(eta_thr > 0.0, errc::invalid_argument, "eta_thr must be positive");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  require(k <= k_overflow_guard, errc::invalid_argument, "k exceeds exponent-overflow guard");
  if (k == 0) return delta0_t0;
  if (delta0_t0 == 0.0) return 0.0;
  const double eps2 = epsilon_ct() * epsilon_ct();
  const double log_fix = std::log(eta_thr * eta_thr / eps2);
  const double two_k = std::ldexp(1.0, k);
  return std::exp(log_fix + two_k * (std::log(delta0_t0) - log_fix));
}

} // namespace qecost::crosstalk
