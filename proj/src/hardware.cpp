#include "hardware.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "accounting.hpp"
#include "errors.hpp"
#include "noise.hpp"

namespace qecost::hardware {

namespace {

// ULT-23-style stainless coax: inner conductor diameter 0.2 mm plus outer
// shell between 0.66 and 0.86 mm.
constexpr double coax_area =
    constants::pi / 4.0 * (0.2e-3 * 0.2e-3) +
    constants::pi / 4.0 * (0.86e-3 * 0.86e-3 - 0.66e-3 * 0.66e-3); // m^2
constexpr double kapton_area = 1.3e-9;                             // m^2 per stripline

// Stainless-steel conductivity: log10(lambda) as an 8th-order polynomial in
// log10(T), valid T >= 4 K; linear extension to lambda(0) = 0 below.
double lambda_ss(double T) {
  static constexpr double a[9] = {-1.4087, 1.3982,  0.2543, -0.6260, 0.2334,
                                  0.4256,  -0.4658, 0.1650, -0.0199};
  if (T <= 0.0) return 0.0;
  if (T < 4.0) {
    const double at4 = lambda_ss(4.0);
    return at4 * T / 4.0;
  }
  const double x = std::log10(T);
  double poly = 0.0;
  for (int i = 8; i >= 0; --i) poly = poly * x + a[i];
  return std::pow(10.0, poly);
}

// Kapton dielectric conductivity, low-T law extended below 0.5 K.
double lambda_kapton(double T) {
  if (T <= 0.0) return 0.0;
  if (T < 4.0) return 4.6e-3 * std::pow(T, 0.56);
  return 2.996e-3 * std::pow(T, 0.9794);
}

// Cross-section times conductivity for the chosen cable model.
double area_lambda(double T, CableModel model) {
  switch (model) {
    case CableModel::composite:
      return (T < 10.0) ? kapton_area * lambda_kapton(T) : coax_area * lambda_ss(T);
    case CableModel::coax:
      return coax_area * lambda_ss(T);
    case CableModel::stripline:
      return kapton_area * lambda_kapton(T);
  }
  fail(errc::internal, "unknown cable model");
}

// Integral of A(T)*lambda(T) over [T_cold, T_hot], split at the 4 K and 10 K
// material boundaries. Memoized; the cache never changes numerical results.
double conduction_integral(double T_cold, double T_hot, CableModel model) {
  static std::map<std::tuple<double, double, int>, double> cache;
  static std::mutex cache_mutex;
  const auto key = std::make_tuple(T_cold, T_hot, static_cast<int>(model));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<double> cuts = {T_cold};
  for (double boundary : {4.0, 10.0})
    if (boundary > T_cold && boundary < T_hot) cuts.push_back(boundary);
  cuts.push_back(T_hot);
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double error = 0.0;
    total += gauss_kronrod<double, 31>::integrate(
        [model](double T) { return area_lambda(T, model); }, cuts[i], cuts[i + 1], 12, 1e-9,
        &error);
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, total);
  }
  return total;
}

} // namespace

double carnot_cost(double heat, double T, const HardwareProfile& profile) {
  require(T > 0.0, errc::invalid_argument, "temperature must be positive");
  require(T <= profile.hot_temperature, errc::invalid_argument,
          "temperature above the hot reservoir");
  require(heat >= 0.0, errc::invalid_argument, "heat must be nonnegative");
  require(profile.efficiency_exponent == 1 || profile.efficiency_exponent == 2,
          errc::invalid_argument, "efficiency exponent must be 1 or 2");
  const double eff = (profile.hot_temperature - T) / T;
  return heat * ((profile.efficiency_exponent == 1) ? eff : eff * eff);
}

double conduction(double T_cold, double T_hot, const HardwareProfile& profile, CableModel model) {
  require(T_cold >= 0.0, errc::invalid_argument, "T_cold must be nonnegative");
  require(T_hot > T_cold, errc::invalid_argument, "T_hot must exceed T_cold");
  require(profile.cable_length > 0.0, errc::invalid_argument, "cable length must be positive");
  return conduction_integral(T_cold, T_hot, model) / profile.cable_length;
}

double gate_drive_power(const HardwareProfile& profile, double theta, double tau) {
  require(tau > 0.0, errc::invalid_argument, "pulse duration must be positive");
  require(theta >= 0.0, errc::invalid_argument, "pulse angle must be nonnegative");
  require(profile.gamma_sp > 0.0, errc::invalid_argument,
          "gamma_sp must be positive (infinite power otherwise)");
  const double omega_rabi = theta / tau;
  return constants::hbar * profile.omega0 * omega_rabi * omega_rabi / (4.0 * profile.gamma_sp);
}

StageStack stage_layout(double T1, double TK, int K, double A_total) {
  require(T1 > 0.0 && TK > T1, errc::invalid_argument, "need 0 < T1 < TK");
  require(K >= 2, errc::invalid_argument, "need at least two stages");
  require(A_total >= 1.0, errc::invalid_argument, "total attenuation must be >= 1");
  StageStack stack;
  const double ratio = TK / T1;
  for (int i = 0; i < K; ++i)
    stack.temperatures.push_back(T1 * std::pow(ratio, static_cast<double>(i) / (K - 1)));
  stack.temperatures.back() = TK; // avoid pow round-off at the hot end
  const double per_stage = std::pow(A_total, 1.0 / (K - 1));
  stack.attenuations.assign(static_cast<size_t>(K - 1), per_stage);
  stack.t_amp = std::clamp(4.0, T1, TK);
  return stack;
}

double target_photon_number(double M_target, double N_L, const HardwareProfile& profile,
                            double eta_thr, int k) {
  require(M_target > 0.0, errc::invalid_argument, "M_target must be positive");
  require(N_L >= 1.0, errc::invalid_argument, "N_L must be >= 1");
  require(eta_thr > 0.0, errc::invalid_argument, "eta_thr must be positive");
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  const double gamma_tau = profile.gamma_sp * profile.tau_timestep;
  require(gamma_tau > 0.0, errc::invalid_argument, "gamma_sp * tau must be positive");
  const double ratio = M_target / (eta_thr * N_L);
  const double eta_required = eta_thr * std::pow(ratio, std::ldexp(1.0, -k));
  const double n = 0.5 * (4.0 * eta_required / gamma_tau - 1.0);
  require(n >= 0.0, errc::infeasible,
          "target unreachable at this k: required photon number is negative");
  return n;
}

std::vector<double> solve_attenuation(double T1, double TK, int K, double n_target,
                                      double omega0) {
  require(K >= 2 && K <= 8, errc::invalid_argument, "K must lie in [2, 8]");
  require(n_target >= 0.0, errc::invalid_argument, "n_target must be nonnegative");
  require(T1 > 0.0 && TK >= T1, errc::invalid_argument, "need 0 < T1 <= TK");
  if (TK == T1) return {1.0}; // all stages equal: chain_noise is A-independent

  std::vector<double> T(static_cast<size_t>(K));
  const double ratio = TK / T1;
  for (int i = 0; i < K; ++i)
    T[static_cast<size_t>(i)] = T1 * std::pow(ratio, static_cast<double>(i) / (K - 1));
  T.back() = TK;

  std::vector<double> nbe(static_cast<size_t>(K));
  for (int i = 0; i < K; ++i) nbe[static_cast<size_t>(i)] = noise::bose_einstein(T[static_cast<size_t>(i)], omega0);

  require(n_target > nbe.front(), errc::infeasible,
          "n_target at or below the qubit-stage thermal floor");

  // Polynomial in y = A^(1/(K-1)):
  //   (n_BE(T1) - n_target) y^(K-1)
  // + sum_{p=1}^{K-2} (n_BE(T_{K-p}) - n_BE(T_{K-1-p})) y^p
  // + n_BE(T_K) - n_BE(T_{K-1}) = 0
  const int degree = K - 1;
  std::vector<double> c(static_cast<size_t>(degree) + 1, 0.0);
  c[static_cast<size_t>(degree)] = nbe.front() - n_target;
  for (int p = 1; p <= K - 2; ++p)
    c[static_cast<size_t>(p)] = nbe[static_cast<size_t>(K - p - 1)] - nbe[static_cast<size_t>(K - p - 2)];
  c[0] = nbe[static_cast<size_t>(K - 1)] - nbe[static_cast<size_t>(K - 2)];

  const auto eval = [&](double y) {
    double v = 0.0;
    for (int p = degree; p >= 0; --p) v = v * y + c[static_cast<size_t>(p)];
    return v;
  };
  const auto eval_deriv = [&](double y) {
    double v = 0.0;
    for (int p = degree; p >= 1; --p) v = v * y + p * c[static_cast<size_t>(p)];
    return v;
  };

  // Companion-matrix real roots, then Newton polish.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i)
    comp(i, degree - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(degree)];
  const Eigen::VectorXcd eig = comp.eigenvalues();

  std::vector<double> result;
  for (int i = 0; i < eig.size(); ++i) {
    const double re = eig(i).real();
    if (std::abs(eig(i).imag()) > 1e-8 * std::max(1.0, std::abs(re))) continue;
    double y = re;
    if (y < 1.0 - 1e-9) continue;
    for (int it = 0; it < 5; ++it) {
      const double d = eval_deriv(y);
      if (d == 0.0) break;
      y -= eval(y) / d;
    }
    y = std::max(y, 1.0);
    const double A = std::pow(y, degree);
    // Back-substitute through the actual chain and keep only faithful roots.
    StageStack stack;
    stack.temperatures = T;
    stack.attenuations.assign(static_cast<size_t>(degree), y);
    stack.t_amp = std::clamp(4.0, T1, TK);
    const double achieved = noise::chain_noise(stack, omega0);
    if (std::abs(achieved - n_target) > 1e-9 * n_target) continue;
    result.push_back(A);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end(),
                           [](double x, double y) {
                             return std::abs(x - y) <= 1e-9 * std::max(std::abs(x), std::abs(y));
                           }),
               result.end());
  return result;
}

PowerCoefficients power_coefficients(const StageStack& stack, const HardwareProfile& profile) {
  const auto& T = stack.temperatures;
  const int K = static_cast<int>(T.size());
  require(K >= 2, errc::invalid_argument, "stack needs at least two stages");
  require(static_cast<int>(stack.attenuations.size()) == K - 1, errc::invalid_argument,
          "stack needs K-1 attenuations");
  const double nx = profile.qubits_per_xy_cable;
  require(nx > 0.0, errc::invalid_argument, "qubits_per_xy_cable must be positive");

  const auto Tat = [&](int i) { return T[static_cast<size_t>(i - 1)]; }; // 1-indexed
  const auto qc = [&](int i, int j) {
    return conduction(Tat(i), Tat(j), profile, CableModel::composite);
  };
  const auto carnot = [&](double temperature, double heat) {
    return carnot_cost(heat, temperature, profile);
  };

  PowerCoefficients out;
  // Static coefficient a: generator + amplifier loads and the net conducted
  // heat evacuated at each stage (stage K-1 hosts the amplifier and is not
  // conduction-thermalized in this model).
  const auto signed_carnot = [&](double temperature, double heat) {
    // The model's net-heat bookkeeping can go slightly negative at small
    // electronics loads; keep the formula literal (signed), like the source
    // expressions.
    return heat >= 0.0 ? carnot(temperature, heat) : -carnot(temperature, -heat);
  };
  double a = signed_carnot(Tat(K), profile.q_gen() - qc(K - 1, K) / nx);
  for (int i = 2; i <= K - 2; ++i)
    a += signed_carnot(Tat(i), (qc(i, i + 1) - qc(i - 1, i)) / nx);
  a += carnot(stack.t_amp, profile.q_amp());
  a += carnot(Tat(1), qc(1, 2) / nx);
  out.a = a;

  // Dynamic coefficients: attenuator dissipation of the drive power, weighted
  // by the Carnot cost of the stage where it lands.
  const double P_g = gate_drive_power(profile, constants::pi, profile.tau_1qb);
  std::vector<double> cumulative(static_cast<size_t>(K - 1));
  double prod = 1.0;
  for (int i = 0; i < K - 1; ++i) {
    prod *= stack.attenuations[static_cast<size_t>(i)];
    cumulative[static_cast<size_t>(i)] = prod; // A~_i = A_1...A_i
  }
  double S = carnot(Tat(1), 1.0) * (cumulative[0] - 1.0);
  for (int i = 2; i <= K - 2; ++i)
    S += carnot(Tat(i), 1.0) * (cumulative[static_cast<size_t>(i - 1)] - cumulative[static_cast<size_t>(i - 2)]);
  out.b_1qb = (profile.tau_1qb / profile.tau_timestep) * P_g * S;
  out.b_cnot = P_g * S;
  out.b_meas = 0.0;
  return out;
}

double total_power(const PowerCoefficients& coeffs, const workloads::Workload& workload, int k) {
  require(k >= 0, errc::invalid_argument, "k must be nonnegative");
  const auto& par = workload.par;
  if (k == 0) {
    // Unencoded: per-qubit static cost plus direct drive dissipation.
    return workload.q_l * coeffs.a + coeffs.b_1qb * par.single + coeffs.b_cnot * par.cnot +
           coeffs.b_meas * par.measurement;
  }
  const auto f = accounting::scaling_factors(k);
  const double slots = par.single + par.identity + 2.0 * par.cnot;
  return workload.q_l * f.t * coeffs.a +
         (coeffs.b_1qb * f.u + coeffs.b_cnot * f.v + coeffs.b_meas * f.w) * slots;
}

} // namespace qecost::hardware
