#include <doctest.h>

#include <cmath>
#include <random>

#include "constants.hpp"
#include "errors.hpp"
#include "noise.hpp"

using namespace qecost;
using noise::NoiseSchedule;

namespace {
constexpr double omega6ghz = 2.0 * constants::pi * 6e9;
}

TEST_CASE("bose_einstein limits and reference value") {
  CHECK(noise::bose_einstein(0.0, omega6ghz) == 0.0);
  // hbar*omega/(k_B*T) = ln 2  ->  occupation exactly 1.
  const double T_ln2 = constants::hbar * omega6ghz / (constants::k_B * std::log(2.0));
  CHECK(noise::bose_einstein(T_ln2, omega6ghz) == doctest::Approx(1.0).epsilon(1e-12));
  // 4 K at 6 GHz: x = hbar*omega/(k_B*4) ~= 0.07197, n ~= 13.4.
  const double x = constants::hbar * omega6ghz / (constants::k_B * 4.0);
  CHECK(x == doctest::Approx(0.0719656).epsilon(1e-4));
  CHECK(noise::bose_einstein(4.0, omega6ghz) ==
        doctest::Approx(1.0 / std::expm1(x)).epsilon(1e-14));
  CHECK(noise::bose_einstein(4.0, omega6ghz) == doctest::Approx(13.4).epsilon(0.01));
  CHECK_THROWS_AS(noise::bose_einstein(-1.0, omega6ghz), error);
}

TEST_CASE("bose_einstein stability at large x") {
  // x up to 700 must not overflow; for x >= 40 the relative gap to e^-x is
  // below 1e-17.
  for (double x : {40.0, 100.0, 650.0, 699.0}) {
    const double T = constants::hbar * omega6ghz / (constants::k_B * x);
    const double n = noise::bose_einstein(T, omega6ghz);
    CHECK(std::isfinite(n));
    // Extended-precision oracle: the exact occupation differs from e^-x by a
    // relative e^-x <= e^-40 < 1e-17; the double result must match the
    // extended-precision value to a few ulps.
    const long double xl = static_cast<long double>(constants::hbar) * omega6ghz /
                           (static_cast<long double>(constants::k_B) * T);
    const long double n_ref = 1.0L / std::expm1(xl);
    const long double e_ref = std::exp(-xl);
    CHECK(static_cast<double>(std::abs(n_ref - e_ref)) < 1e-17 * static_cast<double>(e_ref));
    // The double path recomputes x from T; its rounding error is amplified by
    // a factor x through the exponential, hence the x-scaled ulp budget.
    CHECK(std::abs(static_cast<long double>(n) - n_ref) <= 4e-16L * xl * n_ref);
  }
}

TEST_CASE("two_stage_noise sanity cases") {
  CHECK(noise::two_stage_noise(0.01, 300.0, 1.0, omega6ghz) ==
        doctest::Approx(noise::bose_einstein(300.0, omega6ghz)).epsilon(1e-14));
  CHECK(noise::two_stage_noise(4.0, 4.0, 123.0, omega6ghz) ==
        doctest::Approx(noise::bose_einstein(4.0, omega6ghz)).epsilon(1e-14));
  // Huge attenuation: exactly the mixing formula, i.e. the qubit-stage floor
  // plus the strongly suppressed generator leak-through.
  {
    const double n_q = noise::bose_einstein(0.02, omega6ghz);
    const double n_gen = noise::bose_einstein(300.0, omega6ghz);
    const double A = 1e12;
    CHECK(noise::two_stage_noise(0.02, 300.0, A, omega6ghz) ==
          doctest::Approx((A - 1.0) / A * n_q + n_gen / A).epsilon(1e-12));
  }
  CHECK_THROWS_AS(noise::two_stage_noise(0.01, 300.0, 0.5, omega6ghz), error);
}

TEST_CASE("two_stage_noise interpolates between endpoints") {
  const double n_q = noise::bose_einstein(0.1, omega6ghz);
  const double n_gen = noise::bose_einstein(300.0, omega6ghz);
  for (double A : {1.0, 2.0, 10.0, 1e4}) {
    const double n = noise::two_stage_noise(0.1, 300.0, A, omega6ghz);
    CHECK(n >= n_q);
    CHECK(n <= n_gen);
  }
}

TEST_CASE("chain_noise telescoping, fixed point and K = 2 reduction") {
  StageStack stack;
  stack.temperatures = {0.01, 0.1, 1.0, 10.0, 100.0};
  stack.attenuations = {1.0, 1.0, 1.0, 1.0};
  CHECK(noise::chain_noise(stack, omega6ghz) ==
        doctest::Approx(noise::bose_einstein(100.0, omega6ghz)).epsilon(1e-12));

  stack.temperatures = {7.0, 7.0, 7.0, 7.0, 7.0};
  stack.attenuations = {3.0, 5.0, 2.0, 11.0};
  CHECK(noise::chain_noise(stack, omega6ghz) ==
        doctest::Approx(noise::bose_einstein(7.0, omega6ghz)).epsilon(1e-12));

  StageStack two;
  two.temperatures = {0.05, 300.0};
  two.attenuations = {37.0};
  CHECK(noise::chain_noise(two, omega6ghz) ==
        doctest::Approx(noise::two_stage_noise(0.05, 300.0, 37.0, omega6ghz)).epsilon(1e-15));
}

TEST_CASE("chain_noise equals the closed form") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> log_T(-2.0, 2.4);
  std::uniform_real_distribution<double> log_A(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    StageStack stack;
    std::vector<double> temps;
    for (int i = 0; i < 5; ++i) temps.push_back(std::pow(10.0, log_T(rng)));
    std::sort(temps.begin(), temps.end());
    stack.temperatures = temps;
    for (int i = 0; i < 4; ++i) stack.attenuations.push_back(std::pow(10.0, log_A(rng)));
    // Closed form: sum n_BE(T_i)(A_i-1)/(A_1..A_i) + n_BE(T_K)/(A_1..A_{K-1}).
    double closed = 0.0;
    double prod = 1.0;
    for (int i = 0; i < 4; ++i) {
      prod *= stack.attenuations[static_cast<size_t>(i)];
      closed += noise::bose_einstein(temps[static_cast<size_t>(i)], omega6ghz) *
                (stack.attenuations[static_cast<size_t>(i)] - 1.0) / prod;
    }
    closed += noise::bose_einstein(temps[4], omega6ghz) / prod;
    CHECK(noise::chain_noise(stack, omega6ghz) == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("chain_noise boundary override") {
  StageStack stack;
  stack.temperatures = {0.01, 0.1, 1.0, 10.0, 100.0};
  stack.attenuations = {2.0, 2.0, 2.0, 2.0};
  const double with_tk = noise::chain_noise(stack, omega6ghz);
  stack.boundary_override = 300.0;
  const double with_300 = noise::chain_noise(stack, omega6ghz);
  CHECK(with_300 > with_tk);
  stack.boundary_override = 100.0;
  CHECK(noise::chain_noise(stack, omega6ghz) == doctest::Approx(with_tk).epsilon(1e-15));
}

TEST_CASE("chain_noise monotone in temperatures and attenuations") {
  StageStack base;
  base.temperatures = {0.02, 0.2, 2.0, 20.0, 200.0};
  base.attenuations = {5.0, 5.0, 5.0, 5.0};
  const double n0 = noise::chain_noise(base, omega6ghz);
  for (size_t i = 0; i < base.temperatures.size(); ++i) {
    StageStack warmer = base;
    warmer.temperatures[i] *= 1.3;
    if (i + 1 < base.temperatures.size())
      warmer.temperatures[i] = std::min(warmer.temperatures[i], base.temperatures[i + 1]);
    CHECK(noise::chain_noise(warmer, omega6ghz) >= n0);
  }
  for (size_t i = 0; i < base.attenuations.size(); ++i) {
    StageStack stronger = base;
    stronger.attenuations[i] *= 2.0;
    CHECK(noise::chain_noise(stronger, omega6ghz) <= n0);
  }
}

TEST_CASE("pauli_strength arithmetic") {
  CHECK(noise::pauli_strength(0.0, 4.0, 1e-4) == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(noise::pauli_strength(5.0, 0.0, 1.0) == 0.0);
  CHECK(noise::pauli_strength(13.4, 1e3, 1e-7) ==
        doctest::Approx((1.0 + 26.8) * 1e-4 / 4.0).epsilon(1e-14)); // ~6.95e-4
}

TEST_CASE("infidelity coefficients") {
  CHECK(noise::infidelity(0.0, 1e3, 1e-7, noise::Fidelity::worst, 1) ==
        doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(noise::infidelity(0.0, 1e3, 1e-7, noise::Fidelity::average, 1) ==
        doctest::Approx(1e-4 / 3.0).epsilon(1e-14));
  CHECK(noise::infidelity(3.5, 1e3, 1e-7, noise::Fidelity::worst, 2) ==
        doctest::Approx(2.0 * noise::infidelity(3.5, 1e3, 1e-7, noise::Fidelity::worst, 1))
            .epsilon(1e-14));
}

TEST_CASE("eta_from_pulse_energy") {
  const double one_photon = constants::hbar * omega6ghz;
  CHECK(noise::eta_from_pulse_energy(one_photon, omega6ghz) ==
        doctest::Approx(constants::pi * constants::pi / 16.0).epsilon(1e-14));
  CHECK(noise::eta_from_pulse_energy(1e9 * one_photon, omega6ghz) ==
        doctest::Approx(6.1685e-10).epsilon(1e-4));
  // eta < 1e-4 needs more than pi^2 * 1e4 / 16 ~= 6169 photons.
  const double n_min = constants::pi * constants::pi * 1e4 / 16.0;
  CHECK(noise::eta_from_pulse_energy(n_min * 1.001 * one_photon, omega6ghz) < 1e-4);
  CHECK(noise::eta_from_pulse_energy(n_min * 0.999 * one_photon, omega6ghz) > 1e-4);
  CHECK_THROWS_AS(noise::eta_from_pulse_energy(0.0, omega6ghz), error);
}

TEST_CASE("eval_schedule kinds") {
  CHECK(noise::eval_schedule(NoiseSchedule::constant(1e-5), 9) == 1e-5);
  CHECK(noise::eval_schedule(NoiseSchedule::power_law(1e-5, 291.0, 1.0), 1) ==
        doctest::Approx(2.91e-3).epsilon(1e-12));
  // Resource kind g(R) = alpha R^-beta with N(k) = D^k reproduces the power
  // law with eta0 = alpha R_L^-beta.
  const double alpha = 2.5e-3, R_L = 1e4, beta = 0.7, D = 291.0;
  const auto sched = NoiseSchedule::resource(
      [alpha, beta](double R) { return alpha * std::pow(R, -beta); }, R_L,
      [D](int k) { return std::pow(D, k); });
  const double eta0 = alpha * std::pow(R_L, -beta);
  for (int k = 0; k <= 5; ++k)
    CHECK(noise::eval_schedule(sched, k) ==
          doctest::Approx(eta0 * std::pow(D, beta * k)).epsilon(1e-12));
  // Tabulated outside the table is an error.
  const auto tab = NoiseSchedule::tabulated(1e-6, {{0, 1.0}, {1, 5.0}});
  CHECK(noise::eval_schedule(tab, 1) == doctest::Approx(5e-6));
  CHECK_THROWS_AS(noise::eval_schedule(tab, 2), error);
}

TEST_CASE("power-law schedules strictly increase in k") {
  const auto sched = NoiseSchedule::power_law(1e-7, 50.0, 0.3);
  for (int k = 0; k < 10; ++k)
    CHECK(noise::eval_schedule(sched, k + 1) > noise::eval_schedule(sched, k));
}

TEST_CASE("appendix fixture values") {
  const auto fixture = noise::appendix_fixture();
  CHECK(noise::eval_schedule(fixture, 0) == 1e-8);
  CHECK(noise::eval_schedule(fixture, 1) ==
        doctest::Approx(1e-8 * std::pow(10.0, 3.21)).epsilon(1e-12));
  CHECK(noise::eval_schedule(fixture, 1) < 1e-4);  // admissible at k = 1
  CHECK(noise::eval_schedule(fixture, 5) > 1e-4);  // divergence onset
  CHECK(noise::eval_schedule(fixture, 20) > 0.0);  // defined up to k = 20
  CHECK_THROWS_AS(noise::eval_schedule(fixture, 21), error);
}
