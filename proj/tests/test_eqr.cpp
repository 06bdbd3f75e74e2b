#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace kratzer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using testing_support::calibrated;
using testing_support::molecule;
using testing_support::rel;

namespace {
const double pi = std::numbers::pi;

PotentialSpec lih_spec() { return molecule("LiH").potential(PotentialKind::kratzer); }
double lih_mu() { return molecule("LiH").mu; }
}  // namespace

TEST_CASE("ground-state log derivative, Coulomb case") {
  const PotentialSpec coulomb{0.0, 14.4, 0.0};
  const double mass = 1e-3;
  const double t = two_mu_over_hbar2(mass);
  const GroundStateLogDeriv ld = ground_state_logderiv(coulomb, mass, 3);
  CHECK(ld.alpha1 == 1.0);
  CHECK_THAT(ld.alpha2, WithinRel(-0.5 * t * 14.4, 1e-15));
  CHECK_THAT(ld.E0, WithinRel(-t * 14.4 * 14.4 / 4.0, 1e-15));
}

TEST_CASE("ground-state energy equals the closed-form level exactly") {
  for (const auto& m : builtin_registry()) {
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    for (int M = 2; M <= 12; ++M) {
      const GroundStateLogDeriv ld = ground_state_logderiv(s, m.mu, M);
      const int D = 2 + M % 2;
      CHECK(ld.E0 == energy_level(s, m.mu, {0, (M - D) / 2, D}).energy);
      CHECK(ld.alpha1 > 0.0);
      CHECK(ld.alpha2 < 0.0);
      CHECK(ld.E0 < s.C);
    }
  }
}

TEST_CASE("log derivative changes sign at alpha1/|alpha2|") {
  const GroundStateLogDeriv ld = ground_state_logderiv(lih_spec(), lih_mu(), 3);
  const double r0 = ld.alpha1 / -ld.alpha2;
  CHECK(ld.value(0.99 * r0) > 0.0);
  CHECK(ld.value(1.01 * r0) < 0.0);
  CHECK(ld.value(10.0 * r0) < 0.0);
}

TEST_CASE("Riccati residual") {
  for (const auto& name : {"LiH", "I2", "CO"}) {
    const auto m = molecule(name);
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    const double t = two_mu_over_hbar2(m.mu);
    for (int M : {2, 3, 8}) {
      const GroundStateLogDeriv ld = ground_state_logderiv(s, m.mu, M);
      const double scale = t * std::abs(ld.E0);
      for (double r : {m.re, 10.0 * m.re}) CHECK(std::abs(riccati_residual(ld, s, m.mu, M, r)) < 1e-10 * scale);
      GroundStateLogDeriv bad = ld;
      bad.alpha1 += 0.1;
      CHECK(std::abs(riccati_residual(bad, s, m.mu, M, m.re)) > 0.01 / (m.re * m.re));
    }
  }
  const GroundStateLogDeriv ld = ground_state_logderiv(lih_spec(), lih_mu(), 3);
  CHECK_THROWS_AS(riccati_residual(ld, lih_spec(), lih_mu(), 3, 0.0), DomainError);
}

TEST_CASE("analytic quantum correction") {
  CHECK(quantum_correction_analytic(0.0) == 0.0);
  CHECK_THAT(quantum_correction_analytic(1.0), WithinRel(oracle::kQcLambda1, 1e-14));
  const double big = quantum_correction_analytic(1e6);
  CHECK(big > -pi / 2.0);
  CHECK(big < -pi / 2.0 + 1e-6);
  CHECK_THAT(big, WithinRel(oracle::kQcLambda1e6, 1e-14));
  for (double lam = 0.0; lam < 1e4; lam = lam * 1.7 + 0.01) CHECK(quantum_correction_analytic(lam) <= 0.0);
  CHECK_THROWS_AS(quantum_correction_analytic(-0.1), DomainError);
}

TEST_CASE("numeric quantum correction") {
  const double lih = quantum_correction_numeric(lih_spec(), lih_mu(), 3);
  CHECK_THAT(lih, WithinAbs(quantum_correction_analytic(lambda_param(lih_spec(), lih_mu(), 3)), 1e-10));

  const PotentialSpec coulomb{0.0, 14.4, 0.0};
  CHECK_THAT(quantum_correction_numeric(coulomb, 0.01, 3), WithinAbs(0.0, 1e-10));

  const auto i2 = molecule("I2");
  const PotentialSpec s = i2.potential(PotentialKind::kratzer);
  CHECK_THAT(quantum_correction_numeric(s, i2.mu, 5),
             WithinAbs(quantum_correction_analytic(lambda_param(s, i2.mu, 5)), 1e-10));
}

TEST_CASE("quantum correction with the tanh-sinh rule") {
  const QuadratureConfig q{64, QuadratureKind::tanh_sinh};
  const double lam = lambda_param(lih_spec(), lih_mu(), 4);
  CHECK_THAT(quantum_correction_numeric(lih_spec(), lih_mu(), 4, q), WithinAbs(quantum_correction_analytic(lam), 1e-10));
}

TEST_CASE("momentum integral at eigenvalues") {
  const PotentialSpec s = lih_spec();
  const double mu = lih_mu();
  for (int M : {3, 5}) {
    const double qc = quantum_correction_analytic(lambda_param(s, mu, M));
    const int D = 2 + M % 2;
    const double E0 = energy_level(s, mu, {0, (M - D) / 2, D}).energy;
    CHECK_THAT(momentum_integral(s, mu, M, E0), WithinAbs(pi + qc, 1e-9));
    const double E3 = energy_level(s, mu, {3, (M - D) / 2, D}).energy;
    CHECK_THAT(momentum_integral(s, mu, M, E3), WithinAbs(4.0 * pi + qc, 1e-9));
  }
}

TEST_CASE("quantum correction is node independent") {
  for (const auto& name : {"LiH", "HCl", "I2"}) {
    const auto m = molecule(name);
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    const double qa = quantum_correction_analytic(lambda_param(s, m.mu, 3));
    for (int n = 0; n <= 5; ++n) {
      const double E = energy_level(s, m.mu, {n, 0, 3}).energy;
      CHECK_THAT(momentum_integral(s, m.mu, 3, E) - (n + 1) * pi, WithinAbs(qa, 1e-9));
    }
  }
}

TEST_CASE("momentum integral outside the bound window") {
  const PotentialSpec s = lih_spec();
  CHECK_THROWS_AS(momentum_integral(s, lih_mu(), 3, 0.5), NoBoundState);
  CHECK_THROWS_AS(momentum_integral(s, lih_mu(), 3, -100.0), NoClassicalRegion);
}

TEST_CASE("momentum integral matches its closed form for random potentials") {
  std::mt19937_64 rng(7);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto logu = [&](double a, double b) { return std::exp(std::log(a) + u() * std::log(b / a)); };
  for (int i = 0; i < 100; ++i) {
    const double De = logu(0.1, 20.0), re = logu(0.5, 3.0), mu = logu(0.5, 100.0);
    const int M = 2 + static_cast<int>(rng() % 11);
    const PotentialSpec s = (i % 2) ? from_modified_kratzer(De, re) : from_kratzer(De, re);
    const double vmin = effective_potential_minimum(s, mu, M);
    const double E = vmin + (0.05 + 0.9 * u()) * (s.C - vmin);
    const double closed = momentum_integral_closed(s, mu, M, E);
    CHECK_THAT(momentum_integral(s, mu, M, E), WithinAbs(closed, 1e-10 * std::max(1.0, std::abs(closed))));
  }
}

TEST_CASE("EQR root finding reproduces reference LiH levels") {
  const PotentialSpec s = lih_spec();
  const double mu = lih_mu();
  struct Case {
    int M, n;
    double printed;
  } cases[] = {{3, 1, -2.375819214406}, {5, 1, -2.374107972668}};
  for (const auto& c : cases) {
    CHECK(rel(solve_energy_eqr(s, mu, c.M, c.n), c.printed) < 2e-5);
    CHECK(rel(solve_energy_eqr(s, mu, c.M, c.n, {}, calibrated()), c.printed) < 1e-7);
  }
}

TEST_CASE("EQR root finding, Coulomb ground state") {
  const PotentialSpec coulomb{0.0, 14.399645, 0.0};
  const double mass = 5.48579909e-4;
  const double t = two_mu_over_hbar2(mass);
  CHECK_THAT(solve_energy_eqr(coulomb, mass, 3, 0), WithinRel(-t * coulomb.B * coulomb.B / 4.0, 1e-10));
}

TEST_CASE("EQR agrees with the closed form on the 3D molecule sweep") {
  for (const auto& name : {"LiH", "I2", "O2", "HCl", "NO", "CO"}) {
    const auto m = molecule(name);
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    for (int n = 0; n <= 5; ++n)
      for (int l = 0; l <= 5; ++l) {
        const QuantumState st{n, l, 3};
        INFO(name << " n=" << n << " l=" << l);
        CHECK(rel(solve_energy_eqr(s, m.mu, st.M(), n), energy_level(s, m.mu, st).energy) < 1e-10);
      }
  }
}

TEST_CASE("EQR rejects negative n") { CHECK_THROWS_AS(solve_energy_eqr(lih_spec(), lih_mu(), 3, -1), DomainError); }

TEST_CASE("appendix integrals, closed forms") {
  CHECK_THAT(appendix_integral_closed(AppendixIntegral::A3, 1.0, 2.0), WithinRel(pi, 1e-15));
  CHECK_THAT(appendix_integral_closed(AppendixIntegral::A1, 1.0, 3.0), WithinRel(2.0 * pi, 1e-15));
  CHECK_THAT(appendix_integral_closed(AppendixIntegral::A4, 1.0, 4.0), WithinRel(pi / 2.0, 1e-15));
  CHECK_THAT(appendix_integral_closed(AppendixIntegral::A2, 1.0, 4.0), WithinRel(pi / 2.0, 1e-15));
  CHECK_THROWS_AS(appendix_integral_closed(AppendixIntegral::A1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(appendix_integral_closed(AppendixIntegral::A1, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(appendix_integral_numeric(AppendixIntegral::A1, 1.0, 1.0), DomainError);
}

TEST_CASE("appendix integrals, quadrature") {
  CHECK_THAT(appendix_integral_numeric(AppendixIntegral::A2, 1.0, 4.0), WithinRel(pi / 2.0, 1e-12));
  CHECK_THAT(appendix_integral_numeric(AppendixIntegral::A3, 0.001, 1000.0), WithinRel(pi, 1e-12));
  CHECK_THAT(appendix_integral_numeric(AppendixIntegral::A1, 2.0, 2.0001), WithinRel(pi / 2.0 * 4.0001, 1e-12));
}

TEST_CASE("appendix integrals on random intervals") {
  std::mt19937_64 rng(11);
  auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 50; ++i) {
    const double ra = std::exp(std::log(1e-3) + u() * std::log(1e6));
    const double gap = (i % 5 == 0) ? ra * std::pow(10.0, -2.0 - 10.0 * u()) : ra * std::exp(u() * 8.0);
    const double rb = ra + gap;
    for (auto k : {AppendixIntegral::A1, AppendixIntegral::A2, AppendixIntegral::A3, AppendixIntegral::A4}) {
      INFO("ra=" << ra << " rb=" << rb << " kind=" << static_cast<int>(k));
      CHECK_THAT(appendix_integral_numeric(k, ra, rb), WithinRel(appendix_integral_closed(k, ra, rb), 1e-12));
    }
  }
}

TEST_CASE("fixed rules have converged by 256 nodes") {
  const PotentialSpec s = lih_spec();
  const double mu = lih_mu();
  const double E = energy_level(s, mu, {2, 1, 3}).energy;
  const TurningPoints tp = turning_points(s, mu, 5, E);
  const double K = std::sqrt(-two_mu_over_hbar2(mu) * E);
  auto k = [&](double r, double x, double half) { return K * half * half * (1.0 - x * x) / r; };
  for (auto kind : {QuadratureKind::chebyshev_gauss, QuadratureKind::tanh_sinh}) {
    for (int n = 256; n <= 2048; n *= 2) {
      const double a = quad::turning_point_integral_fixed(k, tp.inner, tp.outer, n, kind);
      const double b = quad::turning_point_integral_fixed(k, tp.inner, tp.outer, 2 * n, kind);
      CHECK(std::abs(a - b) < 1e-10);
    }
  }
}

TEST_CASE("non-convergent quadrature raises NumericalFailure") {
  auto spiky = [](double, double x, double) { return 1.0 / std::sqrt(std::abs(x)); };
  CHECK_THROWS_AS(quad::turning_point_integral(spiky, 1.0, 2.0, QuadratureConfig{}), NumericalFailure);
}

TEST_CASE("quadrature config validation") {
  CHECK_THROWS_AS(QuadratureConfig{8}.validate(), DomainError);
  CHECK(std::string(to_string(QuadratureKind::tanh_sinh)) == "tanh-sinh");
}
