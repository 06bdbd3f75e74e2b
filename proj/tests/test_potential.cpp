#include <catch_amalgamated.hpp>

#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace kratzer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using testing_support::molecule;

TEST_CASE("from_kratzer") {
  CHECK(from_kratzer(1.0, 1.0) == PotentialSpec{1.0, 2.0, 0.0});
  const PotentialSpec lih = from_kratzer(2.515283695, 1.5956);
  CHECK(lih.A == 2.515283695 * 1.5956 * 1.5956);
  CHECK(lih.B == 2.0 * 2.515283695 * 1.5956);
  CHECK(lih.C == 0.0);
  CHECK_THROWS_AS(from_kratzer(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(from_kratzer(1.0, -1.0), DomainError);
}

TEST_CASE("from_modified_kratzer") {
  CHECK(from_modified_kratzer(1.0, 1.0) == PotentialSpec{1.0, 2.0, 1.0});
  const double de = wavenumber_to_ev(96288.03528);
  const PotentialSpec n2 = from_modified_kratzer(de, 1.0940);
  CHECK(n2.C == de);
  CHECK(from_modified_kratzer(de, 1.094).C - from_kratzer(de, 1.094).C == de);
  CHECK_THROWS_AS(from_modified_kratzer(-1.0, 1.0), DomainError);
}

TEST_CASE("PotentialSpec validation") {
  CHECK_THROWS_AS((PotentialSpec{-1.0, 1.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((PotentialSpec{1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((PotentialSpec{1.0, 1.0, NAN}.validate()), DomainError);
}

TEST_CASE("QuantumState derives M") {
  CHECK(QuantumState{0, 4, 2}.M() == 10);
  CHECK(QuantumState{3, 0, 3}.M() == 3);
  CHECK_THROWS_AS((QuantumState{0, 0, 1}.validate()), DomainError);
  CHECK_THROWS_AS((QuantumState{-1, 0, 3}.validate()), DomainError);
  CHECK_THROWS_AS((QuantumState{0, -1, 3}.validate()), DomainError);
}

TEST_CASE("lambda_param") {
  const PotentialSpec coulomb{0.0, 14.4, 0.0};
  CHECK(lambda_param(coulomb, 1.0, 3) == 0.0);
  CHECK(lambda_param(coulomb, 1.0, 2) == -0.5);
  CHECK_THROWS_AS(lambda_param(coulomb, 1.0, 1), DomainError);

  const auto lih = molecule("LiH");
  CHECK_THAT(lambda_param(lih.potential(PotentialKind::kratzer), lih.mu, 3), WithinRel(oracle::kLiHLambdaM3, 1e-14));
  const auto i2 = molecule("I2");
  CHECK_THAT(lambda_param(i2.potential(PotentialKind::kratzer), i2.mu, 5), WithinRel(oracle::kI2Lambda5, 1e-14));
}

TEST_CASE("lambda depends on D and l only through M") {
  const auto lih = molecule("LiH");
  const PotentialSpec s = lih.potential(PotentialKind::kratzer);
  for (int M = 2; M <= 14; ++M) {
    for (int D = 2; D <= M; ++D) {
      if ((M - D) % 2) continue;
      const QuantumState st{0, (M - D) / 2, D};
      CHECK(lambda_param(s, lih.mu, st.M()) == lambda_param(s, lih.mu, M));
    }
  }
}

TEST_CASE("centrifugal coefficient identity") {
  for (const auto& name : {"LiH", "I2", "O2", "HCl", "NO", "CO"}) {
    const auto m = molecule(name);
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    const double t = two_mu_over_hbar2(m.mu);
    for (int M = 2; M <= 12; ++M) {
      const double expect = t * s.A + ((M - 2.0) * (M - 2.0) - 1.0) / 4.0;
      CHECK_THAT(centrifugal_coefficient(s, m.mu, M), WithinRel(expect, 1e-14));
    }
  }
}

TEST_CASE("effective potential") {
  const PotentialSpec coulomb{0.0, 14.4, -3.0};
  // M = 2 with A = 0 leaves g = -1/4.
  const double t = two_mu_over_hbar2(1.0);
  for (double r : {0.1, 1.0, 7.5})
    CHECK_THAT(effective_potential(coulomb, 1.0, 2, r), WithinRel(-0.25 / (t * r * r) - 14.4 / r - 3.0, 1e-14));

  const auto lih = molecule("LiH");
  const PotentialSpec s = lih.potential(PotentialKind::kratzer);
  CHECK(std::abs(effective_potential(s, lih.mu, 3, 1e8) - s.C) < 1e-6 * s.B);
  CHECK_THROWS_AS(effective_potential(s, lih.mu, 3, 0.0), DomainError);
  CHECK_THROWS_AS(effective_potential(s, lih.mu, 3, -1.0), DomainError);
}

TEST_CASE("effective potential minimum location") {
  for (const auto& name : {"LiH", "I2", "CO"}) {
    const auto m = molecule(name);
    const PotentialSpec s = m.potential(PotentialKind::kratzer);
    for (int M : {2, 3, 7}) {
      const double t = two_mu_over_hbar2(m.mu);
      const double a_eff = s.A + ((M - 2.0) * (M - 2.0) - 1.0) / (4.0 * t);
      const double r_star = 2.0 * a_eff / s.B;
      CHECK_THAT(effective_potential_argmin(s, m.mu, M), WithinRel(r_star, 1e-13));
      const double h = 1e-4 * r_star;
      auto dv = [&](double r) {
        return (effective_potential(s, m.mu, M, r + h) - effective_potential(s, m.mu, M, r - h)) / (2 * h);
      };
      CHECK(dv(0.98 * r_star) < 0.0);
      CHECK(dv(1.02 * r_star) > 0.0);
      CHECK_THAT(effective_potential_minimum(s, m.mu, M),
                 WithinRel(effective_potential(s, m.mu, M, r_star), 1e-13));
    }
  }
}

TEST_CASE("turning points at the ground-state energy") {
  const auto lih = molecule("LiH");
  const PotentialSpec s = lih.potential(PotentialKind::kratzer);
  const double t = two_mu_over_hbar2(lih.mu);
  const double lam = lambda_param(s, lih.mu, 3);
  const double E0 = s.C - t * s.B * s.B / (4.0 * (lam + 1.0) * (lam + 1.0));
  const TurningPoints tp = turning_points(s, lih.mu, 3, E0);
  CHECK(tp.inner > 0.0);
  CHECK(tp.inner < tp.outer);
  CHECK_THAT(tp.inner + tp.outer, WithinRel(-s.B / (E0 - s.C), 1e-13));
  CHECK_THAT(tp.inner * tp.outer, WithinRel(-lam * (lam + 1.0) / (t * (E0 - s.C)), 1e-13));
}

TEST_CASE("turning points coincide at the minimum") {
  const auto i2 = molecule("I2");
  const PotentialSpec s = i2.potential(PotentialKind::kratzer);
  const double vmin = effective_potential_minimum(s, i2.mu, 3);
  const TurningPoints tp = turning_points(s, i2.mu, 3, vmin);
  CHECK_THAT(tp.inner, WithinRel(tp.outer, 1e-8));
}

TEST_CASE("turning points outside the bound window") {
  const auto lih = molecule("LiH");
  const PotentialSpec s = lih.potential(PotentialKind::kratzer);
  CHECK_THROWS_AS(turning_points(s, lih.mu, 3, 0.0), NoBoundState);
  CHECK_THROWS_AS(turning_points(s, lih.mu, 3, 1.0), NoBoundState);
  const double vmin = effective_potential_minimum(s, lih.mu, 3);
  CHECK_THROWS_AS(turning_points(s, lih.mu, 3, vmin - 1e-3), NoClassicalRegion);
}

TEST_CASE("turning points solve V_eff = E across the window") {
  for (const auto& name : {"LiH", "I2", "O2", "HCl", "NO", "CO"}) {
    const auto m = molecule(name);
    for (PotentialKind kind : {PotentialKind::kratzer, PotentialKind::modified}) {
      const PotentialSpec s = m.potential(kind);
      for (int M : {2, 3, 6, 12}) {
        const double vmin = effective_potential_minimum(s, m.mu, M);
        for (double frac : {1e-6, 0.01, 0.3, 0.7, 0.99, 0.999999}) {
          const double E = vmin + frac * (s.C - vmin);
          const TurningPoints tp = turning_points(s, m.mu, M, E);
          const double scale = std::max(std::abs(E), s.B / tp.inner);
          CHECK(std::abs(effective_potential(s, m.mu, M, tp.inner) - E) < 1e-12 * scale);
          CHECK(std::abs(effective_potential(s, m.mu, M, tp.outer) - E) < 1e-12 * scale);
        }
      }
    }
  }
}
