#pragma once

// Numerical exact-quantization-rule pipeline for V(r) = A/r^2 - B/r + C:
//
//   int_ra^rb k(r) dr = N pi + Q_c,   N = n + 1,
//
// with the quantum correction Q_c taken from the ground-state Riccati
// solution phi0(r) = alpha1/r + alpha2. Every integral between turning
// points is evaluated by quadrature; the closed forms are kept alongside as
// cross-checks.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/potential.hpp"
#include "kratzer/quadrature.hpp"
#include "kratzer/spectrum.hpp"

namespace kratzer {

/// phi0(r) = alpha1 / r + alpha2, the nodeless logarithmic derivative R'/R.
struct GroundStateLogDeriv {
  double alpha1 = 0.0;  ///< Lambda + 1
  double alpha2 = 0.0;  ///< -mu B / ((Lambda+1) hbar^2), 1/Angstrom
  double E0 = 0.0;      ///< ground-state energy, eV

  double value(double r) const { return alpha1 / r + alpha2; }
  double derivative(double r) const { return -alpha1 / (r * r); }
};

inline GroundStateLogDeriv ground_state_logderiv(const PotentialSpec& spec, double mass, int M,
                                                 const PhysicalConstants& c = {}) {
  spec.validate();
  const double t = two_mu_over_hbar2(mass, c);
  const double lam = lambda_param(spec, mass, M, c);
  const double a1 = 1.0 + lam;
  return {a1, -0.5 * t * spec.B / a1, detail::level_from_n_tilde(spec.C, spec.B, t, a1)};
}

/// phi0' + phi0^2 + (2 mu/hbar^2)(E0 - V_eff(r)); zero for the exact solution.
inline double riccati_residual(const GroundStateLogDeriv& ld, const PotentialSpec& spec,
                               double mass, int M, double r, const PhysicalConstants& c = {}) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double t = two_mu_over_hbar2(mass, c);
  const double phi = ld.value(r);
  return ld.derivative(r) + phi * phi + t * (ld.E0 - effective_potential(spec, mass, M, r, c));
}

/// pi (Lambda - sqrt(Lambda (Lambda+1))), written without cancellation.
inline double quantum_correction_analytic(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("Lambda must be >= 0");
  if (lambda == 0.0) return 0.0;
  return -std::numbers::pi * lambda / (lambda + std::sqrt(lambda * (lambda + 1.0)));
}

/// Q_c = int phi0 k0' / phi0' dr between the turning points of E0. With
/// s = sqrt((r-ra)(rb-r)) and K = sqrt(-2mu(E0-C))/hbar the integrand is
///   K (alpha1 + alpha2 r) ((ra+rb) r - 2 ra rb) / (2 alpha1 r s).
inline double quantum_correction_numeric(const PotentialSpec& spec, double mass, int M,
                                         const QuadratureConfig& quad = {},
                                         const PhysicalConstants& c = {}) {
  const GroundStateLogDeriv ld = ground_state_logderiv(spec, mass, M, c);
  const TurningPoints tp = turning_points(spec, mass, M, ld.E0, c);
  const double t = two_mu_over_hbar2(mass, c);
  const double K = std::sqrt(-t * (ld.E0 - spec.C));
  const double sum = tp.inner + tp.outer;
  const double prod2 = 2.0 * tp.inner * tp.outer;
  auto f = [&](double r, double, double) {
    return K * (ld.alpha1 + ld.alpha2 * r) * (sum * r - prod2) / (2.0 * ld.alpha1 * r);
  };
  return quad::turning_point_integral(f, tp.inner, tp.outer, quad);
}

/// int_ra^rb k(r) dr with k = sqrt(-2mu(E-C)(r-ra)(rb-r)) / (hbar r).
inline double momentum_integral(const PotentialSpec& spec, double mass, int M, double E,
                                const QuadratureConfig& quad = {},
                                const PhysicalConstants& c = {}) {
  spec.validate();
  const TurningPoints tp = turning_points(spec, mass, M, E, c);
  const double t = two_mu_over_hbar2(mass, c);
  const double K = std::sqrt(-t * (E - spec.C));
  auto f = [&](double r, double x, double half) { return K * half * half * (1.0 - x * x) / r; };
  return quad::turning_point_integral(f, tp.inner, tp.outer, quad);
}

/// Closed form of the momentum integral: pi [B sqrt(t) / (2 sqrt(C-E)) - sqrt(Lambda(Lambda+1))].
inline double momentum_integral_closed(const PotentialSpec& spec, double mass, int M, double E,
                                       const PhysicalConstants& c = {}) {
  const TurningPoints tp = turning_points(spec, mass, M, E, c);  // window check only
  (void)tp;
  const double t = two_mu_over_hbar2(mass, c);
  const double g = centrifugal_coefficient(spec, mass, M, c);
  return std::numbers::pi *
         (spec.B * std::sqrt(t) / (2.0 * std::sqrt(spec.C - E)) - std::sqrt(g));
}

/// Solves int k dr = (n+1) pi + Q_c for E by bisection. Both sides come from
/// quadrature; the bracket is (min V_eff, C).
inline double solve_energy_eqr(const PotentialSpec& spec, double mass, int M, int n,
                               const QuadratureConfig& quad = {},
                               const PhysicalConstants& c = {}) {
  if (n < 0) throw DomainError("n must be >= 0");
  spec.validate();
  constexpr int kMaxIter = 200;
  const double target = (n + 1.0) * std::numbers::pi + quantum_correction_numeric(spec, mass, M, quad, c);
  auto mismatch = [&](double E) { return momentum_integral(spec, mass, M, E, quad, c) - target; };

  double lo = effective_potential_minimum(spec, mass, M, c);
  if (!std::isfinite(lo)) {
    // V_eff unbounded below: step down in units of the Coulomb energy scale.
    const double scale = 0.5 * two_mu_over_hbar2(mass, c) * spec.B * spec.B;
    double depth = scale;
    int it = 0;
    for (; it < kMaxIter && mismatch(spec.C - depth) >= 0.0; ++it) depth *= 2.0;
    if (it == kMaxIter) throw NumericalFailure("could not bracket the EQR root from below");
    lo = spec.C - depth;
  }
  double gap = 0.5 * (spec.C - lo);
  double hi = spec.C - gap;
  int it = 0;
  for (; it < kMaxIter && mismatch(hi) <= 0.0; ++it) {
    lo = hi;
    gap *= 0.5;
    hi = spec.C - gap;
  }
  if (it == kMaxIter || !(hi < spec.C)) throw NumericalFailure("could not bracket the EQR root");

  for (int i = 0; i < kMaxIter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = mismatch(mid);
    if (f == 0.0) return mid;
    (f < 0.0 ? lo : hi) = mid;
    if (hi - lo <= 1e-14 * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

/// The four turning-point integrals used to evaluate the momentum integral
/// and the quantum correction in closed form.
enum class AppendixIntegral {
  A1,  ///< int r / s dr
  A2,  ///< int 1 / (r s) dr
  A3,  ///< int 1 / s dr
  A4,  ///< int s / r dr
};

namespace detail {
inline void check_interval(double ra, double rb) {
  if (!(ra > 0.0) || !(rb > ra) || !std::isfinite(rb))
    throw DomainError("turning-point interval must satisfy 0 < ra < rb");
}
}  // namespace detail

inline double appendix_integral_closed(AppendixIntegral kind, double ra, double rb) {
  detail::check_interval(ra, rb);
  const double pi = std::numbers::pi;
  switch (kind) {
    case AppendixIntegral::A1: return 0.5 * pi * (ra + rb);
    case AppendixIntegral::A2: return pi / std::sqrt(ra * rb);
    case AppendixIntegral::A3: return pi;
    case AppendixIntegral::A4: {
      // (ra+rb)/2 - sqrt(ra rb) = (sqrt(rb) - sqrt(ra))^2 / 2
      const double d = (rb - ra) / (std::sqrt(rb) + std::sqrt(ra));
      return 0.5 * pi * d * d;
    }
  }
  throw DomainError("unknown appendix integral");
}

inline double appendix_integral_numeric(AppendixIntegral kind, double ra, double rb,
                                        const QuadratureConfig& quad = {}) {
  detail::check_interval(ra, rb);
  switch (kind) {
    case AppendixIntegral::A1:
      return quad::turning_point_integral([](double r, double, double) { return r; }, ra, rb, quad);
    case AppendixIntegral::A2:
      return quad::turning_point_integral([](double r, double, double) { return 1.0 / r; }, ra, rb,
                                          quad);
    case AppendixIntegral::A3:
      return quad::turning_point_integral([](double, double, double) { return 1.0; }, ra, rb, quad);
    case AppendixIntegral::A4:
      return quad::turning_point_integral(
          [](double r, double x, double half) { return half * half * (1.0 - x * x) / r; }, ra, rb,
          quad);
  }
  throw DomainError("unknown appendix integral");
}

}  // namespace kratzer
