#pragma once

// Kratzer-family potentials in the normal form V(r) = A/r^2 - B/r + C and
// the centrifugal-augmented effective potential of the reduced radial
// equation in D dimensions.

#include <cmath>
#include <limits>
#include <string>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"

namespace kratzer {

struct PotentialSpec {
  double A = 0.0;  ///< eV*Angstrom^2
  double B = 0.0;  ///< eV*Angstrom
  double C = 0.0;  ///< eV

  void validate() const {
    if (!(A >= 0.0) || !std::isfinite(A)) throw DomainError("potential A must be >= 0");
    if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("potential B must be > 0");
    if (!std::isfinite(C)) throw DomainError("potential C must be finite");
  }

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

/// Quantum numbers of a hyperradial state. The grand index M = D + 2l is
/// always derived, never stored.
struct QuantumState {
  int n = 0;
  int l = 0;
  int D = 3;

  constexpr int M() const noexcept { return D + 2 * l; }

  void validate() const {
    if (n < 0) throw DomainError("n must be >= 0");
    if (l < 0) throw DomainError("l must be >= 0");
    if (D < 2) throw DomainError("dimension D must be >= 2");
  }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

inline PotentialSpec from_kratzer(double De, double re) {
  if (!(De > 0.0)) throw DomainError("De must be positive");
  if (!(re > 0.0)) throw DomainError("re must be positive");
  return {De * re * re, 2.0 * De * re, 0.0};
}

/// Kratzer potential shifted up by De so that it vanishes at r = re.
inline PotentialSpec from_modified_kratzer(double De, double re) {
  PotentialSpec s = from_kratzer(De, re);
  s.C = De;
  return s;
}

namespace detail {
inline void check_grand_index(int M) {
  if (M < 2) throw DomainError("grand index M = D + 2l must be >= 2");
}
}  // namespace detail

/// Lambda such that Lambda(Lambda+1) hbar^2 = 2 mu A + ((M-2)^2 - 1) hbar^2 / 4,
/// taking the root with Lambda >= -1/2.
inline double lambda_param(const PotentialSpec& spec, double mass, int M,
                           const PhysicalConstants& c = {}) {
  detail::check_grand_index(M);
  const double t = two_mu_over_hbar2(mass, c);
  const double m2 = static_cast<double>(M - 2);
  return 0.5 * (-1.0 + std::sqrt(m2 * m2 + 4.0 * t * spec.A));
}

/// Lambda(Lambda+1): the dimensionless coefficient of the 1/r^2 term in
/// units of hbar^2/(2 mu). Negative only for A = 0, M = 2.
inline double centrifugal_coefficient(const PotentialSpec& spec, double mass, int M,
                                      const PhysicalConstants& c = {}) {
  const double lam = lambda_param(spec, mass, M, c);
  return lam * (lam + 1.0);
}

inline double effective_potential(const PotentialSpec& spec, double mass, int M, double r,
                                  const PhysicalConstants& c = {}) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double t = two_mu_over_hbar2(mass, c);
  const double g = centrifugal_coefficient(spec, mass, M, c);
  return g / (t * r * r) - spec.B / r + spec.C;
}

/// Bottom of V_eff from the vertex of the quadratic in 1/r. -inf when the
/// centrifugal coefficient is not positive (V_eff unbounded below).
inline double effective_potential_minimum(const PotentialSpec& spec, double mass, int M,
                                          const PhysicalConstants& c = {}) {
  const double t = two_mu_over_hbar2(mass, c);
  const double g = centrifugal_coefficient(spec, mass, M, c);
  if (!(g > 0.0)) return -std::numeric_limits<double>::infinity();
  return spec.C - t * spec.B * spec.B / (4.0 * g);
}

/// Radius of the V_eff minimum, 2g/(tB); zero when g <= 0.
inline double effective_potential_argmin(const PotentialSpec& spec, double mass, int M,
                                         const PhysicalConstants& c = {}) {
  const double t = two_mu_over_hbar2(mass, c);
  const double g = centrifugal_coefficient(spec, mass, M, c);
  return g > 0.0 ? 2.0 * g / (t * spec.B) : 0.0;
}

struct TurningPoints {
  double inner = 0.0;  ///< r_a
  double outer = 0.0;  ///< r_b
};

/// Classical turning points V_eff(r) = E. The larger root is formed without
/// cancellation and the smaller one from the root product.
inline TurningPoints turning_points(const PotentialSpec& spec, double mass, int M, double E,
                                   const PhysicalConstants& c = {}) {
  const double eps = E - spec.C;
  if (!(eps < 0.0)) throw NoBoundState("energy is not below the dissociation limit C");
  const double t = two_mu_over_hbar2(mass, c);
  const double g = centrifugal_coefficient(spec, mass, M, c);
  if (g < 0.0) throw NoClassicalRegion("attractive 1/r^2 term: no inner turning point");
  const double B = spec.B;
  double disc = B * B + 4.0 * eps * g / t;
  if (disc < 0.0) {
    if (disc < -1e-12 * B * B)
      throw NoClassicalRegion("energy lies below the minimum of the effective potential");
    disc = 0.0;
  }
  const double outer = (B + std::sqrt(disc)) / (-2.0 * eps);
  const double product = -g / (t * eps);
  return {product / outer, outer};
}

}  // namespace kratzer
