#pragma once

// Normalized hyperradial wavefunctions
//
//   psi(r) = N rho^nu exp(-rho/2) L_n^(nu1)(rho),   rho = 2 kappa r,
//   N^2    = n! (2 kappa)^D / ((2n + nu1 + 1) Gamma(n + nu1 + 1)),
//
// normalized so that int_0^inf psi^2 r^(D-1) dr = 1. For molecular
// parameters nu1 runs into the thousands, so everything is carried in log
// space: N alone underflows long before psi does.

#include <algorithm>
#include <cmath>
#include <utility>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/potential.hpp"
#include "kratzer/quadrature.hpp"
#include "kratzer/special_functions.hpp"
#include "kratzer/spectrum.hpp"

namespace kratzer {

struct WavefunctionParams {
  QuantumState state;
  double kappa = 0.0;     ///< 1/Angstrom
  double tau = 0.0;
  double nu = 0.0;
  double nu1 = 0.0;       ///< Laguerre order, 2 nu + D - 2 = 2 Lambda + 1
  double nu2 = 0.0;       ///< (nu1 + 2) / 2
  double lambda = 0.0;
  double log_norm = 0.0;  ///< ln N, N in Angstrom^(-D/2)

  double norm() const { return std::exp(log_norm); }

  /// Upper end of the z = 2 kappa r integration range.
  double z_max() const {
    const double m = 2.0 * state.n + nu1 + 1.0;
    return 2.0 * m + 40.0 * std::sqrt(m) + 50.0;
  }
};

inline WavefunctionParams wavefunction_params(const PotentialSpec& spec, double mass,
                                              const QuantumState& state,
                                              const PhysicalConstants& c = {}) {
  spec.validate();
  state.validate();
  const EnergyLevel level = energy_level(spec, mass, state, c);
  if (!(level.energy < spec.C)) throw NoBoundState("state is not bound");
  const double t = two_mu_over_hbar2(mass, c);
  const double m2 = static_cast<double>(state.M() - 2);

  WavefunctionParams p;
  p.state = state;
  p.lambda = level.lambda;
  p.kappa = 0.5 * t * spec.B / level.n_tilde;
  p.tau = 0.5 * t * spec.B / p.kappa;
  p.nu1 = std::sqrt(m2 * m2 + 4.0 * t * spec.A);
  p.nu = 0.5 * (p.nu1 - (state.D - 2));
  p.nu2 = 0.5 * (p.nu1 + 2.0);
  const int n = state.n;
  const double alpha = p.nu1;
  p.log_norm = 0.5 * (log_gamma(n + 1.0) + state.D * std::log(2.0 * p.kappa) -
                      std::log(2.0 * n + alpha + 1.0) - log_gamma(n + alpha + 1.0));
  return p;
}

/// (sign, ln|psi(r)|); sign is 0 exactly at a node.
inline std::pair<int, double> hyperradial_log(const WavefunctionParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const double rho = 2.0 * p.kappa * r;
  const double L = assoc_laguerre(p.state.n, p.nu1, rho);
  if (L == 0.0) return {0, -HUGE_VAL};
  return {L > 0.0 ? 1 : -1, p.log_norm + p.nu * std::log(rho) - 0.5 * rho + std::log(std::abs(L))};
}

inline double eval_hyperradial(const WavefunctionParams& p, double r) {
  const auto [sign, lg] = hyperradial_log(p, r);
  return sign == 0 ? 0.0 : sign * std::exp(lg);
}

/// The same function arranged as [n!/((nu1+2n+1)(nu1+n)!)]^(1/2) (2 kappa)^nu2
/// r^nu e^(-kappa r) L_n^(nu1)(2 kappa r). Kept as a cross-check of the
/// normalization bookkeeping.
inline double eval_hyperradial_factored(const WavefunctionParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  const int n = p.state.n;
  const double L = assoc_laguerre(n, p.nu1, 2.0 * p.kappa * r);
  if (L == 0.0) return 0.0;
  const double lg = 0.5 * (log_gamma(n + 1.0) - std::log(p.nu1 + 2.0 * n + 1.0) -
                           log_gamma(p.nu1 + n + 1.0)) +
                    p.nu2 * std::log(2.0 * p.kappa) + p.nu * std::log(r) - p.kappa * r +
                    std::log(std::abs(L));
  return (L > 0.0 ? 1.0 : -1.0) * std::exp(lg);
}

namespace detail {
inline int panels_for(int node_count) { return std::max(1, node_count / 32); }
}  // namespace detail

/// int_0^inf psi^2 r^(D-1) dr by composite Gauss-Legendre in z = 2 kappa r on
/// [0, z_max]. The tail at z_max must be negligible.
inline double normalization_integral(const WavefunctionParams& p,
                                     const QuadratureConfig& quad = {512}) {
  quad.validate();
  const double two_kappa = 2.0 * p.kappa;
  const int D = p.state.D;
  auto integrand = [&](double z) {
    if (z <= 0.0) return 0.0;
    const double r = z / two_kappa;
    const auto [sign, lg] = hyperradial_log(p, r);
    if (sign == 0) return 0.0;
    return std::exp(2.0 * lg + (D - 1) * std::log(r) - std::log(two_kappa));
  };
  const double zmax = p.z_max();
  const double value = quad::composite_gauss_legendre(integrand, 0.0, zmax, detail::panels_for(quad.node_count));
  if (integrand(zmax) * zmax > 1e-14 * value)
    throw NumericalFailure("normalization integrand has not decayed at z_max");
  return value;
}

/// int_0^inf psi_a psi_b r^(D-1) dr for two states of the same dimension.
inline double overlap_integral(const WavefunctionParams& a, const WavefunctionParams& b,
                               const QuadratureConfig& quad = {1024}) {
  quad.validate();
  if (a.state.D != b.state.D) throw DomainError("overlap requires equal dimensions");
  const int D = a.state.D;
  const double rmax = std::max(a.z_max() / (2.0 * a.kappa), b.z_max() / (2.0 * b.kappa));
  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    const auto [sa, la] = hyperradial_log(a, r);
    const auto [sb, lb] = hyperradial_log(b, r);
    if (sa == 0 || sb == 0) return 0.0;
    return sa * sb * std::exp(la + lb + (D - 1) * std::log(r));
  };
  return quad::composite_gauss_legendre(integrand, 0.0, rmax, detail::panels_for(quad.node_count));
}

/// J_{n,alpha}^(1) = int_0^inf e^-z z^(alpha+1) [L_n^(alpha)(z)]^2 dz
///                 = (2n + alpha + 1) Gamma(alpha + n + 1) / Gamma(n + 1).
inline double coulomb_like_integral_closed(int n, double alpha) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(alpha > -1.0)) throw DomainError("alpha must be > -1");
  return (2.0 * n + alpha + 1.0) * std::exp(log_gamma(alpha + n + 1.0) - log_gamma(n + 1.0));
}

/// The general finite sum for J_{n,alpha}^(beta). Gamma(n-j-beta)/Gamma(-j-beta)
/// is the Pochhammer product (-j-beta)_n, so the pole structure that leaves
/// only j = n-1 and j = n at beta = 1 falls out without special-casing.
inline double coulomb_like_integral_series(int n, double alpha, double beta = 1.0) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (!(alpha > -1.0)) throw DomainError("alpha must be > -1");
  if (!(alpha + beta + 1.0 > 0.0)) throw DomainError("requires alpha + beta + 1 > 0");
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    double poch = 1.0;
    for (int i = 0; i < n; ++i) poch *= (-j - beta + i);
    if (poch == 0.0) continue;
    const double ratio = std::exp(log_gamma(alpha + beta + j + 1.0) - log_gamma(alpha + j + 1.0) -
                                  log_gamma(j + 1.0) - log_gamma(n - j + 1.0));
    sum += (j % 2 == 0 ? 1.0 : -1.0) * poch * ratio;
  }
  return std::exp(log_gamma(alpha + n + 1.0) - log_gamma(n + 1.0)) * sum;
}

}  // namespace kratzer
