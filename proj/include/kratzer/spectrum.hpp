#pragma once

#include <vector>

#include "kratzer/constants.hpp"
#include "kratzer/potential.hpp"

namespace kratzer {

/// Largest quantum numbers / dimension the tables and tests cover. Larger
/// values are still computed.
inline constexpr int kMaxSupportedQuantum = 200;
inline constexpr int kMinDimension = 2;
inline constexpr int kMaxSupportedDimension = 12;

struct EnergyLevel {
  QuantumState state;
  double energy = 0.0;   ///< eV
  double lambda = 0.0;   ///< Lambda(M)
  double n_tilde = 0.0;  ///< n + 1 + Lambda
};

namespace detail {
// Shared by the spectrum and the EQR ground state so both are bit-identical.
inline double level_from_n_tilde(double C, double B, double t, double n_tilde) {
  const double q = B / n_tilde;
  return C - 0.25 * t * (q * q);
}
}  // namespace detail

/// Closed-form bound-state energy E = C - (mu / 2 hbar^2) (B / n~)^2.
inline EnergyLevel energy_level(const PotentialSpec& spec, double mass, const QuantumState& state,
                                const PhysicalConstants& c = {}) {
  spec.validate();
  state.validate();
  const double t = two_mu_over_hbar2(mass, c);
  const double lam = lambda_param(spec, mass, state.M(), c);
  const double n_tilde = static_cast<double>(state.n) + 1.0 + lam;
  return {state, detail::level_from_n_tilde(spec.C, spec.B, t, n_tilde), lam, n_tilde};
}

inline double kratzer_energy(double De, double re, double mass, const QuantumState& state,
                             const PhysicalConstants& c = {}) {
  return energy_level(from_kratzer(De, re), mass, state, c).energy;
}

inline double modified_kratzer_energy(double De, double re, double mass, const QuantumState& state,
                                      const PhysicalConstants& c = {}) {
  return energy_level(from_modified_kratzer(De, re), mass, state, c).energy;
}

/// Every state sharing (n, M = D + 2l) with `state` whose dimension lies in
/// [d_min, d_max], ordered by increasing D. Includes `state` itself when in
/// range.
inline std::vector<QuantumState> degenerate_partners(const QuantumState& state, int d_min,
                                                     int d_max) {
  state.validate();
  if (d_min < kMinDimension) throw DomainError("dimension range must start at D >= 2");
  if (d_max < d_min) throw DomainError("empty dimension range");
  std::vector<QuantumState> out;
  const int M = state.M();
  for (int D = (d_min % 2 == M % 2) ? d_min : d_min + 1; D <= d_max && D <= M; D += 2) {
    out.push_back({state.n, (M - D) / 2, D});
  }
  return out;
}

}  // namespace kratzer
