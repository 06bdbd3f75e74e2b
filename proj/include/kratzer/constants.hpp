#pragma once

// Physical constants and the three unit conversions used throughout the
// library. Internal units: energies in eV, lengths in Angstrom, masses in amu.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "kratzer/errors.hpp"

namespace kratzer {

struct PhysicalConstants {
  /// hbar*c in eV*Angstrom. The tables were produced with this literal value.
  double hbar_c = 1973.29;
  /// Rest energy of one atomic mass unit in eV.
  double amu_c2 = 9.31494028e8;
  /// eV per cm^-1. When unset it is derived as 2*pi*hbar_c*1e-8.
  std::optional<double> ev_per_wavenumber;

  void validate() const {
    if (!(hbar_c > 0.0) || !std::isfinite(hbar_c))
      throw DomainError("hbar_c must be positive and finite");
    if (!(amu_c2 > 0.0) || !std::isfinite(amu_c2))
      throw DomainError("amu_c2 must be positive and finite");
    if (ev_per_wavenumber && (!(*ev_per_wavenumber > 0.0) || !std::isfinite(*ev_per_wavenumber)))
      throw DomainError("ev_per_wavenumber must be positive and finite");
  }

  double wavenumber_factor() const {
    // 1 cm = 1e8 Angstrom
    return ev_per_wavenumber ? *ev_per_wavenumber : 2.0 * std::numbers::pi * hbar_c * 1e-8;
  }

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

inline double amu_to_energy(double mass_amu, const PhysicalConstants& c = {}) {
  if (!(mass_amu > 0.0)) throw DomainError("mass must be positive");
  return mass_amu * c.amu_c2;
}

inline double wavenumber_to_ev(double wavenumber, const PhysicalConstants& c = {}) {
  if (!(wavenumber >= 0.0)) throw DomainError("wavenumber must be non-negative");
  return wavenumber * c.wavenumber_factor();
}

/// 2*mu/hbar^2 in 1/(eV*Angstrom^2).
inline double two_mu_over_hbar2(double mass_amu, const PhysicalConstants& c = {}) {
  return 2.0 * amu_to_energy(mass_amu, c) / (c.hbar_c * c.hbar_c);
}

}  // namespace kratzer
