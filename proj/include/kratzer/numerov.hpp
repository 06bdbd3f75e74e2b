#pragma once

// Independent eigenvalue oracle: Numerov shooting on the reduced radial
// equation R'' = -(2mu/hbar^2)(E - V_eff(r)) R on a uniform grid.
//
// Only the potential itself (V_eff, its analytic minimum and the classical
// turning points) is used. Energies come from node counting plus
// log-derivative matching at the outer classical turning point; nothing
// here depends on the closed-form spectrum, the EQR pipeline or the
// analytic wavefunctions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "kratzer/constants.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/potential.hpp"

namespace kratzer {

struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int point_count = 0;

  double spacing() const { return (r_max - r_min) / (point_count - 1); }
  double at(int i) const { return r_min + i * spacing(); }

  void validate() const {
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("grid requires 0 < r_min < r_max");
    if (point_count < 1000) throw DomainError("grid requires at least 1000 points");
  }

  /// Same range with half the resolution.
  RadialGrid coarsened() const { return {r_min, r_max, (point_count - 1) / 2 + 1}; }
  /// Same range with twice the resolution.
  RadialGrid refined() const { return {r_min, r_max, 2 * (point_count - 1) + 1}; }
};

/// Strict sign changes in `samples`, ignoring entries with magnitude below
/// 1e-12 of the largest one.
inline int node_count(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("node_count needs at least one sample");
  double peak = 0.0;
  for (double s : samples) peak = std::max(peak, std::abs(s));
  const double floor = 1e-12 * peak;
  int nodes = 0;
  int last = 0;
  for (double s : samples) {
    if (std::abs(s) <= floor) continue;
    const int sign = s > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++nodes;
    last = sign;
  }
  return nodes;
}

struct NumerovOptions {
  int point_count = 20000;
  int scan_steps = 400;
  int scan_point_count = 2000;
  /// WKB decay exponent int kappa dr required in each forbidden tail.
  double tail_exponent = 40.0;
  /// Maximum tolerated |E(h) - E(2h)| relative to |E| before the grid is
  /// declared too coarse.
  double richardson_tol = 1e-7;
  bool richardson_check = true;
};

namespace detail {

class NumerovShooter {
 public:
  NumerovShooter(const PotentialSpec& spec, double mass, int M, const PhysicalConstants& c)
      : spec_(spec),
        t_(two_mu_over_hbar2(mass, c)),
        g_(centrifugal_coefficient(spec, mass, M, c)),
        s_(lambda_param(spec, mass, M, c) + 1.0),
        v_min_(effective_potential_minimum(spec, mass, M, c)),
        r_star_(effective_potential_argmin(spec, mass, M, c)) {}

  double veff(double r) const { return g_ / (t_ * r * r) - spec_.B / r + spec_.C; }
  double C() const { return spec_.C; }
  double v_min() const { return v_min_; }

  /// Natural length: the V_eff minimum, or the Bohr-like radius hbar^2/(mu B).
  double length_scale() const { return r_star_ > 0.0 ? r_star_ : 2.0 / (t_ * spec_.B); }
  /// Natural energy: the Coulomb-like scale mu B^2 / hbar^2.
  double energy_scale() const { return 0.5 * t_ * spec_.B * spec_.B; }

  /// Outer (and inner, 0 when absent) turning points at E < C.
  std::pair<double, double> turning(double E) const {
    const double eps = E - spec_.C;
    const double B = spec_.B;
    const double disc = std::max(0.0, B * B + 4.0 * eps * g_ / t_);
    const double outer = (B + std::sqrt(disc)) / (-2.0 * eps);
    const double inner = g_ > 0.0 ? (-g_ / (t_ * eps)) / outer : 0.0;
    return {inner, outer};
  }

  double kappa(double r, double E) const { return std::sqrt(std::max(0.0, t_ * (veff(r) - E))); }

  /// Grid covering the classically allowed region at E with forbidden
  /// tails of WKB exponent `tail`.
  RadialGrid grid_for(double E, int points, double tail) const {
    const auto [ra, rb] = turning(E);
    const double floor = 1e-3 * length_scale();
    double r_min = floor;
    if (ra > floor) {
      double r = ra, acc = 0.0, k_prev = 0.0;
      while (acc < tail && r > floor) {
        const double next = r * 0.999;
        const double k_next = kappa(next, E);
        acc += 0.5 * (k_prev + k_next) * (r - next);
        k_prev = k_next;
        r = next;
      }
      r_min = std::max(r, floor);
    }
    double r = rb, acc = 0.0, k_prev = 0.0;
    const double cap = 12.0 * rb;
    while (acc < tail && r < cap) {
      const double next = r * 1.001;
      const double k_next = kappa(next, E);
      acc += 0.5 * (k_prev + k_next) * (next - r);
      k_prev = k_next;
      r = next;
    }
    const double r_max = std::min(r, cap);
    // Keep h^2 |Q| / 12 small at the first grid point.
    const double stable = 3.0 * std::sqrt(std::abs(g_)) * (r_max - r_min) / (points - 1);
    return {std::max(r_min, stable), r_max, points};
  }

  struct Shot {
    bool allowed = false;  ///< some grid point is classically allowed
    int nodes = 0;         ///< nodes of the outward solution up to the match point
    double jump = 0.0;     ///< log-derivative mismatch times y at the match point
  };

  /// Outward solution over the whole grid (rescaled against overflow).
  std::vector<double> outward(const RadialGrid& grid, double E, std::vector<double>& f) const {
    const int N = grid.point_count;
    const double h = grid.spacing();
    f.resize(N);
    for (int i = 0; i < N; ++i) f[i] = 1.0 + h * h * t_ * (E - veff(grid.at(i))) / 12.0;
    std::vector<double> y(N);
    const double r0 = grid.at(0), r1 = grid.at(1);
    // Regular solution r^s (1 + c1 r) near the origin, s = Lambda + 1.
    const double c1 = -0.5 * t_ * spec_.B / s_;
    double ratio = std::exp(s_ * std::log(r1 / r0));
    if (std::abs(c1 * r1) < 0.1) ratio *= (1.0 + c1 * r1) / (1.0 + c1 * r0);
    y[0] = 1e-30;
    y[1] = y[0] * ratio;
    for (int i = 1; i + 1 < N; ++i) {
      y[i + 1] = ((12.0 - 10.0 * f[i]) * y[i] - f[i - 1] * y[i - 1]) / f[i + 1];
      if (std::abs(y[i + 1]) > 1e200) {
        for (int j = 0; j <= i + 1; ++j) y[j] *= 1e-200;
      }
    }
    return y;
  }

  Shot shoot(const RadialGrid& grid, double E) const {
    Shot shot;
    const int N = grid.point_count;
    std::vector<double> f;
    std::vector<double> y = outward(grid, E, f);
    int icl = -1;
    for (int i = N - 1; i >= 0; --i) {
      if (f[i] >= 1.0) {
        icl = i;
        break;
      }
    }
    if (icl < 0) return shot;
    shot.allowed = true;
    if (icl < 2 || icl > N - 3) {
      // Match point at the grid edge: the energy is out of reach of this grid.
      shot.nodes = std::numeric_limits<int>::max();
      return shot;
    }
    shot.nodes = node_count(std::span<const double>(y.data(), icl + 1));

    std::vector<double> yin(N, 0.0);
    const double h = grid.spacing();
    yin[N - 1] = 1e-30;
    yin[N - 2] = yin[N - 1] * std::exp(h * kappa(grid.at(N - 1), E));
    for (int i = N - 2; i > icl; --i) {
      yin[i - 1] = ((12.0 - 10.0 * f[i]) * yin[i] - f[i + 1] * yin[i + 1]) / f[i - 1];
      if (std::abs(yin[i - 1]) > 1e200) {
        for (int j = i - 1; j < N; ++j) yin[j] *= 1e-200;
      }
    }
    const double scale = y[icl] / yin[icl];
    const double y_next = yin[icl + 1] * scale;
    shot.jump = (f[icl - 1] * y[icl - 1] + f[icl + 1] * y_next + (10.0 * f[icl] - 12.0) * y[icl]) /
                h * y[icl];
    return shot;
  }

  /// True when E lies above the n-node eigenvalue on this grid.
  bool above(const RadialGrid& grid, double E, int n) const {
    const Shot s = shoot(grid, E);
    if (!s.allowed) return false;
    if (s.nodes != n) return s.nodes > n;
    return s.jump > 0.0;
  }

  /// Eigenvalues below E, counted from the nodes of the outward solution
  /// over the full grid.
  int states_below(double E, int points, double tail) const {
    const RadialGrid grid = grid_for(E, points, tail);
    std::vector<double> f;
    const std::vector<double> y = outward(grid, E, f);
    // The divergent tail dwarfs the well, so no magnitude floor here.
    int nodes = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
      if ((y[i] > 0.0 && y[i - 1] < 0.0) || (y[i] < 0.0 && y[i - 1] > 0.0)) ++nodes;
    return nodes;
  }

  /// Lower end of the energy search window.
  double energy_floor(int points, double tail) const {
    if (std::isfinite(v_min_)) return v_min_ + 1e-12 * std::max(1.0, std::abs(v_min_));
    double depth = energy_scale();
    for (int it = 0; it < 200; ++it, depth *= 2.0) {
      const double E = spec_.C - depth;
      const RadialGrid grid = grid_for(E, points, tail);
      if (states_below(E, points, tail) == 0 && !above(grid, E, 0)) return E;
    }
    throw StateNotFound("could not find an energy below the ground state");
  }

 private:
  PotentialSpec spec_;
  double t_;
  double g_;
  double s_;
  double v_min_;
  double r_star_;
};

}  // namespace detail

/// Default grid for the n-node state: a coarse node-count scan over
/// (min V_eff, C) locates an energy just above the state, and the grid
/// covers its allowed region plus decaying tails.
inline RadialGrid numerov_default_grid(const PotentialSpec& spec, double mass, int M, int n,
                                       const NumerovOptions& opt = {},
                                       const PhysicalConstants& c = {}) {
  spec.validate();
  if (n < 0) throw DomainError("n must be >= 0");
  const detail::NumerovShooter sh(spec, mass, M, c);
  const double lo = sh.energy_floor(opt.scan_point_count, opt.tail_exponent);
  const double step = (sh.C() - lo) / opt.scan_steps;
  for (int k = 1; k < opt.scan_steps; ++k) {
    const double E = lo + k * step;
    if (sh.states_below(E, opt.scan_point_count, opt.tail_exponent) >= n + 1)
      return sh.grid_for(E, opt.point_count, opt.tail_exponent);
  }
  throw StateNotFound("no state with the requested node count below the dissociation limit");
}

namespace detail {
inline double numerov_eigenvalue(const NumerovShooter& sh, const RadialGrid& grid, int n,
                                 const NumerovOptions& opt) {
  const double floor = sh.energy_floor(opt.scan_point_count, opt.tail_exponent);
  const double step = (sh.C() - floor) / opt.scan_steps;
  double lo = floor, hi = floor;
  bool found = false;
  for (int k = 1; k < opt.scan_steps; ++k) {
    hi = floor + k * step;
    if (sh.above(grid, hi, n)) {
      found = true;
      break;
    }
    lo = hi;
  }
  if (!found || sh.above(grid, lo, n)) throw StateNotFound("could not bracket the requested state");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (sh.above(grid, mid, n) ? hi : lo) = mid;
    if (hi - lo <= 1e-14 * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}
}  // namespace detail

/// Eigenvalue of the state with n radial nodes on an explicit grid. With
/// `opt.richardson_check` the solve is repeated on the half-resolution grid
/// and NumericalFailure is raised when the two disagree beyond
/// `opt.richardson_tol`.
inline double solve_numerov(const PotentialSpec& spec, double mass, int M, int n,
                            const RadialGrid& grid, const NumerovOptions& opt = {},
                            const PhysicalConstants& c = {}) {
  spec.validate();
  grid.validate();
  if (n < 0) throw DomainError("n must be >= 0");
  const detail::NumerovShooter sh(spec, mass, M, c);
  const double E = detail::numerov_eigenvalue(sh, grid, n, opt);
  if (opt.richardson_check) {
    const double E_coarse = detail::numerov_eigenvalue(sh, grid.coarsened(), n, opt);
    if (std::abs(E - E_coarse) > opt.richardson_tol * std::abs(E))
      throw NumericalFailure("Numerov grid too coarse: halving the resolution moved E by " +
                             std::to_string(std::abs(E - E_coarse)) + " eV");
  }
  return E;
}

/// Default-grid solve. The grid is refined (up to 8x) while the Richardson
/// check fails.
inline double solve_numerov(const PotentialSpec& spec, double mass, int M, int n,
                            const NumerovOptions& opt = {}, const PhysicalConstants& c = {}) {
  RadialGrid grid = numerov_default_grid(spec, mass, M, n, opt, c);
  for (int level = 0;; ++level) {
    try {
      return solve_numerov(spec, mass, M, n, grid, opt, c);
    } catch (const NumericalFailure&) {
      if (level == 3) throw;
      grid = grid.refined();
    }
  }
}

}  // namespace kratzer
