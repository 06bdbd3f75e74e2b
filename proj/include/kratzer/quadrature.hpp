#pragma once

// Quadrature rules for integrals with inverse-square-root endpoint
// singularities between two turning points, plus composite Gauss-Legendre
// for smooth integrands on finite intervals.
//
// With r = (ra+rb)/2 + (rb-ra)/2 * x the weight 1/sqrt((r-ra)(rb-r)) dr
// becomes dx/sqrt(1-x^2), so
//   int_ra^rb f(r) / sqrt((r-ra)(rb-r)) dr = int_-1^1 f(r(x)) / sqrt(1-x^2) dx.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "kratzer/errors.hpp"

namespace kratzer {

enum class QuadratureKind { chebyshev_gauss, tanh_sinh };

struct QuadratureConfig {
  int node_count = 64;
  QuadratureKind kind = QuadratureKind::chebyshev_gauss;

  void validate() const {
    if (node_count < 16) throw DomainError("quadrature node_count must be >= 16");
  }
};

inline const char* to_string(QuadratureKind k) {
  return k == QuadratureKind::chebyshev_gauss ? "chebyshev-gauss" : "tanh-sinh";
}

namespace quad {

/// int_-1^1 g(x)/sqrt(1-x^2) dx with the N-point Gauss-Chebyshev rule
/// (exact for polynomial g of degree <= 2N-1).
template <class G>
double chebyshev_first_kind(G&& g, int n) {
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += g(std::cos((2.0 * k - 1.0) * pi / (2.0 * n)));
  return pi * sum / n;
}

/// The same weighted integral by double-exponential (tanh-sinh) quadrature.
/// With x = tanh(pi/2 sinh t) the weight dx/sqrt(1-x^2) collapses to
/// (pi/2) cosh t / cosh(pi/2 sinh t) dt.
template <class G>
double tanh_sinh_first_kind(G&& g, int n) {
  constexpr double t_max = 4.5;
  const double h = 2.0 * t_max / (n - 1);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = -t_max + k * h;
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double w = 0.5 * std::numbers::pi * std::cosh(t) / std::cosh(u);
    if (w == 0.0) continue;
    sum += w * g(std::tanh(u));
  }
  return h * sum;
}

template <class G>
double first_kind(G&& g, int n, QuadratureKind kind) {
  return kind == QuadratureKind::chebyshev_gauss ? chebyshev_first_kind(g, n)
                                                 : tanh_sinh_first_kind(g, n);
}

/// Fixed-order rule for int_ra^rb f(r) / sqrt((r-ra)(rb-r)) dr.
template <class F>
double turning_point_integral_fixed(F&& f, double ra, double rb, int n, QuadratureKind kind) {
  const double mid = 0.5 * (ra + rb);
  const double half = 0.5 * (rb - ra);
  return first_kind([&](double x) { return f(mid + half * x, x, half); }, n, kind);
}

/// Adaptive driver: doubles the node count from `cfg.node_count` until two
/// successive results agree to 1e-14 relative. Throws NumericalFailure when
/// the doubling stops converging and the last change still exceeds
/// `failure_tol` (absolute, scaled by max(1, |I|)).
///
/// `f(r, x, half)` receives the physical radius, the reduced coordinate and
/// the half width so integrands can form (r-ra)(rb-r) = half^2 (1-x^2)
/// without cancellation.
template <class F>
double turning_point_integral(F&& f, double ra, double rb, const QuadratureConfig& cfg,
                              double failure_tol = 1e-9) {
  cfg.validate();
  if (!(rb >= ra)) throw DomainError("invalid integration interval");
  constexpr int kMaxNodes = 1 << 20;
  int n = cfg.node_count;
  double prev = turning_point_integral_fixed(f, ra, rb, n, cfg.kind);
  for (;;) {
    const int next = 2 * n;
    const double cur = turning_point_integral_fixed(f, ra, rb, next, cfg.kind);
    if (!std::isfinite(cur)) throw NumericalFailure("non-finite quadrature result");
    const double scale = std::max(1.0, std::abs(cur));
    const double change = std::abs(cur - prev);
    if (change <= 1e-14 * scale) return cur;
    if (next >= kMaxNodes) {
      if (change <= failure_tol * scale) return cur;
      throw NumericalFailure("quadrature did not converge: last doubling changed the result by " +
                             std::to_string(change));
    }
    prev = cur;
    n = next;
  }
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

/// Composite Gauss-Legendre with `panels` equal panels of `order` nodes each.
template <class F>
double composite_gauss_legendre(F&& f, double a, double b, int panels, int order = 32) {
  if (panels < 1) throw DomainError("panel count must be >= 1");
  static thread_local std::pair<std::vector<double>, std::vector<double>> rule;
  if (static_cast<int>(rule.first.size()) != order) rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    double s = 0.0;
    for (int k = 0; k < order; ++k) s += rule.second[k] * f(mid + 0.5 * width * rule.first[k]);
    sum += 0.5 * width * s;
  }
  return sum;
}

}  // namespace quad
}  // namespace kratzer
