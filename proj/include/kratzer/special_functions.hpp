#pragma once

#include <cmath>
#include <string>

#include "kratzer/errors.hpp"

namespace kratzer {

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return std::lgamma(x);
}

/// Generalized Laguerre polynomial L_n^(alpha)(z) by the upward three-term
/// recurrence (k+1) L_{k+1} = (2k+1+alpha-z) L_k - (k+alpha) L_{k-1}.
inline double assoc_laguerre(int n, double alpha, double z) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (!(alpha > -1.0)) throw DomainError("Laguerre order alpha must be > -1");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - z;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Kummer's confluent hypergeometric function 1F1(a; b; z). Terminates to
/// a polynomial when a is a non-positive integer; otherwise sums the power
/// series to 1e-16 relative. Terms are accumulated in long double because
/// the terminating series alternates.
inline double kummer_1f1(double a, double b, double z) {
  const double b_round = std::round(b);
  if (b_round <= 0.0 && std::abs(b - b_round) < 1e-12)
    throw DomainError("1F1 is undefined for b at a non-positive integer");
  if (!(z >= 0.0)) throw DomainError("1F1 is implemented for z >= 0");

  const double a_round = std::round(a);
  if (a_round <= 0.0 && std::abs(a - a_round) < 1e-10) {
    const int degree = static_cast<int>(-a_round);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < degree; ++k) {
      term *= (a_round + k) / (static_cast<long double>(b) + k) * z / (k + 1.0L);
      sum += term;
    }
    return static_cast<double>(sum);
  }

  constexpr int kMaxTerms = 100000;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > std::abs(a) + z) return sum;
  }
  throw NumericalFailure("1F1 power series did not converge");
}

}  // namespace kratzer
