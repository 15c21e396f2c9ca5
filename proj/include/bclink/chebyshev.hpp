#pragma once

// Chebyshev polynomials of the first and second kind.
//
// On [-1, 1] both kinds are evaluated through their trigonometric definitions
//   T_m(cos psi) = cos(m psi),   U_m(cos psi) = sin((m+1) psi) / sin(psi),
// rather than the three-term recurrence. Outside [-1, 1] the hyperbolic
// forms are used.

#include <cmath>
#include <string>
#include <vector>

#include "bclink/angle.hpp"
#include "bclink/error.hpp"

namespace bclink::cheb {

/// Polynomial degree, capped at 10^6.
class ChebDegree {
 public:
  static constexpr long kMax = 1'000'000;

  ChebDegree(long m) : m_(m) {  // NOLINT: implicit by intent
    if (m < 0 || m > kMax) throw DomainError("Chebyshev degree " + std::to_string(m) + " out of range");
  }

  long value() const { return m_; }

 private:
  long m_;
};

inline double parity_sign(long m) { return (m % 2 == 0) ? 1.0 : -1.0; }

/// T_m(x)
inline double eval_T(ChebDegree degree, double x) {
  const auto m = static_cast<double>(degree.value());
  if (x >= -1.0 && x <= 1.0) return std::cos(m * std::acos(x));
  if (x > 1.0) return std::cosh(m * std::acosh(x));
  return parity_sign(degree.value()) * std::cosh(m * std::acosh(-x));
}

/// U_m(x), with the removable singularities at x = +-1 filled by +-(m+1).
inline double eval_U(ChebDegree degree, double x) {
  const long m = degree.value();
  const auto m1 = static_cast<double>(m + 1);
  if (x == 1.0) return m1;
  if (x == -1.0) return parity_sign(m) * m1;
  if (x > -1.0 && x < 1.0) {
    const double psi = std::acos(x);
    const double s = std::sin(psi);
    if (s == 0.0) return x > 0 ? m1 : parity_sign(m) * m1;
    return std::sin(m1 * psi) / s;
  }
  const double t = std::acosh(std::abs(x));
  const double v = std::sinh(m1 * t) / std::sinh(t);
  return x > 0 ? v : parity_sign(m) * v;
}

/// T'_m(x) = m U_{m-1}(x).
inline double eval_T_derivative(ChebDegree degree, double x) {
  const long m = degree.value();
  if (m == 0) return 0.0;
  return static_cast<double>(m) * eval_U(m - 1, x);
}

/// The m roots cos(k pi / (m+1)), k = 1..m, in descending order.
inline std::vector<double> roots_U(ChebDegree degree) {
  const long m = degree.value();
  if (m < 1) throw DomainError("U_0 has no roots");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (long k = 1; k <= m; ++k) {
    roots.push_back(std::cos(kPi * static_cast<double>(k) / static_cast<double>(m + 1)));
  }
  return roots;
}

}  // namespace bclink::cheb
