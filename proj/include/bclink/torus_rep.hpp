#pragma once

// Closed forms for the (2, 2 ell) torus link L_ell: Alexander root locus,
// irreducible SU(2) representations with fixed meridional traces, and the
// resulting representation-count invariant h.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "bclink/angle.hpp"
#include "bclink/chebyshev.hpp"
#include "bclink/error.hpp"

namespace bclink::torus {

/// Default rejection band (radians) around the root lines for inexact angles.
inline constexpr double kRootTolerance = 1e-9;

/// Milnor's formula ((t1 t2)^|ell| - 1) / (t1 t2 - 1), continuously extended
/// by |ell| at t1 t2 = 1.
inline std::complex<double> alexander_eval(TorusIndex ell, std::complex<double> omega1,
                                           std::complex<double> omega2) {
  const std::complex<double> t = omega1 * omega2;
  const int n = ell.abs();
  if (std::abs(t - 1.0) < 1e-14) return {static_cast<double>(n), 0.0};
  return (std::pow(t, n) - 1.0) / (t - 1.0);
}

namespace detail {

// A line value v/pi (v = alpha1 + alpha2 or alpha1 - alpha2 + pi, both in
// (0, 2)) is on the root locus iff v |ell| / pi is an integer m != |ell|.
inline bool rational_on_roots(const Rational& over_pi, int abs_ell) {
  const Rational scaled = over_pi * Rational(abs_ell);
  return scaled.is_integer() && scaled.num() != abs_ell && scaled.num() > 0 && scaled.num() < 2 * abs_ell;
}

inline bool real_on_roots(double value, int abs_ell, double tol) {
  const double step = kPi / abs_ell;
  const double m = std::round(value / step);
  if (m <= 0.0 || m >= 2.0 * abs_ell || m == static_cast<double>(abs_ell)) return false;
  return std::abs(value - m * step) < tol;
}

}  // namespace detail

/// True iff Delta_{L_ell}(omega1^{+-1}, omega2^{+-1}) != 0 for all four sign
/// choices, i.e. alpha avoids the lines alpha1 + alpha2 = pi m/|ell| and
/// alpha1 - alpha2 + pi = pi m/|ell| with 0 < m < 2|ell|, m != |ell|.
inline bool is_defined(TorusIndex ell, const AnglePair& alpha, double tol = kRootTolerance) {
  const int n = ell.abs();
  if (alpha.is_exact()) {
    return !detail::rational_on_roots(*alpha.sum_over_pi(), n) &&
           !detail::rational_on_roots(*alpha.shifted_difference_over_pi(), n);
  }
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  return !detail::real_on_roots(a1 + a2, n, tol) && !detail::real_on_roots(a1 - a2 + kPi, n, tol);
}

inline void require_defined(TorusIndex ell, const AnglePair& alpha) {
  if (!is_defined(ell, alpha)) throw NotDefined("undefined: alpha on Alexander root locus");
}

struct PhiSolution {
  int m;
  double phi;
};

/// For each m in 1..|ell|-1 with cos(pi m/|ell|) in [cos(a1+a2), cos(a1-a2)],
/// the unique phi in (0, pi) solving
///   cos a1 cos a2 - sin a1 sin a2 cos phi = cos(pi m/|ell|).
inline std::vector<PhiSolution> solve_phi(TorusIndex ell, const AnglePair& alpha) {
  require_defined(ell, alpha);
  const int n = ell.abs();
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  const double lo = std::cos(a1 + a2);
  const double hi = std::cos(a1 - a2);
  const double cc = std::cos(a1) * std::cos(a2);
  const double ss = std::sin(a1) * std::sin(a2);

  std::vector<PhiSolution> out;
  for (int m = 1; m < n; ++m) {
    const double target = std::cos(kPi * m / n);
    if (target < lo || target > hi) continue;
    const double cos_phi = std::clamp((cc - target) / ss, -1.0, 1.0);
    out.push_back({m, std::acos(cos_phi)});
  }
  return out;
}

/// Number of conjugacy classes of irreducible representations.
inline int rep_count(TorusIndex ell, const AnglePair& alpha) {
  return static_cast<int>(solve_phi(ell, alpha).size());
}

/// h_{L_ell}(alpha) = sign(ell) * rep_count.
inline int h_invariant(TorusIndex ell, const AnglePair& alpha) { return ell.sign() * rep_count(ell, alpha); }

struct TracePoint {
  int eps1;
  int eps2;
  std::complex<double> omega1;
  std::complex<double> omega2;
};

using TraceSet = std::array<TracePoint, 4>;

/// S(alpha) = {(omega1^{e1}, omega2^{e2})}, one entry per sign vector, in the
/// order (+,+), (+,-), (-,+), (-,-).
inline TraceSet trace_set(const AnglePair& alpha) {
  const auto w1 = alpha.omega1();
  const auto w2 = alpha.omega2();
  return {{{1, 1, w1, w2}, {1, -1, w1, std::conj(w2)}, {-1, 1, std::conj(w1), w2},
           {-1, -1, std::conj(w1), std::conj(w2)}}};
}

/// S_j(alpha): entries of S(alpha) with eps_j = +1 (j = 1 or 2).
inline std::vector<TracePoint> trace_subset(const TraceSet& s, int j) {
  if (j != 1 && j != 2) throw DomainError("trace subset index must be 1 or 2");
  std::vector<TracePoint> out;
  for (const auto& p : s) {
    if ((j == 1 ? p.eps1 : p.eps2) == 1) out.push_back(p);
  }
  return out;
}

/// Conway potential of L_ell at (e^{i alpha1}, e^{i alpha2}), normalized as
/// U_{ell-1}(cos(alpha1 + alpha2)). Only ell > 0.
inline double conway_potential_torus(TorusIndex ell, const AnglePair& alpha) {
  if (ell.value() < 0) throw PositiveOnly("Conway potential normalization is fixed for ell > 0 only");
  return cheb::eval_U(ell.value() - 1, std::cos(alpha.sum()));
}

/// Exact (for rational angles) test of conway_potential_torus == 0: happens
/// iff alpha1 + alpha2 = j pi / ell with j != ell.
inline bool conway_potential_vanishes(TorusIndex ell, const AnglePair& alpha, double tol = kRootTolerance) {
  if (ell.value() < 0) throw PositiveOnly("Conway potential normalization is fixed for ell > 0 only");
  if (const auto s = alpha.sum_over_pi()) return detail::rational_on_roots(*s, ell.value());
  return detail::real_on_roots(alpha.sum(), ell.value(), tol);
}

}  // namespace bclink::torus
