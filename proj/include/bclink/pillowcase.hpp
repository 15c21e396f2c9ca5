#pragma once

// The pillowcase for two-strand braids and the curves Lambda (diagonal) and
// Gamma (graph of beta = sigma_1^{2 ell}) inside it.
//
// Coordinates: after conjugation X2 = e^{alpha2 i} and X1 = e^{alpha1 P1} with
// P1 = cos(phi) i + sin(phi) j. The admissible Q1 (Y1 = e^{alpha1 Q1}) form
// the circle cut from the unit sphere by the plane n . Q1 = d, and theta is
// the angle on that circle measured from P1. Lambda is theta = 0.
//
// Two independent routes give cos(theta) along Gamma:
//   quaternion path  explicit conjugation Q1 = Z P1 Z^{-1}, Z = (X1 X2)^ell,
//   chebyshev path   cos(theta) = T_{2 ell}(cos a1 cos a2 - cos(phi) sin a1 sin a2).

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "bclink/angle.hpp"
#include "bclink/chebyshev.hpp"
#include "bclink/error.hpp"
#include "bclink/format.hpp"
#include "bclink/su2.hpp"
#include "bclink/torus_rep.hpp"
#include "bclink/vec3.hpp"

namespace bclink::pillow {

using su2::UnitQuaternion;

inline constexpr double kTransversalityTolerance = 1e-6;
inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr int kDefaultCurveSamples = 2048;

inline void require_interior(double phi) {
  if (!(phi > 0.0 && phi < kPi)) throw DegeneratePhi("phi must lie strictly inside (0, pi)");
}

/// (phi, theta) with phi in (0, pi) and theta reduced to [0, 2 pi).
struct PillowPoint {
  double phi;
  double theta;

  static PillowPoint make(double phi, double theta) {
    require_interior(phi);
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return {phi, t};
  }
};

enum class Provenance { quaternion, chebyshev };

inline std::string_view to_string(Provenance p) {
  return p == Provenance::quaternion ? "quaternion-path" : "chebyshev-path";
}

/// Samples of Gamma with strictly increasing phi.
struct CurveSample {
  std::vector<PillowPoint> points;
  Provenance provenance;
};

struct PlaneData {
  Vec3 normal;
  double offset;
};

inline Vec3 p1(double phi) { return {std::cos(phi), std::sin(phi), 0.0}; }

/// The plane n . (u, v, w) = d that Q1 must satisfy for Y2 to exist.
inline PlaneData plane(const AnglePair& alpha, double phi) {
  require_interior(phi);
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  const double s1 = std::sin(a1), c1 = std::cos(a1), s2 = std::sin(a2), c2 = std::cos(a2);
  const double sp = std::sin(phi), cp = std::cos(phi);
  return {{s1 * c2 * cp + c1 * s2, s1 * c2 * sp, -s1 * s2 * sp}, s1 * c2 + c1 * s2 * cp};
}

/// Point of the circle S^1_phi at angle theta from P1:
///   Q1 = d n/|n|^2 + cos(theta) v1 + sin(theta) v2,
///   v1 = P1 - d n/|n|^2,  v2 = (n/|n|) x v1.
inline Vec3 q1_param(const AnglePair& alpha, double phi, double theta) {
  const PlaneData pl = plane(alpha, phi);
  const double n2 = dot(pl.normal, pl.normal);
  const Vec3 center = pl.normal * (pl.offset / n2);
  const Vec3 v1 = p1(phi) - center;
  const Vec3 v2 = cross(pl.normal / std::sqrt(n2), v1);
  return center + std::cos(theta) * v1 + std::sin(theta) * v2;
}

/// cos(theta) on Gamma via Q1 = Z P1 Z^{-1}, Z = (X1 X2)^ell, and
///   cos(theta) = (|n|^2 P1 - d n) . Q1 / (sin^2(a2) sin^2(phi)).
/// The numerator vector equals (sin^2(phi) A1, sin(phi) A2, sin(phi) A3) with
/// A1..A3 polynomials in cos(phi); one sin(phi) is cancelled symbolically so
/// the quotient stays accurate as phi approaches 0 or pi.
inline double gamma_cos_theta_quaternion(TorusIndex ell, const AnglePair& alpha, double phi) {
  require_interior(phi);
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  const double s1 = std::sin(a1), c1 = std::cos(a1), s2 = std::sin(a2), c2 = std::cos(a2);
  const double sp = std::sin(phi), cp = std::cos(phi);

  const UnitQuaternion x1 = UnitQuaternion::exp(a1, p1(phi));
  const UnitQuaternion x2 = UnitQuaternion::exp(a2, {1.0, 0.0, 0.0});
  const UnitQuaternion z = su2::pow(x1 * x2, ell.value());
  const Vec3 q1 = su2::conjugate_by(z, UnitQuaternion::pure(p1(phi))).imag();

  const double A1 = s1 * s1 * s2 * s2 * cp - s1 * s2 * c1 * c2;
  const double A2 = -s1 * s1 * s2 * s2 * cp * cp + s1 * s2 * c1 * c2 * cp + s2 * s2;
  const double A3 = s1 * c1 * s2 * s2 * cp + s1 * s1 * s2 * c2;
  return (sp * A1 * q1.x + A2 * q1.y + A3 * q1.z) / (s2 * s2 * sp);
}

/// cos(a1) cos(a2) - cos(phi) sin(a1) sin(a2)
inline double chebyshev_argument(const AnglePair& alpha, double phi) {
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  return std::cos(a1) * std::cos(a2) - std::cos(phi) * std::sin(a1) * std::sin(a2);
}

/// cos(theta) = T_{2|ell|}(chebyshev_argument). Valid on the closed interval.
inline double gamma_cos_theta_chebyshev(TorusIndex ell, const AnglePair& alpha, double phi) {
  return cheb::eval_T(2L * ell.abs(), chebyshev_argument(alpha, phi));
}

inline double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

inline double gamma_theta_quaternion(TorusIndex ell, const AnglePair& alpha, double phi) {
  return clamped_acos(gamma_cos_theta_quaternion(ell, alpha, phi));
}

inline double gamma_theta_chebyshev(TorusIndex ell, const AnglePair& alpha, double phi) {
  return clamped_acos(gamma_cos_theta_chebyshev(ell, alpha, phi));
}

struct PolynomialFit {
  int degree;
  double leading_coeff;
  /// Max deviation of the fitted polynomial from the quaternion path at check points.
  double residual;
  /// Chebyshev-series coefficients of P in x = cos(phi).
  std::vector<double> chebyshev_coeffs;
};

/// Recovers P(x), x = cos(phi), from quaternion-path samples at Chebyshev
/// nodes. Degree is the last Chebyshev coefficient above 1e-9 in magnitude;
/// the monomial leading coefficient is c_d 2^{d-1}.
inline PolynomialFit leading_coeff_check(TorusIndex ell, const AnglePair& alpha) {
  if (ell.value() < 0) throw PositiveOnly("leading coefficient check expects ell > 0");
  constexpr double kCoeffFloor = 1e-9;
  constexpr double kMaxResidual = 1e-6;
  constexpr int kCheckPoints = 64;

  const int nodes = 2 * ell.value() + 9;
  std::vector<double> f(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    const double x = std::cos((2.0 * k + 1.0) * kPi / (2.0 * nodes));
    f[static_cast<std::size_t>(k)] = gamma_cos_theta_quaternion(ell, alpha, std::acos(x));
  }
  std::vector<double> c(static_cast<std::size_t>(nodes), 0.0);
  for (int j = 0; j < nodes; ++j) {
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
      acc += f[static_cast<std::size_t>(k)] * std::cos(j * (2.0 * k + 1.0) * kPi / (2.0 * nodes));
    }
    c[static_cast<std::size_t>(j)] = 2.0 * acc / nodes;
  }
  c[0] *= 0.5;

  int degree = 0;
  for (int j = nodes - 1; j > 0; --j) {
    if (std::abs(c[static_cast<std::size_t>(j)]) > kCoeffFloor) {
      degree = j;
      break;
    }
  }
  c.resize(static_cast<std::size_t>(degree) + 1);

  double residual = 0.0;
  for (int i = 0; i < kCheckPoints; ++i) {
    const double phi = (i + 0.5) * kPi / kCheckPoints;
    const double x = std::cos(phi);
    double fitted = 0.0;
    for (int j = 0; j <= degree; ++j) fitted += c[static_cast<std::size_t>(j)] * cheb::eval_T(j, x);
    residual = std::max(residual, std::abs(fitted - gamma_cos_theta_quaternion(ell, alpha, phi)));
  }
  if (residual > kMaxResidual) {
    throw FitFailure("polynomial fit residual " + g17(residual) + " exceeds 1e-6");
  }
  const double lead = degree == 0 ? c[0] : c[static_cast<std::size_t>(degree)] * std::ldexp(1.0, degree - 1);
  return {degree, lead, residual, std::move(c)};
}

// ---------------------------------------------------------------------------
// Orientation of the intersection points.
//
// A point of R x R is a tuple (X1, X2, Y1, Y2); tangent vectors are stored as
// 16 reals (four raw quaternions). Each factor S(alpha) is oriented so that a
// tangent basis (a, b) at q = cos(alpha) + sin(alpha) Q is positive iff
// b = a x Q. The ambient orientation of the pillowcase comes from the
// base-fiber rule for f(X1, X2, Y1, Y2) = X1 X2 Y2^{-1} Y1^{-1}:
//   [w1 w2 w3 | pillowcase basis | orbit v1 v2 v3]
// with df(w) oriented like (i, j, k).

using Quad = std::array<UnitQuaternion, 4>;
using Tangent = Eigen::Matrix<double, 16, 1>;
using Matrix8 = Eigen::Matrix<double, 8, 8>;

namespace detail {

using Raw = std::array<double, 4>;

inline Raw hamilton(const Raw& p, const Raw& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline Raw raw(const UnitQuaternion& q) { return q.components(); }

inline Tangent central_difference(const Quad& plus, const Quad& minus, double h) {
  Tangent t;
  for (int s = 0; s < 4; ++s) {
    const auto a = plus[static_cast<std::size_t>(s)].components();
    const auto b = minus[static_cast<std::size_t>(s)].components();
    for (int c = 0; c < 4; ++c) t(4 * s + c) = (a[static_cast<std::size_t>(c)] - b[static_cast<std::size_t>(c)]) / (2.0 * h);
  }
  return t;
}

inline Tangent slot_vector(int slot, const Vec3& v) {
  Tangent t = Tangent::Zero();
  t(4 * slot + 1) = v.x;
  t(4 * slot + 2) = v.y;
  t(4 * slot + 3) = v.z;
  return t;
}

inline Vec3 slot_imag(const Tangent& t, int slot) { return {t(4 * slot + 1), t(4 * slot + 2), t(4 * slot + 3)}; }

// Unit vector a orthogonal to Q, as close as possible to the preferred one.
inline Vec3 frame_a(const Vec3& axis, const Vec3& preferred) {
  Vec3 a = preferred - dot(preferred, axis) * axis;
  if (norm(a) < 1e-8) a = cross(axis, Vec3{0.0, 0.0, 1.0});
  if (norm(a) < 1e-8) a = cross(axis, Vec3{1.0, 0.0, 0.0});
  return normalized(a);
}

}  // namespace detail

/// The slice point g(phi, theta) = (e^{a1 P1}, e^{a2 i}, e^{a1 Q1}, Y1^{-1} X1 X2).
inline Quad slice_point(const AnglePair& alpha, double phi, double theta) {
  const double a1 = alpha.alpha1.radians();
  const double a2 = alpha.alpha2.radians();
  const UnitQuaternion x1 = UnitQuaternion::exp(a1, p1(phi));
  const UnitQuaternion x2 = UnitQuaternion::exp(a2, {1.0, 0.0, 0.0});
  const UnitQuaternion y1 = UnitQuaternion::exp(a1, q1_param(alpha, phi, theta));
  return {x1, x2, y1, y1.inverse() * x1 * x2};
}

/// u1 = dg/dphi and u2 = dg/dtheta at (phi, 0).
inline std::pair<Tangent, Tangent> slice_tangents(const AnglePair& alpha, double phi) {
  const double h = kFiniteDifferenceStep;
  const Tangent u1 =
      detail::central_difference(slice_point(alpha, phi + h, 0.0), slice_point(alpha, phi - h, 0.0), h);
  const Tangent u2 = detail::central_difference(slice_point(alpha, phi, h), slice_point(alpha, phi, -h), h);
  return {u1, u2};
}

/// Tangent d/dphi of Lambda = {(X1, X2, X1, X2)}.
inline Tangent lambda_tangent(const AnglePair& alpha, double phi) {
  const double h = kFiniteDifferenceStep;
  auto at = [&](double p) {
    const Quad q = slice_point(alpha, p, 0.0);
    return Quad{q[0], q[1], q[0], q[1]};
  };
  return detail::central_difference(at(phi + h), at(phi - h), h);
}

/// Tangent d/dphi of Gamma = {(X1, X2, (X1, X2) sigma_1^{2 ell})}.
inline Tangent gamma_tangent(TorusIndex ell, const AnglePair& alpha, double phi) {
  const double h = kFiniteDifferenceStep;
  const auto beta = su2::ColoredBraidWord::two_strand_power(2 * ell.value());
  auto at = [&](double p) {
    const Quad q = slice_point(alpha, p, 0.0);
    const su2::QuatTuple y = su2::act(beta, {q[0], q[1]});
    return Quad{q[0], q[1], y[0], y[1]};
  };
  return detail::central_difference(at(phi + h), at(phi - h), h);
}

struct OrientationFrame {
  /// Columns: coordinates of w1, w2, w3, u1, u2, v1, v2, v3 in the oriented
  /// reference basis (a, b) of each of the four sphere factors.
  Matrix8 basis_change;
  double det8;
  /// det(df(w1), df(w2), df(w3)) against (i, j, k).
  double det3;
  /// +1 iff (u2, u1) is a positive basis of the pillowcase.
  int ambient_sign;
  /// Columns: (psi1, psi2) expressed in the basis (u2, u1).
  Eigen::Matrix2d tangent_coords;
  /// Worst least-squares residual when decomposing psi1, psi2.
  double residual;
  /// Local intersection number of Lambda and Gamma.
  int sign;
};

/// Tangent-frame computation of the local intersection sign at the point
/// (phi, 0) of the pillowcase, which must be an intersection of Lambda and Gamma.
inline OrientationFrame orientation_frame(TorusIndex ell, const AnglePair& alpha, double phi) {
  require_interior(phi);
  const Quad point = slice_point(alpha, phi, 0.0);
  const double sines[4] = {std::sin(alpha.alpha1.radians()), std::sin(alpha.alpha2.radians()),
                           std::sin(alpha.alpha1.radians()), std::sin(alpha.alpha2.radians())};

  // Reference frames; the preferred a's reproduce the textbook basis at phi = pi/2.
  const Vec3 preferred[4] = {{std::sin(phi), -std::cos(phi), 0.0}, {0.0, 1.0, 0.0},
                             {std::sin(phi), -std::cos(phi), 0.0}, {0.0, 1.0, 0.0}};
  Vec3 fa[4], fb[4];
  for (int s = 0; s < 4; ++s) {
    const auto axis = point[static_cast<std::size_t>(s)].axis();
    if (!axis) throw DomainError("degenerate sphere factor");
    fa[s] = detail::frame_a(*axis, preferred[s]);
    fb[s] = cross(fa[s], *axis);
  }
  auto coords = [&](const Tangent& t) {
    Eigen::Matrix<double, 8, 1> c;
    for (int s = 0; s < 4; ++s) {
      const Vec3 v = detail::slot_imag(t, s);
      c(2 * s) = dot(v, fa[s]) / sines[s];
      c(2 * s + 1) = dot(v, fb[s]) / sines[s];
    }
    return c;
  };

  const Vec3 ei{1, 0, 0}, ej{0, 1, 0}, ek{0, 0, 1};
  const Tangent w1 = detail::slot_vector(0, sines[0] * ek);
  const Tangent w2 = detail::slot_vector(1, sines[1] * ek);
  const Tangent w3 = detail::slot_vector(1, sines[1] * ej);
  const auto [u1, u2] = slice_tangents(alpha, phi);
  Tangent v[3];
  const Vec3 generators[3] = {ei, ej, ek};
  for (int g = 0; g < 3; ++g) {
    v[g] = Tangent::Zero();
    for (int s = 0; s < 4; ++s) {
      v[g] += detail::slot_vector(s, 2.0 * cross(generators[g], point[static_cast<std::size_t>(s)].imag()));
    }
  }

  OrientationFrame out;
  const Tangent cols[8] = {w1, w2, w3, u1, u2, v[0], v[1], v[2]};
  for (int c = 0; c < 8; ++c) out.basis_change.col(c) = coords(cols[c]);
  out.det8 = out.basis_change.determinant();

  // df(w) for w in slot 1 or 2; f is multilinear in the raw X factors.
  const auto y_inv = detail::hamilton(detail::raw(point[3].inverse()), detail::raw(point[2].inverse()));
  auto df = [&](const Tangent& w, int slot) {
    detail::Raw wq{0.0, w(4 * slot + 1), w(4 * slot + 2), w(4 * slot + 3)};
    const detail::Raw prod = slot == 0 ? detail::hamilton(detail::hamilton(wq, detail::raw(point[1])), y_inv)
                                       : detail::hamilton(detail::hamilton(detail::raw(point[0]), wq), y_inv);
    return Eigen::Vector3d(prod[1], prod[2], prod[3]);
  };
  Eigen::Matrix3d dfw;
  dfw.col(0) = df(w1, 0);
  dfw.col(1) = df(w2, 1);
  dfw.col(2) = df(w3, 1);
  out.det3 = dfw.determinant();
  if (std::abs(out.det3) < 1e-10 || std::abs(out.det8) < 1e-10) {
    throw DomainError("degenerate orientation frame");
  }
  out.ambient_sign = (out.det8 * out.det3 < 0.0) ? 1 : -1;

  Eigen::Matrix<double, 8, 5> span;
  span.col(0) = coords(u2);
  span.col(1) = coords(u1);
  for (int g = 0; g < 3; ++g) span.col(2 + g) = coords(v[g]);
  const auto qr = span.colPivHouseholderQr();
  out.residual = 0.0;
  const Tangent psi[2] = {lambda_tangent(alpha, phi), gamma_tangent(ell, alpha, phi)};
  for (int k = 0; k < 2; ++k) {
    const Eigen::Matrix<double, 8, 1> rhs = coords(psi[k]);
    const Eigen::Matrix<double, 5, 1> sol = qr.solve(rhs);
    out.residual = std::max(out.residual, (span * sol - rhs).norm());
    out.tangent_coords(0, k) = sol(0);
    out.tangent_coords(1, k) = sol(1);
  }
  const double det2 = out.tangent_coords.determinant();
  out.sign = out.ambient_sign * (det2 > 0.0 ? 1 : -1);
  return out;
}

struct SignedIntersection {
  PillowPoint point;
  int m;
  int sign;
};

/// |d theta / d phi| at the intersection with label m, from the one-sided
/// limit of -2 ell sin a1 sin a2 sin(phi) U_{2 ell-1}(x) / sqrt(1 - T_{2 ell}(x)^2)
/// using 1 - T_n^2 = (1 - x^2) U_{n-1}^2.
inline double transversality_slope(TorusIndex ell, const AnglePair& alpha, int m, double phi) {
  const double s1 = std::sin(alpha.alpha1.radians());
  const double s2 = std::sin(alpha.alpha2.radians());
  return 2.0 * ell.abs() * s1 * s2 * std::sin(phi) / std::sin(kPi * m / ell.abs());
}

/// Intersection points of Lambda and Gamma with their signs. Each sign is
/// the closed form sign(ell) checked against the tangent-frame computation.
inline std::vector<SignedIntersection> intersections(TorusIndex ell, const AnglePair& alpha,
                                                     double transversality_tol = kTransversalityTolerance) {
  std::vector<SignedIntersection> out;
  for (const auto& sol : torus::solve_phi(ell, alpha)) {
    if (transversality_slope(ell, alpha, sol.m, sol.phi) < transversality_tol) {
      throw TransversalityFailure("|dtheta/dphi| below tolerance at m = " + std::to_string(sol.m));
    }
    const int closed = ell.sign();
    const int framed = orientation_frame(ell, alpha, sol.phi).sign;
    if (framed != closed) {
      throw Error("intersection sign mismatch at m = " + std::to_string(sol.m) + ": frame gives " +
                  std::to_string(framed));
    }
    out.push_back({PillowPoint::make(sol.phi, 0.0), sol.m, closed});
  }
  return out;
}

inline int intersection_number(TorusIndex ell, const AnglePair& alpha) {
  int total = 0;
  for (const auto& x : intersections(ell, alpha)) total += x.sign;
  return total;
}

/// Samples Gamma at phi_k = (k + 1) pi / (samples + 1), k = 0..samples-1.
inline CurveSample sample_curve(TorusIndex ell, const AnglePair& alpha, int samples, Provenance provenance) {
  if (samples < 1) throw DomainError("curve needs at least one sample");
  CurveSample out{{}, provenance};
  out.points.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double phi = (k + 1) * kPi / (samples + 1);
    const double theta = provenance == Provenance::quaternion ? gamma_theta_quaternion(ell, alpha, phi)
                                                              : gamma_theta_chebyshev(ell, alpha, phi);
    out.points.push_back(PillowPoint::make(phi, theta));
  }
  return out;
}

struct CurveDiscrepancy {
  double max_abs_delta_cos_theta;
  double max_abs_delta_theta;
};

inline CurveDiscrepancy compare_curves(const CurveSample& a, const CurveSample& b) {
  if (a.points.size() != b.points.size()) throw LengthMismatch("curves sampled at different sizes");
  CurveDiscrepancy d{0.0, 0.0};
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    d.max_abs_delta_cos_theta =
        std::max(d.max_abs_delta_cos_theta, std::abs(std::cos(a.points[i].theta) - std::cos(b.points[i].theta)));
    d.max_abs_delta_theta = std::max(d.max_abs_delta_theta, std::abs(a.points[i].theta - b.points[i].theta));
  }
  return d;
}

/// CSV with header `phi,theta,provenance`. Several curves over the same phi
/// grid are interleaved row by row; with exactly two, a footer comment
/// reports their discrepancy.
inline void write_curve_csv(std::ostream& os, std::span<const CurveSample> curves) {
  os << "phi,theta,provenance\n";
  if (curves.empty()) return;
  const std::size_t n = curves.front().points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& c : curves) {
      os << g17(c.points[i].phi) << ',' << g17(c.points[i].theta) << ',' << to_string(c.provenance) << '\n';
    }
  }
  if (curves.size() == 2) {
    const auto d = compare_curves(curves[0], curves[1]);
    os << "# max_abs_delta_cos_theta=" << g17(d.max_abs_delta_cos_theta)
       << " max_abs_delta_theta=" << g17(d.max_abs_delta_theta) << '\n';
  }
}

}  // namespace bclink::pillow
