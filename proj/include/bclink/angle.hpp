#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "bclink/error.hpp"

namespace bclink {

inline constexpr double kPi = std::numbers::pi;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not exceeding the value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Angle (p/q)*pi with 0 < p/q < 1.
class RationalAngle {
 public:
  RationalAngle(std::int64_t p, std::int64_t q) : RationalAngle(Rational(p, q)) {}

  explicit RationalAngle(Rational pi_multiple) : value_(pi_multiple) {
    if (value_ <= Rational(0) || value_ >= Rational(1)) {
      throw DomainError("rational angle " + value_.str() + "*pi is outside (0, pi)");
    }
  }

  const Rational& pi_multiple() const { return value_; }
  std::int64_t p() const { return value_.num(); }
  std::int64_t q() const { return value_.den(); }
  double radians() const { return kPi * static_cast<double>(p()) / static_cast<double>(q()); }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  Rational value_;
};

/// An angle in (0, pi), optionally carrying an exact rational multiple of pi.
///
/// Exact angles take the rational fast path in every membership test against
/// the Alexander root locus; plain radians fall back to a tolerance band.
class Angle {
 public:
  Angle(const RationalAngle& exact) : radians_(exact.radians()), exact_(exact.pi_multiple()) {}

  static Angle exact(std::int64_t p, std::int64_t q) { return Angle(RationalAngle(p, q)); }

  static Angle from_radians(double radians) {
    if (!(radians > 0.0 && radians < kPi)) {
      throw DomainError("angle " + std::to_string(radians) + " rad is outside (0, pi)");
    }
    return Angle(radians);
  }

  double radians() const { return radians_; }
  bool is_exact() const { return exact_.has_value(); }
  /// Rational multiple of pi, present only for exact angles.
  const std::optional<Rational>& pi_multiple() const { return exact_; }

  /// pi - angle; exactness is preserved.
  Angle supplement() const {
    if (exact_) return Angle(RationalAngle(Rational(1) - *exact_));
    return Angle(kPi - radians_);
  }

 private:
  explicit Angle(double radians) : radians_(radians) {}

  double radians_;
  std::optional<Rational> exact_;
};

/// Pair (alpha1, alpha2) in (0, pi)^2 with omega_j = exp(2 i alpha_j).
struct AnglePair {
  Angle alpha1;
  Angle alpha2;

  static AnglePair exact(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
    return {Angle::exact(p1, q1), Angle::exact(p2, q2)};
  }
  static AnglePair radians(double a1, double a2) {
    return {Angle::from_radians(a1), Angle::from_radians(a2)};
  }

  bool is_exact() const { return alpha1.is_exact() && alpha2.is_exact(); }

  double sum() const { return alpha1.radians() + alpha2.radians(); }

  /// (alpha1 + alpha2)/pi, when both angles are exact.
  std::optional<Rational> sum_over_pi() const {
    if (!is_exact()) return std::nullopt;
    return *alpha1.pi_multiple() + *alpha2.pi_multiple();
  }
  /// (alpha1 - alpha2 + pi)/pi, when both angles are exact.
  std::optional<Rational> shifted_difference_over_pi() const {
    if (!is_exact()) return std::nullopt;
    return *alpha1.pi_multiple() - *alpha2.pi_multiple() + Rational(1);
  }

  std::complex<double> omega1() const { return std::polar(1.0, 2.0 * alpha1.radians()); }
  std::complex<double> omega2() const { return std::polar(1.0, 2.0 * alpha2.radians()); }

  /// The pair describing (omega1, omega2^{-1}), i.e. (alpha1, pi - alpha2).
  AnglePair with_inverted_omega2() const { return {alpha1, alpha2.supplement()}; }
};

/// Linking number ell of the (2, 2 ell) torus link; zero is rejected.
class TorusIndex {
 public:
  explicit TorusIndex(int ell) : ell_(ell) {
    if (ell == 0) {
      throw ZeroLinking("ell = 0: the multivariable Alexander polynomial vanishes identically");
    }
  }

  int value() const { return ell_; }
  int abs() const { return std::abs(ell_); }
  int sign() const { return ell_ > 0 ? 1 : -1; }
  TorusIndex negated() const { return TorusIndex(-ell_); }

  friend bool operator==(const TorusIndex&, const TorusIndex&) = default;

 private:
  int ell_;
};

}  // namespace bclink
