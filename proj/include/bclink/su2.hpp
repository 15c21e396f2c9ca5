#pragma once

// Unit quaternions identified with SU(2) via
//   [[a, b], [-conj(b), conj(a)]]  ->  a + b j,
// and the braid group action on tuples of them.
//
// Action convention: braids act on the RIGHT. A word is applied letter by
// letter from left to right, so act(w1 w2, t) == act(w2, act(w1, t)).
// The generator sigma_i (1-based) sends
//   (..., X_i, X_{i+1}, ...)  ->  (..., X_i X_{i+1} X_i^{-1}, X_i, ...)
// and its inverse sends
//   (..., Y_i, Y_{i+1}, ...)  ->  (..., Y_{i+1}, Y_{i+1}^{-1} Y_i Y_{i+1}, ...).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bclink/error.hpp"
#include "bclink/vec3.hpp"

namespace bclink::su2 {

inline constexpr double kUnitTolerance = 1e-12;

/// q = a + b i + c j + d k with a^2 + b^2 + c^2 + d^2 = 1.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;

  /// Normalizes the given components; throws DomainError on a zero vector.
  UnitQuaternion(double a, double b, double c, double d) {
    const double n = std::sqrt(a * a + b * b + c * c + d * d);
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero quaternion");
    a_ = a / n;
    b_ = b / n;
    c_ = c / n;
    d_ = d / n;
  }

  static UnitQuaternion identity() { return {}; }
  static UnitQuaternion i() { return {0, 1, 0, 0}; }
  static UnitQuaternion j() { return {0, 0, 1, 0}; }
  static UnitQuaternion k() { return {0, 0, 0, 1}; }

  /// cos(angle) + sin(angle) * axis, axis normalized first.
  static UnitQuaternion exp(double angle, const Vec3& axis) {
    const Vec3 u = normalized(axis);
    const double s = std::sin(angle);
    return {std::cos(angle), s * u.x, s * u.y, s * u.z};
  }

  /// Pure unit quaternion with the given (normalized) imaginary part.
  static UnitQuaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  double real() const { return a_; }
  Vec3 imag() const { return {b_, c_, d_}; }
  std::array<double, 4> components() const { return {a_, b_, c_, d_}; }

  double trace() const { return 2.0 * a_; }

  /// Rotation angle in [0, pi] such that q = cos(angle) + sin(angle) Q.
  double angle() const { return std::acos(std::clamp(a_, -1.0, 1.0)); }

  /// Unit imaginary Q with q = cos(angle) + sin(angle) Q; undefined at q = +-1.
  std::optional<Vec3> axis() const {
    const Vec3 v = imag();
    const double n = norm(v);
    if (n < kUnitTolerance) return std::nullopt;
    return v / n;
  }

  UnitQuaternion inverse() const {
    UnitQuaternion r = *this;
    r.b_ = -b_;
    r.c_ = -c_;
    r.d_ = -d_;
    return r;
  }

  UnitQuaternion operator-() const {
    UnitQuaternion r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.c_ = -c_;
    r.d_ = -d_;
    return r;
  }

 private:
  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

/// Hamilton product, renormalized to unit length.
inline UnitQuaternion mul(const UnitQuaternion& p, const UnitQuaternion& q) {
  return {p.a() * q.a() - p.b() * q.b() - p.c() * q.c() - p.d() * q.d(),
          p.a() * q.b() + p.b() * q.a() + p.c() * q.d() - p.d() * q.c(),
          p.a() * q.c() - p.b() * q.d() + p.c() * q.a() + p.d() * q.b(),
          p.a() * q.d() + p.b() * q.c() - p.c() * q.b() + p.d() * q.a()};
}

inline UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) { return mul(p, q); }

/// g q g^{-1}
inline UnitQuaternion conjugate_by(const UnitQuaternion& g, const UnitQuaternion& q) {
  return g * q * g.inverse();
}

/// Integer power by repeated squaring; negative exponents invert.
inline UnitQuaternion pow(UnitQuaternion q, long n) {
  if (n < 0) {
    q = q.inverse();
    n = -n;
  }
  UnitQuaternion result;
  while (n > 0) {
    if (n & 1) result = result * q;
    n >>= 1;
    if (n > 0) q = q * q;
  }
  return result;
}

inline double max_abs_diff(const UnitQuaternion& p, const UnitQuaternion& q) {
  const auto a = p.components();
  const auto b = q.components();
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline bool approx_equal(const UnitQuaternion& p, const UnitQuaternion& q, double tol = 1e-12) {
  return max_abs_diff(p, q) <= tol;
}

using QuatTuple = std::vector<UnitQuaternion>;

/// Braid word on `strands` strands with a strand coloring in {1..mu}.
///
/// Letters are signed generator indices: +i is sigma_i, -i is sigma_i^{-1}.
/// Construction checks that every index is in range, that the coloring is
/// surjective onto {1..mu}, and that the closure is well-colored.
class ColoredBraidWord {
 public:
  ColoredBraidWord(int strands, std::vector<int> word, std::vector<int> coloring)
      : strands_(strands), word_(std::move(word)), coloring_(std::move(coloring)) {
    if (strands_ < 1) throw InvalidBraid("braid needs at least one strand");
    if (static_cast<int>(coloring_.size()) != strands_) {
      throw InvalidBraid("coloring has " + std::to_string(coloring_.size()) + " entries for " +
                         std::to_string(strands_) + " strands");
    }
    for (int letter : word_) {
      if (letter == 0 || std::abs(letter) >= strands_) {
        throw InvalidBraid("generator index " + std::to_string(letter) + " out of range");
      }
    }
    std::set<int> colors(coloring_.begin(), coloring_.end());
    if (*colors.begin() < 1) throw InvalidBraid("colors must be positive");
    mu_ = *colors.rbegin();
    if (static_cast<int>(colors.size()) != mu_) throw InvalidBraid("coloring is not surjective onto {1..mu}");

    std::vector<int> bottom = coloring_;
    for (int letter : word_) {
      const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
      std::swap(bottom[i], bottom[i + 1]);
    }
    if (bottom != coloring_) throw InvalidBraid("closure is not well-colored");
  }

  /// sigma_1^exponent on two strands colored (1, 2); exponent must be even.
  static ColoredBraidWord two_strand_power(int exponent) {
    std::vector<int> word(static_cast<std::size_t>(std::abs(exponent)), exponent >= 0 ? 1 : -1);
    return {2, std::move(word), {1, 2}};
  }

  int strands() const { return strands_; }
  int mu() const { return mu_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& coloring() const { return coloring_; }

  ColoredBraidWord inverse() const {
    std::vector<int> inv(word_.rbegin(), word_.rend());
    for (int& letter : inv) letter = -letter;
    return {strands_, std::move(inv), coloring_};
  }

  /// Concatenation this * other (apply this first).
  ColoredBraidWord then(const ColoredBraidWord& other) const {
    if (other.strands_ != strands_ || other.coloring_ != coloring_) {
      throw InvalidBraid("cannot concatenate braids with different strands or coloring");
    }
    std::vector<int> w = word_;
    w.insert(w.end(), other.word_.begin(), other.word_.end());
    return {strands_, std::move(w), coloring_};
  }

 private:
  int strands_;
  std::vector<int> word_;
  std::vector<int> coloring_;
  int mu_ = 0;
};

/// Applies one letter in place.
inline void act_letter(int letter, QuatTuple& t) {
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  const UnitQuaternion x = t[i];
  const UnitQuaternion y = t[i + 1];
  if (letter > 0) {
    t[i] = x * y * x.inverse();
    t[i + 1] = x;
  } else {
    t[i] = y;
    t[i + 1] = y.inverse() * x * y;
  }
}

/// Right action of the braid word on an n-tuple of unit quaternions.
inline QuatTuple act(const ColoredBraidWord& word, QuatTuple t) {
  if (static_cast<int>(t.size()) != word.strands()) {
    throw LengthMismatch("tuple of length " + std::to_string(t.size()) + " acted on by a " +
                         std::to_string(word.strands()) + "-strand braid");
  }
  for (int letter : word.word()) act_letter(letter, t);
  return t;
}

/// Ordered product X_1 X_2 ... X_n.
inline UnitQuaternion ordered_product(const QuatTuple& t) {
  UnitQuaternion p;
  for (const auto& q : t) p = p * q;
  return p;
}

/// Linking number between the closures of the strands colored A and B.
inline int closure_linking_number(const ColoredBraidWord& word, int color_a, int color_b) {
  const auto& c = word.coloring();
  const bool has_a = std::find(c.begin(), c.end(), color_a) != c.end();
  const bool has_b = std::find(c.begin(), c.end(), color_b) != c.end();
  if (!has_a || !has_b) throw UnknownColor("color not present in the braid coloring");
  if (color_a == color_b) throw DomainError("linking number needs two distinct colors");

  std::vector<int> position_color = c;
  int signed_crossings = 0;
  for (int letter : word.word()) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    const int left = position_color[i];
    const int right = position_color[i + 1];
    if ((left == color_a && right == color_b) || (left == color_b && right == color_a)) {
      signed_crossings += letter > 0 ? 1 : -1;
    }
    std::swap(position_color[i], position_color[i + 1]);
  }
  return signed_crossings / 2;
}

}  // namespace bclink::su2
