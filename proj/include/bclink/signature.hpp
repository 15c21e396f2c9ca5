#pragma once

// Multivariable signatures of colored links from C-complex Seifert matrices.
//
// A SeifertSystem holds one integer matrix A^eps for each sign vector
// eps in {+,-}^mu, keyed by strings like "+-" (color order). From them
//   A(t) = sum_eps eps_1...eps_mu t_1^{(1-eps_1)/2} ... t_mu^{(1-eps_mu)/2} A^eps,
//   H(omega) = prod_i (1 - conj(omega_i)) A(omega),
// and sigma(omega) is the signature of the Hermitian matrix H(omega).
//
// The torus family L_ell also has closed forms: leading minors delta_m,
// a Sylvester assembly from their signs, and a piecewise formula in
// s = alpha1 + alpha2.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "bclink/angle.hpp"
#include "bclink/chebyshev.hpp"
#include "bclink/error.hpp"
#include "bclink/torus_rep.hpp"

namespace bclink::sig {

using Complex = std::complex<double>;
using HermitianMatrix = Eigen::MatrixXcd;
using IntMatrix = Eigen::MatrixXi;

inline constexpr double kOmegaOneTolerance = 1e-12;
inline constexpr double kEigenZeroScale = 1e-9;

/// Sign-vector key of length mu, e.g. "+-".
inline std::string flip_key(const std::string& key) {
  std::string out = key;
  for (char& c : out) c = (c == '+') ? '-' : '+';
  return out;
}

/// All 2^mu keys in lexicographic order with '+' before '-'.
inline std::vector<std::string> all_keys(int mu) {
  std::vector<std::string> keys{""};
  for (int i = 0; i < mu; ++i) {
    std::vector<std::string> next;
    for (const auto& k : keys) {
      next.push_back(k + '+');
      next.push_back(k + '-');
    }
    keys = std::move(next);
  }
  return keys;
}

class SeifertSystem {
 public:
  SeifertSystem(int mu, int rank, std::map<std::string, IntMatrix> matrices)
      : mu_(mu), rank_(rank), matrices_(std::move(matrices)) {
    if (mu_ < 1 || mu_ > 16) throw BadSystem("mu must be between 1 and 16");
    if (rank_ < 0) throw BadSystem("rank must be non-negative");
    const auto keys = all_keys(mu_);
    if (matrices_.size() != keys.size()) {
      for (const auto& [k, m] : matrices_) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw BadSystem("unexpected key \"" + k + "\"");
      }
    }
    for (const auto& k : keys) {
      const auto it = matrices_.find(k);
      if (it == matrices_.end()) throw BadSystem("missing matrix for key \"" + k + "\"");
      if (it->second.rows() != rank_ || it->second.cols() != rank_) {
        throw BadSystem("matrix \"" + k + "\" is not " + std::to_string(rank_) + "x" + std::to_string(rank_));
      }
    }
    for (const auto& k : keys) {
      const std::string f = flip_key(k);
      if (matrices_.at(f) != matrices_.at(k).transpose()) {
        throw BadSystem("transpose invariant violated: A^" + f + " != (A^" + k + ")^T");
      }
    }
  }

  int mu() const { return mu_; }
  int rank() const { return rank_; }
  const IntMatrix& matrix(const std::string& key) const {
    const auto it = matrices_.find(key);
    if (it == matrices_.end()) throw BadSystem("no matrix for key \"" + key + "\"");
    return it->second;
  }
  const std::map<std::string, IntMatrix>& matrices() const { return matrices_; }

 private:
  int mu_;
  int rank_;
  std::map<std::string, IntMatrix> matrices_;
};

struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  int rank() const { return n_pos + n_neg + n_zero; }
  int signature() const { return n_pos - n_neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// omega = (e^{2 i alpha1}, e^{2 i alpha2}).
inline std::vector<Complex> omega_of(const AnglePair& alpha) { return {alpha.omega1(), alpha.omega2()}; }

inline HermitianMatrix build_H(const SeifertSystem& s, const std::vector<Complex>& omega) {
  if (static_cast<int>(omega.size()) != s.mu()) {
    throw LengthMismatch("expected " + std::to_string(s.mu()) + " omegas, got " + std::to_string(omega.size()));
  }
  Complex scale{1.0, 0.0};
  for (const auto& w : omega) {
    if (std::abs(w - 1.0) < kOmegaOneTolerance) throw OmegaOne("omega_i = 1 is not allowed");
    scale *= 1.0 - std::conj(w);
  }
  HermitianMatrix a = HermitianMatrix::Zero(s.rank(), s.rank());
  for (const auto& [key, m] : s.matrices()) {
    Complex coeff{1.0, 0.0};
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == '-') coeff *= -omega[i];
    }
    a += coeff * m.cast<Complex>();
  }
  return scale * a;
}

inline double max_abs_entry(const HermitianMatrix& h) {
  return h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const HermitianMatrix& h, double tol = 1e-12) {
  return h.rows() == h.cols() && (h.size() == 0 || (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol);
}

/// Eigenvalue counts with zero band 1e-9 * max|h_ij| * rank.
inline Inertia inertia(const HermitianMatrix& h) {
  Inertia out;
  if (h.rows() == 0) return out;
  const double tau = kEigenZeroScale * max_abs_entry(h) * static_cast<double>(h.rows());
  const Eigen::SelfAdjointEigenSolver<HermitianMatrix> es(h, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= tau) {
      ++out.n_zero;
    } else if (ev > 0.0) {
      ++out.n_pos;
    } else {
      ++out.n_neg;
    }
  }
  return out;
}

/// Product of the eigenvalues; 1 for the empty matrix.
inline double determinant(const HermitianMatrix& h) {
  if (h.rows() == 0) return 1.0;
  const Eigen::SelfAdjointEigenSolver<HermitianMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().prod();
}

struct SigmaResult {
  int signature;
  Inertia inertia;
  /// n_zero > 0: omega is (numerically) on a root of the Alexander polynomial.
  bool nullity_warning;
};

inline SigmaResult sigma_eval(const SeifertSystem& s, const std::vector<Complex>& omega) {
  const Inertia in = inertia(build_H(s, omega));
  return {in.signature(), in, in.n_zero > 0};
}

inline SigmaResult sigma_eval(const SeifertSystem& s, const AnglePair& alpha) { return sigma_eval(s, omega_of(alpha)); }

/// C-complex matrices of L_ell: A^{++} has -1 on the diagonal and 1 above it,
/// A^{--} is its transpose and the mixed ones vanish. For ell < 0 every
/// matrix changes sign (mirror image).
inline SeifertSystem torus_seifert(TorusIndex ell) {
  const int n = ell.abs() - 1;
  IntMatrix pp = -IntMatrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) pp(i, i + 1) = 1;
  if (ell.value() < 0) pp = -pp;
  const IntMatrix zero = IntMatrix::Zero(n, n);
  return {2, n, {{"++", pp}, {"+-", zero}, {"-+", zero}, {"--", pp.transpose()}}};
}

// ---------------------------------------------------------------------------
// Closed forms for the torus family, ell > 0.

inline void require_minor_index(int ell, int m) {
  if (ell < 1) throw DomainError("ell must be positive");
  if (m < 1 || m > ell) throw DomainError("minor index " + std::to_string(m) + " outside 1.." + std::to_string(ell));
}

/// delta_1 = 1, delta_2 = 8 s1 s2 cos(s), delta_{k+1} = 8 s1 s2 cos(s) delta_k - 16 s1^2 s2^2 delta_{k-1}.
inline double delta_recursive(int ell, const AnglePair& alpha, int m) {
  require_minor_index(ell, m);
  // extended precision: the three-term recurrence loses ~m^2 eps near roots of U
  const long double a1 = alpha.alpha1.radians(), a2 = alpha.alpha2.radians();
  const long double ss = std::sin(a1) * std::sin(a2);
  const long double b = 8.0L * ss * std::cos(a1 + a2);
  const long double c = 16.0L * ss * ss;
  long double prev = 1.0L;
  if (m == 1) return 1.0;
  long double cur = b;
  for (int k = 2; k < m; ++k) {
    const long double next = b * cur - c * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

/// delta_m = 4^{m-1} (s1 s2)^{m-1} U_{m-1}(cos s).
inline double delta_closed(int ell, const AnglePair& alpha, int m) {
  require_minor_index(ell, m);
  // U_{m-1}(cos s) = sin(m s)/sin s straight from the angle; going through acos(cos s) costs digits
  const long double a1 = alpha.alpha1.radians(), a2 = alpha.alpha2.radians();
  const long double ss = std::sin(a1) * std::sin(a2);
  const long double sum = a1 + a2;
  const long double den = std::sin(sum);
  const long double u = std::abs(den) < 1e-300L ? cheb::eval_U(m - 1, std::cos(alpha.sum())) : std::sin(m * sum) / den;
  return static_cast<double>(std::pow(4.0L * ss, m - 1) * u);
}

/// sign U_k(cos(r pi)) for rational r in (0, 2), exactly.
inline int chebyshev_u_sign(int k, const Rational& r) {
  if (r == Rational(1)) return (k % 2 == 0) ? 1 : -1;
  const Rational x = r * Rational(k + 1);
  if (x.is_integer()) return 0;
  const int top = (x.floor() % 2 == 0) ? 1 : -1;
  return r < Rational(1) ? top : -top;
}

/// sign(delta_m) = sign U_{m-1}(cos s); the leading (m-1)x(m-1) minor of H_ell.
/// Exact for rational angles.
inline int delta_sign(const AnglePair& alpha, int m) {
  if (m < 1) throw DomainError("minor index must be positive");
  if (m == 1) return 1;
  if (const auto r = alpha.sum_over_pi()) return chebyshev_u_sign(m - 1, *r);
  const double u = cheb::eval_U(m - 1, std::cos(alpha.sum()));
  if (std::abs(u) < 1e-9 * m) return 0;
  return u > 0.0 ? 1 : -1;
}

/// Sylvester assembly sum_{m=1}^{|ell|-1} sign(delta_m delta_{m+1}); for ell < 0
/// the value is negated. Throws DomainError if a leading minor vanishes.
inline int sigma_sylvester(TorusIndex ell, const AnglePair& alpha) {
  const int n = ell.abs();
  int sigma = 0;
  int prev = 1;
  for (int m = 2; m <= n; ++m) {
    const int cur = delta_sign(alpha, m);
    if (cur == 0) throw DomainError("leading minor delta_" + std::to_string(m) + " vanishes");
    sigma += prev * cur;
    prev = cur;
  }
  return ell.sign() * sigma;
}

/// Piecewise formula inside the open strips i pi/|ell| < s < (i+1) pi/|ell|,
/// Sylvester path on the line s = pi.
inline int sigma_torus_closed(TorusIndex ell, const AnglePair& alpha) {
  torus::require_defined(ell, alpha);
  const int n = ell.abs();
  if (n == 1) return 0;
  long i = 0;
  if (const auto r = alpha.sum_over_pi()) {
    if (*r == Rational(1)) return sigma_sylvester(ell, alpha);
    i = static_cast<long>((*r * Rational(n)).floor());
  } else {
    if (std::abs(alpha.sum() - kPi) < torus::kRootTolerance) return sigma_sylvester(ell, alpha);
    i = static_cast<long>(std::floor(alpha.sum() * n / kPi));
  }
  const long value = (i <= n - 1) ? n - 2 * i - 1 : -3L * n + 2 * i + 1;
  return ell.sign() * static_cast<int>(value);
}

/// A value in (1/2) Z, stored as twice the value.
struct HalfInteger {
  long twice = 0;

  static HalfInteger from_twice(long t) { return {t}; }
  bool is_integer() const { return twice % 2 == 0; }
  double to_double() const { return static_cast<double>(twice) / 2.0; }
  /// Integer value; DomainError if not an integer.
  long integer() const {
    if (!is_integer()) throw DomainError("half-integer " + str() + " is not an integer");
    return twice / 2;
  }
  std::string str() const { return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2"; }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// -1/2 (sigma(omega1, omega2) + sigma(omega1, omega2^{-1})) through the
/// generic engine. NotDefined if either matrix is singular.
inline HalfInteger symmetrized_sigma(const SeifertSystem& s, const AnglePair& alpha) {
  const SigmaResult a = sigma_eval(s, alpha);
  const SigmaResult b = sigma_eval(s, alpha.with_inverted_omega2());
  if (a.nullity_warning || b.nullity_warning) throw NotDefined("undefined: H(omega) is singular");
  return HalfInteger::from_twice(-(a.signature + b.signature));
}

/// Same through the torus closed forms.
inline HalfInteger symmetrized_sigma(TorusIndex ell, const AnglePair& alpha) {
  torus::require_defined(ell, alpha);
  return HalfInteger::from_twice(
      -(sigma_torus_closed(ell, alpha) + sigma_torus_closed(ell, alpha.with_inverted_omega2())));
}

/// One-variable signature of L_ell at omega = e^{2 i alpha}:
/// sigma(omega, omega) - lk.
inline int levine_tristram_via_cf(TorusIndex ell, const Angle& alpha) {
  return sigma_torus_closed(ell, AnglePair{alpha, alpha}) - ell.value();
}

/// -1/2 of the sum of the one-variable signatures of L_ell and of L_ell with
/// its second component reversed (lk = -ell), both at omega = -1.
inline HalfInteger murasugi_average(TorusIndex ell) {
  const AnglePair half_pi{Angle::exact(1, 2), Angle::exact(1, 2)};
  const int forward = levine_tristram_via_cf(ell, Angle::exact(1, 2));
  const int reversed = sigma_torus_closed(ell, half_pi.with_inverted_omega2()) + ell.value();
  return HalfInteger::from_twice(-(forward + reversed));
}

}  // namespace bclink::sig
