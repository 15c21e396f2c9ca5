// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bclink/bclink.hpp"

using namespace bclink;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<AnglePair> random_admissible(TorusIndex ell, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kPi);
  std::vector<AnglePair> out;
  while (static_cast<int>(out.size()) < count) {
    const double a1 = u(rng), a2 = u(rng);
    if (a1 <= 0.0 || a2 <= 0.0) continue;
    const auto a = AnglePair::radians(a1, a2);
    if (torus::is_defined(ell, a)) out.push_back(a);
  }
  return out;
}

std::vector<int> nonzero_range(int lo, int hi) {
  std::vector<int> v;
  for (int l = lo; l <= hi; ++l) {
    if (l != 0) v.push_back(l);
  }
  return v;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "main identity h = -(sigma + sigma')/2, l in -6..6, res 120", [] {
    const auto t0 = std::chrono::steady_clock::now();
    long checked = 0, failed = 0, skipped = 0;
    for (int l : nonzero_range(-6, 6)) {
      const auto r = verify::sweep_main_identity(TorusIndex(l), 120);
      checked += r.checked;
      failed += r.failed;
      skipped += r.skipped_on_roots;
    }
    const double t = since(t0);
    return Outcome{failed == 0 && t < 60.0, std::to_string(checked) + " points, " + std::to_string(failed) +
                                                " failed, " + std::to_string(skipped) + " on root lines, " + fmt(t) +
                                                " s (< 60)"};
  });

  criterion(2, "quaternion vs Chebyshev cos(theta), l 1..8, 20 alpha x 1000 phi", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int l = 1; l <= 8; ++l) {
      for (const auto& a : random_admissible(TorusIndex(l), 20, 1000 + l)) {
        for (int k = 0; k < 1000; ++k) {
          const double phi = kPi * (k + 0.5) / 1000;
          worst = std::max(worst, std::abs(pillow::gamma_cos_theta_quaternion(TorusIndex(l), a, phi) -
                                           pillow::gamma_cos_theta_chebyshev(TorusIndex(l), a, phi)));
        }
      }
    }
    const double t = since(t0);
    return Outcome{worst < 1e-8 && t < 10.0, "max |dcos| = " + fmt(worst) + " (< 1e-8), " + fmt(t) + " s (< 10)"};
  });

  criterion(3, "boundary limits at phi = 1e-4 and pi - 1e-4", [] {
    double worst = 0.0;
    for (int l = 1; l <= 8; ++l) {
      for (const auto& a : random_admissible(TorusIndex(l), 20, 1000 + l)) {
        const double s = a.alpha1.radians() + a.alpha2.radians();
        const double d = a.alpha1.radians() - a.alpha2.radians();
        worst = std::max(worst, std::abs(pillow::gamma_cos_theta_quaternion(TorusIndex(l), a, 1e-4) -
                                         std::cos(2 * l * s)));
        worst = std::max(worst, std::abs(pillow::gamma_cos_theta_quaternion(TorusIndex(l), a, kPi - 1e-4) -
                                         std::cos(2 * l * d)));
      }
    }
    return Outcome{worst < 1e-3, "max deviation = " + fmt(worst) + " (< 1e-3)"};
  });

  criterion(4, "leading coefficient 2^(2l-1) sin^2l a1 sin^2l a2, degree 2l, l <= 6", [] {
    const AnglePair alphas[] = {AnglePair::exact(1, 2, 1, 2), AnglePair::exact(1, 3, 1, 4), AnglePair::exact(2, 5, 3, 7),
                                AnglePair::exact(3, 5, 5, 7), AnglePair::exact(1, 4, 2, 3)};
    double worst = 0.0;
    bool degrees = true;
    int fits = 0;
    for (int l = 1; l <= 6; ++l) {
      for (const auto& a : alphas) {
        const auto f = pillow::leading_coeff_check(TorusIndex(l), a);
        const double want = std::ldexp(1.0, 2 * l - 1) * std::pow(std::sin(a.alpha1.radians()), 2 * l) *
                            std::pow(std::sin(a.alpha2.radians()), 2 * l);
        degrees = degrees && f.degree == 2 * l;
        worst = std::max(worst, std::abs(f.leading_coeff - want) / want);
        ++fits;
      }
    }
    return Outcome{degrees && worst < 1e-6,
                   std::to_string(fits) + " fits, degrees " + (degrees ? "ok" : "WRONG") + ", max rel err " +
                       fmt(worst) + " (< 1e-6)"};
  });

  criterion(5, "delta recursion vs closed form (l <= 50) and det H (l <= 12)", [] {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, kPi);
    double worst_delta = 0.0, worst_det = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const double a1 = u(rng), a2 = u(rng);
      if (a1 <= 0.0 || a2 <= 0.0) continue;
      const auto a = AnglePair::radians(a1, a2);
      for (int m = 1; m <= 50; ++m) {
        const double r = sig::delta_recursive(50, a, m), c = sig::delta_closed(50, a, m);
        const double scale = std::max(std::abs(r), std::abs(c));
        if (scale > 0) worst_delta = std::max(worst_delta, std::abs(r - c) / scale);
      }
      for (int l = 1; l <= 12; ++l) {
        const double det = sig::determinant(sig::build_H(sig::torus_seifert(TorusIndex(l)), sig::omega_of(a)));
        const double want = sig::delta_closed(l, a, l);
        worst_det = std::max(worst_det, std::abs(det - want) / std::abs(want));
      }
    }
    return Outcome{worst_delta < 1e-9 && worst_det < 1e-8,
                   "max rel err delta " + fmt(worst_delta) + " (< 1e-9), det " + fmt(worst_det) + " (< 1e-8)"};
  });

  criterion(6, "generic signature engine == closed form, |l| <= 20, res 120", [] {
    long checked = 0, mismatched = 0;
    for (int l : nonzero_range(-20, 20)) {
      const TorusIndex idx(l);
      const auto system = sig::torus_seifert(idx);
      for (int p = 1; p < 120; ++p) {
        for (int q = 1; q < 120; ++q) {
          const auto a = verify::grid_angle(p, q, 120);
          if (!torus::is_defined(idx, a)) continue;
          ++checked;
          const auto r = sig::sigma_eval(system, a);
          if (r.nullity_warning || r.signature != sig::sigma_torus_closed(idx, a)) ++mismatched;
        }
      }
    }
    return Outcome{mismatched == 0, std::to_string(checked) + " points, " + std::to_string(mismatched) + " mismatches"};
  });

  criterion(7, "point values: h(L1) = 0, signs +1/-1 at (pi/2, pi/2), det8 = -8", [] {
    bool h1 = true;
    for (int p = 1; p < 120; ++p) {
      for (int q = 1; q < 120; ++q) h1 = h1 && torus::h_invariant(TorusIndex(1), verify::grid_angle(p, q, 120)) == 0;
    }
    const AnglePair half = AnglePair::exact(1, 2, 1, 2);
    const auto plus = pillow::intersections(TorusIndex(2), half);
    const auto minus = pillow::intersections(TorusIndex(-2), half);
    const auto frame = pillow::orientation_frame(TorusIndex(2), half, kPi / 2);
    const bool signs = plus.size() == 1 && plus[0].sign == 1 && minus.size() == 1 && minus[0].sign == -1;
    const bool det = std::abs(frame.det8 + 8.0) < 1e-8;
    std::ostringstream os;
    os << "h(L1)=0 " << (h1 ? "everywhere" : "VIOLATED") << ", sign(l=2)=" << (plus.empty() ? 0 : plus[0].sign)
       << ", sign(l=-2)=" << (minus.empty() ? 0 : minus[0].sign) << ", det8=" << fmt(frame.det8);
    return Outcome{h1 && signs && det, os.str()};
  });

  criterion(8, "symmetries on a 60x60 grid, l 1..10", [] {
    const int res = 61;
    long checked = 0, bad_h = 0, bad_neg = 0, bad_conj = 0, bad_orient = 0;
    for (int l = 1; l <= 10; ++l) {
      const TorusIndex pos(l), neg(-l);
      const auto sp = sig::torus_seifert(pos), sn = sig::torus_seifert(neg);
      for (int p = 1; p < res; ++p) {
        for (int q = 1; q < res; ++q) {
          const auto a = verify::grid_angle(p, q, res);
          if (!torus::is_defined(pos, a)) continue;
          ++checked;
          if (torus::h_invariant(neg, a) != -torus::h_invariant(pos, a)) ++bad_h;
          if (sig::sigma_torus_closed(neg, a) != -sig::sigma_torus_closed(pos, a) ||
              sig::sigma_eval(sn, a).signature != -sig::sigma_eval(sp, a).signature) {
            ++bad_neg;
          }
          const std::vector<sig::Complex> bar{std::conj(a.omega1()), std::conj(a.omega2())};
          if (sig::sigma_eval(sp, bar).signature != sig::sigma_eval(sp, a).signature) ++bad_conj;
          if (sig::symmetrized_sigma(pos, a) != sig::symmetrized_sigma(pos, a.with_inverted_omega2())) ++bad_orient;
        }
      }
    }
    std::ostringstream os;
    os << checked << " points; violations: h " << bad_h << ", sigma(-l) " << bad_neg << ", conj " << bad_conj
       << ", orientation " << bad_orient;
    return Outcome{bad_h + bad_neg + bad_conj + bad_orient == 0, os.str()};
  });

  criterion(9, "sigma = 2 + l + sign(nabla) mod 4, l 1..10, res 120", [] {
    long checked = 0, failed = 0, skipped = 0;
    for (int l = 1; l <= 10; ++l) {
      const auto r = verify::check_mod4_congruence(l, 120);
      checked += r.checked;
      failed += r.failed;
      skipped += r.skipped_nabla_zero;
    }
    return Outcome{failed == 0, std::to_string(checked) + " points, " + std::to_string(failed) + " failed, " +
                                    std::to_string(skipped) + " with nabla = 0 skipped"};
  });

  criterion(10, "signed pillowcase intersections sum to h", [] {
    long checked = 0, failed = 0;
    for (int l : nonzero_range(-8, 8)) {
      const TorusIndex idx(l);
      for (int p = 1; p < 24; ++p) {
        for (int q = 1; q < 24; ++q) {
          const auto a = verify::grid_angle(p, q, 24);
          if (!torus::is_defined(idx, a)) continue;
          ++checked;
          if (pillow::intersection_number(idx, a) != torus::h_invariant(idx, a)) ++failed;
        }
      }
      for (const auto& a : random_admissible(idx, 20, 3000 + l)) {
        ++checked;
        if (pillow::intersection_number(idx, a) != torus::h_invariant(idx, a)) ++failed;
      }
    }
    return Outcome{failed == 0, std::to_string(checked) + " (l, alpha) pairs, " + std::to_string(failed) + " failed"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
