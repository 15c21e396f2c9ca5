#include <catch_amalgamated.hpp>

#include "bclink/chebyshev.hpp"

using namespace bclink;
using cheb::eval_T;
using cheb::eval_U;

namespace {

// Power-basis evaluation through the three-term recurrence; only an oracle.
double t_recurrence(int m, double x) {
  double a = 1.0, b = x;
  if (m == 0) return a;
  for (int k = 1; k < m; ++k) {
    const double c = 2 * x * b - a;
    a = b;
    b = c;
  }
  return b;
}

double u_recurrence(int m, double x) {
  double a = 1.0, b = 2 * x;
  if (m == 0) return a;
  for (int k = 1; k < m; ++k) {
    const double c = 2 * x * b - a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("T point values") {
  CHECK(eval_T(2, 0.5) == Catch::Approx(-0.5).margin(1e-15));
  for (int m = 0; m < 30; ++m) CHECK(eval_T(m, 1.0) == Catch::Approx(1.0));
  CHECK(std::abs(eval_T(4, std::cos(kPi / 8))) < 1e-15);
  CHECK(eval_T(3, 2.0) == Catch::Approx(4 * 8 - 3 * 2));
  CHECK(eval_T(3, -2.0) == Catch::Approx(-26));
}

TEST_CASE("U point values") {
  CHECK(eval_U(1, -1.0) == -2.0);
  for (int m = 0; m < 30; ++m) CHECK(eval_U(m, 1.0) == m + 1);
  CHECK(std::abs(eval_U(2, std::cos(kPi / 3))) < 1e-15);
  CHECK(eval_U(2, 1.5) == Catch::Approx(4 * 2.25 - 1));
  CHECK(eval_U(3, -1.5) == Catch::Approx(-(8 * 3.375 - 4 * 1.5)));
}

TEST_CASE("agrees with the recurrence") {
  for (int m = 0; m <= 20; ++m) {
    for (int k = 0; k <= 200; ++k) {
      const double x = -1.2 + 2.4 * k / 200;
      CHECK(eval_T(m, x) == Catch::Approx(t_recurrence(m, x)).margin(1e-10));
      CHECK(eval_U(m, x) == Catch::Approx(u_recurrence(m, x)).margin(1e-9));
    }
  }
}

TEST_CASE("composition and Pell identities") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k < 1000; ++k) {
        const double x = -1.0 + 2.0 * (k + 0.5) / 1000;
        CHECK(std::abs(eval_T(m, eval_T(n, x)) - eval_T(m * n, x)) < 1e-10);
      }
    }
  }
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k < 1000; ++k) {
      const double x = -1.0 + 2.0 * (k + 0.5) / 1000;
      const double t = eval_T(m, x), u = eval_U(m - 1, x);
      CHECK(std::abs(1 - t * t - (1 - x * x) * u * u) < 1e-10);
    }
  }
}

TEST_CASE("roots of U") {
  CHECK(cheb::roots_U(1) == std::vector<double>{std::cos(kPi / 2)});
  const auto r3 = cheb::roots_U(3);
  REQUIRE(r3.size() == 3);
  CHECK(r3[0] == Catch::Approx(std::cos(kPi / 4)));
  CHECK(std::abs(r3[1]) < 1e-15);
  CHECK(r3[2] == Catch::Approx(std::cos(3 * kPi / 4)));
  for (int m = 1; m <= 40; ++m) {
    const auto roots = cheb::roots_U(m);
    CHECK(std::is_sorted(roots.rbegin(), roots.rend()));
    for (double x : roots) {
      CHECK(std::abs(eval_U(m, x)) < 1e-12 * (m + 1));
      // Simple root: the difference quotient across it stays away from 0.
      const double h = 1e-7;
      CHECK(std::abs(eval_U(m, x + h) - eval_U(m, x - h)) / (2 * h) > 0.1);
    }
  }
  CHECK_THROWS_AS(cheb::roots_U(0), DomainError);
}

TEST_CASE("derivative and degree guard") {
  for (int m = 1; m <= 10; ++m) {
    const double x = 0.3, h = 1e-6;
    CHECK(cheb::eval_T_derivative(m, x) == Catch::Approx((eval_T(m, x + h) - eval_T(m, x - h)) / (2 * h)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(eval_T(-1, 0.0), DomainError);
  CHECK_THROWS_AS(eval_U(1'000'001, 0.0), DomainError);
}
