#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dkp/laguerre.hpp"
#include "test_support.hpp"

using dkp::BigInt;
using dkp::laguerre_coeffs;
using dkp::laguerre_derivative;
using dkp::laguerre_eval;
using dkp::laguerre_resultant;
using dkp::laguerre_roots;
using dkp::LaguerrePoly;

TEST_CASE("explicit low-degree coefficients") {
  // L_0 = 1
  const LaguerrePoly p0 = laguerre_coeffs(0);
  CHECK(p0.denom == 1);
  REQUIRE(p0.scaled_coeffs.size() == 1);
  CHECK(p0.scaled_coeffs[0] == 1);

  // L_1 = -w + 2
  const LaguerrePoly p1 = laguerre_coeffs(1);
  CHECK(p1.denom == 1);
  REQUIRE(p1.scaled_coeffs.size() == 2);
  CHECK(p1.scaled_coeffs[0] == 2);
  CHECK(p1.scaled_coeffs[1] == -1);

  // L_2 = w^2/2 - 3w + 3, i.e. (6 - 6w + w^2)/2
  const LaguerrePoly p2 = laguerre_coeffs(2);
  CHECK(p2.denom == 2);
  REQUIRE(p2.scaled_coeffs.size() == 3);
  CHECK(p2.scaled_coeffs[0] == 6);
  CHECK(p2.scaled_coeffs[1] == -6);
  CHECK(p2.scaled_coeffs[2] == 1);

  CHECK_THROWS_AS(laguerre_coeffs(-1), std::invalid_argument);
}

TEST_CASE("value at the origin is n+1, leading sign is (-1)^n, exactly") {
  for (int n = 0; n <= 100; ++n) {
    const LaguerrePoly p = laguerre_coeffs(n);
    CHECK(p.scaled_coeffs[0] == BigInt(n + 1) * p.denom);
    CHECK(p.scaled_coeffs[n] == BigInt(n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("recurrence evaluation: pinned values") {
  CHECK(laguerre_eval(1, 2.0) == doctest::Approx(0.0).epsilon(0).scale(1));
  CHECK(laguerre_eval(2, 0.0) == doctest::Approx(3.0));
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(laguerre_eval(2, 3.0 + s3)) < 1e-13);
  CHECK(std::abs(laguerre_eval(2, 3.0 - s3)) < 1e-13);
}

TEST_CASE("recurrence agrees with exact-coefficient Horner") {
  // fixed probes plus random draws over (0, 200)
  std::vector<double> probes{0.1, 1.0, 2.0, 3.0 - std::sqrt(3.0), 3.0 + std::sqrt(3.0),
                             10.0, 100.0};
  for (int i = 0; i < 150; ++i) probes.push_back(testsup::uniform(1e-3, 200.0));

  for (int n = 1; n <= 50; ++n) {
    const LaguerrePoly p = laguerre_coeffs(n);
    for (double w : probes) {
      const double exact = testsup::eval_hp(p, w);
      const double rec = laguerre_eval(n, w);
      CHECK(std::abs(rec - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("derivative: pinned values and ladder identity") {
  for (double w : {0.5, 1.0, 7.0}) CHECK(laguerre_derivative(1, w) == doctest::Approx(-1.0));
  CHECK(std::abs(laguerre_derivative(2, 3.0)) < 1e-12);  // derivative w - 3 at w = 3
  CHECK(laguerre_derivative(0, 11.0) == 0.0);
  CHECK(laguerre_derivative(3, 0.0) == doctest::Approx(-6.0));  // -n(n+1)/2 at 0

  // w L' = n L_n - (n+1) L_{n-1} with L' from the exact coefficients
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(testsup::uniform(0.0, 29.999));
    const double w = testsup::uniform(0.01, 100.0);
    const LaguerrePoly p = laguerre_coeffs(n);
    const double lhs = w * testsup::derivative_hp(p, w);
    const double rhs = n * laguerre_eval(n, w) - (n + 1.0) * laguerre_eval(n - 1, w);
    const double scale = std::max(1.0, std::abs(laguerre_eval(n, w)));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);

    // and the library derivative agrees with the coefficient derivative
    CHECK(std::abs(laguerre_derivative(n, w) - testsup::derivative_hp(p, w)) <=
          1e-9 * std::max(1.0, std::abs(testsup::derivative_hp(p, w))));
  }
}

TEST_CASE("roots: pinned low-degree values") {
  CHECK(laguerre_roots(0).empty());

  const auto r1 = laguerre_roots(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(2.0).epsilon(1e-13));

  const auto r2 = laguerre_roots(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-13));
  CHECK(r2[1] == doctest::Approx(3.0 + std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("roots: count, positivity, ordering and residual up to n = 100") {
  for (int n : {5, 17, 33, 64, 100}) {
    const auto roots = laguerre_roots(n);
    REQUIRE(static_cast<int>(roots.size()) == n);
    CHECK(roots.front() > 0.0);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i] > roots[i - 1]);
    const LaguerrePoly p = laguerre_coeffs(n);
    for (double r : roots) {
      const double scale = std::max(1.0, std::abs(r * testsup::derivative_hp(p, r)));
      CHECK(std::abs(testsup::eval_hp(p, r)) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("coefficients satisfy the confluent equation t f'' + (2-t) f' + n f = 0") {
  for (int n : {1, 2, 5, 10, 20}) {
    const LaguerrePoly p = laguerre_coeffs(n);
    for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
      const double f = testsup::eval_hp(p, t);
      const double fp = testsup::derivative_hp(p, t);
      const double fpp = testsup::second_derivative_hp(p, t);
      const double resid = t * fpp + (2.0 - t) * fp + n * f;
      CHECK(std::abs(resid) <= 1e-9 * std::max(1.0, std::abs(f)));
    }
  }
}

TEST_CASE("subresultant PRS matches the Sylvester determinant and pinned values") {
  // independently computed exact resultants of the scaled pair (C_n, C_{n-1})
  const std::vector<std::string> pinned{
      "1", "-2", "-72", "124416", "19906560000", "-483729408000000000"};
  for (int n = 1; n <= 6; ++n) {
    const BigInt r = laguerre_resultant(n);
    CHECK(r == BigInt(pinned[n - 1]));
  }
  for (int n = 1; n <= 8; ++n) {
    const auto pn = laguerre_coeffs(n).scaled_coeffs;
    const auto pm = laguerre_coeffs(n - 1).scaled_coeffs;
    CHECK(dkp::resultant(pn, pm) == testsup::sylvester_resultant(pn, pm));
  }
  // generic pair with a known value: res(x-2, x-3) = -1
  CHECK(dkp::resultant({BigInt(-2), BigInt(1)}, {BigInt(-3), BigInt(1)}) == -1);
  // shared root forces zero: (x-1)(x-4) vs (x-1)
  CHECK(dkp::resultant({BigInt(4), BigInt(-5), BigInt(1)}, {BigInt(-1), BigInt(1)}) == 0);
}

TEST_CASE("no common roots: resultants nonzero and root sets well separated") {
  CHECK(laguerre_resultant(1) != 0);  // vacuous: L_0 = 1 has no roots
  for (int n = 2; n <= 25; ++n) CHECK(laguerre_resultant(n) != 0);

  const auto a = laguerre_roots(2);
  const auto b = laguerre_roots(1);
  double sep = 1e300;
  for (double x : a)
    for (double y : b) sep = std::min(sep, std::abs(x - y));
  CHECK(sep == doctest::Approx(0.7320508075688772).epsilon(1e-10));

  CHECK_THROWS_AS(laguerre_resultant(0), std::invalid_argument);
}
