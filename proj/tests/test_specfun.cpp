// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "doctest.h"
#include "dunkl/error.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl::specfun;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); }

// Plain truncated sum of 1F1(-n; b; z), term by term.
double truncated_sum(int n, double b, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * z / ((b + k) * (k + 1));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("kummer_m at z = 0 is one") {
  for (double a : {-3.0, -0.5, 0.0, 0.25, 4.0}) {
    for (double b : {0.5, 1.0, 2.5}) CHECK(kummer_m(a, b, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("kummer_m(-1, 2, 1) truncates to 1 - z/2") {
  const auto m = kummer_m(-1.0, 2.0, 1.0);
  CHECK(std::fabs(m.value - 0.5) < 1e-15);
  CHECK(m.est_abs_error >= 0.0);
}

TEST_CASE("Kummer transformation at (0.25, 1.5, 2)") {
  const double lhs = kummer_m(0.25, 1.5, 2.0).value;
  const double rhs = std::exp(2.0) * kummer_m(1.25, 1.5, -2.0).value;
  CHECK(std::fabs(lhs - rhs) / std::fabs(lhs) < 1e-10);
  CHECK(rel(lhs, boost::math::hypergeometric_1F1(0.25, 1.5, 2.0)) < 1e-12);
}

TEST_CASE("kummer_m against an independent implementation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ua(-6.0, 6.0), ub(0.3, 8.0), uz(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    const double ref = boost::math::hypergeometric_1F1(a, b, z);
    const double got = kummer_m(a, b, z).value;
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(z);
    CHECK(std::fabs(got - ref) <= 1e-9 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("Kummer identity on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ua(-5.0, 5.0), ub(0.2, 6.0), uz(-30.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    const double lhs = kummer_m(a, b, z).value;
    const double rhs = std::exp(z) * kummer_m(b - a, b, -z).value;
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(z);
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("terminating series equals the truncated sum") {
  for (int n = 0; n <= 20; ++n) {
    for (double b : {0.5, 1.5, 3.0}) {
      for (double z : {-3.0, -0.7, 0.4, 2.0, 5.0}) {
        const double want = truncated_sum(n, b, z);
        const double got = kummer_m(-n, b, z).value;
        CAPTURE(n);
        CAPTURE(z);
        // both sums round; allow a few ulps of the largest term
        double big = 1.0, term = 1.0;
        for (int k = 0; k < n; ++k) {
          term *= std::fabs((k - n) * z / ((b + k) * (k + 1)));
          big = std::max(big, term);
        }
        CHECK(std::fabs(got - want) <= 64 * 2.2e-16 * big * (n + 1));
      }
    }
  }
}

TEST_CASE("kummer_m domain errors") {
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), dunkl::Error);
  CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), dunkl::Error);
  CHECK_THROWS_AS(kummer_m(NAN, 1.0, 1.0), dunkl::Error);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, INFINITY), dunkl::Error);
  CHECK_THROWS_AS(kummer_m(1.0, 1.0, kKummerMaxAbsZ * 1.01), dunkl::Error);
  try {
    kummer_m(1.0, -1.0, 0.5);
  } catch (const dunkl::Error& e) {
    CHECK(e.kind() == dunkl::ErrorKind::Domain);
  }
}

TEST_CASE("kummer_m_derivative matches a difference quotient") {
  const double a = 0.7, b = 1.9, z = 1.3, h = 1e-5;
  const double fd = (kummer_m(a, b, z + h).value - kummer_m(a, b, z - h).value) / (2 * h);
  CHECK(kummer_m_derivative(a, b, z).value == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("assoc_laguerre small degrees") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    for (double z : {0.0, 1.0, 3.5}) CHECK(assoc_laguerre(0.0, alpha, z).value == doctest::Approx(1.0));
  }
  CHECK(assoc_laguerre(1.0, 0.0, 2.0).value == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(assoc_laguerre(2.0, 1.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(assoc_laguerre(1.0, -1.0, 1.0), dunkl::Error);
  CHECK_THROWS_AS(assoc_laguerre(1.0, -3.0, 1.0), dunkl::Error);
}

TEST_CASE("assoc_laguerre agrees with the standard library for integer degree") {
  for (unsigned n = 0; n <= 15; ++n) {
    for (unsigned m : {0u, 1u, 3u}) {
      for (double z : {0.1, 1.7, 6.0, 12.0}) {
        const double ref = std::assoc_laguerre(n, m, z);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(z);
        CHECK(rel(assoc_laguerre(n, m, z).value, ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("Laguerre three-term recurrence") {
  // (n+1) L_{n+1} = (2n + 1 + alpha - z) L_n - (n + alpha) L_{n-1}
  for (int n = 1; n < 15; ++n) {
    for (double alpha : {0.0, 0.75, 2.5}) {
      for (double z : {0.3, 2.0, 7.5}) {
        const double lp = assoc_laguerre(n + 1, alpha, z).value;
        const double l0 = assoc_laguerre(n, alpha, z).value;
        const double lm = assoc_laguerre(n - 1, alpha, z).value;
        const double lhs = (n + 1) * lp;
        const double rhs = (2 * n + 1 + alpha - z) * l0 - (n + alpha) * lm;
        const double scale = std::fabs((n + 1) * lp) + std::fabs((2 * n + 1 + alpha - z) * l0) +
                             std::fabs((n + alpha) * lm);
        CHECK(std::fabs(lhs - rhs) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("assoc_laguerre of real degree through 1F1") {
  const double d = 1.37, alpha = 0.8, z = 2.2;
  const double binom = std::tgamma(d + alpha + 1) / (std::tgamma(d + 1) * std::tgamma(alpha + 1));
  const double want = binom * boost::math::hypergeometric_1F1(-d, alpha + 1, z);
  CHECK(rel(assoc_laguerre(d, alpha, z).value, want) < 1e-12);
  const double h = 1e-5;
  const double fd = (assoc_laguerre(d, alpha, z + h).value - assoc_laguerre(d, alpha, z - h).value) / (2 * h);
  CHECK(assoc_laguerre_derivative(d, alpha, z).value == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("bessel_i values") {
  CHECK(bessel_i(0, 0.0).value == 1.0);
  CHECK(bessel_i(1, 0.0).value == 0.0);
  const double h = 1e-4;
  const double fd = (bessel_i(0, 1.3 + h).value - bessel_i(0, 1.3 - h).value) / (2 * h);
  CHECK(std::fabs(fd - bessel_i(1, 1.3).value) < 1e-8);
  for (double z : {0.01, 0.5, 3.0, 16.0, 17.5, 25.0, 60.0, 300.0}) {
    CAPTURE(z);
    CHECK(rel(bessel_i(0, z).value, std::cyl_bessel_i(0.0, z)) < 1e-12 * std::max(1.0, std::cyl_bessel_i(0.0, z)));
    CHECK(std::fabs(bessel_i(0, z).value / std::cyl_bessel_i(0.0, z) - 1.0) < 1e-12);
    CHECK(std::fabs(bessel_i(1, z).value / std::cyl_bessel_i(1.0, z) - 1.0) < 1e-12);
  }
  // parity
  CHECK(bessel_i(0, -2.0).value == doctest::Approx(bessel_i(0, 2.0).value));
  CHECK(bessel_i(1, -2.0).value == doctest::Approx(-bessel_i(1, 2.0).value));
  CHECK_THROWS_AS(bessel_i(2, 1.0), dunkl::Error);
  CHECK_THROWS_AS(bessel_i(0, kBesselMaxAbsZ * 1.01), dunkl::Error);
}

TEST_CASE("bessel_i branches agree at the crossover") {
  for (int order : {0, 1}) {
    for (double z : {kBesselSeriesCrossover * (1 - 1e-9), kBesselSeriesCrossover,
                     kBesselSeriesCrossover * (1 + 1e-9)}) {
      const double s = detail::bessel_i_series(order, z).value;
      const double a = detail::bessel_i_asymptotic(order, z).value;
      CHECK(std::fabs(s - a) / std::fabs(s) < 1e-12);
    }
  }
}

TEST_CASE("rgamma") {
  for (double x : {0.3, 1.0, 2.5, 7.25, -0.5, -2.7}) {
    CHECK(rgamma(x) == doctest::Approx(1.0 / std::tgamma(x)).epsilon(1e-13));
  }
  for (double x : {0.0, -1.0, -4.0}) CHECK(rgamma(x) == 0.0);
}

TEST_CASE("error estimates are nonnegative") {
  CHECK(kummer_m(0.3, 1.2, -7.0).est_abs_error >= 0.0);
  CHECK(assoc_laguerre(2.3, 0.5, 3.0).est_abs_error >= 0.0);
  CHECK(bessel_i(1, 30.0).est_abs_error >= 0.0);
}
