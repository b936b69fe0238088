// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include "doctest.h"
#include "dunkl/error.hpp"
#include "dunkl/numerics.hpp"

using namespace dunkl::numerics;

TEST_CASE("derivative examples") {
  CHECK(std::fabs(derivative([](double x) { return x * x; }, 3.0, 1, 1e-3) - 6.0) < 1e-8);
  CHECK(std::fabs(derivative([](double x) { return std::sin(x); }, 0.0, 3, 1e-2) + 1.0) < 1e-6);
  for (double y : {-4.0, 0.0, 10.0}) {
    for (double h : {1e-4, 0.1}) {
      CHECK(std::fabs(derivative([](double) { return 2.5; }, y, 1, h)) < 1e-12);
    }
  }
}

TEST_CASE("derivative of quintic polynomials") {
  auto p = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x + 0.3 * x * x * x - 0.1 * std::pow(x, 4) + 0.02 * std::pow(x, 5); };
  auto p1 = [](double x) { return -2.0 + x + 0.9 * x * x - 0.4 * x * x * x + 0.1 * std::pow(x, 4); };
  auto p2 = [](double x) { return 1.0 + 1.8 * x - 1.2 * x * x + 0.4 * x * x * x; };
  for (double y : {-2.0, -0.3, 0.0, 1.1, 3.0}) {
    CHECK(std::fabs(derivative(p, y, 1) - p1(y)) < 1e-8);
    // the stencil is exact on quintics, so a wide step only trims rounding
    CHECK(std::fabs(derivative(p, y, 2, 1e-2) - p2(y)) < 1e-8);
  }
}

TEST_CASE("derivative rejects bad input") {
  CHECK_THROWS_AS(derivative([](double x) { return x; }, 0.0, 4, 1e-3), dunkl::Error);
  CHECK_THROWS_AS(derivative([](double x) { return x; }, 0.0, 1, 0.0), dunkl::Error);
  try {
    derivative([](double x) { return x > 1.0005 ? std::numeric_limits<double>::infinity() : x; }, 1.0, 1, 1e-3);
    FAIL("expected an evaluation error");
  } catch (const dunkl::EvaluationError& e) {
    CHECK(e.node() > 1.0005);
  }
}

TEST_CASE("integrate_real_line examples") {
  const auto g = integrate_real_line([](double x) { return std::exp(-x * x); }, 1.0);
  CHECK(std::fabs(g.value - std::sqrt(M_PI)) < 1e-9);
  CHECK(g.est_abs_error >= 0.0);
  CHECK(g.n_evals > 0);
  CHECK(std::fabs(integrate_real_line([](double x) { return x * std::exp(-x * x); }, 1.0).value) < 1e-10);
  const auto d = integrate_real_line([](double x) { return 2 * std::fabs(x * x * x) * std::exp(-x * x); }, 1.0);
  CHECK(std::fabs(d.value - 2.0) < 1e-8);
  CHECK(d.est_abs_error <= 1e-9 * std::max(1.0, d.value));
}

TEST_CASE("integrate_real_line with a wide Gaussian and a kink at zero") {
  const double s = 7.0;
  const auto r = integrate_real_line([s](double x) { return std::exp(-x * x / (s * s)); }, s);
  CHECK(r.value == doctest::Approx(s * std::sqrt(M_PI)).epsilon(1e-10));
  // |x|^{0.3} exp(-x^2): 2 * Gamma(0.65)/2
  const auto k = integrate_real_line([](double x) { return std::pow(std::fabs(x), 0.3) * std::exp(-x * x); }, 1.0);
  CHECK(k.value == doctest::Approx(std::tgamma(0.65)).epsilon(1e-10));
}

TEST_CASE("quadrature linearity") {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(x); };
  auto g = [](double x) { return x * x * std::exp(-2 * x * x); };
  const double a = 2.5, b = -1.25;
  const auto rf = integrate_real_line(f, 1.0);
  const auto rg = integrate_real_line(g, 1.0);
  const auto rs = integrate_real_line([&](double x) { return a * f(x) + b * g(x); }, 1.0);
  const double bound = std::fabs(a) * rf.est_abs_error + std::fabs(b) * rg.est_abs_error + rs.est_abs_error + 1e-14;
  CHECK(std::fabs(rs.value - (a * rf.value + b * rg.value)) <= bound);
  // cos(x) e^{-x^2} integrates to sqrt(pi) e^{-1/4}
  CHECK(rf.value == doctest::Approx(std::sqrt(M_PI) * std::exp(-0.25)).epsilon(1e-11));
}

TEST_CASE("integrate_real_line reports non-convergence") {
  try {
    integrate_real_line([](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3)); }, 1.0, 1e-14);
    WARN("singular integrand converged");
  } catch (const dunkl::AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.estimated_error() >= 0.0);
  }
}

TEST_CASE("integrate_interval") {
  const auto r = integrate_interval([](double x) { return 1.0 / x; }, 1.0, 5.0);
  CHECK(r.value == doctest::Approx(std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("parameter_derivative examples") {
  CHECK(std::fabs(parameter_derivative([](double e, double y) { return e * y; }, 2.0, 5.0, 1e-3) - 5.0) < 1e-10);
  CHECK(std::fabs(parameter_derivative([](double e, double y) { return std::exp(e * y); }, 0.0, 1.0) - 1.0) < 1e-8);
  CHECK(std::fabs(parameter_derivative([](double, double y) { return y * y; }, 3.0, 2.0)) < 1e-12);
}

TEST_CASE("parameter_derivative converges under step halving") {
  auto fam = [](double e, double y) { return std::sin(e * y) * std::exp(-e); };
  const double e0 = 0.8, y = 1.7;
  const double exact = std::exp(-e0) * (y * std::cos(e0 * y) - std::sin(e0 * y));
  const double h = 1e-2;
  const double d1 = parameter_derivative(fam, e0, y, h);
  const double d2 = parameter_derivative(fam, e0, y, h / 2);
  CHECK(std::fabs(d2 - d1) < 1e-8);
  CHECK(std::fabs(d2 - exact) <= std::fabs(d1 - exact));
}

TEST_CASE("GridFunction invariants") {
  auto ok = GridFunction::sample([](double x) { return x * x; }, [](double x) { return 2 * x; }, linspace(0, 1, 5));
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.size() == 5);
  GridFunction bad = ok;
  bad.nodes[2] = bad.nodes[1];
  CHECK_THROWS_AS(bad.validate(), dunkl::Error);
  bad = ok;
  bad.values.pop_back();
  CHECK_THROWS_AS(bad.validate(), dunkl::Error);
  bad = ok;
  bad.values[0] = NAN;
  CHECK_THROWS_AS(bad.validate(), dunkl::Error);
}

TEST_CASE("linspace and default steps") {
  const auto v = linspace(-1.0, 2.0, 4);
  REQUIRE(v.size() == 4);
  CHECK(v.front() == -1.0);
  CHECK(v.back() == 2.0);
  CHECK(v[1] == doctest::Approx(0.0));
  CHECK(default_step(0.5) == 1e-4);
  CHECK(default_step(-30.0) == doctest::Approx(3e-3));
  CHECK(default_parameter_step(-2.0) == doctest::Approx(2e-5));
  CHECK(tolerance_scale() > 0.0);
}
