// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dunkl/error.hpp"

namespace dunkl::numerics {
namespace {

double checked(const RealFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw EvaluationError("evaluation error: non-finite sample at " + std::to_string(x), x);
  }
  return v;
}

double stencil(const RealFn& f, double y, int order, double h) {
  switch (order) {
    case 1:
      return (checked(f, y + h) - checked(f, y - h)) / (2.0 * h);
    case 2:
      return (checked(f, y + h) - 2.0 * checked(f, y) + checked(f, y - h)) / (h * h);
    case 3:
      return (checked(f, y + 2.0 * h) - 2.0 * checked(f, y + h) + 2.0 * checked(f, y - h) -
              checked(f, y - 2.0 * h)) /
             (2.0 * h * h * h);
    default:
      fail(ErrorKind::Capability, "derivative: order must be 1, 2 or 3");
  }
}

constexpr double kCutoffScales = 40.0;
constexpr unsigned kMaxDepth = 12;

}  // namespace

GridFunction GridFunction::sample(const RealFn& f, std::vector<double> nodes) {
  GridFunction g;
  g.values.reserve(nodes.size());
  for (double x : nodes) g.values.push_back(f(x));
  g.nodes = std::move(nodes);
  g.validate();
  return g;
}

GridFunction GridFunction::sample(const RealFn& f, const RealFn& df, std::vector<double> nodes) {
  GridFunction g;
  g.values.reserve(nodes.size());
  std::vector<double> d;
  d.reserve(nodes.size());
  for (double x : nodes) {
    g.values.push_back(f(x));
    d.push_back(df(x));
  }
  g.nodes = std::move(nodes);
  g.deriv_values = std::move(d);
  g.validate();
  return g;
}

void GridFunction::validate() const {
  if (values.size() != nodes.size() ||
      (deriv_values && deriv_values->size() != nodes.size())) {
    fail(ErrorKind::Construction, "GridFunction: array lengths differ");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i]) || !std::isfinite(values[i]) ||
        (deriv_values && !std::isfinite((*deriv_values)[i]))) {
      fail(ErrorKind::Construction, "GridFunction: non-finite entry at index " + std::to_string(i));
    }
    if (i > 0 && !(nodes[i] > nodes[i - 1])) {
      fail(ErrorKind::Construction, "GridFunction: nodes not strictly increasing");
    }
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo < hi)) {
    fail(ErrorKind::Argument, "linspace: need lo < hi and count >= 2");
  }
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double tolerance_scale() {
  static const double scale = [] {
    const char* env = std::getenv("DUNKL_DARBOUX_TOL");
    if (env == nullptr) return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    return (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) ? v : 1.0;
  }();
  return scale;
}

double default_step(double y) { return 1e-4 * std::max(1.0, std::fabs(y)); }

double default_parameter_step(double eps) { return 1e-5 * std::max(1.0, std::fabs(eps)); }

double derivative(const RealFn& f, double y, int order, double h) {
  if (!(h > 0.0)) fail(ErrorKind::Domain, "derivative: step must be positive");
  const double coarse = stencil(f, y, order, h);
  const double fine = stencil(f, y, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

double derivative(const RealFn& f, double y, int order) {
  return derivative(f, y, order, default_step(y));
}

QuadratureResult integrate_real_line(const RealFn& f, double decay_scale, double rel_tol) {
  if (!(decay_scale > 0.0) || !std::isfinite(decay_scale)) {
    fail(ErrorKind::Domain, "integrate_real_line: decay_scale must be positive");
  }
  if (!(rel_tol > 0.0)) fail(ErrorKind::Domain, "integrate_real_line: rel_tol must be positive");
  using boost::math::quadrature::gauss_kronrod;
  const double cutoff = kCutoffScales * decay_scale;
  long evals = 0;

  // x = decay_scale * t. The core [0, 1] goes to tanh-sinh, which copes with
  // algebraic endpoint behaviour such as |x|^a at the origin; the tail [1, inf)
  // goes to the mapped Gauss-Kronrod rule.
  boost::math::quadrature::tanh_sinh<double> core_rule;
  auto half_line = [&](double sign) {
    auto g = [&](double t) {
      ++evals;
      const double x = sign * decay_scale * t;
      if (std::fabs(x) > cutoff) return 0.0;
      return decay_scale * checked(f, x);
    };
    double core_err = 0.0, tail_err = 0.0;
    const double core = core_rule.integrate(g, 0.0, 1.0, rel_tol, &core_err);
    const double tail = gauss_kronrod<double, 15>::integrate(
        g, 1.0, std::numeric_limits<double>::infinity(), kMaxDepth, rel_tol, &tail_err);
    return std::pair{core + tail, core_err + tail_err};
  };

  const auto [right, right_err] = half_line(1.0);
  const auto [left, left_err] = half_line(-1.0);
  QuadratureResult r{right + left, right_err + left_err, evals};
  if (r.est_abs_error > 1e3 * rel_tol * std::max(1.0, std::fabs(r.value))) {
    throw AccuracyError("accuracy error: integrate_real_line did not reach tolerance", r.value,
                        r.est_abs_error);
  }
  return r;
}

QuadratureResult integrate_interval(const RealFn& f, double a, double b, double rel_tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b)) {
    fail(ErrorKind::Domain, "integrate_interval: need finite a <= b");
  }
  if (!(rel_tol > 0.0)) fail(ErrorKind::Domain, "integrate_interval: rel_tol must be positive");
  using boost::math::quadrature::gauss_kronrod;
  long evals = 0;
  auto g = [&](double x) {
    ++evals;
    return checked(f, x);
  };
  double err = 0.0;
  const double v = gauss_kronrod<double, 15>::integrate(g, a, b, kMaxDepth, rel_tol, &err);
  QuadratureResult r{v, err, evals};
  if (r.est_abs_error > 1e3 * rel_tol * std::max(1.0, std::fabs(r.value))) {
    throw AccuracyError("accuracy error: integrate_interval did not reach tolerance", r.value,
                        r.est_abs_error);
  }
  return r;
}

double parameter_derivative(const FamilyFn& family, double eps0, double y, double h_eps) {
  if (!(h_eps > 0.0)) fail(ErrorKind::Domain, "parameter_derivative: step must be positive");
  auto at = [&](double e) {
    const double v = family(e, y);
    if (!std::isfinite(v)) {
      throw EvaluationError("evaluation error: non-finite family sample at eps=" +
                                std::to_string(e),
                            e);
    }
    return v;
  };
  return (-at(eps0 + 2.0 * h_eps) + 8.0 * at(eps0 + h_eps) - 8.0 * at(eps0 - h_eps) +
          at(eps0 - 2.0 * h_eps)) /
         (12.0 * h_eps);
}

double parameter_derivative(const FamilyFn& family, double eps0, double y) {
  return parameter_derivative(family, eps0, y, default_parameter_step(eps0));
}

}  // namespace dunkl::numerics
