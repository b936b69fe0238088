// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace dunkl::numerics {

using RealFn = std::function<double(double)>;
using FamilyFn = std::function<double(double, double)>;  // (parameter, y)

/// A function sampled on a strictly increasing grid, optionally with its
/// first derivative at the same nodes.
struct GridFunction {
  std::vector<double> nodes;
  std::vector<double> values;
  std::optional<std::vector<double>> deriv_values;

  static GridFunction sample(const RealFn& f, std::vector<double> nodes);
  static GridFunction sample(const RealFn& f, const RealFn& df, std::vector<double> nodes);

  std::size_t size() const noexcept { return nodes.size(); }

  /// Throws Error(Construction) if the invariants do not hold.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  long n_evals = 0;
};

/// Multiplier applied to the library's default verification tolerances,
/// read once from DUNKL_DARBOUX_TOL (positive float; 1 when unset or invalid).
double tolerance_scale();

/// `count` uniformly spaced nodes covering [lo, hi] (both included).
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Default spatial stencil step, 1e-4 * max(1, |y|).
double default_step(double y);
/// Default parameter step, 1e-5 * max(1, |eps|).
double default_parameter_step(double eps);

/// Central-difference derivative of order 1, 2 or 3 with one Richardson
/// step; truncation error O(h^4). Samples f on [y - 2h, y + 2h].
///
/// Throws EvaluationError (carrying the node) on a non-finite sample.
double derivative(const RealFn& f, double y, int order, double h);
double derivative(const RealFn& f, double y, int order);

/// Integral of f over the real line. Each half line is mapped onto a finite
/// interval and integrated by adaptive Gauss-Kronrod refinement; the split is
/// exactly at 0 so weight factors like |x|^a never straddle a panel.
///
/// `decay_scale` is the length s with |f(x)| <= C exp(-x^2/s^2) outside a
/// core region. Samples beyond 40 s are taken as zero.
///
/// `rel_tol` is the refinement target. Throws AccuracyError (with the best
/// estimate) if the error estimate stays above 1000 rel_tol max(1, |value|).
QuadratureResult integrate_real_line(const RealFn& f, double decay_scale, double rel_tol = 1e-12);

/// Integral of f over [a, b] by adaptive Gauss-Kronrod refinement. Same
/// accuracy contract as integrate_real_line.
QuadratureResult integrate_interval(const RealFn& f, double a, double b, double rel_tol = 1e-12);

/// d/d(eps) family(eps, y) at eps0: 4-point central difference, which is the
/// Richardson extrapolation of the 2-point rule.
double parameter_derivative(const FamilyFn& family, double eps0, double y, double h_eps);
double parameter_derivative(const FamilyFn& family, double eps0, double y);

}  // namespace dunkl::numerics
