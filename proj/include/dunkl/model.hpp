// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// The one-dimensional Dunkl-Schroedinger problem with position-dependent mass
// m(x) and energy-dependent potential V_E(x):
//
//   D (1/(2m)) D Psi + (E - V_E) Psi = 0,   D = d/dx + nu/x (1 - R),
//
// where the reflection R acts on parity eigenfunctions as the scalar delta
// (solution parity) and on the mass as mu (mass parity).

#include <functional>

#include "dunkl/numerics.hpp"

namespace dunkl::model {

using numerics::QuadratureResult;
using numerics::RealFn;

/// (nu, delta, mu). delta and mu are +1 or -1.
struct DunklParams {
  double nu = 0.0;
  int delta = 1;
  int mu = 1;

  DunklParams() = default;
  DunklParams(double nu_, int delta_, int mu_);
};

struct MassProfile {
  RealFn m;
  RealFn m1;  // m'
  RealFn m2;  // m''
  int parity = 1;

  static MassProfile constant(double value);
  /// p exp(-q x^2)
  static MassProfile gaussian(double p, double q);
  /// p x^q, q an integer (parity (-1)^q).
  static MassProfile power(double p, int q);

  /// Checks m != 0 and m(-x) = parity m(x) at the given points.
  void validate(const std::vector<double>& sample_points) const;
};

using EnergyFn = std::function<double(double /*E*/, double /*x*/)>;

struct EnergyPotential {
  EnergyFn v;
  EnergyFn dv_dE;

  /// Wraps an energy-independent potential.
  static EnergyPotential independent(RealFn v);
};

struct DunklSystem {
  DunklParams params;
  MassProfile mass;
  EnergyPotential potential;

  DunklSystem(DunklParams params_, MassProfile mass_, EnergyPotential potential_);
};

/// A function with definite parity. f2 (second derivative) is needed only by
/// the residual.
struct ParityFunction {
  RealFn f;
  RealFn f1;
  RealFn f2;
  int parity = 1;

  /// Builds the whole-line function from its values on x > 0:
  /// f(-x) = parity f(x), f'(-x) = -parity f'(x), f''(-x) = parity f''(x).
  static ParityFunction from_half_line(RealFn g, RealFn g1, RealFn g2, int parity);

  double operator()(double x) const { return f(x); }
};

enum class Admissibility { Ok, RequiresCaseAnalysis, Rejected };

const char* to_string(Admissibility a) noexcept;

/// Exponent of the Hilbert-space weight |x|^(2nu - delta nu + delta nu / mu).
double weight_exponent(const DunklParams& params);

/// For energy-independent potentials the weight exponent must exceed -1;
/// energy-dependent potentials need a case-by-case analysis.
Admissibility admissible(const DunklParams& params, bool energy_dependent);

/// (D f)(x) = f'(x) + (nu/x)(1 - parity) f(x). Throws Error(Domain) at x = 0.
double dunkl_apply(const ParityFunction& f, double x, const DunklParams& params);

/// Residual of the expanded Dunkl-Schroedinger equation together with the
/// sum of absolute values of its terms (a natural scale for relative checks).
struct Residual {
  double value = 0.0;
  double scale = 0.0;
};

/// Left-hand side of the expanded equation
///   Psi''/(2m) + c1 Psi' + c0 Psi
/// at x. Throws Error(Contract) if psi.parity != params.delta, Error(Domain)
/// at x = 0.
Residual dunkl_residual_terms(const DunklSystem& system, const ParityFunction& psi, double E,
                              double x);
double dunkl_residual(const DunklSystem& system, const ParityFunction& psi, double E, double x);

/// |Psi|^2 |x|^w (1 - dV_E/dE).
double probability_density(const DunklSystem& system, const ParityFunction& psi, double E,
                           double x);

/// Integral of the probability density over the real line.
QuadratureResult modified_norm(const DunklSystem& system, const ParityFunction& psi, double E,
                               double decay_scale = 1.0);

}  // namespace dunkl::model
