// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Point transformation between the Dunkl-Schroedinger equation and the
// conventional Schroedinger form Phi'' + (E - U_E) Phi = 0:
//
//   Phi(y) = sqrt(1 / (m[x(y)] x'(y))) x(y)^k Psi[x(y)],
//   k = nu - delta nu / 2 + delta nu / (2 mu).
//
// The map is taken on the branch x(y) > 0; negative x is reached through the
// parity of Psi, not through the coordinate change.

#include <functional>

#include "dunkl/model.hpp"

namespace dunkl::pointmap {

using model::DunklParams;
using model::EnergyPotential;
using model::MassProfile;
using model::ParityFunction;
using numerics::RealFn;

/// Invertible coordinate change x = x(y) with analytic derivatives.
struct CoordinateChange {
  RealFn x_of_y;
  RealFn d1;
  RealFn d2;
  RealFn d3;
  RealFn y_of_x;
  double y_lo = 0.0;  // open interval (y_lo, y_hi)
  double y_hi = 0.0;

  /// x = sqrt(y) on y > 0.
  static CoordinateChange sqrt_map();
  /// x = exp(y) on the whole line.
  static CoordinateChange exp_map();
  /// x = y on y > 0.
  static CoordinateChange identity();
  /// x = (c y)^r on y > 0 (c, r > 0).
  static CoordinateChange power(double c, double r);

  bool contains(double y) const { return y > y_lo && y < y_hi; }

  /// Checks d1 != 0 and y_of_x(x_of_y(y)) = y at the given points.
  void validate(const std::vector<double>& sample_points) const;
};

/// Potential of the conventional Schroedinger form. When the Darboux spectral
/// parameter is not E (see mxx_form), epsilon_shift carries the constant that
/// plays its role.
struct SchrodingerForm {
  std::function<double(double /*E*/, double /*y*/)> u_e;
  double epsilon_shift = 0.0;
  /// True when E lives entirely inside U_E and epsilon_shift is the spectral
  /// parameter (Phi'' + (eps - U_E) Phi = 0); otherwise the parameter is E.
  bool energy_in_potential = false;
  /// Optional analytic y-derivatives: u_e_deriv(E, y, k) = d^k U_E / dy^k.
  std::function<double(double, double, int)> u_e_deriv;

  double spectral_parameter(double E) const { return energy_in_potential ? epsilon_shift : E; }
};

/// Exponent k of the monomial factor x^k in the forward map.
double monomial_exponent(const DunklParams& params);

/// Phi(y) for a Dunkl-side solution psi. Throws Error(Domain) where the
/// square root is not real or y lies outside the coordinate domain.
double forward_map(const ParityFunction& psi, const CoordinateChange& coord,
                   const MassProfile& mass, const DunklParams& params, double y);

/// Psi(x) = sqrt(m(x) x'(y(x))) x^-k Phi(y(x)) for x > 0; the algebraic
/// inverse of forward_map.
double inverse_map(const RealFn& phi, const CoordinateChange& coord, const MassProfile& mass,
                   const DunklParams& params, double x);

/// U_E(y) making the mapped equation conventional:
///
///   U_E = E - 2 E m x'^2 + 2 m V_E x'^2
///         - delta nu x'^2/(2 x^2) (1 + 1/mu) + nu^2 x'^2/(2 x^2) (1 + 1/mu)
///         - delta nu m' x'^2/(2 m x) (1 + 1/mu)
///         + 3 m'^2 x'^2/(4 m^2) - x'^2 m''/(2 m) + 3 x''^2/(4 x'^2) - x'''/(2 x')
///
/// with m, V_E and their derivatives taken at x(y).
double induced_potential(const CoordinateChange& coord, const MassProfile& mass,
                         const EnergyPotential& potential, const DunklParams& params, double E,
                         double y);

/// [1 - dU_E/dE] - 2 m x'^2 [1 - dV_E/dE], with dU_E/dE by parameter
/// differentiation of induced_potential. Vanishes for E-independent x(y).
double energy_relation_residual(const CoordinateChange& coord, const MassProfile& mass,
                                const EnergyPotential& potential, const DunklParams& params,
                                double E, double y);

/// For m = p x^q and x = e^y the Dunkl parameters collapse into a constant:
/// Phi'' + (eps - U_E) Phi = 0 with eps = (q+1) delta nu - nu^2 and
/// U_E(y) = (q+1)^2/4 - 2 p e^{(q+2) y} (E - V_E(e^y)).
SchrodingerForm mxx_form(double p, int q, const EnergyPotential& potential,
                         const DunklParams& params);

/// Inverse of the mxx_form potential relation at x > 0:
/// V_E(x) = E - x^{-q-2} [(q+1)^2/(8p) - U_E(log x)/(2p)].
double mxx_potential_from_ue(double E, double ue_at_log_x, double p, double q, double x);

/// Odd-parity mass with the coordinate chosen so that 2 m x'^2 = 1: the Dunkl
/// parameters drop out and the mapped equation is Phi'' + (E - W_E) Phi = 0
/// with W_E = V_E + 7 m'^2/(32 m^3) - m''/(8 m^2), everything at x(y).
double odd_mass_reduced_potential(const MassProfile& mass, const EnergyPotential& potential,
                                  double E, double x);

/// The coordinate solving 2 m x'^2 = 1 for m = p x^q (q odd, p > 0) on x > 0.
CoordinateChange odd_mass_coordinate(double p, int q);

}  // namespace dunkl::pointmap
