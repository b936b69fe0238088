// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Darboux transformations of Phi'' + (eps - U(y)) Phi = 0.
//
// Standard chain of order n (distinct eps_j):
//   U_hat = U - 2 (log W_{u_1..u_n})'',   Phi_hat = W_{u_1..u_n,Phi} / W_{u_1..u_n}.
// Confluent chain (single eps_1): u_1'' + (eps_1 - U) u_1 = 0 and
//   u_j'' + (eps_1 - U) u_j = -u_{j-1}.
//
// Only values and first derivatives of the transformation functions are ever
// sampled. Higher rows of the Wronskian matrix come from the governing ODE.

#include <cstddef>
#include <functional>
#include <vector>

#include "dunkl/numerics.hpp"
#include "dunkl/pointmap.hpp"

namespace dunkl::darboux {

using numerics::FamilyFn;
using numerics::RealFn;

inline constexpr std::size_t kMaxOrder = 4;
/// Relative Wronskian floor: |W| < kWronskianFloor * (Hadamard bound) is a pole.
inline constexpr double kWronskianFloor = 1e-12;

/// A solution together with its first derivative.
struct Solution {
  RealFn value;
  RealFn deriv;
};

/// U(y) at a fixed energy, with optional analytic derivatives.
struct Background {
  RealFn u;
  /// d^k U/dy^k for k >= 1; may be empty (then orders 1..3 use stencils).
  std::function<double(double, int)> u_deriv;

  static Background from_form(const pointmap::SchrodingerForm& form, double E);

  /// d^k U/dy^k at y, k >= 0.
  double derivative(double y, int k) const;
};

enum class ChainKind { Standard, Confluent };

const char* to_string(ChainKind k) noexcept;

class DarbouxChain {
 public:
  /// Checks the ODE residuals on `grid` (1e-7 relative); throws
  /// Error(Construction) naming the worst node otherwise.
  static DarbouxChain standard(std::vector<Solution> funcs, std::vector<double> eps,
                               Background background, const std::vector<double>& grid);
  /// u_1 residual 1e-7, u_j (j >= 2) residual 1e-5 relative.
  static DarbouxChain confluent(std::vector<Solution> funcs, double eps1, Background background,
                                const std::vector<double>& grid);
  /// The identity transformation.
  static DarbouxChain empty(Background background);

  ChainKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return funcs_.size(); }
  const std::vector<Solution>& funcs() const noexcept { return funcs_; }
  const std::vector<double>& eps() const noexcept { return eps_; }
  const Background& background() const noexcept { return background_; }

  /// Spectral parameter of member j (0-based).
  double eps_of(std::size_t j) const;

  /// Largest relative ODE residual of member j over `grid`.
  double member_residual(std::size_t j, const std::vector<double>& grid) const;

 private:
  DarbouxChain(ChainKind kind, std::vector<Solution> funcs, std::vector<double> eps,
               Background background);

  ChainKind kind_ = ChainKind::Standard;
  std::vector<Solution> funcs_;
  std::vector<double> eps_;
  Background background_;
};

/// An extra column for the numerator Wronskian.
struct ExtraColumn {
  Solution phi;
  double eps = 0.0;
};

/// W(y) together with W'(y), W''(y) and the Hadamard bound of the matrix.
struct WronskianValue {
  double w = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double scale = 1.0;
};

/// Wronskian of the chain (plus an optional extra column) and its first two
/// derivatives, all from the ODE-reduced derivative matrix. Throws
/// Error(Capability) above kMaxOrder chain members.
WronskianValue wronskian_full(const DarbouxChain& chain, double y,
                              const ExtraColumn* extra = nullptr);

double wronskian(const DarbouxChain& chain, double y, const ExtraColumn* extra = nullptr);

/// U - 2 (W'' W - W'^2)/W^2. Throws Error(Singularity) where |W| is below
/// floor * scale.
double transformed_potential(const DarbouxChain& chain, double y,
                             double floor = kWronskianFloor);

/// Derivatives of the chain members and of U with respect to an external
/// parameter (the energy, in practice), all at fixed eps.
struct EnergySensitivity {
  std::vector<Solution> dfuncs;
  /// d/dE of d^k U/dy^k.
  std::function<double(double, int)> du_de;
};

/// dU_hat/dE at y, propagated through the Wronskian in forward mode.
double transformed_potential_energy_derivative(const DarbouxChain& chain,
                                              const EnergySensitivity& s, double y);

/// W_{u,Phi}/W_u. Throws Error(Singularity) where the denominator is below
/// the floor.
double transformed_solution(const DarbouxChain& chain, const ExtraColumn& phi, double y,
                            double floor = kWronskianFloor);

/// Sign changes of W on a uniform grid, refined by bisection.
std::vector<double> wronskian_zeros(const DarbouxChain& chain, double lo, double hi,
                                    std::size_t count);

/// Confluent chain of order 2 from a one-parameter solution family:
/// u_1 = family(eps1, .), u_2 = d family / d eps at eps1.
///
/// The eps step defaults to 2e-3 max(1, |eps1|). The 4-point rule's
/// truncation error is then ~1e-10, and the rounding noise of the family
/// (divided by the step) stays small enough to survive a second y-stencil.
///
/// Throws Error(Construction) if u_2 vanishes on the grid (degenerate family)
/// or the residual check fails.
DarbouxChain build_confluent_chain(const FamilyFn& family, const FamilyFn& family_deriv,
                                   double eps1, std::size_t order, Background background,
                                   const std::vector<double>& grid, double h_eps = 0.0);

struct DarbouxOutput {
  RealFn phi_hat;
  RealFn u_hat;
  /// Smallest |W| on the validation nodes.
  double wronskian_floor = 0.0;
  /// Validation nodes that survive the pole exclusion.
  std::vector<double> nodes;
  std::vector<double> poles;
};

/// Transforms phi under the chain and records the Wronskian floor on `grid`,
/// excluding nodes within `exclusion` of a Wronskian zero.
DarbouxOutput transform(const DarbouxChain& chain, const ExtraColumn& phi,
                        const std::vector<double>& grid, double exclusion = 1e-2);

/// Relative residual of the transformed equation.
struct IntertwiningResidual {
  double value = 0.0;
  double scale = 0.0;
};

/// Phi_hat'' + (eps - U_hat) Phi_hat with a stencil second derivative of step
/// h (default 1e-3 max(1,|y|)), scale |Phi_hat| + |Phi_hat''|.
IntertwiningResidual intertwining_residual(const DarbouxOutput& out, double eps, double y,
                                           double h = 0.0);

}  // namespace dunkl::darboux
