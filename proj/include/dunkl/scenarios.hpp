// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Worked systems.
//
// gaussian-mass        m = p exp(-q x^2), V_E = E - 2pE exp(q x^2) - (p/2) exp(q x^2),
//                      x(y) = sqrt(y). Solutions through Kummer's function.
// harmonic-energy      m = 1/2, V_E = x^2/E, x(y) = exp(y). Solutions through
//                      associated Laguerre functions; Darboux chains live here.
// harmonic-energy-pdm  m = x^2/2, V_E = E + 1/E - E/x^2 - 2/x^4, x(y) = exp(y);
//                      maps onto the same Schroedinger form as harmonic-energy
//                      after a redefinition of nu.

#include <array>
#include <string>
#include <vector>

#include "dunkl/darboux.hpp"
#include "dunkl/model.hpp"
#include "dunkl/pointmap.hpp"

namespace dunkl::scenarios {

using model::DunklParams;
using model::DunklSystem;
using model::ParityFunction;

inline constexpr const char* kGaussianMass = "gaussian-mass";
inline constexpr const char* kHarmonicEnergy = "harmonic-energy";
inline constexpr const char* kHarmonicEnergyPdm = "harmonic-energy-pdm";

const std::vector<std::string>& scenario_names();
bool is_scenario(const std::string& name);

/// sqrt(1 - 4 delta nu + 4 nu^2) = |1 - 2 delta nu|.
double root_term(const DunklParams& params);

enum class EnergyRule { Gaussian, Harmonic };

const char* to_string(EnergyRule r) noexcept;

/// Gaussian:  E = n + (1 + delta nu)/2 + root/4.
/// Harmonic:  E = (4n + 2 + root)^(2/3).
double bound_state_energy(int n, const DunklParams& params, EnergyRule rule);

enum class ParityClass { Odd, Even, NoAdmissibleParity };

const char* to_string(ParityClass c) noexcept;

struct ParityExponent {
  double value = 0.0;
  ParityClass cls = ParityClass::NoAdmissibleParity;
};

/// Exponent 1/2 - nu + root/2 of the monomial that fixes the parity of the
/// solutions, with its classification. For delta = +1 and nu < 1/2 the
/// exponent 1 - 2nu lies in (0, 2) and no parity matches.
ParityExponent parity_exponent(const DunklParams& params);

// ---------------------------------------------------------------- gaussian-mass

DunklSystem gaussian_system(const DunklParams& params, double p = 1.0, double q = 1.0);
pointmap::CoordinateChange gaussian_coordinate();

/// Throws Error(Contract) outside delta = -1, nu > -1/2 and delta = +1, nu >= 1/2.
void require_gaussian_admissible(const DunklParams& params);

/// exp(-x^2) x^s M(1/2 - E + delta nu/2 + root/4; 1 + root/2; x^2), s the
/// parity exponent, with analytic first and second derivatives (p = q = 1).
ParityFunction gaussian_solution(const DunklParams& params, double E);

/// The same solution written as x^s M(1/2 + E - delta nu/2 + root/4; 1 + root/2; -x^2).
double gaussian_solution_negative_argument(const DunklParams& params, double E, double x);

/// 2 * integral of the probability density (the doubled convention used for
/// this system).
numerics::QuadratureResult gaussian_norm(const DunklParams& params, const ParityFunction& psi,
                                         double E);

/// Printed polynomial bound states, index 0..5: odd n = 0, 1, 2 (nu = 1/2,
/// delta = -1) then even n = 0, 1, 2 (nu = 1/2, delta = +1).
ParityFunction printed_bound_state(int index);
/// Same list with the odd n = 2 polynomial taken from the terminating series
/// 1 - x^2 + x^4/6.
ParityFunction corrected_bound_state(int index);
DunklParams bound_state_params(int index);
int bound_state_level(int index);

// -------------------------------------------------------------- harmonic-energy

DunklSystem harmonic_system(const DunklParams& params);

/// U_E(y) = 1/4 - E e^{2y} + e^{4y}/E and its y-derivatives.
double harmonic_u(double E, double y);
double harmonic_u_deriv(double E, double y, int k);

/// Schroedinger form with spectral parameter delta nu - nu^2.
pointmap::SchrodingerForm harmonic_form(const DunklParams& params);
darboux::Background harmonic_background(double E);

/// exp(sign x^2/(2 sqrt E)) x^s L^{root/2}_{-1/2 + E^{3/2}/4 - root/4}(x^2/sqrt E).
/// sign = -1 solves the equation; sign = +1 is kept for comparison.
ParityFunction harmonic_initial_solution(const DunklParams& params, double E, int sign = -1);

/// Mapped solutions as a family in the spectral parameter:
///   Phi(eps, y) = exp(-z/2 + y r/2) L^{r/2}_{-1/2 + E^{3/2}/4 - r/4}(z),
///   r = sqrt(1 - 4 eps), z = e^{2y}/sqrt(E).
struct SolutionFamily {
  numerics::FamilyFn value;
  numerics::FamilyFn deriv;
  darboux::Solution at(double eps) const;
};
SolutionFamily harmonic_family(double E);

inline constexpr double kStandardEps1 = 0.25;
inline constexpr double kStandardEps2 = -0.75;
inline constexpr double kConfluentEps1 = -2.0;

/// Default mapped-side validation grid, y in [-2, 1], 400 nodes.
std::vector<double> default_y_grid();
/// Default Dunkl-side grid, x in [0.1, 4], 400 nodes.
std::vector<double> default_x_grid();

/// (u1, u2) at eps = 1/4, -3/4; order 1 keeps u1 only.
darboux::DarbouxChain standard_chain_u12(double E, std::size_t order = 2,
                                         const std::vector<double>& grid = default_y_grid());
/// u1 at eps = -2 and u2 = d/d eps of the family there.
darboux::DarbouxChain confluent_chain(double E,
                                      const std::vector<double>& grid = default_y_grid());

/// The mapped harmonic solution at the spectral parameter of params.
darboux::ExtraColumn harmonic_phi(const DunklParams& params, double E);

/// V_hat(x) = E - x^{-q-2} [(q+1)^2/(8p) - U_hat(log x)/(2p)].
double hatv_from_ue(double E, const numerics::RealFn& u_hat, double p, double q, double x);

enum class ChainChoice { StandardOrder1, StandardOrder2, Confluent };

const char* to_string(ChainChoice c) noexcept;

/// Darboux transformation of the harmonic system mapped back to x > 0.
class HarmonicTransform {
 public:
  HarmonicTransform(const DunklParams& params, double E, ChainChoice choice,
                    const std::vector<double>& grid = default_y_grid(), bool validate = true);

  const DunklParams& params() const noexcept { return params_; }
  double energy() const noexcept { return E_; }
  double eps() const noexcept { return phi_.eps; }
  const darboux::DarbouxChain& chain() const noexcept { return chain_; }
  const darboux::DarbouxOutput& output() const noexcept { return out_; }
  const darboux::ExtraColumn& phi() const noexcept { return phi_; }

  double phi_hat(double y) const;
  double u_hat(double y) const;
  /// x^{1/2 - nu} Phi_hat(log x), x > 0.
  double psi_hat(double x) const;
  double v_hat(double x) const;

 private:
  DunklParams params_;
  double E_;
  darboux::DarbouxChain chain_;
  darboux::ExtraColumn phi_;
  darboux::DarbouxOutput out_;
};

/// |Psi_hat|^2 |x|^{2 nu} (1 - dV_hat/dE). The energy derivative follows the
/// transformation functions through the Wronskian (forward mode); only the
/// functions themselves are differenced in E, never V_hat, whose poles move
/// with E.
///
/// At large |x| the density falls off like a power of |x|, so the norm has a
/// slowly convergent tail. norm() integrates up to reach() and adds the
/// power-law extrapolation, which also enters the error estimate.
class TransformedDensity {
 public:
  TransformedDensity(const DunklParams& params, double E, ChainChoice choice);

  const HarmonicTransform& transform() const noexcept { return center_; }
  double psi_hat(double x) const { return center_.psi_hat(x); }
  double dv_hat_de(double x) const;
  /// Defined on the whole line through the parity of Psi_hat.
  double density(double x) const;
  /// Largest |x| where the mapped solutions can be evaluated.
  double reach() const;
  /// Local decay exponent k of density ~ |x|^-k between 0.8 reach() and reach().
  double tail_exponent() const;
  /// Throws AccuracyError if tail_exponent() <= 1.
  numerics::QuadratureResult norm() const;

 private:
  HarmonicTransform center_;
  darboux::EnergySensitivity sens_;
};

/// Printed closed forms at nu = 5/2, delta = -1, E = 4. `bessel_scale` is
/// the divisor of x^2 in the Bessel arguments: 2 as printed, 4 for the form
/// the transformation actually produces.
double closed_form_hatpsi_E4(double x, double bessel_scale = 2.0);
double closed_form_hatv4(double x, double bessel_scale = 2.0);

// ---------------------------------------------------------- harmonic-energy-pdm

DunklSystem pdm_system(const DunklParams& params);
/// Schroedinger form with spectral parameter 3 delta nu - nu^2.
pointmap::SchrodingerForm pdm_form(const DunklParams& params);

/// nu = 3 delta/2 + sqrt(9 - 4 delta_bar nu_bar + 4 nu_bar^2)/2.
double pdm_equivalence_nu(double nu_bar, int delta_bar, int delta);

}  // namespace dunkl::scenarios
