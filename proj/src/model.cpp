// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl::model {
namespace {

void require_sign(int s, const char* name) {
  if (s != 1 && s != -1) {
    fail(ErrorKind::Argument, std::string(name) + " must be +1 or -1");
  }
}

void require_nonzero_x(double x, const char* where) {
  if (x == 0.0) fail(ErrorKind::Domain, std::string(where) + ": x = 0 is excluded");
}

}  // namespace

DunklParams::DunklParams(double nu_, int delta_, int mu_) : nu(nu_), delta(delta_), mu(mu_) {
  if (!std::isfinite(nu)) fail(ErrorKind::Argument, "nu must be finite");
  require_sign(delta, "delta");
  require_sign(mu, "mu");
}

MassProfile MassProfile::constant(double value) {
  return {[value](double) { return value; }, [](double) { return 0.0; },
          [](double) { return 0.0; }, 1};
}

MassProfile MassProfile::gaussian(double p, double q) {
  return {[p, q](double x) { return p * std::exp(-q * x * x); },
          [p, q](double x) { return -2.0 * q * x * p * std::exp(-q * x * x); },
          [p, q](double x) { return (4.0 * q * q * x * x - 2.0 * q) * p * std::exp(-q * x * x); },
          1};
}

MassProfile MassProfile::power(double p, int q) {
  return {[p, q](double x) { return p * std::pow(x, q); },
          [p, q](double x) { return q == 0 ? 0.0 : p * q * std::pow(x, q - 1); },
          [p, q](double x) {
            return (q == 0 || q == 1) ? 0.0 : p * q * (q - 1) * std::pow(x, q - 2);
          },
          (q % 2 == 0) ? 1 : -1};
}

void MassProfile::validate(const std::vector<double>& sample_points) const {
  for (double x : sample_points) {
    const double a = m(x);
    if (a == 0.0 || !std::isfinite(a)) {
      fail(ErrorKind::Construction, "mass vanishes or is not finite at x=" + std::to_string(x));
    }
    const double b = m(-x);
    if (std::fabs(b - parity * a) > 1e-10 * std::max(1.0, std::fabs(a))) {
      fail(ErrorKind::Construction, "mass parity does not match at x=" + std::to_string(x));
    }
  }
}

EnergyPotential EnergyPotential::independent(RealFn v) {
  return {[v = std::move(v)](double, double x) { return v(x); },
          [](double, double) { return 0.0; }};
}

DunklSystem::DunklSystem(DunklParams params_, MassProfile mass_, EnergyPotential potential_)
    : params(params_), mass(std::move(mass_)), potential(std::move(potential_)) {
  if (mass.parity != params.mu) {
    fail(ErrorKind::Contract, "mass parity differs from mu");
  }
}

ParityFunction ParityFunction::from_half_line(RealFn g, RealFn g1, RealFn g2, int parity) {
  require_sign(parity, "parity");
  const double p = parity;
  ParityFunction out;
  out.parity = parity;
  out.f = [g, p](double x) { return x < 0.0 ? p * g(-x) : g(x); };
  out.f1 = [g1, p](double x) { return x < 0.0 ? -p * g1(-x) : g1(x); };
  if (g2) out.f2 = [g2, p](double x) { return x < 0.0 ? p * g2(-x) : g2(x); };
  return out;
}

const char* to_string(Admissibility a) noexcept {
  switch (a) {
    case Admissibility::Ok: return "ok";
    case Admissibility::RequiresCaseAnalysis: return "requires_case_analysis";
    case Admissibility::Rejected: return "rejected";
  }
  return "?";
}

double weight_exponent(const DunklParams& p) {
  return 2.0 * p.nu - p.delta * p.nu + p.delta * p.nu / p.mu;
}

Admissibility admissible(const DunklParams& params, bool energy_dependent) {
  if (energy_dependent) return Admissibility::RequiresCaseAnalysis;
  return weight_exponent(params) > -1.0 ? Admissibility::Ok : Admissibility::Rejected;
}

double dunkl_apply(const ParityFunction& f, double x, const DunklParams& params) {
  require_nonzero_x(x, "dunkl_apply");
  return f.f1(x) + params.nu / x * (1.0 - f.parity) * f.f(x);
}

Residual dunkl_residual_terms(const DunklSystem& system, const ParityFunction& psi, double E,
                              double x) {
  require_nonzero_x(x, "dunkl_residual");
  const auto& prm = system.params;
  if (psi.parity != prm.delta) {
    fail(ErrorKind::Contract, "dunkl_residual: solution parity differs from delta");
  }
  if (!psi.f2) fail(ErrorKind::Argument, "dunkl_residual: second derivative not available");

  const double nu = prm.nu;
  const double d = prm.delta;
  const double mu = prm.mu;
  const double m = system.mass.m(x);
  const double m1 = system.mass.m1(x);
  const double x2 = x * x;

  const double c2 = 1.0 / (2.0 * m);
  const double c1 = -m1 / (2.0 * m * m) + nu / (m * x) - nu * d / (2.0 * m * x) +
                    nu * d / (2.0 * mu * m * x);
  const double c0 = -nu / (2.0 * m * x2) - nu * m1 / (2.0 * m * m * x) +
                    nu * d / (2.0 * m * x2) + nu * d * m1 / (2.0 * m * m * x) +
                    nu * nu / (2.0 * m * x2) - nu * nu * d / (2.0 * m * x2) +
                    nu * nu * d / (2.0 * mu * m * x2) - nu * nu / (2.0 * mu * m * x2) + E -
                    system.potential.v(E, x);

  const double t2 = c2 * psi.f2(x);
  const double t1 = c1 * psi.f1(x);
  const double t0 = c0 * psi.f(x);
  return {t2 + t1 + t0, std::fabs(t2) + std::fabs(t1) + std::fabs(t0)};
}

double dunkl_residual(const DunklSystem& system, const ParityFunction& psi, double E, double x) {
  return dunkl_residual_terms(system, psi, E, x).value;
}

double probability_density(const DunklSystem& system, const ParityFunction& psi, double E,
                           double x) {
  require_nonzero_x(x, "probability_density");
  const double v = psi.f(x);
  const double a = v * v * std::pow(std::fabs(x), weight_exponent(system.params));
  if (a == 0.0) return 0.0;  // keeps 0 * overflowing bracket out of the far tail
  return a * (1.0 - system.potential.dv_dE(E, x));
}

QuadratureResult modified_norm(const DunklSystem& system, const ParityFunction& psi, double E,
                               double decay_scale) {
  return numerics::integrate_real_line(
      [&](double x) { return x == 0.0 ? 0.0 : probability_density(system, psi, E, x); },
      decay_scale);
}

}  // namespace dunkl::model
