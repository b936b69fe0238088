// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/pointmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/error.hpp"

namespace dunkl::pointmap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_in_domain(const CoordinateChange& c, double y, const char* where) {
  if (!c.contains(y)) {
    fail(ErrorKind::Domain, std::string(where) + ": y outside the coordinate domain");
  }
}

}  // namespace

CoordinateChange CoordinateChange::sqrt_map() {
  return {[](double y) { return std::sqrt(y); },
          [](double y) { return 0.5 / std::sqrt(y); },
          [](double y) { return -0.25 / (y * std::sqrt(y)); },
          [](double y) { return 0.375 / (y * y * std::sqrt(y)); },
          [](double x) { return x * x; },
          0.0,
          kInf};
}

CoordinateChange CoordinateChange::exp_map() {
  auto e = [](double y) { return std::exp(y); };
  return {e, e, e, e, [](double x) { return std::log(x); }, -kInf, kInf};
}

CoordinateChange CoordinateChange::identity() {
  return {[](double y) { return y; }, [](double) { return 1.0; }, [](double) { return 0.0; },
          [](double) { return 0.0; }, [](double x) { return x; }, 0.0, kInf};
}

CoordinateChange CoordinateChange::power(double c, double r) {
  if (!(c > 0.0) || !(r > 0.0)) fail(ErrorKind::Argument, "power map needs c, r > 0");
  return {[c, r](double y) { return std::pow(c * y, r); },
          [c, r](double y) { return r * c * std::pow(c * y, r - 1.0); },
          [c, r](double y) { return r * (r - 1.0) * c * c * std::pow(c * y, r - 2.0); },
          [c, r](double y) {
            return r * (r - 1.0) * (r - 2.0) * c * c * c * std::pow(c * y, r - 3.0);
          },
          [c, r](double x) { return std::pow(x, 1.0 / r) / c; },
          0.0,
          kInf};
}

void CoordinateChange::validate(const std::vector<double>& sample_points) const {
  for (double y : sample_points) {
    if (!contains(y)) fail(ErrorKind::Construction, "sample point outside coordinate domain");
    if (d1(y) == 0.0) {
      fail(ErrorKind::Construction, "coordinate change not invertible at y=" + std::to_string(y));
    }
    const double back = y_of_x(x_of_y(y));
    if (std::fabs(back - y) > 1e-10 * std::max(1.0, std::fabs(y))) {
      fail(ErrorKind::Construction, "y_of_x is not the inverse at y=" + std::to_string(y));
    }
  }
}

double monomial_exponent(const DunklParams& p) {
  return p.nu - p.delta * p.nu / 2.0 + p.delta * p.nu / (2.0 * p.mu);
}

double forward_map(const ParityFunction& psi, const CoordinateChange& coord,
                   const MassProfile& mass, const DunklParams& params, double y) {
  require_in_domain(coord, y, "forward_map");
  const double x = coord.x_of_y(y);
  const double radicand = mass.m(x) * coord.d1(y);
  if (!(radicand > 0.0)) {
    fail(ErrorKind::Domain, "forward_map: m(x) x'(y) must be positive");
  }
  return std::pow(x, monomial_exponent(params)) * psi.f(x) / std::sqrt(radicand);
}

double inverse_map(const RealFn& phi, const CoordinateChange& coord, const MassProfile& mass,
                   const DunklParams& params, double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "inverse_map: x must be positive");
  const double y = coord.y_of_x(x);
  require_in_domain(coord, y, "inverse_map");
  const double radicand = mass.m(x) * coord.d1(y);
  if (!(radicand > 0.0)) {
    fail(ErrorKind::Domain, "inverse_map: m(x) x'(y) must be positive");
  }
  return std::sqrt(radicand) * std::pow(x, -monomial_exponent(params)) * phi(y);
}

double induced_potential(const CoordinateChange& coord, const MassProfile& mass,
                         const EnergyPotential& potential, const DunklParams& params, double E,
                         double y) {
  require_in_domain(coord, y, "induced_potential");
  const double x = coord.x_of_y(y);
  const double x1 = coord.d1(y);
  if (x == 0.0 || x1 == 0.0) fail(ErrorKind::Domain, "induced_potential: singular point");
  const double x2 = coord.d2(y);
  const double x3 = coord.d3(y);
  const double m = mass.m(x);
  const double m1 = mass.m1(x);
  const double m2 = mass.m2(x);
  const double v = potential.v(E, x);
  const double nu = params.nu;
  const double dn = params.delta * nu;
  const double s = 1.0 + 1.0 / params.mu;  // collects the paired 1 and 1/mu terms
  const double j = x1 * x1;

  return E - 2.0 * E * m * j + 2.0 * m * v * j                     //
         - dn * j / (2.0 * x * x) * s + nu * nu * j / (2.0 * x * x) * s  //
         - dn * m1 * j / (2.0 * m * x) * s                           //
         + 3.0 * m1 * m1 * j / (4.0 * m * m) - j * m2 / (2.0 * m)     //
         + 3.0 * x2 * x2 / (4.0 * j) - x3 / (2.0 * x1);
}

double energy_relation_residual(const CoordinateChange& coord, const MassProfile& mass,
                                const EnergyPotential& potential, const DunklParams& params,
                                double E, double y) {
  const double du_de = numerics::parameter_derivative(
      [&](double e, double yy) { return induced_potential(coord, mass, potential, params, e, yy); },
      E, y);
  const double x = coord.x_of_y(y);
  const double x1 = coord.d1(y);
  return (1.0 - du_de) - 2.0 * mass.m(x) * x1 * x1 * (1.0 - potential.dv_dE(E, x));
}

SchrodingerForm mxx_form(double p, int q, const EnergyPotential& potential,
                         const DunklParams& params) {
  const double qq = q;
  SchrodingerForm form;
  form.epsilon_shift = (qq + 1.0) * params.delta * params.nu - params.nu * params.nu;
  form.energy_in_potential = true;
  form.u_e = [p, qq, v = potential.v](double E, double y) {
    return (qq + 1.0) * (qq + 1.0) / 4.0 - 2.0 * p * std::exp((qq + 2.0) * y) * (E - v(E, std::exp(y)));
  };
  return form;
}

double mxx_potential_from_ue(double E, double ue_at_log_x, double p, double q, double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "mxx_potential_from_ue: x must be positive");
  const double qq = q;
  return E - std::pow(x, -qq - 2.0) * ((qq + 1.0) * (qq + 1.0) / (8.0 * p) - ue_at_log_x / (2.0 * p));
}

double odd_mass_reduced_potential(const MassProfile& mass, const EnergyPotential& potential,
                                  double E, double x) {
  const double m = mass.m(x);
  const double m1 = mass.m1(x);
  const double m2 = mass.m2(x);
  return potential.v(E, x) + 7.0 * m1 * m1 / (32.0 * m * m * m) - m2 / (8.0 * m * m);
}

CoordinateChange odd_mass_coordinate(double p, int q) {
  if (!(p > 0.0) || q % 2 == 0) {
    fail(ErrorKind::Argument, "odd_mass_coordinate: need p > 0 and odd q");
  }
  // y = sqrt(2p) x^{q/2+1} / (q/2+1)  =>  x = (c y)^r
  const double a = q / 2.0 + 1.0;
  if (!(a > 0.0)) fail(ErrorKind::Argument, "odd_mass_coordinate: q must exceed -2");
  return CoordinateChange::power(a / std::sqrt(2.0 * p), 1.0 / a);
}

}  // namespace dunkl::pointmap
