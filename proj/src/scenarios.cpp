// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::scenarios {
namespace {

using specfun::assoc_laguerre;
using specfun::bessel_i;
using specfun::kummer_m;

// Polynomial in x, lowest power first.
using Poly = std::vector<double>;

double horner(const Poly& p, double x) {
  double s = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
  return s;
}

Poly differentiate(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
  return d;
}

// exp(-x^2) P(x) with its first two derivatives.
ParityFunction gaussian_times(Poly p, int parity) {
  Poly d1 = differentiate(p);
  Poly d2 = differentiate(d1);
  ParityFunction f;
  f.parity = parity;
  f.f = [p](double x) { return std::exp(-x * x) * horner(p, x); };
  f.f1 = [p, d1](double x) { return std::exp(-x * x) * (horner(d1, x) - 2.0 * x * horner(p, x)); };
  f.f2 = [p, d1, d2](double x) {
    return std::exp(-x * x) *
           (horner(d2, x) - 4.0 * x * horner(d1, x) + (4.0 * x * x - 2.0) * horner(p, x));
  };
  return f;
}

constexpr double kPositionGuard = 1e-4;

// -1/2 + E^{3/2}/4 - r/4. Energies from the quantization rule land within
// rounding of an integer; the residue would switch on the e^z branch of the
// Laguerre function, so it is removed.
double laguerre_degree(double E, double r) {
  const double deg = -0.5 + std::pow(E, 1.5) / 4.0 - r / 4.0;
  const double n = std::round(deg);
  return std::fabs(deg - n) <= 1e-12 * std::max(1.0, std::fabs(deg)) ? n : deg;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{kGaussianMass, kHarmonicEnergy, kHarmonicEnergyPdm};
  return names;
}

bool is_scenario(const std::string& name) {
  const auto& n = scenario_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

double root_term(const DunklParams& p) {
  return std::sqrt(1.0 - 4.0 * p.delta * p.nu + 4.0 * p.nu * p.nu);
}

const char* to_string(EnergyRule r) noexcept {
  return r == EnergyRule::Gaussian ? "ene0" : "ene1";
}

double bound_state_energy(int n, const DunklParams& params, EnergyRule rule) {
  if (n < 0) fail(ErrorKind::Argument, "bound_state_energy: n must be nonnegative");
  const double r = root_term(params);
  if (rule == EnergyRule::Gaussian) {
    return n + (1.0 + params.delta * params.nu) / 2.0 + r / 4.0;
  }
  return std::cbrt(std::pow(4.0 * n + 2.0 + r, 2.0));
}

const char* to_string(ParityClass c) noexcept {
  switch (c) {
    case ParityClass::Odd: return "odd";
    case ParityClass::Even: return "even";
    case ParityClass::NoAdmissibleParity: return "no admissible parity";
  }
  return "?";
}

ParityExponent parity_exponent(const DunklParams& params) {
  const double nu = params.nu;
  ParityExponent out{0.5 - nu + root_term(params) / 2.0, ParityClass::NoAdmissibleParity};
  if (params.delta == -1 && nu > -0.5) {
    out.value = 1.0;  // 1/2 - nu + (1 + 2nu)/2
    out.cls = ParityClass::Odd;
  } else if (params.delta == 1 && nu >= 0.5) {
    out.value = 0.0;
    out.cls = ParityClass::Even;
  }
  return out;
}

// ---------------------------------------------------------------- gaussian-mass

DunklSystem gaussian_system(const DunklParams& params, double p, double q) {
  model::EnergyPotential pot{
      [p, q](double E, double x) {
        const double g = std::exp(q * x * x);
        return E - 2.0 * p * E * g - 0.5 * p * g;
      },
      [p, q](double, double x) { return 1.0 - 2.0 * p * std::exp(q * x * x); }};
  return DunklSystem(params, model::MassProfile::gaussian(p, q), std::move(pot));
}

pointmap::CoordinateChange gaussian_coordinate() { return pointmap::CoordinateChange::sqrt_map(); }

void require_gaussian_admissible(const DunklParams& params) {
  const bool ok = (params.delta == -1 && params.nu > -0.5) || (params.delta == 1 && params.nu >= 0.5);
  if (!ok) fail(ErrorKind::Contract, "gaussian-mass: (nu, delta) outside the admissible range");
}

ParityFunction gaussian_solution(const DunklParams& params, double E) {
  require_gaussian_admissible(params);
  const double r = root_term(params);
  const double s = parity_exponent(params).value;
  const double a = 0.5 - E + params.delta * params.nu / 2.0 + r / 4.0;
  const double b = 1.0 + r / 2.0;

  // h = exp(-x^2) x^s, g = M(a; b; x^2)
  auto g = [=](double x) {
    const double z = x * x;
    const double m0 = kummer_m(a, b, z).value;
    const double m1 = (a / b) * kummer_m(a + 1.0, b + 1.0, z).value;
    const double m2 = (a * (a + 1.0)) / (b * (b + 1.0)) * kummer_m(a + 2.0, b + 2.0, z).value;
    return std::array<double, 3>{m0, 2.0 * x * m1, 2.0 * m1 + 4.0 * z * m2};
  };
  auto h = [=](double x) {
    const double v = std::exp(-x * x) * std::pow(x, s);
    const double l = s / x - 2.0 * x;
    return std::array<double, 3>{v, v * l, v * (l * l - s / (x * x) - 2.0)};
  };
  return ParityFunction::from_half_line(
      [=](double x) { return h(x)[0] * g(x)[0]; },
      [=](double x) {
        const auto hh = h(x);
        const auto gg = g(x);
        return hh[1] * gg[0] + hh[0] * gg[1];
      },
      [=](double x) {
        const auto hh = h(x);
        const auto gg = g(x);
        return hh[2] * gg[0] + 2.0 * hh[1] * gg[1] + hh[0] * gg[2];
      },
      params.delta);
}

double gaussian_solution_negative_argument(const DunklParams& params, double E, double x) {
  require_gaussian_admissible(params);
  const double r = root_term(params);
  const double s = parity_exponent(params).value;
  const double ax = std::fabs(x);
  const double v = std::pow(ax, s) *
                   kummer_m(0.5 + E - params.delta * params.nu / 2.0 + r / 4.0, 1.0 + r / 2.0, -ax * ax)
                       .value;
  return (x < 0.0 && params.delta == -1) ? -v : v;
}

numerics::QuadratureResult gaussian_norm(const DunklParams& params, const ParityFunction& psi,
                                         double E) {
  const auto sys = gaussian_system(params);
  // 40 * 0.25 = 10 keeps x^2 inside the Kummer range; the tail is below 1e-40
  auto r = model::modified_norm(sys, psi, E, 0.25);
  r.value *= 2.0;
  r.est_abs_error *= 2.0;
  return r;
}

ParityFunction printed_bound_state(int index) {
  switch (index) {
    case 0: return gaussian_times({0.0, 1.0}, -1);
    case 1: return gaussian_times({0.0, 1.0, 0.0, -0.5}, -1);
    case 2: return gaussian_times({0.0, 1.0, 0.0, -1.0, 0.0, 0.5}, -1);
    case 3: return gaussian_times({1.0}, 1);
    case 4: return gaussian_times({1.0, 0.0, -1.0}, 1);
    case 5: return gaussian_times({1.0, 0.0, -2.0, 0.0, 0.5}, 1);
    default: fail(ErrorKind::Argument, "bound state index must be 0..5");
  }
}

ParityFunction corrected_bound_state(int index) {
  if (index == 2) return gaussian_times({0.0, 1.0, 0.0, -1.0, 0.0, 1.0 / 6.0}, -1);
  return printed_bound_state(index);
}

DunklParams bound_state_params(int index) {
  if (index < 0 || index > 5) fail(ErrorKind::Argument, "bound state index must be 0..5");
  return DunklParams(0.5, index < 3 ? -1 : 1, 1);
}

int bound_state_level(int index) {
  if (index < 0 || index > 5) fail(ErrorKind::Argument, "bound state index must be 0..5");
  return index % 3;
}

// -------------------------------------------------------------- harmonic-energy

DunklSystem harmonic_system(const DunklParams& params) {
  model::EnergyPotential pot{[](double E, double x) { return x * x / E; },
                             [](double E, double x) { return -x * x / (E * E); }};
  return DunklSystem(params, model::MassProfile::constant(0.5), std::move(pot));
}

double harmonic_u(double E, double y) {
  return 0.25 - E * std::exp(2.0 * y) + std::exp(4.0 * y) / E;
}

double harmonic_u_deriv(double E, double y, int k) {
  if (k == 0) return harmonic_u(E, y);
  if (k < 0) fail(ErrorKind::Argument, "harmonic_u_deriv: negative order");
  return -E * std::pow(2.0, k) * std::exp(2.0 * y) + std::pow(4.0, k) * std::exp(4.0 * y) / E;
}

pointmap::SchrodingerForm harmonic_form(const DunklParams& params) {
  auto sys = harmonic_system(params);
  auto form = pointmap::mxx_form(0.5, 0, sys.potential, params);
  form.u_e_deriv = harmonic_u_deriv;
  return form;
}

darboux::Background harmonic_background(double E) {
  darboux::Background b;
  b.u = [E](double y) { return harmonic_u(E, y); };
  b.u_deriv = [E](double y, int k) { return harmonic_u_deriv(E, y, k); };
  return b;
}

ParityFunction harmonic_initial_solution(const DunklParams& params, double E, int sign) {
  if (!(E > 0.0)) fail(ErrorKind::Domain, "harmonic solution needs E > 0");
  if (sign != 1 && sign != -1) fail(ErrorKind::Argument, "sign must be +1 or -1");
  const double r = root_term(params);
  const double s = parity_exponent(params).value;
  const double alpha = r / 2.0;
  const double deg = laguerre_degree(E, r);
  const double se = std::sqrt(E);
  const double c = sign / se;  // exponent c x^2 / 2

  auto g = [=](double x) {
    const double z = x * x / se;
    const double l0 = assoc_laguerre(deg, alpha, z).value;
    const double l1 = -assoc_laguerre(deg - 1.0, alpha + 1.0, z).value;
    const double l2 = assoc_laguerre(deg - 2.0, alpha + 2.0, z).value;
    const double dz = 2.0 * x / se;
    return std::array<double, 3>{l0, l1 * dz, l2 * dz * dz + l1 * 2.0 / se};
  };
  auto h = [=](double x) {
    const double v = std::exp(0.5 * c * x * x) * std::pow(x, s);
    const double l = s / x + c * x;
    return std::array<double, 3>{v, v * l, v * (l * l - s / (x * x) + c)};
  };
  return ParityFunction::from_half_line(
      [=](double x) { return h(x)[0] * g(x)[0]; },
      [=](double x) {
        const auto hh = h(x);
        const auto gg = g(x);
        return hh[1] * gg[0] + hh[0] * gg[1];
      },
      [=](double x) {
        const auto hh = h(x);
        const auto gg = g(x);
        return hh[2] * gg[0] + 2.0 * hh[1] * gg[1] + hh[0] * gg[2];
      },
      params.delta);
}

darboux::Solution SolutionFamily::at(double eps) const {
  return {[v = value, eps](double y) { return v(eps, y); },
          [d = deriv, eps](double y) { return d(eps, y); }};
}

SolutionFamily harmonic_family(double E) {
  if (!(E > 0.0)) fail(ErrorKind::Domain, "harmonic family needs E > 0");
  const double se = std::sqrt(E);
  auto shape = [=](double eps) {
    const double rad = 1.0 - 4.0 * eps;
    if (rad < 0.0) fail(ErrorKind::Domain, "harmonic family: eps above 1/4");
    const double r = std::sqrt(rad);
    return std::pair{r, laguerre_degree(E, r)};
  };
  SolutionFamily fam;
  fam.value = [=](double eps, double y) {
    const auto [r, deg] = shape(eps);
    const double z = std::exp(2.0 * y) / se;
    return std::exp(-0.5 * z + 0.5 * y * r) * assoc_laguerre(deg, r / 2.0, z).value;
  };
  fam.deriv = [=](double eps, double y) {
    const auto [r, deg] = shape(eps);
    const double z = std::exp(2.0 * y) / se;
    const double pre = std::exp(-0.5 * z + 0.5 * y * r);
    const double l0 = assoc_laguerre(deg, r / 2.0, z).value;
    const double l1 = -assoc_laguerre(deg - 1.0, r / 2.0 + 1.0, z).value;
    return pre * ((0.5 * r - z) * l0 + 2.0 * z * l1);
  };
  return fam;
}

std::vector<double> default_y_grid() { return numerics::linspace(-2.0, 1.0, 400); }
std::vector<double> default_x_grid() { return numerics::linspace(0.1, 4.0, 400); }

darboux::DarbouxChain standard_chain_u12(double E, std::size_t order,
                                         const std::vector<double>& grid) {
  if (order != 1 && order != 2) fail(ErrorKind::Capability, "standard_chain_u12: order 1 or 2");
  const auto fam = harmonic_family(E);
  std::vector<darboux::Solution> funcs{fam.at(kStandardEps1)};
  std::vector<double> eps{kStandardEps1};
  if (order == 2) {
    funcs.push_back(fam.at(kStandardEps2));
    eps.push_back(kStandardEps2);
  }
  return darboux::DarbouxChain::standard(std::move(funcs), std::move(eps), harmonic_background(E),
                                         grid);
}

darboux::DarbouxChain confluent_chain(double E, const std::vector<double>& grid) {
  const auto fam = harmonic_family(E);
  return darboux::build_confluent_chain(fam.value, fam.deriv, kConfluentEps1, 2,
                                        harmonic_background(E), grid);
}

darboux::ExtraColumn harmonic_phi(const DunklParams& params, double E) {
  const double eps = harmonic_form(params).spectral_parameter(E);
  return {harmonic_family(E).at(eps), eps};
}

double hatv_from_ue(double E, const numerics::RealFn& u_hat, double p, double q, double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "hatv_from_ue: x must be positive");
  return pointmap::mxx_potential_from_ue(E, u_hat(std::log(x)), p, q, x);
}

const char* to_string(ChainChoice c) noexcept {
  switch (c) {
    case ChainChoice::StandardOrder1: return "standard-1";
    case ChainChoice::StandardOrder2: return "standard-2";
    case ChainChoice::Confluent: return "confluent-2";
  }
  return "?";
}

namespace {

darboux::DarbouxChain make_chain(double E, ChainChoice choice, const std::vector<double>& grid) {
  switch (choice) {
    case ChainChoice::StandardOrder1: return standard_chain_u12(E, 1, grid);
    case ChainChoice::StandardOrder2: return standard_chain_u12(E, 2, grid);
    case ChainChoice::Confluent: return confluent_chain(E, grid);
  }
  fail(ErrorKind::Argument, "unknown chain choice");
}

}  // namespace

HarmonicTransform::HarmonicTransform(const DunklParams& params, double E, ChainChoice choice,
                                     const std::vector<double>& grid, bool validate)
    : params_(params),
      E_(E),
      chain_(make_chain(E, choice, validate ? grid : std::vector<double>{})),
      phi_(harmonic_phi(params, E)),
      out_(darboux::transform(chain_, phi_, validate ? grid : std::vector<double>{})) {}

double HarmonicTransform::phi_hat(double y) const { return out_.phi_hat(y); }
double HarmonicTransform::u_hat(double y) const { return out_.u_hat(y); }

double HarmonicTransform::psi_hat(double x) const {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "psi_hat: x must be positive");
  return std::pow(x, 0.5 - params_.nu) * phi_hat(std::log(x));
}

double HarmonicTransform::v_hat(double x) const {
  return hatv_from_ue(E_, out_.u_hat, 0.5, 0.0, x);
}

namespace {

// Laguerre arguments z = x^2/sqrt(E) are evaluated up to this bound.
constexpr double kMaxLaguerreArgument = 100.0;

darboux::EnergySensitivity energy_sensitivity(double E, ChainChoice choice) {
  const double h = numerics::default_parameter_step(E);
  auto sides = std::make_shared<std::vector<darboux::DarbouxChain>>();
  for (double k : {2.0, 1.0, -1.0, -2.0}) sides->push_back(make_chain(E + k * h, choice, {}));

  darboux::EnergySensitivity s;
  const std::size_t n = sides->front().order();
  for (std::size_t j = 0; j < n; ++j) {
    auto diff = [sides, h, j](bool deriv) {
      return [sides, h, j, deriv](double y) {
        auto f = [&](std::size_t i) {
          const auto& sol = (*sides)[i].funcs()[j];
          return deriv ? sol.deriv(y) : sol.value(y);
        };
        return (-f(0) + 8.0 * f(1) - 8.0 * f(2) + f(3)) / (12.0 * h);
      };
    };
    s.dfuncs.push_back({diff(false), diff(true)});
  }
  s.du_de = [E](double y, int k) {
    const double a = std::exp(2.0 * y);
    return -std::pow(2.0, k) * a - std::pow(4.0, k) * a * a / (E * E);
  };
  return s;
}

}  // namespace

TransformedDensity::TransformedDensity(const DunklParams& params, double E, ChainChoice choice)
    : center_(params, E, choice), sens_(energy_sensitivity(E, choice)) {}

double TransformedDensity::dv_hat_de(double x) const {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "dv_hat_de: x must be positive");
  const double du = darboux::transformed_potential_energy_derivative(center_.chain(), sens_,
                                                                     std::log(x));
  // V_hat = E - (1/4 - U_hat)/x^2
  return 1.0 + du / (x * x);
}

double TransformedDensity::density(double x) const {
  const double ax = std::fabs(x);
  // Psi_hat vanishes at the origin at least like the weight; the Wronskians
  // underflow long before the density contributes.
  if (ax < kPositionGuard) return 0.0;
  const double v = center_.psi_hat(ax);
  const double a = v * v * std::pow(ax, 2.0 * center_.params().nu);
  if (a == 0.0) return 0.0;
  return a * (1.0 - dv_hat_de(ax));
}

double TransformedDensity::reach() const {
  return 0.99 * std::sqrt(kMaxLaguerreArgument * std::sqrt(center_.energy()));
}

double TransformedDensity::tail_exponent() const {
  const double b = reach();
  const double a = 0.8 * b;
  const double da = density(a);
  const double db = density(b);
  if (!(da > 0.0) || !(db > 0.0)) {
    fail(ErrorKind::Evaluation, "tail_exponent: density not positive in the tail");
  }
  return std::log(da / db) / std::log(b / a);
}

numerics::QuadratureResult TransformedDensity::norm() const {
  const double b = reach();
  auto core = numerics::integrate_interval([this](double x) { return density(x); }, 0.0, b, 1e-10);
  const double k = tail_exponent();
  const double tail = k > 1.0 ? density(b) * b / (k - 1.0) : std::numeric_limits<double>::infinity();
  numerics::QuadratureResult r{2.0 * (core.value + tail), 2.0 * (core.est_abs_error + tail),
                               core.n_evals + 2};
  if (!std::isfinite(tail)) {
    throw AccuracyError("accuracy error: transformed density tail is not integrable",
                        2.0 * core.value, r.est_abs_error);
  }
  return r;
}

namespace {

struct BesselPair {
  double i0;
  double i1;
};

BesselPair bessel_pair(double x, double scale) {
  const double t = x * x / scale;
  return {bessel_i(0, t).value, bessel_i(1, t).value};
}

double e4_denominator(double x, const BesselPair& b) {
  const double x2 = x * x;
  const double a = (24.0 - 6.0 * x2 + x2 * x2) * b.i0;
  const double c = x2 * (x2 - 4.0) * b.i1;
  if (std::fabs(a - c) < 1e-12 * (std::fabs(a) + std::fabs(c))) {
    fail(ErrorKind::Singularity, "closed form: denominator vanishes at x=" + std::to_string(x));
  }
  return a - c;
}

}  // namespace

double closed_form_hatpsi_E4(double x, double bessel_scale) {
  const auto b = bessel_pair(x, bessel_scale);
  return std::exp(-x * x / bessel_scale) * b.i0 / e4_denominator(x, b);
}

double closed_form_hatv4(double x, double bessel_scale) {
  if (x == 0.0) fail(ErrorKind::Domain, "closed_form_hatv4: x = 0 is excluded");
  const auto b = bessel_pair(x, bessel_scale);
  const double d = e4_denominator(x, b);
  const double x2 = x * x;
  const double x4 = x2 * x2;
  const double p00 = 9216.0 - 7488.0 * x2 + 1920.0 * x4 - 180.0 * x4 * x2 + 4.0 * x4 * x4 +
                     x4 * x4 * x2;
  const double p01 = -2.0 * x2 * (x - 2.0) * (x + 2.0) * (x2 + 16.0) * (24.0 - 6.0 * x2 + x4);
  const double p11 = x2 * (x2 - 4.0) * (x2 - 4.0) * (72.0 + 16.0 * x2 + x4);
  const double num = p00 * b.i0 * b.i0 + p01 * b.i0 * b.i1 + p11 * b.i1 * b.i1;
  return num / (4.0 * d * d);
}

// ---------------------------------------------------------- harmonic-energy-pdm

DunklSystem pdm_system(const DunklParams& params) {
  model::EnergyPotential pot{
      [](double E, double x) {
        const double x2 = x * x;
        return E + 1.0 / E - E / x2 - 2.0 / (x2 * x2);
      },
      [](double E, double x) { return 1.0 - 1.0 / (E * E) - 1.0 / (x * x); }};
  return DunklSystem(params, model::MassProfile::power(0.5, 2), std::move(pot));
}

pointmap::SchrodingerForm pdm_form(const DunklParams& params) {
  return pointmap::mxx_form(0.5, 2, pdm_system(params).potential, params);
}

double pdm_equivalence_nu(double nu_bar, int delta_bar, int delta) {
  const double rad = 9.0 - 4.0 * delta_bar * nu_bar + 4.0 * nu_bar * nu_bar;
  if (rad < 0.0) fail(ErrorKind::Domain, "pdm_equivalence_nu: negative radicand");
  return 1.5 * delta + 0.5 * std::sqrt(rad);
}

}  // namespace dunkl::scenarios
