// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "dunkl/error.hpp"
#include "dunkl/numerics.hpp"

namespace dunkl::verify {
namespace {

using scenarios::ChainChoice;

// Second derivatives of sampled functions: large enough that rounding stays
// near 1e-10 relative, small enough for O(h^4) truncation. Near a finite
// domain edge the solutions behave like powers of the distance to it, so the
// step shrinks with that distance.
double second_derivative_step(const pointmap::CoordinateChange& coord, double y) {
  double s = std::max(1.0, std::fabs(y));
  if (std::isfinite(coord.y_lo)) s = std::min(s, y - coord.y_lo);
  if (std::isfinite(coord.y_hi)) s = std::min(s, coord.y_hi - y);
  return 2e-3 * s;
}

double nan_max(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? NAN : std::max(a, b); }

std::vector<double> log_nodes(const std::vector<double>& xs) {
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(std::log(x));
  return ys;
}

void add_energy_relation(VerificationReport& r, const model::DunklSystem& sys,
                         const pointmap::CoordinateChange& coord, double e_lo, double e_hi,
                         double y_lo, double y_hi, const SuiteRequest& req) {
  r.add("energy_relation", energy_relation_max(sys, coord, e_lo, e_hi, y_lo, y_hi,
                                               req.random_points, req.seed),
        1e-6);
}

void gaussian_suite(VerificationReport& r, const SuiteRequest& req) {
  scenarios::require_gaussian_admissible(req.params);
  const double E = r.energy;
  const auto xs = req.grid.nodes();
  const auto sys = scenarios::gaussian_system(req.params);
  const auto coord = scenarios::gaussian_coordinate();
  const auto psi = scenarios::gaussian_solution(req.params, E);

  r.add("dunkl_residual", dunkl_equation_residual(sys, psi, E, xs), 1e-10);
  r.add("forward_map_residual", forward_map_residual(sys, coord, psi, E, xs), 1e-7);
  r.add("round_trip", round_trip_residual(sys, coord, psi, xs), 1e-10);
  add_energy_relation(r, sys, coord, 0.5, 5.0, 0.05, 4.0, req);

  const auto norm = scenarios::gaussian_norm(req.params, psi, E);
  const bool finite = std::isfinite(norm.value) && norm.value > 0.0;
  r.add("modified_norm", finite ? norm.est_abs_error / norm.value : NAN, 1e-8);

  double worst = 0.0, peak = 0.0;
  for (double x : xs) {
    const double p = model::probability_density(sys, psi, E, x);
    worst = std::min(worst, p);
    peak = std::max(peak, std::fabs(p));
  }
  r.add("density_nonnegative", peak > 0.0 ? -worst / peak : NAN, 0.0);
}

void harmonic_suite(VerificationReport& r, const SuiteRequest& req) {
  const auto par = scenarios::parity_exponent(req.params);
  if (par.cls == scenarios::ParityClass::NoAdmissibleParity) {
    fail(ErrorKind::Contract, "harmonic-energy: no admissible parity for these (nu, delta)");
  }
  const double E = r.energy;
  const auto xs = req.grid.nodes();
  const auto ys = log_nodes(xs);
  const auto sys = scenarios::harmonic_system(req.params);
  const auto coord = pointmap::CoordinateChange::exp_map();
  const auto psi = scenarios::harmonic_initial_solution(req.params, E);

  r.add("initial_solution_residual", dunkl_equation_residual(sys, psi, E, xs), 1e-8);
  r.add("forward_map_residual", forward_map_residual(sys, coord, psi, E, xs), 1e-7);
  r.add("round_trip", round_trip_residual(sys, coord, psi, xs), 1e-10);

  // the induced potential must reduce to the eps form
  const auto form = scenarios::harmonic_form(req.params);
  double worst = 0.0;
  for (double y : ys) {
    const double lhs = E - pointmap::induced_potential(coord, sys.mass, sys.potential, req.params, E, y);
    const double rhs = form.spectral_parameter(E) - form.u_e(E, y);
    worst = nan_max(worst, std::fabs(lhs - rhs) / (std::fabs(lhs) + std::fabs(rhs) + 1.0));
  }
  r.add("mapped_form", worst, 1e-10);
  add_energy_relation(r, sys, coord, 1.0, 8.0, -2.0, 1.0, req);

  const auto phi = scenarios::harmonic_phi(req.params, E);
  const auto y_grid = scenarios::default_y_grid();
  const std::pair<ChainChoice, double> chains[] = {{ChainChoice::StandardOrder1, 1e-6},
                                                   {ChainChoice::StandardOrder2, 1e-6},
                                                   {ChainChoice::Confluent, 1e-4}};
  for (const auto& [choice, tol] : chains) {
    const std::string tag = scenarios::to_string(choice);
    scenarios::HarmonicTransform t(req.params, E, choice, y_grid);
    r.add("intertwining_" + tag, intertwining_max(t.output(), t.eps()), tol);
    const double fl = t.output().wronskian_floor;
    r.add("wronskian_floor_" + tag, fl > 0.0 ? 0.0 : 1.0, 0.0);
    if (choice != ChainChoice::StandardOrder1) {
      r.add("wronskian_identity_" + tag, wronskian_identity_residual(t.chain(), y_grid), 1e-7);
    }
  }

  scenarios::TransformedDensity dens(req.params, E, ChainChoice::StandardOrder2);
  double low = 0.0, peak = 0.0;
  for (double x : xs) {
    const double p = dens.density(x);
    low = std::min(low, p);
    peak = nan_max(peak, std::fabs(p));
  }
  r.add("transformed_density_nonnegative", peak > 0.0 ? -low / peak : NAN, 0.0);
}

void pdm_suite(VerificationReport& r, const SuiteRequest& req) {
  // req.params describe the constant-mass system; the PDM side keeps delta.
  const auto& bar = req.params;
  const int delta = bar.delta;
  const double nu = scenarios::pdm_equivalence_nu(bar.nu, bar.delta, delta);
  const model::DunklParams pdm_params{nu, delta, 1};
  const double E = r.energy;

  const auto harm = scenarios::harmonic_form(bar);
  const auto pdm = scenarios::pdm_form(pdm_params);
  const double de = std::fabs(pdm.spectral_parameter(E) - harm.spectral_parameter(E));
  r.add("eps_equivalence", de / std::max(1.0, std::fabs(harm.spectral_parameter(E))), 1e-12);

  const auto ys = log_nodes(req.grid.nodes());
  double worst = 0.0;
  for (double y : ys) {
    const double a = pdm.u_e(E, y);
    const double b = harm.u_e(E, y);
    worst = nan_max(worst, std::fabs(a - b) / std::max(1.0, std::fabs(b)));
  }
  r.add("u_equivalence", worst, 1e-10);

  const auto sys = scenarios::pdm_system(pdm_params);
  const auto coord = pointmap::CoordinateChange::exp_map();
  worst = 0.0;
  for (double y : ys) {
    const double lhs = E - pointmap::induced_potential(coord, sys.mass, sys.potential, pdm_params, E, y);
    const double rhs = pdm.spectral_parameter(E) - pdm.u_e(E, y);
    worst = nan_max(worst, std::fabs(lhs - rhs) / (std::fabs(lhs) + std::fabs(rhs) + 1.0));
  }
  r.add("mapped_form", worst, 1e-10);
  add_energy_relation(r, sys, coord, 1.0, 8.0, -2.0, 1.0, req);
}

}  // namespace

bool VerificationReport::pass() const noexcept {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void VerificationReport::add(std::string name, double max_residual, double tolerance) {
  checks.push_back({std::move(name), max_residual, tolerance, max_residual <= tolerance});
}

void GridSpec::validate() const {
  if (!(lo < hi)) fail(ErrorKind::Argument, "grid: lo must be below hi");
  if (count < 2) fail(ErrorKind::Argument, "grid: count must be at least 2");
}

std::vector<double> GridSpec::nodes() const {
  validate();
  return numerics::linspace(lo, hi, count);
}

double suite_energy(const SuiteRequest& req) {
  if (req.energy) return *req.energy;
  if (req.n < 0) fail(ErrorKind::Argument, "n must be nonnegative");
  if (req.scenario == scenarios::kGaussianMass) {
    return scenarios::bound_state_energy(req.n, req.params, scenarios::EnergyRule::Gaussian);
  }
  if (req.scenario == scenarios::kHarmonicEnergy || req.scenario == scenarios::kHarmonicEnergyPdm) {
    return scenarios::bound_state_energy(req.n, req.params, scenarios::EnergyRule::Harmonic);
  }
  fail(ErrorKind::Argument, "unknown scenario '" + req.scenario + "'");
}

VerificationReport run_suite(const SuiteRequest& req) {
  if (!scenarios::is_scenario(req.scenario)) {
    fail(ErrorKind::Argument, "unknown scenario '" + req.scenario + "'");
  }
  req.grid.validate();
  if (!(req.grid.lo > 0.0)) fail(ErrorKind::Argument, "grid: lo must be positive");
  VerificationReport r;
  r.scenario = req.scenario;
  r.energy = suite_energy(req);
  if (req.scenario == scenarios::kGaussianMass) {
    gaussian_suite(r, req);
  } else if (req.scenario == scenarios::kHarmonicEnergy) {
    harmonic_suite(r, req);
  } else {
    pdm_suite(r, req);
  }
  const double scale = numerics::tolerance_scale();
  for (auto& c : r.checks) {
    c.tolerance *= scale;
    c.pass = c.max_residual <= c.tolerance;
  }
  return r;
}

double dunkl_equation_residual(const model::DunklSystem& sys, const model::ParityFunction& psi,
                               double E, const std::vector<double>& xs) {
  double worst = 0.0;
  for (double x : xs) {
    const auto t = model::dunkl_residual_terms(sys, psi, E, x);
    if (t.scale == 0.0) continue;
    worst = nan_max(worst, std::fabs(t.value) / t.scale);
  }
  return worst;
}

double forward_map_residual(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                            const model::ParityFunction& psi, double E,
                            const std::vector<double>& xs) {
  auto phi = [&](double y) { return pointmap::forward_map(psi, coord, sys.mass, sys.params, y); };
  double worst = 0.0;
  for (double x : xs) {
    const double y = coord.y_of_x(x);
    const double f = phi(y);
    const double f2 = numerics::derivative(phi, y, 2, second_derivative_step(coord, y));
    const double u = pointmap::induced_potential(coord, sys.mass, sys.potential, sys.params, E, y);
    const double scale = std::fabs(f2) + std::fabs((E - u) * f);
    if (scale == 0.0) continue;
    worst = nan_max(worst, std::fabs(f2 + (E - u) * f) / scale);
  }
  return worst;
}

double round_trip_residual(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                           const model::ParityFunction& psi, const std::vector<double>& xs) {
  auto phi = [&](double y) { return pointmap::forward_map(psi, coord, sys.mass, sys.params, y); };
  double worst = 0.0;
  for (double x : xs) {
    const double back = pointmap::inverse_map(phi, coord, sys.mass, sys.params, x);
    const double ref = psi.f(x);
    if (ref == 0.0) continue;
    worst = nan_max(worst, std::fabs(back - ref) / std::fabs(ref));
  }
  return worst;
}

double energy_relation_max(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                           double e_lo, double e_hi, double y_lo, double y_hi, std::size_t count,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ed(e_lo, e_hi);
  std::uniform_real_distribution<double> yd(y_lo, y_hi);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double E = ed(rng);
    const double y = yd(rng);
    const double res =
        pointmap::energy_relation_residual(coord, sys.mass, sys.potential, sys.params, E, y);
    const double x = coord.x_of_y(y);
    const double x1 = coord.d1(y);
    const double side = 2.0 * sys.mass.m(x) * x1 * x1 * (1.0 - sys.potential.dv_dE(E, x));
    worst = nan_max(worst, std::fabs(res) / (1.0 + std::fabs(side)));
  }
  return worst;
}

double intertwining_max(const darboux::DarbouxOutput& out, double eps) {
  if (out.nodes.empty()) return NAN;
  double worst = 0.0;
  for (double y : out.nodes) {
    const auto r = darboux::intertwining_residual(out, eps, y);
    if (r.scale == 0.0) continue;
    worst = nan_max(worst, std::fabs(r.value) / r.scale);
  }
  return worst;
}

double wronskian_identity_residual(const darboux::DarbouxChain& chain,
                                   const std::vector<double>& ys) {
  if (chain.order() != 2) fail(ErrorKind::Capability, "Wronskian identity: order 2 chains only");
  const auto& u = chain.funcs();
  auto w = [&](double y) { return darboux::wronskian(chain, y); };
  double worst = 0.0;
  for (double y : ys) {
    const double u1 = u[0].value(y);
    const double closed = chain.kind() == darboux::ChainKind::Standard
                              ? (chain.eps()[0] - chain.eps()[1]) * u1 * u[1].value(y)
                              : -u1 * u1;
    // u_2 of a confluent chain carries the noise of its eps-difference
    const double w1 = numerics::derivative(w, y, 1, 1e-3 * std::max(1.0, std::fabs(y)));
    const double scale = std::fabs(w1) + std::fabs(closed);
    if (scale == 0.0) continue;
    worst = nan_max(worst, std::fabs(w1 - closed) / scale);
  }
  return worst;
}

}  // namespace dunkl::verify
