// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/tables.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "dunkl/darboux.hpp"
#include "dunkl/error.hpp"

namespace dunkl::tables {
namespace {

using scenarios::ChainChoice;
using scenarios::EnergyRule;

constexpr double kOriginGuard = 1e-4;
constexpr int kSeriesCount = 3;  // n = 0, 1, 2 in every multi-series figure

std::string series_name(const char* stem, int n) { return std::string(stem) + "_n" + std::to_string(n); }

// Psi_hat on the whole line through the parity delta. Near the origin the
// Wronskian quotient loses its accuracy; the odd branch vanishes there and
// the even branch is continued by its value at the guard.
double psi_hat_on_line(const scenarios::HarmonicTransform& t, double x) {
  const int delta = t.params().delta;
  const double ax = std::fabs(x);
  if (ax < kOriginGuard) return delta == -1 ? 0.0 : t.psi_hat(kOriginGuard);
  const double v = t.psi_hat(ax);
  return (x < 0.0 && delta == -1) ? -v : v;
}

ChainChoice to_choice(DensityChain c) {
  switch (c) {
    case DensityChain::StandardOrder1: return ChainChoice::StandardOrder1;
    case DensityChain::StandardOrder2: return ChainChoice::StandardOrder2;
    case DensityChain::Confluent: return ChainChoice::Confluent;
    case DensityChain::None: break;
  }
  fail(ErrorKind::Argument, "density: no chain selected");
}

// Transformed densities (or solutions) at the three lowest quantized energies.
Table transformed_series(const model::DunklParams& params, bool solutions) {
  Table t;
  t.columns = {"x"};
  std::vector<std::unique_ptr<scenarios::TransformedDensity>> dens;
  std::vector<double> norms;
  for (int n = 0; n < kSeriesCount; ++n) {
    const double E = scenarios::bound_state_energy(n, params, EnergyRule::Harmonic);
    dens.push_back(std::make_unique<scenarios::TransformedDensity>(params, E,
                                                                   ChainChoice::StandardOrder2));
    norms.push_back(dens.back()->norm().value);
    t.columns.push_back(series_name(solutions ? "Psi_hat" : "P", n));
  }
  // even count keeps x = 0 off the grid
  for (double x : numerics::linspace(-6.0, 6.0, 600)) {
    std::vector<double> row{x};
    for (int n = 0; n < kSeriesCount; ++n) {
      row.push_back(solutions ? psi_hat_on_line(dens[n]->transform(), x) / std::sqrt(norms[n])
                              : dens[n]->density(x) / norms[n]);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table potential_series(ChainChoice choice) {
  const model::DunklParams params{2.5, -1, 1};
  Table t;
  t.columns = {"x", "V_initial"};
  std::vector<scenarios::HarmonicTransform> tr;
  for (int n = 0; n < kSeriesCount; ++n) {
    const double E = scenarios::bound_state_energy(n, params, EnergyRule::Harmonic);
    tr.emplace_back(params, E, choice);
    t.columns.push_back(series_name("V_hat", n));
  }
  const auto initial = scenarios::harmonic_system(params).potential;
  const double e0 = tr.front().energy();
  for (double x : scenarios::default_x_grid()) {
    std::vector<double> row{x, initial.v(e0, x)};
    for (const auto& h : tr) row.push_back(h.v_hat(x));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table bound_state_series(int first, bool density) {
  Table t;
  t.columns = {"x"};
  std::vector<model::ParityFunction> psi;
  std::vector<double> energies, norms;
  for (int i = first; i < first + kSeriesCount; ++i) {
    const auto params = scenarios::bound_state_params(i);
    const double E = scenarios::bound_state_energy(scenarios::bound_state_level(i), params,
                                                   EnergyRule::Gaussian);
    psi.push_back(scenarios::corrected_bound_state(i));
    energies.push_back(E);
    // normalized to unit integral, without the doubled convention
    if (density) norms.push_back(0.5 * scenarios::gaussian_norm(params, psi.back(), E).value);
    t.columns.push_back(series_name(density ? "P" : "psi", scenarios::bound_state_level(i)));
  }
  // even count keeps x = 0, where the weight may be singular, off the grid
  for (double x : numerics::linspace(-5.0, 5.0, density ? 600 : 601)) {
    std::vector<double> row{x};
    for (int k = 0; k < kSeriesCount; ++k) {
      if (density) {
        const auto sys = scenarios::gaussian_system(scenarios::bound_state_params(first + k));
        row.push_back(model::probability_density(sys, psi[k], energies[k], x) / norms[k]);
      } else {
        row.push_back(psi[k](x));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

void Table::require_finite() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!std::isfinite(rows[r][c])) {
        fail(ErrorKind::Evaluation, "non-finite value in column '" +
                                        (c < columns.size() ? columns[c] : std::string("?")) +
                                        "' at row " + std::to_string(r));
      }
    }
  }
}

Table spectrum(const model::DunklParams& params, EnergyRule rule, int n_max) {
  if (n_max < 0) fail(ErrorKind::Argument, "spectrum: n_max must be nonnegative");
  Table t;
  t.columns = {"n", "E"};
  for (int n = 0; n <= n_max; ++n) {
    t.rows.push_back({static_cast<double>(n), scenarios::bound_state_energy(n, params, rule)});
  }
  return t;
}

DensityResult density(const DensityRequest& req) {
  verify::SuiteRequest sr;
  sr.scenario = req.scenario;
  sr.params = req.params;
  sr.n = req.n;
  sr.energy = req.energy;
  DensityResult out;
  out.energy = verify::suite_energy(sr);
  const double E = out.energy;
  const auto xs = req.grid.nodes();
  out.table.columns = {"x", "psi", "density"};

  if (req.scenario == scenarios::kGaussianMass) {
    if (req.chain != DensityChain::None) {
      fail(ErrorKind::Argument, "density: chains apply to harmonic-energy only");
    }
    scenarios::require_gaussian_admissible(req.params);
    const auto sys = scenarios::gaussian_system(req.params);
    const auto psi = scenarios::gaussian_solution(req.params, E);
    for (double x : xs) out.table.rows.push_back({x, psi(x), model::probability_density(sys, psi, E, x)});
    out.norm = scenarios::gaussian_norm(req.params, psi, E);
  } else if (req.scenario == scenarios::kHarmonicEnergy) {
    if (scenarios::parity_exponent(req.params).cls == scenarios::ParityClass::NoAdmissibleParity) {
      fail(ErrorKind::Contract, "harmonic-energy: no admissible parity for these (nu, delta)");
    }
    if (req.chain == DensityChain::None) {
      const auto sys = scenarios::harmonic_system(req.params);
      const auto psi = scenarios::harmonic_initial_solution(req.params, E);
      for (double x : xs) {
        out.table.rows.push_back({x, psi(x), model::probability_density(sys, psi, E, x)});
      }
      // keeps x^2/sqrt(E) inside the Laguerre range up to the cutoff
      out.norm = model::modified_norm(sys, psi, E, 0.24 * std::pow(E, 0.25));
    } else {
      scenarios::TransformedDensity d(req.params, E, to_choice(req.chain));
      for (double x : xs) {
        out.table.rows.push_back({x, psi_hat_on_line(d.transform(), x), d.density(x)});
      }
      out.norm = d.norm();
    }
  } else if (scenarios::is_scenario(req.scenario)) {
    fail(ErrorKind::Argument, "density: not available for scenario '" + req.scenario + "'");
  } else {
    fail(ErrorKind::Argument, "unknown scenario '" + req.scenario + "'");
  }
  out.table.require_finite();
  return out;
}

Table darboux_run(const model::DunklParams& params, double E, ChainChoice choice,
                  const verify::GridSpec& grid) {
  if (!(grid.lo > 0.0)) fail(ErrorKind::Argument, "darboux: grid must lie in x > 0");
  const auto xs = grid.nodes();
  scenarios::HarmonicTransform t(params, E, choice);
  const auto poles = darboux::wronskian_zeros(t.chain(), std::log(grid.lo), std::log(grid.hi),
                                              4 * grid.count);
  Table out;
  out.columns = {"x", "y", "U_hat", "V_hat", "Phi_hat", "Psi_hat"};
  for (double x : xs) {
    const double y = std::log(x);
    bool near = false;
    for (double p : poles) near = near || std::fabs(y - p) < 1e-2;
    if (near) continue;
    out.rows.push_back({x, y, t.u_hat(y), t.v_hat(x), t.phi_hat(y), t.psi_hat(x)});
  }
  out.require_finite();
  return out;
}

std::string figure_description(int number) {
  switch (number) {
    case 0: return "odd bound states n=0,1,2 (nu=1/2, delta=-1), gaussian-mass";
    case 1: return "even bound states n=0,1,2 (nu=1/2, delta=+1), gaussian-mass";
    case 2: return "normalized densities of the odd bound states";
    case 3: return "initial potential at E=4 and transformed potentials, standard chain (u1, u2), E_n for nu=5/2, delta=-1";
    case 4: return "normalized transformed densities, standard chain, nu=5/2, delta=-1";
    case 5: return "transformed solutions (unit norm), standard chain, nu=5/2, delta=-1";
    case 6: return "transformed solutions (unit norm), standard chain, nu=7/2, delta=+1";
    case 7: return "initial potential at E=4 and transformed potentials, confluent chain, E_n for nu=5/2, delta=-1";
    default: break;
  }
  fail(ErrorKind::Argument, "figure number must be between " + std::to_string(kFirstFigure) +
                                " and " + std::to_string(kLastFigure));
}

Table figure(int number) {
  figure_description(number);  // range check
  Table t;
  switch (number) {
    case 0: t = bound_state_series(0, false); break;
    case 1: t = bound_state_series(3, false); break;
    case 2: t = bound_state_series(0, true); break;
    case 3: t = potential_series(ChainChoice::StandardOrder2); break;
    case 4: t = transformed_series({2.5, -1, 1}, false); break;
    case 5: t = transformed_series({2.5, -1, 1}, true); break;
    case 6: t = transformed_series({3.5, 1, 1}, true); break;
    default: t = potential_series(ChainChoice::Confluent); break;
  }
  t.require_finite();
  return t;
}

}  // namespace dunkl::tables
