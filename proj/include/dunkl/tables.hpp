// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Tabulated output: spectra, densities, Darboux runs and figure series.

#include <optional>
#include <string>
#include <vector>

#include "dunkl/numerics.hpp"
#include "dunkl/scenarios.hpp"
#include "dunkl/verify.hpp"

namespace dunkl::tables {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws Error(Evaluation) naming the first non-finite entry.
  void require_finite() const;
};

/// Columns n, E for n = 0..n_max.
Table spectrum(const model::DunklParams& params, scenarios::EnergyRule rule, int n_max);

enum class DensityChain { None, StandardOrder1, StandardOrder2, Confluent };

struct DensityRequest {
  std::string scenario;
  model::DunklParams params{0.5, -1, 1};
  int n = 0;
  std::optional<double> energy;
  /// Densities are not evaluated at x = 0; the default grid avoids it.
  verify::GridSpec grid{-3.0, 3.0, 600};
  /// harmonic-energy only: density of the transformed solution.
  DensityChain chain = DensityChain::None;
};

struct DensityResult {
  double energy = 0.0;
  /// x, psi, density
  Table table;
  numerics::QuadratureResult norm;
};

/// gaussian-mass: the Kummer solution, norm with the doubled convention.
/// harmonic-energy: the initial solution, or its Darboux transform when a
/// chain is given. Other scenarios: Error(Argument).
DensityResult density(const DensityRequest& req);

/// Columns x, y, U_hat, V_hat, Phi_hat, Psi_hat on x > 0 nodes. Nodes within
/// the pole exclusion radius (in y) of a Wronskian zero are skipped.
Table darboux_run(const model::DunklParams& params, double E, scenarios::ChainChoice choice,
                  const verify::GridSpec& grid);

inline constexpr int kFirstFigure = 0;
inline constexpr int kLastFigure = 7;

/// One-line description of the series in figure `number`.
std::string figure_description(int number);

/// Data series of figure `number` (kFirstFigure..kLastFigure); throws
/// Error(Argument) otherwise. All entries are finite.
Table figure(int number);

}  // namespace dunkl::tables
