// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Residual suites for the worked systems. Each check reports the largest
// relative residual it saw against its tolerance; tolerances are multiplied
// by numerics::tolerance_scale().

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/model.hpp"
#include "dunkl/scenarios.hpp"

namespace dunkl::verify {

struct CheckRecord {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string scenario;
  double energy = 0.0;
  std::vector<CheckRecord> checks;

  /// True iff every check passes (and there is at least one).
  bool pass() const noexcept;
  /// Appends a record; pass is max_residual <= tolerance (NaN fails).
  void add(std::string name, double max_residual, double tolerance);
};

struct GridSpec {
  double lo = 0.1;
  double hi = 4.0;
  std::size_t count = 400;

  /// Throws Error(Argument) unless lo < hi and count >= 2.
  void validate() const;
  std::vector<double> nodes() const;
};

struct SuiteRequest {
  std::string scenario;
  model::DunklParams params{0.5, -1, 1};
  int n = 0;
  /// Overrides the quantized energy when set.
  std::optional<double> energy;
  /// Dunkl-side grid (x > 0).
  GridSpec grid;
  /// Random (E, y) samples for the energy relation.
  std::size_t random_points = 50;
  std::uint64_t seed = 20260101;
};

/// Energy used by the suite: the override, or the scenario's quantization rule.
double suite_energy(const SuiteRequest& req);

/// Runs the scenario's suite. Throws Error(Argument) for an unknown scenario
/// and Error(Contract) for parameters the scenario does not admit.
VerificationReport run_suite(const SuiteRequest& req);

// Individual checks, shared with the acceptance driver. All return the
// largest relative residual over the given nodes.

/// Expanded Dunkl equation, |residual| / scale.
double dunkl_equation_residual(const model::DunklSystem& sys, const model::ParityFunction& psi,
                               double E, const std::vector<double>& xs);

/// Phi'' + (E - U_E) Phi for Phi = forward_map(psi) and U_E = induced_potential,
/// at y = y(x) for each x.
double forward_map_residual(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                            const model::ParityFunction& psi, double E,
                            const std::vector<double>& xs);

/// |inverse_map(forward_map(psi)) - psi| / |psi|.
double round_trip_residual(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                           const model::ParityFunction& psi, const std::vector<double>& xs);

/// Energy relation at `count` uniform random points of the box, each
/// residual divided by 1 + |2 m x'^2 (1 - dV_E/dE)|.
double energy_relation_max(const model::DunklSystem& sys, const pointmap::CoordinateChange& coord,
                           double e_lo, double e_hi, double y_lo, double y_hi, std::size_t count,
                           std::uint64_t seed);

/// Largest intertwining residual over the surviving validation nodes.
double intertwining_max(const darboux::DarbouxOutput& out, double eps);

/// W' against the closed forms (eps_1 - eps_2) u_1 u_2 (standard, order 2)
/// or -u_1^2 (confluent, order 2); W' from a stencil.
double wronskian_identity_residual(const darboux::DarbouxChain& chain,
                                   const std::vector<double>& ys);

}  // namespace dunkl::verify
