// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dunkl/error.hpp"
#include "dunkl/numerics.hpp"
#include "dunkl/pointmap.hpp"
#include "dunkl/scenarios.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;
using numerics::linspace;
using scenarios::ChainChoice;
using scenarios::EnergyRule;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double ratio_spread(const std::vector<double>& r) {
  double mean = 0.0;
  for (double v : r) mean += v;
  mean /= static_cast<double>(r.size());
  double var = 0.0;
  for (double v : r) var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(r.size())) / std::fabs(mean);
}

double worst_dunkl_residual(const model::DunklSystem& sys, const model::ParityFunction& psi, double E) {
  return verify::dunkl_equation_residual(sys, psi, E, linspace(0.1, 4.0, 400));
}

Outcome printed_bound_states() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string worst;
  for (int i = 0; i < 6; ++i) {
    const auto p = scenarios::bound_state_params(i);
    const double E = scenarios::bound_state_energy(scenarios::bound_state_level(i), p, EnergyRule::Gaussian);
    const double r = worst_dunkl_residual(scenarios::gaussian_system(p), scenarios::printed_bound_state(i), E);
    if (!(r <= 1e-10)) {
      ok = false;
      worst += " psi" + std::to_string(i) + fmt(" residual %.3g", r);
      const double rc =
          worst_dunkl_residual(scenarios::gaussian_system(p), scenarios::corrected_bound_state(i), E);
      worst += fmt(" (terminating series 1 - x^2 + x^4/6: %.3g)", rc);
    }
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  return {ok, (worst.empty() ? std::string("all six below 1e-10") : "fails:" + worst) + fmt(", %.3f s", dt)};
}

Outcome energy_formulas() {
  double worst = 0.0;
  for (int n = 0; n < 10; ++n) {
    worst = std::max(worst, std::fabs(scenarios::bound_state_energy(n, {0.5, -1, 1}, EnergyRule::Gaussian) - (n + 0.75)));
  }
  const double e4 = scenarios::bound_state_energy(0, {2.5, -1, 1}, EnergyRule::Harmonic);
  const bool ok = worst <= 1e-14 && std::fabs(e4 - 4.0) <= 1e-12;
  return {ok, fmt("max |E_n - (n + 3/4)| = %.2g", worst) + fmt(", harmonic E_0 = %.15g", e4)};
}

Outcome kummer_routes() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> unu(-0.45, 3.0), unu_even(0.5, 3.0), uE(0.2, 6.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int delta = (i % 2) ? 1 : -1;
    const model::DunklParams p{delta == 1 ? unu_even(rng) : unu(rng), delta, 1};
    const double E = uE(rng);
    const auto psi = scenarios::gaussian_solution(p, E);
    for (double x : linspace(0.1, 3.0, 100)) {
      const double a = psi(x), b = scenarios::gaussian_solution_negative_argument(p, E, x);
      worst = std::max(worst, std::fabs(a - b) / std::fabs(a));
    }
  }
  return {worst <= 1e-10, fmt("max relative difference %.3g over 20 triples", worst)};
}

Outcome point_transformation() {
  const auto xs = linspace(0.1, 4.0, 400);
  double fwd = 0.0, trip = 0.0;
  // gaussian-mass, both parities
  for (int i : {0, 4}) {
    const auto p = scenarios::bound_state_params(i);
    const auto sys = scenarios::gaussian_system(p);
    const double E = scenarios::bound_state_energy(scenarios::bound_state_level(i), p, EnergyRule::Gaussian);
    const auto psi = scenarios::gaussian_solution(p, E);
    fwd = std::max(fwd, verify::forward_map_residual(sys, scenarios::gaussian_coordinate(), psi, E, xs));
    trip = std::max(trip, verify::round_trip_residual(sys, scenarios::gaussian_coordinate(), psi, xs));
  }
  // harmonic-energy
  for (const model::DunklParams p : {model::DunklParams{2.5, -1, 1}, model::DunklParams{3.5, 1, 1}}) {
    const auto sys = scenarios::harmonic_system(p);
    const double E = scenarios::bound_state_energy(0, p, EnergyRule::Harmonic);
    const auto psi = scenarios::harmonic_initial_solution(p, E);
    const auto coord = pointmap::CoordinateChange::exp_map();
    const auto grid = linspace(0.1, 2.7, 400);  // x^2/sqrt(E) inside the Laguerre range
    fwd = std::max(fwd, verify::forward_map_residual(sys, coord, psi, E, grid));
    trip = std::max(trip, verify::round_trip_residual(sys, coord, psi, grid));
  }
  const double tf = 1e-7 * numerics::tolerance_scale(), tr = 1e-10 * numerics::tolerance_scale();
  return {fwd <= tf && trip <= tr, fmt("forward %.3g", fwd) + fmt(", round trip %.3g", trip)};
}

Outcome standard_closed_forms() {
  const auto t0 = std::chrono::steady_clock::now();
  const scenarios::HarmonicTransform t({2.5, -1, 1}, 4.0, ChainChoice::StandardOrder2);
  std::vector<double> ratio, ratio_fixed;
  double v_err = 0.0, v_err_fixed = 0.0;
  for (double x : linspace(0.2, 3.0, 400)) {
    const double ph = t.psi_hat(x), v = t.v_hat(x);
    ratio.push_back(ph / scenarios::closed_form_hatpsi_E4(x));
    ratio_fixed.push_back(ph / (x * scenarios::closed_form_hatpsi_E4(x, 4.0)));
    const double c = scenarios::closed_form_hatv4(x), cf = scenarios::closed_form_hatv4(x, 4.0);
    v_err = std::max(v_err, std::fabs(v - c) / std::fabs(c));
    v_err_fixed = std::max(v_err_fixed, std::fabs(v - cf) / std::fabs(cf));
  }
  const double s = ratio_spread(ratio);
  const double dt = seconds_since(t0);
  const bool ok = s <= 1e-6 && v_err <= 1e-6 && dt < 5.0;
  std::string d = fmt("printed forms: ratio spread %.3g", s) + fmt(", V_hat error %.3g", v_err);
  if (!ok) {
    d += fmt("; with Bessel argument x^2/4 and factor x: spread %.3g", ratio_spread(ratio_fixed)) +
         fmt(", V_hat error %.3g", v_err_fixed);
  }
  return {ok, d + fmt(", %.3f s", dt)};
}

Outcome intertwining() {
  bool ok = true;
  std::string d;
  const model::DunklParams p{2.5, -1, 1};
  for (int n : {0, 1}) {
    const double E = scenarios::bound_state_energy(n, p, EnergyRule::Harmonic);
    for (auto c : {ChainChoice::StandardOrder1, ChainChoice::StandardOrder2, ChainChoice::Confluent}) {
      const scenarios::HarmonicTransform t(p, E, c);
      const double tol = (c == ChainChoice::Confluent ? 1e-4 : 1e-6) * numerics::tolerance_scale();
      const double r = verify::intertwining_max(t.output(), t.eps());
      const bool good = r <= tol && t.output().wronskian_floor > 0.0;
      ok = ok && good;
      d += std::string(d.empty() ? "" : ", ") + scenarios::to_string(c) + fmt("@E=%.4g", E) + fmt(" %.2g", r);
      if (!t.output().poles.empty()) d += fmt(" (%g poles excluded)", static_cast<double>(t.output().poles.size()));
    }
  }
  return {ok, d};
}

Outcome wronskian_identities() {
  double ws = 0.0, wc = 0.0;
  const auto ys = scenarios::default_y_grid();
  for (int n : {0, 1}) {
    const double E = scenarios::bound_state_energy(n, {2.5, -1, 1}, EnergyRule::Harmonic);
    ws = std::max(ws, verify::wronskian_identity_residual(scenarios::standard_chain_u12(E), ys));
    wc = std::max(wc, verify::wronskian_identity_residual(scenarios::confluent_chain(E), ys));
  }
  const double tol = 1e-7 * numerics::tolerance_scale();
  return {ws <= tol && wc <= tol, fmt("standard %.3g", ws) + fmt(", confluent %.3g", wc)};
}

Outcome energy_relation() {
  const auto g = scenarios::gaussian_system({0.5, -1, 1});
  const double rg = verify::energy_relation_max(g, scenarios::gaussian_coordinate(), 0.5, 5.0, 0.05, 4.0, 50, 1);
  const auto h = scenarios::harmonic_system({2.5, -1, 1});
  const auto ex = pointmap::CoordinateChange::exp_map();
  const double rh = verify::energy_relation_max(h, ex, 1.0, 8.0, -2.0, 1.0, 50, 2);
  const auto m = scenarios::pdm_system({scenarios::pdm_equivalence_nu(2.5, -1, -1), -1, 1});
  const double rm = verify::energy_relation_max(m, ex, 1.0, 8.0, -2.0, 1.0, 50, 3);
  const double tol = 1e-6 * numerics::tolerance_scale();
  return {rg <= tol && rh <= tol && rm <= tol,
          fmt("gaussian-mass %.3g", rg) + fmt(", harmonic-energy %.3g", rh) + fmt(", harmonic-energy-pdm %.3g", rm)};
}

Outcome parity_table() {
  bool ok = true;
  for (double nu : {-0.49, -0.2, 0.0, 0.3, 0.5, 1.0, 2.5, 7.0}) {
    const auto odd = scenarios::parity_exponent({nu, -1, 1});
    ok = ok && odd.value == 1.0 && odd.cls == scenarios::ParityClass::Odd;
    const auto even = scenarios::parity_exponent({nu, 1, 1});
    if (nu >= 0.5) {
      ok = ok && even.value == 0.0 && even.cls == scenarios::ParityClass::Even;
    } else {
      ok = ok && even.cls == scenarios::ParityClass::NoAdmissibleParity && std::fabs(even.value - (1 - 2 * nu)) < 1e-15;
    }
  }
  return {ok, ok ? "delta=-1 -> 1, delta=+1 -> 0 (nu >= 1/2) or no admissible parity" : "table mismatch"};
}

Outcome norms() {
  bool ok = true;
  std::string d;
  for (int i = 0; i < 3; ++i) {
    const auto p = scenarios::bound_state_params(i);
    const double E = scenarios::bound_state_energy(i, p, EnergyRule::Gaussian);
    const auto sys = scenarios::gaussian_system(p);
    const auto n = model::modified_norm(sys, scenarios::printed_bound_state(i), E, 0.25);
    ok = ok && std::isfinite(n.value) && n.value > 0.0;
    d += fmt(i ? ", %.10g" : "%.10g", n.value);
    if (i == 0) ok = ok && std::fabs(n.value - 2.0) <= 1e-8;
  }
  return {ok, "N(psi0..psi2) = " + d};
}

Outcome scenario_equivalence() {
  double worst = 0.0;
  for (double nb : {0.0, 0.5, 1.3, 2.5, 3.5}) {
    for (int db : {-1, 1}) {
      for (int delta : {-1, 1}) {
        const model::DunklParams pdm{scenarios::pdm_equivalence_nu(nb, db, delta), delta, 1};
        const auto a = scenarios::pdm_form(pdm);
        const auto b = scenarios::harmonic_form({nb, db, 1});
        for (double E : {1.0, 4.0, 7.5}) {
          worst = std::max(worst, std::fabs(a.spectral_parameter(E) - b.spectral_parameter(E)));
          for (double y : linspace(-2.0, 1.0, 61)) {
            const double ua = a.u_e(E, y), ub = b.u_e(E, y);
            worst = std::max(worst, std::fabs(ua - ub) / std::max(1.0, std::fabs(ub)));
          }
        }
      }
    }
  }
  return {worst <= 1e-10, fmt("max U_E difference %.3g", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> list{
      {"printed bound states", printed_bound_states},
      {"energy formulas", energy_formulas},
      {"Kummer-route equivalence", kummer_routes},
      {"point transformation", point_transformation},
      {"standard Darboux pipeline vs printed closed forms", standard_closed_forms},
      {"intertwining", intertwining},
      {"Wronskian identities", wronskian_identities},
      {"norm-preservation relation", energy_relation},
      {"parity classification", parity_table},
      {"modified norms", norms},
      {"scenario equivalence", scenario_equivalence},
  };
  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Outcome o;
    try {
      o = list[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", list[i].name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed, %.2f s\n", list.size(), failed, seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
