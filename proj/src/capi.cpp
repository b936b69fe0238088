// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/dunkl.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "dunkl/error.hpp"
#include "dunkl/numerics.hpp"
#include "dunkl/scenarios.hpp"
#include "dunkl/tables.hpp"
#include "dunkl/verify.hpp"

struct dunkl_table {
  dunkl::tables::Table table;
};

struct dunkl_report {
  dunkl::verify::VerificationReport report;
};

struct dunkl_transform {
  dunkl::scenarios::HarmonicTransform transform;
};

namespace {

thread_local std::string g_last_error;

dunkl_status status_of(dunkl::ErrorKind k) {
  using dunkl::ErrorKind;
  switch (k) {
    case ErrorKind::Domain: return DUNKL_ERR_DOMAIN;
    case ErrorKind::Evaluation: return DUNKL_ERR_EVALUATION;
    case ErrorKind::Accuracy: return DUNKL_ERR_ACCURACY;
    case ErrorKind::Contract: return DUNKL_ERR_CONTRACT;
    case ErrorKind::Singularity: return DUNKL_ERR_SINGULARITY;
    case ErrorKind::Capability: return DUNKL_ERR_CAPABILITY;
    case ErrorKind::Construction: return DUNKL_ERR_CONSTRUCTION;
    case ErrorKind::Argument: return DUNKL_ERR_ARGUMENT;
  }
  return DUNKL_ERR_INTERNAL;
}

template <class F>
dunkl_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DUNKL_OK;
  } catch (const dunkl::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DUNKL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DUNKL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return DUNKL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) dunkl::fail(dunkl::ErrorKind::Argument, what);
}

dunkl::model::DunklParams to_params(const dunkl_params& p) {
  return dunkl::model::DunklParams(p.nu, p.delta, p.mu);
}

dunkl::scenarios::EnergyRule to_rule(dunkl_energy_rule r) {
  if (r == DUNKL_RULE_GAUSSIAN) return dunkl::scenarios::EnergyRule::Gaussian;
  if (r == DUNKL_RULE_HARMONIC) return dunkl::scenarios::EnergyRule::Harmonic;
  dunkl::fail(dunkl::ErrorKind::Argument, "unknown energy rule");
}

dunkl::scenarios::ChainChoice to_choice(dunkl_chain c) {
  using dunkl::scenarios::ChainChoice;
  switch (c) {
    case DUNKL_CHAIN_STANDARD_1: return ChainChoice::StandardOrder1;
    case DUNKL_CHAIN_STANDARD_2: return ChainChoice::StandardOrder2;
    case DUNKL_CHAIN_CONFLUENT_2: return ChainChoice::Confluent;
    default: break;
  }
  dunkl::fail(dunkl::ErrorKind::Argument, "a Darboux chain is required");
}

bool default_grid(const dunkl_request& r) {
  return r.grid_lo == 0.0 && r.grid_hi == 0.0 && r.grid_count == 0;
}

const char* scenario_of(const dunkl_request& r) {
  require(r.scenario != nullptr, "request: scenario is required");
  return r.scenario;
}

}  // namespace

extern "C" {

const char* dunkl_version(void) { return "0.1.0"; }

const char* dunkl_status_string(dunkl_status s) {
  switch (s) {
    case DUNKL_OK: return "ok";
    case DUNKL_ERR_DOMAIN: return "domain error";
    case DUNKL_ERR_EVALUATION: return "evaluation error";
    case DUNKL_ERR_ACCURACY: return "accuracy error";
    case DUNKL_ERR_CONTRACT: return "contract error";
    case DUNKL_ERR_SINGULARITY: return "singularity error";
    case DUNKL_ERR_CAPABILITY: return "capability error";
    case DUNKL_ERR_CONSTRUCTION: return "construction error";
    case DUNKL_ERR_ARGUMENT: return "argument error";
    case DUNKL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dunkl_last_error(void) { return g_last_error.c_str(); }

double dunkl_tolerance_scale(void) { return dunkl::numerics::tolerance_scale(); }

size_t dunkl_scenario_count(void) { return dunkl::scenarios::scenario_names().size(); }

const char* dunkl_scenario_name(size_t index) {
  const auto& names = dunkl::scenarios::scenario_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

dunkl_status dunkl_bound_state_energy(int n, dunkl_params params, dunkl_energy_rule rule,
                                      double* energy) {
  return guarded([&] {
    require(energy != nullptr, "energy: null output");
    *energy = dunkl::scenarios::bound_state_energy(n, to_params(params), to_rule(rule));
  });
}

dunkl_status dunkl_parity_exponent(dunkl_params params, double* value, dunkl_parity_class* cls) {
  return guarded([&] {
    require(value != nullptr && cls != nullptr, "parity: null output");
    const auto p = dunkl::scenarios::parity_exponent(to_params(params));
    *value = p.value;
    switch (p.cls) {
      case dunkl::scenarios::ParityClass::Odd: *cls = DUNKL_PARITY_ODD; break;
      case dunkl::scenarios::ParityClass::Even: *cls = DUNKL_PARITY_EVEN; break;
      case dunkl::scenarios::ParityClass::NoAdmissibleParity: *cls = DUNKL_PARITY_NONE; break;
    }
  });
}

size_t dunkl_table_rows(const dunkl_table* t) { return t ? t->table.rows.size() : 0; }

size_t dunkl_table_cols(const dunkl_table* t) { return t ? t->table.columns.size() : 0; }

const char* dunkl_table_column(const dunkl_table* t, size_t col) {
  if (t == nullptr || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

dunkl_status dunkl_table_value(const dunkl_table* t, size_t row, size_t col, double* value) {
  return guarded([&] {
    require(t != nullptr && value != nullptr, "table: null argument");
    require(row < t->table.rows.size() && col < t->table.rows[row].size(),
            "table: index out of range");
    *value = t->table.rows[row][col];
  });
}

void dunkl_table_free(dunkl_table* t) { delete t; }

dunkl_status dunkl_spectrum(dunkl_params params, dunkl_energy_rule rule, int n_max,
                            dunkl_table** out) {
  return guarded([&] {
    require(out != nullptr, "spectrum: null output");
    *out = nullptr;
    auto t = dunkl::tables::spectrum(to_params(params), to_rule(rule), n_max);
    *out = new dunkl_table{std::move(t)};
  });
}

dunkl_status dunkl_density(const dunkl_request* request, dunkl_table** out, double* energy,
                           double* norm, double* norm_error) {
  return guarded([&] {
    require(request != nullptr && out != nullptr, "density: null argument");
    *out = nullptr;
    dunkl::tables::DensityRequest req;
    req.scenario = scenario_of(*request);
    req.params = to_params(request->params);
    req.n = request->n;
    if (request->has_energy) req.energy = request->energy;
    if (!default_grid(*request)) {
      req.grid = {request->grid_lo, request->grid_hi, request->grid_count};
    }
    switch (request->chain) {
      case DUNKL_CHAIN_NONE: req.chain = dunkl::tables::DensityChain::None; break;
      case DUNKL_CHAIN_STANDARD_1: req.chain = dunkl::tables::DensityChain::StandardOrder1; break;
      case DUNKL_CHAIN_STANDARD_2: req.chain = dunkl::tables::DensityChain::StandardOrder2; break;
      case DUNKL_CHAIN_CONFLUENT_2: req.chain = dunkl::tables::DensityChain::Confluent; break;
      default: dunkl::fail(dunkl::ErrorKind::Argument, "density: unknown chain");
    }
    auto r = dunkl::tables::density(req);
    if (energy) *energy = r.energy;
    if (norm) *norm = r.norm.value;
    if (norm_error) *norm_error = r.norm.est_abs_error;
    *out = new dunkl_table{std::move(r.table)};
  });
}

dunkl_status dunkl_darboux(dunkl_params params, double energy, dunkl_chain chain, double x_lo,
                           double x_hi, size_t count, dunkl_table** out) {
  return guarded([&] {
    require(out != nullptr, "darboux: null output");
    *out = nullptr;
    auto t = dunkl::tables::darboux_run(to_params(params), energy, to_choice(chain),
                                        {x_lo, x_hi, count});
    *out = new dunkl_table{std::move(t)};
  });
}

int dunkl_figure_first(void) { return dunkl::tables::kFirstFigure; }
int dunkl_figure_last(void) { return dunkl::tables::kLastFigure; }

const char* dunkl_figure_description(int number) {
  static thread_local std::string text;
  if (number < dunkl::tables::kFirstFigure || number > dunkl::tables::kLastFigure) return nullptr;
  text = dunkl::tables::figure_description(number);
  return text.c_str();
}

dunkl_status dunkl_figure(int number, dunkl_table** out) {
  return guarded([&] {
    require(out != nullptr, "figure: null output");
    *out = nullptr;
    *out = new dunkl_table{dunkl::tables::figure(number)};
  });
}

dunkl_status dunkl_verify(const dunkl_request* request, dunkl_report** out) {
  return guarded([&] {
    require(request != nullptr && out != nullptr, "verify: null argument");
    *out = nullptr;
    dunkl::verify::SuiteRequest req;
    req.scenario = scenario_of(*request);
    req.params = to_params(request->params);
    req.n = request->n;
    if (request->has_energy) req.energy = request->energy;
    if (!default_grid(*request)) {
      req.grid = {request->grid_lo, request->grid_hi, request->grid_count};
    }
    *out = new dunkl_report{dunkl::verify::run_suite(req)};
  });
}

int dunkl_report_pass(const dunkl_report* r) { return (r && r->report.pass()) ? 1 : 0; }

double dunkl_report_energy(const dunkl_report* r) { return r ? r->report.energy : 0.0; }

const char* dunkl_report_scenario(const dunkl_report* r) {
  return r ? r->report.scenario.c_str() : nullptr;
}

size_t dunkl_report_size(const dunkl_report* r) { return r ? r->report.checks.size() : 0; }

dunkl_status dunkl_report_check(const dunkl_report* r, size_t index, const char** name,
                                double* max_residual, double* tolerance, int* pass) {
  return guarded([&] {
    require(r != nullptr, "report: null handle");
    require(index < r->report.checks.size(), "report: index out of range");
    const auto& c = r->report.checks[index];
    if (name) *name = c.name.c_str();
    if (max_residual) *max_residual = c.max_residual;
    if (tolerance) *tolerance = c.tolerance;
    if (pass) *pass = c.pass ? 1 : 0;
  });
}

void dunkl_report_free(dunkl_report* r) { delete r; }

dunkl_status dunkl_transform_new(dunkl_params params, double energy, dunkl_chain chain,
                                 dunkl_transform** out) {
  return guarded([&] {
    require(out != nullptr, "transform: null output");
    *out = nullptr;
    *out = new dunkl_transform{
        dunkl::scenarios::HarmonicTransform(to_params(params), energy, to_choice(chain))};
  });
}

dunkl_status dunkl_transform_eval(const dunkl_transform* t, double x, double* psi_hat,
                                  double* v_hat) {
  return guarded([&] {
    require(t != nullptr, "transform: null handle");
    if (psi_hat) *psi_hat = t->transform.psi_hat(x);
    if (v_hat) *v_hat = t->transform.v_hat(x);
  });
}

void dunkl_transform_free(dunkl_transform* t) { delete t; }

}  // extern "C"
