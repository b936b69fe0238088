// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

// dunkl_cli: residual suites, spectra, densities, Darboux runs and figure
// series from the command line. Talks to the library through the C API only.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 verification
// failure (or a numerical failure while producing output).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dunkl/dunkl.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

// A failed library call, or a bad configuration value (status ARGUMENT).
struct CallError : std::runtime_error {
  dunkl_status status;
  CallError(dunkl_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(dunkl_status s) {
  if (s != DUNKL_OK) throw CallError(s, dunkl_last_error());
}

[[noreturn]] void usage(const std::string& msg) { throw CallError(DUNKL_ERR_ARGUMENT, msg); }

bool is_config_error(dunkl_status s) {
  return s == DUNKL_ERR_ARGUMENT || s == DUNKL_ERR_CONTRACT || s == DUNKL_ERR_CAPABILITY;
}

// ---------------------------------------------------------------- run config

struct RunConfig {
  std::string scenario;  // empty: the command default
  double nu = 0.5;
  int delta = -1;
  int mu = 1;
  std::optional<double> energy;
  int n = 0;
  std::optional<std::string> rule;
  std::optional<double> grid_lo, grid_hi;
  std::optional<std::size_t> grid_count;
  std::string chain_kind = "none";  // none | standard | confluent
  int chain_order = 2;
  std::vector<double> chain_eps;
  std::string format = "csv";
  std::string path;  // empty: stdout
};

template <class T>
void read_field(const json& j, const char* key, T& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
void read_field(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

void load_config(const std::string& file, RunConfig& c) {
  std::ifstream in(file);
  if (!in) usage("cannot open config file '" + file + "'");
  json j;
  try {
    in >> j;
    read_field(j, "scenario", c.scenario);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      read_field(p, "nu", c.nu);
      read_field(p, "delta", c.delta);
      read_field(p, "mu", c.mu);
      read_field(p, "E", c.energy);
      read_field(p, "energy", c.energy);
      read_field(p, "n", c.n);
      read_field(p, "rule", c.rule);
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      read_field(g, "lo", c.grid_lo);
      read_field(g, "hi", c.grid_hi);
      read_field(g, "count", c.grid_count);
    }
    if (j.contains("chain")) {
      const auto& ch = j.at("chain");
      read_field(ch, "kind", c.chain_kind);
      read_field(ch, "order", c.chain_order);
      read_field(ch, "eps", c.chain_eps);
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      read_field(o, "format", c.format);
      read_field(o, "path", c.path);
    }
  } catch (const json::exception& e) {
    usage("config file '" + file + "': " + e.what());
  }
}

dunkl_params params_of(const RunConfig& c) { return {c.nu, c.delta, c.mu}; }

dunkl_energy_rule parse_rule(const std::string& r) {
  if (r == "ene0" || r == "gaussian") return DUNKL_RULE_GAUSSIAN;
  if (r == "ene1" || r == "harmonic") return DUNKL_RULE_HARMONIC;
  usage("unknown energy rule '" + r + "' (ene0, ene1)");
}

// Transformation energies are fixed by the chain kind; a config may restate
// them but not change them.
dunkl_chain parse_chain(const RunConfig& c) {
  if (c.chain_kind == "none") return DUNKL_CHAIN_NONE;
  std::vector<double> expected;
  dunkl_chain chain = DUNKL_CHAIN_NONE;
  if (c.chain_kind == "standard" || c.chain_kind == "standard-1" || c.chain_kind == "standard-2") {
    int order = c.chain_order;
    if (c.chain_kind == "standard-1") order = 1;
    if (c.chain_kind == "standard-2") order = 2;
    if (order == 1) {
      chain = DUNKL_CHAIN_STANDARD_1;
      expected = {0.25};
    } else if (order == 2) {
      chain = DUNKL_CHAIN_STANDARD_2;
      expected = {0.25, -0.75};
    } else {
      usage("standard chains of order 1 or 2 only");
    }
  } else if (c.chain_kind == "confluent" || c.chain_kind == "confluent-2") {
    if (c.chain_kind == "confluent" && c.chain_order != 2) usage("confluent chains of order 2 only");
    chain = DUNKL_CHAIN_CONFLUENT_2;
    expected = {-2.0};
  } else {
    usage("unknown chain kind '" + c.chain_kind + "'");
  }
  if (!c.chain_eps.empty() && c.chain_eps != expected) {
    usage("chain eps values are fixed for this chain kind");
  }
  return chain;
}

dunkl_request request_of(const RunConfig& c) {
  dunkl_request r{};
  r.scenario = c.scenario.c_str();
  r.params = params_of(c);
  r.n = c.n;
  if (c.energy) {
    r.has_energy = 1;
    r.energy = *c.energy;
  }
  if (c.grid_lo || c.grid_hi || c.grid_count) {
    if (!c.grid_lo || !c.grid_hi || !c.grid_count) usage("grid needs lo, hi and count together");
    if (!(*c.grid_lo < *c.grid_hi)) usage("grid: lo must be below hi");
    if (*c.grid_count < 2) usage("grid: count must be at least 2");
    r.grid_lo = *c.grid_lo;
    r.grid_hi = *c.grid_hi;
    r.grid_count = *c.grid_count;
  }
  return r;
}

// ------------------------------------------------------------------- output

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(fmt(v));
}

struct TableDeleter {
  void operator()(dunkl_table* t) const { dunkl_table_free(t); }
};
using TablePtr = std::unique_ptr<dunkl_table, TableDeleter>;

struct ReportDeleter {
  void operator()(dunkl_report* r) const { dunkl_report_free(r); }
};
using ReportPtr = std::unique_ptr<dunkl_report, ReportDeleter>;

std::string table_csv(const dunkl_table* t) {
  std::ostringstream os;
  const std::size_t cols = dunkl_table_cols(t);
  for (std::size_t c = 0; c < cols; ++c) os << (c ? "," : "") << dunkl_table_column(t, c);
  os << '\n';
  for (std::size_t r = 0; r < dunkl_table_rows(t); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double v = 0.0;
      check(dunkl_table_value(t, r, c, &v));
      os << (c ? "," : "") << fmt(v);
    }
    os << '\n';
  }
  return os.str();
}

json table_json(const dunkl_table* t) {
  json cols = json::array();
  for (std::size_t c = 0; c < dunkl_table_cols(t); ++c) cols.push_back(dunkl_table_column(t, c));
  json rows = json::array();
  for (std::size_t r = 0; r < dunkl_table_rows(t); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < dunkl_table_cols(t); ++c) {
      double v = 0.0;
      check(dunkl_table_value(t, r, c, &v));
      row.push_back(num(v));
    }
    rows.push_back(std::move(row));
  }
  return {{"columns", cols}, {"rows", rows}};
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.path, std::ios::binary);
  if (!out) usage("cannot write '" + c.path + "'");
  out << text;
}

void require_format(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") usage("format must be csv or json");
}

// ---------------------------------------------------------------- commands

int cmd_verify(const RunConfig& c) {
  const auto req = request_of(c);
  dunkl_report* raw = nullptr;
  check(dunkl_verify(&req, &raw));
  ReportPtr rep(raw);
  const bool pass = dunkl_report_pass(rep.get()) != 0;

  std::ostringstream os;
  json checks = json::array();
  if (c.format == "csv") os << "check,max_residual,tolerance,pass\n";
  for (std::size_t i = 0; i < dunkl_report_size(rep.get()); ++i) {
    const char* name = nullptr;
    double res = 0.0, tol = 0.0;
    int ok = 0;
    check(dunkl_report_check(rep.get(), i, &name, &res, &tol, &ok));
    if (c.format == "csv") {
      os << name << ',' << fmt(res) << ',' << fmt(tol) << ',' << (ok ? "true" : "false") << '\n';
    } else {
      checks.push_back({{"name", name}, {"max_residual", num(res)}, {"tolerance", num(tol)},
                        {"pass", ok != 0}});
    }
  }
  if (c.format == "json") {
    json j{{"scenario", dunkl_report_scenario(rep.get())},
           {"energy", num(dunkl_report_energy(rep.get()))},
           {"checks", checks},
           {"pass", pass}};
    os << j.dump(2) << '\n';
  }
  emit(c, os.str());
  if (!pass) std::cerr << "verification failed\n";
  return pass ? kExitOk : kExitFailed;
}

int cmd_spectrum(const RunConfig& c, int n_max) {
  const std::string rule = c.rule.value_or(c.scenario == "gaussian-mass" ? "ene0" : "ene1");
  dunkl_table* raw = nullptr;
  check(dunkl_spectrum(params_of(c), parse_rule(rule), n_max, &raw));
  TablePtr t(raw);
  if (c.format == "csv") {
    emit(c, table_csv(t.get()));
  } else {
    json j = table_json(t.get());
    j["rule"] = rule;
    emit(c, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_density(const RunConfig& c) {
  auto req = request_of(c);
  req.chain = parse_chain(c);
  dunkl_table* raw = nullptr;
  double energy = 0.0, norm = 0.0, err = 0.0;
  check(dunkl_density(&req, &raw, &energy, &norm, &err));
  TablePtr t(raw);
  if (c.format == "csv") {
    emit(c, table_csv(t.get()));
    std::cerr << "energy=" << fmt(energy) << " norm=" << fmt(norm) << " norm_error=" << fmt(err)
              << '\n';
  } else {
    json j = table_json(t.get());
    j["energy"] = num(energy);
    j["norm"] = num(norm);
    j["norm_error"] = num(err);
    emit(c, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_darboux(const RunConfig& c) {
  if (c.scenario != "harmonic-energy") usage("darboux runs on the harmonic-energy scenario");
  dunkl_chain chain = parse_chain(c);
  if (chain == DUNKL_CHAIN_NONE) usage("darboux needs --chain");
  double E = 0.0;
  if (c.energy) {
    E = *c.energy;
  } else {
    check(dunkl_bound_state_energy(c.n, params_of(c), DUNKL_RULE_HARMONIC, &E));
  }
  const double lo = c.grid_lo.value_or(0.1);
  const double hi = c.grid_hi.value_or(4.0);
  const std::size_t count = c.grid_count.value_or(400);
  dunkl_table* raw = nullptr;
  check(dunkl_darboux(params_of(c), E, chain, lo, hi, count, &raw));
  TablePtr t(raw);
  if (c.format == "csv") {
    emit(c, table_csv(t.get()));
  } else {
    json j = table_json(t.get());
    j["energy"] = num(E);
    emit(c, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_figure(const RunConfig& c, int number) {
  const char* desc = dunkl_figure_description(number);
  if (desc == nullptr) {
    usage("figure number must be between " + std::to_string(dunkl_figure_first()) + " and " +
          std::to_string(dunkl_figure_last()));
  }
  dunkl_table* raw = nullptr;
  check(dunkl_figure(number, &raw));
  TablePtr t(raw);
  if (c.format == "csv") {
    emit(c, table_csv(t.get()));
  } else {
    json j = table_json(t.get());
    j["figure"] = number;
    j["description"] = desc;
    emit(c, j.dump(2) + "\n");
  }
  return kExitOk;
}

// Options shared by every subcommand; unset ones leave the config alone.
struct Flags {
  std::string config;
  std::optional<std::string> scenario;
  std::optional<double> nu;
  std::optional<int> delta;
  std::optional<int> mu;
  std::optional<double> energy;
  std::optional<int> n;
  std::optional<std::string> rule;
  std::optional<double> grid_lo, grid_hi;
  std::optional<std::size_t> grid_count;
  std::optional<std::string> chain;
  std::optional<int> order;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
  sub->add_option("--scenario", f.scenario, "gaussian-mass | harmonic-energy | harmonic-energy-pdm");
  sub->add_option("--nu", f.nu, "Dunkl parameter nu");
  sub->add_option("--delta", f.delta, "solution parity (+1 or -1)");
  sub->add_option("--mu", f.mu, "mass parity (+1 or -1)");
  sub->add_option("--energy,-E", f.energy, "stationary energy (overrides --n)");
  sub->add_option("--n", f.n, "quantum number for the energy rule");
  sub->add_option("--rule", f.rule, "energy rule: ene0 | ene1");
  sub->add_option("--grid-lo", f.grid_lo, "grid start");
  sub->add_option("--grid-hi", f.grid_hi, "grid end");
  sub->add_option("--grid-count", f.grid_count, "grid nodes");
  sub->add_option("--chain", f.chain, "none | standard | confluent | standard-1 | standard-2 | confluent-2");
  sub->add_option("--order", f.order, "chain order");
  sub->add_option("--format", f.format, "csv | json");
  sub->add_option("--out,-o", f.out, "output file (default stdout)");
}

RunConfig resolve(const Flags& f, const char* default_scenario) {
  RunConfig c;
  if (!f.config.empty()) load_config(f.config, c);
  if (f.scenario) c.scenario = *f.scenario;
  if (c.scenario.empty()) c.scenario = default_scenario;
  if (f.nu) c.nu = *f.nu;
  if (f.delta) c.delta = *f.delta;
  if (f.mu) c.mu = *f.mu;
  if (f.n) {
    c.n = *f.n;
    if (!f.energy) c.energy.reset();
  }
  if (f.energy) c.energy = *f.energy;
  if (f.rule) c.rule = *f.rule;
  if (f.grid_lo) c.grid_lo = *f.grid_lo;
  if (f.grid_hi) c.grid_hi = *f.grid_hi;
  if (f.grid_count) c.grid_count = *f.grid_count;
  if (f.chain) c.chain_kind = *f.chain;
  if (f.order) c.chain_order = *f.order;
  if (f.format) c.format = *f.format;
  if (f.out) c.path = *f.out;
  require_format(c);
  bool known = false;
  for (std::size_t i = 0; i < dunkl_scenario_count(); ++i) known = known || c.scenario == dunkl_scenario_name(i);
  if (!known) usage("unknown scenario '" + c.scenario + "'");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl-Schroedinger systems with position-dependent mass: residual suites, "
               "spectra, densities, Darboux transformations and figure data"};
  app.require_subcommand(1);

  Flags f;
  int n_max = 2;
  int figure_number = 0;

  auto* verify = app.add_subcommand("verify", "run the residual suite for a scenario");
  add_common(verify, f);
  auto* spectrum = app.add_subcommand("spectrum", "tabulate quantized energies");
  add_common(spectrum, f);
  spectrum->add_option("--n-max", n_max, "largest quantum number")->check(CLI::NonNegativeNumber);
  auto* density = app.add_subcommand("density", "emit the probability density and its norm");
  add_common(density, f);
  auto* darboux = app.add_subcommand("darboux", "run a Darboux chain: U_hat, V_hat, Phi_hat, Psi_hat");
  add_common(darboux, f);
  auto* figure = app.add_subcommand("figure", "emit the data series of a figure");
  add_common(figure, f);
  figure->add_option("number", figure_number, "figure number (0-7)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    // darboux only exists for harmonic-energy, so that is its default
    const RunConfig c = resolve(f, darboux->parsed() ? "harmonic-energy" : "gaussian-mass");
    if (verify->parsed()) return cmd_verify(c);
    if (spectrum->parsed()) return cmd_spectrum(c, n_max);
    if (density->parsed()) return cmd_density(c);
    if (darboux->parsed()) return cmd_darboux(c);
    return cmd_figure(c, figure_number);
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (is_config_error(e.status)) {
      std::cerr << "run '" << argv[0] << " --help' for usage\n";
      return kExitUsage;
    }
    return kExitFailed;
  }
}
