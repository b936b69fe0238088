/* Copyright 2026 The dunkl-darboux Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the dunkl-darboux library.
 *
 * Every fallible call returns a dunkl_status. On failure the message of the
 * most recent error on the calling thread is available from
 * dunkl_last_error(). Objects returned through out-parameters are owned by
 * the caller and released with the matching *_free function; passing NULL to
 * a *_free function is a no-op.
 */

#ifndef DUNKL_DUNKL_H
#define DUNKL_DUNKL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DUNKL_BUILDING_LIBRARY)
#    define DUNKL_API __declspec(dllexport)
#  else
#    define DUNKL_API __declspec(dllimport)
#  endif
#else
#  define DUNKL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dunkl_status {
  DUNKL_OK = 0,
  DUNKL_ERR_DOMAIN = 1,
  DUNKL_ERR_EVALUATION = 2,
  DUNKL_ERR_ACCURACY = 3,
  DUNKL_ERR_CONTRACT = 4,
  DUNKL_ERR_SINGULARITY = 5,
  DUNKL_ERR_CAPABILITY = 6,
  DUNKL_ERR_CONSTRUCTION = 7,
  DUNKL_ERR_ARGUMENT = 8,
  DUNKL_ERR_INTERNAL = 9
} dunkl_status;

typedef enum dunkl_energy_rule {
  DUNKL_RULE_GAUSSIAN = 0, /* gaussian-mass quantization */
  DUNKL_RULE_HARMONIC = 1  /* harmonic-energy quantization */
} dunkl_energy_rule;

typedef enum dunkl_chain {
  DUNKL_CHAIN_NONE = 0,
  DUNKL_CHAIN_STANDARD_1 = 1,
  DUNKL_CHAIN_STANDARD_2 = 2,
  DUNKL_CHAIN_CONFLUENT_2 = 3
} dunkl_chain;

typedef enum dunkl_parity_class {
  DUNKL_PARITY_ODD = 0,
  DUNKL_PARITY_EVEN = 1,
  DUNKL_PARITY_NONE = 2
} dunkl_parity_class;

typedef struct dunkl_params {
  double nu;
  int delta; /* +1 or -1 */
  int mu;    /* +1 or -1 */
} dunkl_params;

/* Scenario run description. Zero-initialize, then fill what is needed. */
typedef struct dunkl_request {
  const char* scenario; /* "gaussian-mass", "harmonic-energy", "harmonic-energy-pdm" */
  dunkl_params params;
  int n;              /* quantum number for the energy rule */
  int has_energy;     /* nonzero: use `energy` instead of the rule */
  double energy;
  double grid_lo;     /* all three zero: command default grid */
  double grid_hi;
  size_t grid_count;
  dunkl_chain chain;  /* density only */
} dunkl_request;

typedef struct dunkl_table dunkl_table;
typedef struct dunkl_report dunkl_report;
typedef struct dunkl_transform dunkl_transform;

DUNKL_API const char* dunkl_version(void);
DUNKL_API const char* dunkl_status_string(dunkl_status status);
/* Message of the last failed call on this thread ("" if none). */
DUNKL_API const char* dunkl_last_error(void);
/* Multiplier applied to verification tolerances (DUNKL_DARBOUX_TOL). */
DUNKL_API double dunkl_tolerance_scale(void);

DUNKL_API size_t dunkl_scenario_count(void);
DUNKL_API const char* dunkl_scenario_name(size_t index); /* NULL if out of range */

DUNKL_API dunkl_status dunkl_bound_state_energy(int n, dunkl_params params,
                                                dunkl_energy_rule rule, double* energy);
DUNKL_API dunkl_status dunkl_parity_exponent(dunkl_params params, double* value,
                                             dunkl_parity_class* cls);

/* Tables */
DUNKL_API size_t dunkl_table_rows(const dunkl_table* table);
DUNKL_API size_t dunkl_table_cols(const dunkl_table* table);
DUNKL_API const char* dunkl_table_column(const dunkl_table* table, size_t col);
DUNKL_API dunkl_status dunkl_table_value(const dunkl_table* table, size_t row, size_t col,
                                         double* value);
DUNKL_API void dunkl_table_free(dunkl_table* table);

DUNKL_API dunkl_status dunkl_spectrum(dunkl_params params, dunkl_energy_rule rule, int n_max,
                                      dunkl_table** out);
/* Density table (x, psi, density) and modified norm with its error estimate. */
DUNKL_API dunkl_status dunkl_density(const dunkl_request* request, dunkl_table** out,
                                     double* energy, double* norm, double* norm_error);
/* Darboux run of the harmonic-energy system: x, y, U_hat, V_hat, Phi_hat, Psi_hat. */
DUNKL_API dunkl_status dunkl_darboux(dunkl_params params, double energy, dunkl_chain chain,
                                     double x_lo, double x_hi, size_t count, dunkl_table** out);
DUNKL_API int dunkl_figure_first(void);
DUNKL_API int dunkl_figure_last(void);
DUNKL_API const char* dunkl_figure_description(int number); /* NULL if out of range */
DUNKL_API dunkl_status dunkl_figure(int number, dunkl_table** out);

/* Verification */
DUNKL_API dunkl_status dunkl_verify(const dunkl_request* request, dunkl_report** out);
DUNKL_API int dunkl_report_pass(const dunkl_report* report);
DUNKL_API double dunkl_report_energy(const dunkl_report* report);
DUNKL_API const char* dunkl_report_scenario(const dunkl_report* report);
DUNKL_API size_t dunkl_report_size(const dunkl_report* report);
DUNKL_API dunkl_status dunkl_report_check(const dunkl_report* report, size_t index,
                                          const char** name, double* max_residual,
                                          double* tolerance, int* pass);
DUNKL_API void dunkl_report_free(dunkl_report* report);

/* Pointwise access to a Darboux-transformed harmonic-energy system. */
DUNKL_API dunkl_status dunkl_transform_new(dunkl_params params, double energy, dunkl_chain chain,
                                           dunkl_transform** out);
DUNKL_API dunkl_status dunkl_transform_eval(const dunkl_transform* t, double x, double* psi_hat,
                                            double* v_hat);
DUNKL_API void dunkl_transform_free(dunkl_transform* t);

#ifdef __cplusplus
}
#endif

#endif /* DUNKL_DUNKL_H */
