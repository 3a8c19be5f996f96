/*
 * coopbf: Monte Carlo outage simulation of two-phase cooperative random
 * beamforming (intra-cluster broadcast, then beamforming to a multi-antenna
 * fusion center) with an equal-power MIMO baseline.
 *
 * Plain C interface. Every function returns a coopbf_status; on failure the
 * thread-local message from coopbf_last_error() describes what went wrong.
 * Handles are opaque and owned by the caller until passed to the matching
 * destroy function.
 */
#ifndef COOPBF_H
#define COOPBF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COOPBF_BUILDING_LIBRARY)
#    define COOPBF_API __declspec(dllexport)
#  else
#    define COOPBF_API __declspec(dllimport)
#  endif
#else
#  define COOPBF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coopbf_status {
  COOPBF_OK = 0,
  COOPBF_INVALID_ARGUMENT = 1,
  COOPBF_DIVISION_BY_ZERO = 2,
  COOPBF_DEGENERATE_CHANNEL = 3,
  COOPBF_INFEASIBLE = 4,
  COOPBF_IO_ERROR = 5,
  COOPBF_INTERNAL_ERROR = 6
} coopbf_status;

typedef enum coopbf_gain_mode {
  COOPBF_GAIN_FROBENIUS = 0,
  COOPBF_GAIN_VECTOR = 1
} coopbf_gain_mode;

typedef enum coopbf_bound_variant {
  COOPBF_BOUND_PRINTED = 0,
  COOPBF_BOUND_COMPLEX_CONVENTION = 1
} coopbf_bound_variant;

typedef enum coopbf_experiment_kind {
  COOPBF_ALPHA_SWEEP = 0,
  COOPBF_SNR_SWEEP = 1,
  COOPBF_CORR_SWEEP = 2,
  COOPBF_SINGLE_POINT = 3
} coopbf_experiment_kind;

typedef struct coopbf_outage_params {
  double r_tr;
  double p2;
  double sigma_n2;
  uint32_t m;
  uint32_t k;
  uint64_t trials;
  uint64_t seed;
  coopbf_gain_mode gain_mode;
  /* Exponential receive correlation r in [0, 1); negative disables it. */
  double corr_r;
  uint32_t workers;
} coopbf_outage_params;

typedef struct coopbf_mimo_params {
  uint32_t n_tx;
  uint32_t n_rx;
  double p_mimo;
  double sigma_n2;
  double r_tr;
  uint64_t trials;
  uint64_t seed;
  uint32_t workers;
} coopbf_mimo_params;

typedef struct coopbf_estimate {
  double probability;
  uint64_t trials;
  uint64_t outages;
  double std_error;
  double threshold;
} coopbf_estimate;

typedef struct coopbf_experiment coopbf_experiment;

COOPBF_API const char* coopbf_version(void);
COOPBF_API const char* coopbf_last_error(void);
COOPBF_API const char* coopbf_status_string(coopbf_status status);

/* Fills params with library defaults (M=3, K=1, R=3, 10^5 trials, seed 1). */
COOPBF_API void coopbf_outage_params_init(coopbf_outage_params* params);
COOPBF_API void coopbf_mimo_params_init(coopbf_mimo_params* params);

COOPBF_API coopbf_status coopbf_regularized_lower_gamma(double s, double x, double* out);
COOPBF_API coopbf_status coopbf_outage_threshold(double r_tr, double p2, double sigma_n2, double* out);
COOPBF_API coopbf_status coopbf_analytical_outage(uint32_t m, uint32_t k, double r_tr, double p2,
                                                  double sigma_n2, coopbf_bound_variant variant,
                                                  double* out);
COOPBF_API coopbf_status coopbf_correlation_level(uint32_t m, double r, double* out);
COOPBF_API coopbf_status coopbf_monte_carlo_outage(const coopbf_outage_params* params,
                                                   coopbf_estimate* out);
COOPBF_API coopbf_status coopbf_mimo_outage(const coopbf_mimo_params* params, coopbf_estimate* out);

/* Power planning. cluster size rounds half up and reports COOPBF_INFEASIBLE
 * below 0.5 nodes. */
COOPBF_API coopbf_status coopbf_split(double p_total, double alpha, double* p1, double* p2);
COOPBF_API coopbf_status coopbf_cluster_size(double alpha, double p_total, double p_s, uint32_t* k);
COOPBF_API coopbf_status coopbf_broadcast_power_bound(uint32_t k, double r_br, double sigma_nbr2,
                                                      double* out);

/* Experiments. Settings use the CLI flag names without leading dashes, e.g.
 * ("alpha-range", "0.2:0.8:0.05") or ("trials", "100000"). */
COOPBF_API coopbf_status coopbf_experiment_create(coopbf_experiment_kind kind, coopbf_experiment** out);
COOPBF_API void coopbf_experiment_destroy(coopbf_experiment* exp);
COOPBF_API coopbf_status coopbf_experiment_set(coopbf_experiment* exp, const char* key, const char* value);
/* Runs the experiment. An infeasible single point still produces its report
 * and returns COOPBF_INFEASIBLE. */
COOPBF_API coopbf_status coopbf_experiment_run(coopbf_experiment* exp);
/* Output of the last run: CSV for sweeps, key/value report for a point. The
 * pointer stays valid until the next run or destroy. */
COOPBF_API coopbf_status coopbf_experiment_output(const coopbf_experiment* exp, const char** data,
                                                  size_t* length);
/* Manifest of the last run including wall-clock time. */
COOPBF_API coopbf_status coopbf_experiment_manifest(const coopbf_experiment* exp, const char** data,
                                                    size_t* length);
/* Writes the output of the last run to path. */
COOPBF_API coopbf_status coopbf_experiment_write(const coopbf_experiment* exp, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* COOPBF_H */
