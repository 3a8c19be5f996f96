#include "coopbf/coopbf.h"

#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "coopbf/baseline.hpp"
#include "coopbf/channel.hpp"
#include "coopbf/error.hpp"
#include "coopbf/harness.hpp"
#include "coopbf/outage.hpp"
#include "coopbf/powerplan.hpp"
#include "coopbf/special.hpp"

struct coopbf_experiment {
  coopbf::ExperimentConfig config;
  std::string output;
  std::string manifest;
  bool has_run = false;
};

namespace {

thread_local std::string g_last_error;

coopbf_status to_status(coopbf::ErrorCode code) {
  switch (code) {
    case coopbf::ErrorCode::InvalidArgument: return COOPBF_INVALID_ARGUMENT;
    case coopbf::ErrorCode::DivisionByZero: return COOPBF_DIVISION_BY_ZERO;
    case coopbf::ErrorCode::DegenerateChannel: return COOPBF_DEGENERATE_CHANNEL;
    case coopbf::ErrorCode::InfeasibleAllocation: return COOPBF_INFEASIBLE;
  }
  return COOPBF_INTERNAL_ERROR;
}

coopbf_status set_error(coopbf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
coopbf_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const coopbf::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(COOPBF_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(COOPBF_INTERNAL_ERROR, e.what());
  } catch (...) {
    return set_error(COOPBF_INTERNAL_ERROR, "unknown error");
  }
}

coopbf_status null_argument(const char* name) {
  return set_error(COOPBF_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

void export_estimate(const coopbf::OutageEstimate& in, coopbf_estimate* out) {
  out->probability = in.probability;
  out->trials = in.trials;
  out->outages = in.outages;
  out->std_error = in.std_error;
  out->threshold = in.threshold;
}

coopbf::Experiment to_experiment(coopbf_experiment_kind kind) {
  switch (kind) {
    case COOPBF_ALPHA_SWEEP: return coopbf::Experiment::AlphaSweep;
    case COOPBF_SNR_SWEEP: return coopbf::Experiment::SnrSweep;
    case COOPBF_CORR_SWEEP: return coopbf::Experiment::CorrSweep;
    case COOPBF_SINGLE_POINT: return coopbf::Experiment::SinglePoint;
  }
  coopbf::fail(coopbf::ErrorCode::InvalidArgument, "unknown experiment kind");
}

}  // namespace

extern "C" {

const char* coopbf_version(void) { return coopbf::software_version(); }

const char* coopbf_last_error(void) { return g_last_error.c_str(); }

const char* coopbf_status_string(coopbf_status status) {
  switch (status) {
    case COOPBF_OK: return "ok";
    case COOPBF_INVALID_ARGUMENT: return "invalid argument";
    case COOPBF_DIVISION_BY_ZERO: return "division by zero";
    case COOPBF_DEGENERATE_CHANNEL: return "degenerate channel";
    case COOPBF_INFEASIBLE: return "infeasible allocation";
    case COOPBF_IO_ERROR: return "i/o error";
    case COOPBF_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void coopbf_outage_params_init(coopbf_outage_params* params) {
  if (params == nullptr) {
    return;
  }
  const coopbf::OutageConfig d;
  params->r_tr = d.r_tr;
  params->p2 = d.p2;
  params->sigma_n2 = d.sigma_n2;
  params->m = static_cast<uint32_t>(d.m);
  params->k = static_cast<uint32_t>(d.k);
  params->trials = d.trials;
  params->seed = d.seed;
  params->gain_mode = COOPBF_GAIN_FROBENIUS;
  params->corr_r = -1.0;
  params->workers = 1;
}

void coopbf_mimo_params_init(coopbf_mimo_params* params) {
  if (params == nullptr) {
    return;
  }
  const coopbf::MimoConfig d;
  params->n_tx = static_cast<uint32_t>(d.n_tx);
  params->n_rx = static_cast<uint32_t>(d.n_rx);
  params->p_mimo = d.p_mimo;
  params->sigma_n2 = d.sigma_n2;
  params->r_tr = d.r_tr;
  params->trials = d.trials;
  params->seed = d.seed;
  params->workers = 1;
}

coopbf_status coopbf_regularized_lower_gamma(double s, double x, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = coopbf::regularized_lower_gamma(s, x);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_outage_threshold(double r_tr, double p2, double sigma_n2, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = coopbf::outage_threshold(r_tr, p2, sigma_n2);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_analytical_outage(uint32_t m, uint32_t k, double r_tr, double p2, double sigma_n2,
                                       coopbf_bound_variant variant, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (variant != COOPBF_BOUND_PRINTED && variant != COOPBF_BOUND_COMPLEX_CONVENTION) {
      return set_error(COOPBF_INVALID_ARGUMENT, "unknown bound variant");
    }
    *out = coopbf::analytical_outage(m, k, r_tr, p2, sigma_n2,
                                     variant == COOPBF_BOUND_PRINTED ? coopbf::BoundVariant::Printed
                                                                     : coopbf::BoundVariant::ComplexConvention);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_correlation_level(uint32_t m, double r, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = coopbf::exponential_correlation(m, r).level();
    return COOPBF_OK;
  });
}

coopbf_status coopbf_monte_carlo_outage(const coopbf_outage_params* params, coopbf_estimate* out) {
  if (params == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (params->gain_mode != COOPBF_GAIN_FROBENIUS && params->gain_mode != COOPBF_GAIN_VECTOR) {
      return set_error(COOPBF_INVALID_ARGUMENT, "unknown gain mode");
    }
    coopbf::OutageConfig cfg;
    cfg.r_tr = params->r_tr;
    cfg.p2 = params->p2;
    cfg.sigma_n2 = params->sigma_n2;
    cfg.m = params->m;
    cfg.k = params->k;
    cfg.trials = params->trials;
    cfg.seed = params->seed;
    cfg.gain_mode = params->gain_mode == COOPBF_GAIN_FROBENIUS ? coopbf::GainMode::Frobenius
                                                               : coopbf::GainMode::Vector;
    if (params->corr_r >= 0.0) {
      cfg.correlation = coopbf::exponential_correlation(params->m, params->corr_r);
    }
    cfg.workers = params->workers;
    export_estimate(coopbf::monte_carlo_outage(cfg), out);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_mimo_outage(const coopbf_mimo_params* params, coopbf_estimate* out) {
  if (params == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    coopbf::MimoConfig cfg;
    cfg.n_tx = params->n_tx;
    cfg.n_rx = params->n_rx;
    cfg.p_mimo = params->p_mimo;
    cfg.sigma_n2 = params->sigma_n2;
    cfg.r_tr = params->r_tr;
    cfg.trials = params->trials;
    cfg.seed = params->seed;
    cfg.workers = params->workers;
    export_estimate(coopbf::mimo_outage(cfg), out);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_split(double p_total, double alpha, double* p1, double* p2) {
  if (p1 == nullptr) return null_argument("p1");
  if (p2 == nullptr) return null_argument("p2");
  return guarded([&] {
    const auto alloc = coopbf::split(p_total, alpha);
    *p1 = alloc.p1;
    *p2 = alloc.p2;
    return COOPBF_OK;
  });
}

coopbf_status coopbf_cluster_size(double alpha, double p_total, double p_s, uint32_t* k) {
  if (k == nullptr) return null_argument("k");
  return guarded([&] {
    *k = static_cast<uint32_t>(coopbf::cluster_size(alpha, p_total, p_s));
    return COOPBF_OK;
  });
}

coopbf_status coopbf_broadcast_power_bound(uint32_t k, double r_br, double sigma_nbr2, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    coopbf::BroadcastSpec spec;
    spec.r_br = r_br;
    spec.sigma_nbr2 = sigma_nbr2;
    *out = coopbf::broadcast_power_bound(k, spec);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_experiment_create(coopbf_experiment_kind kind, coopbf_experiment** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto* exp = new coopbf_experiment;
    exp->config = coopbf::ExperimentConfig::defaults(to_experiment(kind));
    *out = exp;
    return COOPBF_OK;
  });
}

void coopbf_experiment_destroy(coopbf_experiment* exp) { delete exp; }

coopbf_status coopbf_experiment_set(coopbf_experiment* exp, const char* key, const char* value) {
  if (exp == nullptr) return null_argument("experiment");
  if (key == nullptr) return null_argument("key");
  if (value == nullptr) return null_argument("value");
  return guarded([&] {
    if (std::string_view(key) == "experiment") {
      return set_error(COOPBF_INVALID_ARGUMENT, "the experiment kind is fixed at creation");
    }
    coopbf::apply_setting(exp->config, key, value);
    return COOPBF_OK;
  });
}

coopbf_status coopbf_experiment_run(coopbf_experiment* exp) {
  if (exp == nullptr) return null_argument("experiment");
  return guarded([&] {
    exp->has_run = false;
    const coopbf::ExperimentOutput result = coopbf::run_experiment(exp->config);
    exp->output = result.text;
    exp->manifest = result.manifest.render(true);
    exp->has_run = true;
    if (!result.feasible) {
      return set_error(COOPBF_INFEASIBLE, "operating point violates the broadcast power bound");
    }
    return COOPBF_OK;
  });
}

coopbf_status coopbf_experiment_output(const coopbf_experiment* exp, const char** data, size_t* length) {
  if (exp == nullptr) return null_argument("experiment");
  if (data == nullptr) return null_argument("data");
  if (!exp->has_run) return set_error(COOPBF_INVALID_ARGUMENT, "experiment has not been run");
  *data = exp->output.c_str();
  if (length != nullptr) *length = exp->output.size();
  return COOPBF_OK;
}

coopbf_status coopbf_experiment_manifest(const coopbf_experiment* exp, const char** data, size_t* length) {
  if (exp == nullptr) return null_argument("experiment");
  if (data == nullptr) return null_argument("data");
  if (!exp->has_run) return set_error(COOPBF_INVALID_ARGUMENT, "experiment has not been run");
  *data = exp->manifest.c_str();
  if (length != nullptr) *length = exp->manifest.size();
  return COOPBF_OK;
}

coopbf_status coopbf_experiment_write(const coopbf_experiment* exp, const char* path) {
  if (exp == nullptr) return null_argument("experiment");
  if (path == nullptr) return null_argument("path");
  if (!exp->has_run) return set_error(COOPBF_INVALID_ARGUMENT, "experiment has not been run");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return set_error(COOPBF_IO_ERROR, std::string("cannot open ") + path + " for writing");
  }
  file.write(exp->output.data(), static_cast<std::streamsize>(exp->output.size()));
  if (!file) {
    return set_error(COOPBF_IO_ERROR, std::string("write to ") + path + " failed");
  }
  return COOPBF_OK;
}

}  // extern "C"
