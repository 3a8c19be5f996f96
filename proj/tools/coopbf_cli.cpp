// coopbf-cli: runs the sweeps and single-point evaluations through the C API.
//
//   coopbf-cli alpha-sweep --snr-db-range 2:12:1 --out alpha.csv
//   coopbf-cli snr-sweep --alpha 0.3,0.4 --trials 200000
//   coopbf-cli corr-sweep --corr 0,0.25,0.5,0.75 --snr-db 6
//   coopbf-cli point --alpha 0.4 --snr-db 4
//
// Flags may also come from a key=value file given with --config; flags on the
// command line win. Without --out the result goes to $COOPBF_OUTPUT_DIR when
// set, otherwise to stdout. The manifest (with wall-clock time) goes to stderr.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "coopbf/coopbf.h"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kIo = 2, kInfeasible = 3 };

struct Setting {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

class Experiment {
public:
  explicit Experiment(coopbf_experiment_kind kind) {
    if (coopbf_experiment_create(kind, &handle_) != COOPBF_OK) {
      throw std::runtime_error(coopbf_last_error());
    }
  }
  ~Experiment() { coopbf_experiment_destroy(handle_); }
  Experiment(const Experiment&) = delete;
  Experiment& operator=(const Experiment&) = delete;

  [[nodiscard]] coopbf_experiment* get() const { return handle_; }

private:
  coopbf_experiment* handle_ = nullptr;
};

int fail(coopbf_status status, const char* what) {
  std::cerr << "coopbf-cli: " << what << ": " << coopbf_last_error() << '\n';
  switch (status) {
    case COOPBF_INFEASIBLE: return kInfeasible;
    case COOPBF_IO_ERROR: return kIo;
    default: return kInvalid;
  }
}

std::string default_output(const std::string& name) {
  const char* dir = std::getenv("COOPBF_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') {
    return {};
  }
  std::string path(dir);
  if (path.back() != '/') {
    path += '/';
  }
  return path + name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative random-beamforming outage simulator"};
  app.set_version_flag("--version", std::string(coopbf_version()));
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<Setting> settings = {
      {"m", {}}, {"ratio-ptotal-ps", {}}, {"ps", {}}, {"rtr", {}}, {"rbr", {}}, {"sigma-nbr2", {}},
      {"alpha", {}}, {"alpha-range", {}}, {"snr-db", {}}, {"snr-db-range", {}}, {"corr", {}},
      {"trials", {}}, {"seed", {}}, {"gain-mode", {}}, {"bound-variant", {}}, {"mimo-antennas", {}},
      {"workers", {}},
  };
  const std::vector<std::pair<std::string, std::string>> help = {
      {"m", "receive antennas at the fusion center (default 3)"},
      {"ratio-ptotal-ps", "P_total / P_s (default 15)"},
      {"ps", "per-node broadcast power in broadcast-noise units (default 4)"},
      {"rtr", "beamforming rate, bits/s/Hz (default 3)"},
      {"rbr", "broadcast rate, bits/s/Hz (default 2)"},
      {"sigma-nbr2", "broadcast-channel noise variance (default 1)"},
      {"alpha", "comma-separated power allocation factors"},
      {"alpha-range", "alpha grid as lo:hi:step"},
      {"snr-db", "comma-separated SNR points, P_total/sigma_n2 in dB"},
      {"snr-db-range", "SNR grid as lo:hi:step"},
      {"corr", "comma-separated exponential correlation coefficients r"},
      {"trials", "Monte Carlo trials per point (default 100000)"},
      {"seed", "master seed (default 1)"},
      {"gain-mode", "frobenius or vector"},
      {"bound-variant", "printed or complex_convention"},
      {"mimo-antennas", "MIMO baseline size n for an n x n system (default 3)"},
      {"workers", "worker threads; never changes the output"},
  };
  for (std::size_t i = 0; i < settings.size(); ++i) {
    settings[i].option = app.add_option("--" + settings[i].key, settings[i].value, help[i].second);
  }
  bool baseline = true;
  auto* baseline_flag = app.add_flag("--baseline,!--no-baseline", baseline, "include the MIMO series in snr-sweep");
  std::string out_path;
  app.add_option("--out", out_path, "output file");

  const std::vector<std::pair<std::string, coopbf_experiment_kind>> commands = {
      {"alpha-sweep", COOPBF_ALPHA_SWEEP},
      {"snr-sweep", COOPBF_SNR_SWEEP},
      {"corr-sweep", COOPBF_CORR_SWEEP},
      {"point", COOPBF_SINGLE_POINT},
  };
  app.add_subcommand("alpha-sweep", "outage versus alpha for each SNR, with the per-SNR optimum");
  app.add_subcommand("snr-sweep", "outage versus SNR per alpha, plus the MIMO baseline");
  app.add_subcommand("corr-sweep", "outage versus SNR on exponentially correlated channels");
  app.add_subcommand("point", "one (alpha, SNR) operating point with both analytical bounds");

  CLI11_PARSE(app, argc, argv);

  std::string name;
  coopbf_experiment_kind kind = COOPBF_ALPHA_SWEEP;
  for (const auto& [cmd, k] : commands) {
    if (app.got_subcommand(cmd)) {
      name = cmd;
      kind = k;
    }
  }

  try {
    Experiment exp(kind);
    for (const auto& s : settings) {
      if (s.option->count() == 0) {
        continue;
      }
      if (const coopbf_status st = coopbf_experiment_set(exp.get(), s.key.c_str(), s.value.c_str()); st != COOPBF_OK) {
        return fail(st, ("--" + s.key).c_str());
      }
    }
    if (baseline_flag->count() > 0) {
      coopbf_experiment_set(exp.get(), "baseline", baseline ? "true" : "false");
    }

    const coopbf_status run_status = coopbf_experiment_run(exp.get());
    if (run_status != COOPBF_OK && run_status != COOPBF_INFEASIBLE) {
      return fail(run_status, name.c_str());
    }

    const char* manifest = nullptr;
    coopbf_experiment_manifest(exp.get(), &manifest, nullptr);
    std::cerr << manifest;

    if (out_path.empty()) {
      out_path = default_output(name + (kind == COOPBF_SINGLE_POINT ? ".txt" : ".csv"));
    }
    if (out_path.empty()) {
      const char* data = nullptr;
      std::size_t length = 0;
      coopbf_experiment_output(exp.get(), &data, &length);
      std::fwrite(data, 1, length, stdout);
    } else if (const coopbf_status st = coopbf_experiment_write(exp.get(), out_path.c_str()); st != COOPBF_OK) {
      return fail(st, "write");
    } else {
      std::cerr << "wrote " << out_path << '\n';
    }

    if (run_status == COOPBF_INFEASIBLE) {
      std::cerr << "coopbf-cli: " << coopbf_last_error() << '\n';
      return kInfeasible;
    }
  } catch (const std::exception& e) {
    std::cerr << "coopbf-cli: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
