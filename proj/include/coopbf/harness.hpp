#ifndef COOPBF_HARNESS_HPP
#define COOPBF_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coopbf/baseline.hpp"
#include "coopbf/beamform.hpp"
#include "coopbf/outage.hpp"
#include "coopbf/powerplan.hpp"

namespace coopbf {

enum class Experiment { AlphaSweep, SnrSweep, CorrSweep, SinglePoint };

const char* to_string(Experiment e);
const char* to_string(GainMode mode);
const char* to_string(BoundVariant variant);
Experiment parse_experiment(std::string_view text);
GainMode parse_gain_mode(std::string_view text);
BoundVariant parse_bound_variant(std::string_view text);

/// "lo:hi:step", inclusive of hi up to rounding.
std::vector<double> parse_range(std::string_view text);
/// "a,b,c".
std::vector<double> parse_list(std::string_view text);

/// Full parameterization of one experiment run.
///
/// Power is expressed in units of the broadcast-channel noise: P_total =
/// ratio_ptotal_ps * p_s, and every SNR point sets the beamforming noise to
/// sigma_n2 = P_total / 10^(snr_db / 10), so the SNR axis is P_total / sigma_n2.
struct ExperimentConfig {
  Experiment experiment = Experiment::AlphaSweep;
  std::size_t m = 3;
  double ratio_ptotal_ps = 15.0;
  double p_s = 4.0;
  double r_br = 2.0;
  double sigma_nbr2 = 1.0;
  double r_tr = 3.0;
  std::vector<double> alpha_grid;
  std::vector<double> snr_db_grid;
  std::vector<double> corr_r_grid;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  GainMode gain_mode = GainMode::Frobenius;
  BoundVariant bound_variant = BoundVariant::Printed;
  bool baseline = true;
  std::size_t mimo_antennas = 3;
  std::string output_path;
  unsigned workers = 1;  // never part of the output

  /// Defaults for `e`, including its grids.
  static ExperimentConfig defaults(Experiment e);

  [[nodiscard]] double p_total() const { return ratio_ptotal_ps * p_s; }
  [[nodiscard]] BroadcastSpec broadcast() const { return {r_br, sigma_nbr2, p_s}; }
  void validate() const;
};

/// Sets one field from its textual key (the CLI flag name without dashes).
/// Unknown keys and malformed values throw InvalidArgument.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Metadata that, with the tool version, reproduces a run byte for byte.
struct RunManifest {
  std::string software_version;
  std::vector<std::pair<std::string, std::string>> config;
  std::uint64_t master_seed = 0;
  std::string seed_rule;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<std::string> warnings;
  std::size_t rows = 0;
  double wall_clock_seconds = 0.0;

  /// '#'-prefixed header block. Timing is left out of files so reruns are
  /// byte-identical.
  [[nodiscard]] std::string render(bool include_timing) const;
};

const char* software_version();

struct AlphaSweepRow {
  double snr_db = 0.0;
  double sigma_n2 = 0.0;
  AlphaCurvePoint point;
  double p_out_analytical = 0.0;  // NaN for infeasible rows
};

struct AlphaSweepTable {
  std::vector<AlphaSweepRow> rows;    // ascending (snr_db, alpha)
  std::vector<AlphaSweepRow> optima;  // one per SNR with a feasible point
  std::vector<std::string> warnings;
};

struct SnrSweepRow {
  double snr_db = 0.0;
  std::string series;
  double alpha = 0.0;  // NaN for the MIMO series
  std::size_t k = 0;   // cluster size, or transmit antennas for MIMO
  double p2 = 0.0;
  double sigma_n2 = 0.0;
  bool feasible = true;
  std::optional<OutageEstimate> estimate;
};

/// Where two series swap order on the SNR grid.
struct SeriesCrossover {
  std::string first;
  std::string second;
  int sign_changes = 0;
  std::optional<double> snr_db;  // interpolated location of the first change
};

struct SnrSweepTable {
  std::vector<SnrSweepRow> rows;  // ascending snr_db, then series order
  std::vector<std::string> series;
  std::vector<SeriesCrossover> crossovers;
  std::vector<std::string> warnings;
};

struct CorrSweepRow {
  double snr_db = 0.0;
  double corr_r = 0.0;
  double rho_level = 0.0;
  double alpha = 0.0;
  std::size_t k = 0;
  double p2 = 0.0;
  double sigma_n2 = 0.0;
  bool feasible = true;
  std::optional<OutageEstimate> estimate;
};

struct CorrSweepTable {
  std::vector<CorrSweepRow> rows;  // ascending (snr_db, alpha, corr_r)
  std::vector<std::string> warnings;
};

struct PointReport {
  double snr_db = 0.0;
  double sigma_n2 = 0.0;
  PowerAllocation allocation;
  double k_real = 0.0;
  double broadcast_bound = 0.0;
  bool feasible = false;
  std::optional<OutageEstimate> estimate;
  double bound_printed = 0.0;
  double bound_complex = 0.0;
  std::vector<std::string> warnings;
};

AlphaSweepTable alpha_sweep(const ExperimentConfig& cfg);
SnrSweepTable snr_sweep(const ExperimentConfig& cfg);
CorrSweepTable corr_sweep(const ExperimentConfig& cfg);
PointReport single_point(const ExperimentConfig& cfg);

/// Sign changes of (a - b) over a common grid, ignoring exact ties.
SeriesCrossover find_crossover(std::span<const double> grid, std::span<const double> a,
                               std::span<const double> b);

/// Rendered result of one run: CSV (sweeps) or a key/value report (point).
struct ExperimentOutput {
  std::string text;
  RunManifest manifest;
  bool feasible = true;
};

ExperimentOutput run_alpha_sweep(const ExperimentConfig& cfg);
ExperimentOutput run_snr_sweep(const ExperimentConfig& cfg);
ExperimentOutput run_corr_sweep(const ExperimentConfig& cfg);
ExperimentOutput run_single_point(const ExperimentConfig& cfg);
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

}  // namespace coopbf

#endif  // COOPBF_HARNESS_HPP
