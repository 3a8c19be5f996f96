#ifndef COOPBF_BASELINE_HPP
#define COOPBF_BASELINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coopbf/beamform.hpp"
#include "coopbf/channel.hpp"
#include "coopbf/outage.hpp"
#include "coopbf/rng.hpp"

namespace coopbf {

/// Open-loop MIMO comparator with equal power per transmit antenna.
struct MimoConfig {
  std::size_t n_tx = 3;
  std::size_t n_rx = 3;
  double p_mimo = 1.0;  // equals P_total of the compared scheme
  double sigma_n2 = 1.0;
  double r_tr = 3.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  void validate() const;
};

/// log2 det(I + p_mimo / (n_tx sigma_n2) H H^H) for an n_rx x n_tx channel.
double mimo_capacity(const ChannelMatrix& h, double p_mimo, double sigma_n2);

/// Monte Carlo P(capacity < r_tr) over iid CN(0,1) channels.
OutageEstimate mimo_outage(const MimoConfig& cfg);

/// The cooperative scheme as evaluated against the baseline: alpha fixes the
/// split and the cluster size; the SNR axis is P_total / sigma_n2.
struct ProposedSystem {
  double alpha = 0.3;
  double p_total = 60.0;
  double p_s = 4.0;
  std::size_t m = 3;
  double r_tr = 3.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  GainMode gain_mode = GainMode::Frobenius;
  unsigned workers = 1;
};

struct ComparisonRow {
  double snr_db = 0.0;
  std::size_t k = 0;
  OutageEstimate proposed;
  OutageEstimate mimo;
};

/// Noise variance that puts P_total / sigma_n2 at `snr_db`.
double noise_for_snr_db(double p_total, double snr_db);

/// Paired estimates on an SNR grid, ascending. Both systems spend the same
/// P_total; `mimo` supplies the antenna counts, rate, trials and seed (its
/// power and noise fields are overwritten per point).
std::vector<ComparisonRow> compare_systems(std::span<const double> snr_db_grid,
                                           const ProposedSystem& proposed, MimoConfig mimo);

}  // namespace coopbf

#endif  // COOPBF_BASELINE_HPP
