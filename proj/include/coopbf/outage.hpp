#ifndef COOPBF_OUTAGE_HPP
#define COOPBF_OUTAGE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "coopbf/beamform.hpp"
#include "coopbf/channel.hpp"
#include "coopbf/rng.hpp"

namespace coopbf {

/// Which closed form is used for the analytical outage curve.
enum class BoundVariant {
  /// P(MK/2, (2^R - 1) sigma^2 / (2 P2)), the published expression.
  Printed,
  /// P(MK, (2^R - 1) sigma^2 / P2): ||H||_F^2 of MK unit-variance complex
  /// Gaussians is (1/2) chi^2 with 2MK degrees of freedom.
  ComplexConvention,
};

/// One Monte Carlo outage evaluation of the beamforming phase.
struct OutageConfig {
  double r_tr = 3.0;      // bits/s/Hz
  double p2 = 1.0;        // phase-2 transmit power
  double sigma_n2 = 1.0;  // receiver noise variance
  std::size_t m = 3;      // receive antennas
  std::size_t k = 1;      // transmitting nodes
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  GainMode gain_mode = GainMode::Frobenius;
  std::optional<CorrelationMatrix> correlation;
  /// Parallelism only; never changes the result.
  unsigned workers = 1;
  std::uint64_t stream = streams::kProposed;

  void validate() const;
};

struct OutageEstimate {
  double probability = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t outages = 0;
  double std_error = 0.0;  // sqrt(p (1 - p) / trials)
  double threshold = 0.0;  // gain below which the trial is in outage
};

/// (2^r_tr - 1) * sigma_n2 / p2.
double outage_threshold(double r_tr, double p2, double sigma_n2);

/// True iff r_tr <= log2(1 + snr).
bool shannon_achievable(double r_tr, double snr);

/// Builds an estimate from an integer outage count.
OutageEstimate make_estimate(std::uint64_t outages, std::uint64_t trials, double threshold);

/// Fraction of trials whose channel gain falls strictly below the threshold.
/// Deterministic in (seed, stream) regardless of `workers`.
OutageEstimate monte_carlo_outage(const OutageConfig& cfg);

/// Closed-form outage for an M x K beamforming channel.
double analytical_outage(std::size_t m, std::size_t k, double r_tr, double p2, double sigma_n2,
                         BoundVariant variant = BoundVariant::Printed);

}  // namespace coopbf

#endif  // COOPBF_OUTAGE_HPP
