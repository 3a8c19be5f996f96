#ifndef COOPBF_POWERPLAN_HPP
#define COOPBF_POWERPLAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopbf/beamform.hpp"
#include "coopbf/channel.hpp"
#include "coopbf/outage.hpp"

namespace coopbf {

/// Two-phase budget: p1 for intra-cluster broadcast, p2 for beamforming.
struct PowerAllocation {
  double p_total = 0.0;
  double alpha = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  std::size_t k = 0;  // 0 until a cluster size is assigned
};

struct BroadcastSpec {
  double r_br = 2.0;        // broadcast rate, bits/s/Hz
  double sigma_nbr2 = 1.0;  // broadcast-channel noise variance
  double p_s = 4.0;         // per-node broadcast power

  void validate() const;
};

/// p1 = alpha * p_total, p2 = p_total - p1. Requires 0 < alpha < 1.
PowerAllocation split(double p_total, double alpha);

/// Unrounded alpha * p_total / p_s.
double cluster_size_real(double alpha, double p_total, double p_s);

/// Nearest integer to alpha * p_total / p_s, halves rounded up. Throws
/// InfeasibleAllocation when the real size is below 0.5.
std::size_t cluster_size(double alpha, double p_total, double p_s);

/// Minimum broadcast power K (2^r_br - 1) sigma_nbr2.
double broadcast_power_bound(std::size_t k, const BroadcastSpec& spec);

/// p1 >= broadcast_power_bound(k, spec). When true the broadcast phase is
/// treated as error-free.
bool broadcast_feasible(double p1, std::size_t k, const BroadcastSpec& spec);

struct AlphaSearch {
  std::vector<double> grid;
  double p_total = 60.0;
  BroadcastSpec broadcast;
  std::size_t m = 3;
  double r_tr = 3.0;
  double sigma_n2 = 1.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  GainMode gain_mode = GainMode::Frobenius;
  std::optional<CorrelationMatrix> correlation;
  unsigned workers = 1;
};

struct AlphaCurvePoint {
  double alpha = 0.0;
  double k_real = 0.0;
  std::size_t k = 0;
  PowerAllocation allocation;
  bool feasible = false;
  std::optional<OutageEstimate> estimate;  // empty for infeasible points
};

struct AlphaOptimum {
  double alpha_star = 0.0;
  std::size_t k_star = 0;
  double p_out_star = 0.0;
  std::vector<AlphaCurvePoint> curve;  // ascending alpha
  std::vector<std::string> warnings;
};

/// Evaluates every grid point and returns the alpha with the smallest Monte
/// Carlo outage; ties go to the smaller alpha. Infeasible points are kept in
/// the curve with a warning. Throws InfeasibleAllocation if none is feasible.
AlphaOptimum optimize_alpha(const AlphaSearch& search);

/// Evaluates a single grid point (shared by optimize_alpha and the sweeps).
AlphaCurvePoint evaluate_alpha(const AlphaSearch& search, double alpha);

}  // namespace coopbf

#endif  // COOPBF_POWERPLAN_HPP
