#include "coopbf/powerplan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "coopbf/error.hpp"

namespace coopbf {

void BroadcastSpec::validate() const {
  require(std::isfinite(r_br) && r_br > 0.0, "broadcast rate must be positive");
  require(std::isfinite(sigma_nbr2) && sigma_nbr2 > 0.0, "broadcast noise variance must be positive");
  require(std::isfinite(p_s) && p_s > 0.0, "per-node broadcast power must be positive");
}

PowerAllocation split(double p_total, double alpha) {
  require(std::isfinite(p_total) && p_total > 0.0, "total power must be positive");
  require(alpha > 0.0 && alpha < 1.0, "power allocation factor must lie in (0, 1)");
  PowerAllocation out;
  out.p_total = p_total;
  out.alpha = alpha;
  out.p1 = alpha * p_total;
  out.p2 = p_total - out.p1;
  return out;
}

double cluster_size_real(double alpha, double p_total, double p_s) {
  require(alpha > 0.0 && alpha < 1.0, "power allocation factor must lie in (0, 1)");
  require(p_total > 0.0 && p_s > 0.0, "powers must be positive");
  return alpha * (p_total / p_s);
}

std::size_t cluster_size(double alpha, double p_total, double p_s) {
  const double real = cluster_size_real(alpha, p_total, p_s);
  // Grid values such as 0.3 * 15 land a few ulps off an exact half.
  const double snapped = real + 1e-9 * std::max(1.0, real);
  if (snapped < 0.5) {
    fail(ErrorCode::InfeasibleAllocation, "cluster would hold no node (alpha * P_total / P_s < 0.5)");
  }
  return static_cast<std::size_t>(std::floor(snapped + 0.5));
}

double broadcast_power_bound(std::size_t k, const BroadcastSpec& spec) {
  require(k >= 1, "cluster size must be positive");
  spec.validate();
  return static_cast<double>(k) * (std::exp2(spec.r_br) - 1.0) * spec.sigma_nbr2;
}

bool broadcast_feasible(double p1, std::size_t k, const BroadcastSpec& spec) {
  return p1 >= broadcast_power_bound(k, spec);
}

AlphaCurvePoint evaluate_alpha(const AlphaSearch& search, double alpha) {
  AlphaCurvePoint pt;
  pt.alpha = alpha;
  pt.allocation = split(search.p_total, alpha);
  pt.k_real = cluster_size_real(alpha, search.p_total, search.broadcast.p_s);
  try {
    pt.k = cluster_size(alpha, search.p_total, search.broadcast.p_s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfeasibleAllocation) {
      throw;
    }
    pt.k = 0;
    pt.feasible = false;
    return pt;
  }
  pt.allocation.k = pt.k;
  pt.feasible = broadcast_feasible(pt.allocation.p1, pt.k, search.broadcast);
  if (!pt.feasible) {
    return pt;
  }
  OutageConfig cfg;
  cfg.r_tr = search.r_tr;
  cfg.p2 = pt.allocation.p2;
  cfg.sigma_n2 = search.sigma_n2;
  cfg.m = search.m;
  cfg.k = pt.k;
  cfg.trials = search.trials;
  cfg.seed = search.seed;
  cfg.gain_mode = search.gain_mode;
  cfg.correlation = search.correlation;
  cfg.workers = search.workers;
  pt.estimate = monte_carlo_outage(cfg);
  return pt;
}

AlphaOptimum optimize_alpha(const AlphaSearch& search) {
  require(!search.grid.empty(), "alpha grid must be nonempty");
  search.broadcast.validate();
  for (double a : search.grid) {
    require(a > 0.0 && a < 1.0, "every alpha must lie in (0, 1)");
  }
  std::vector<double> grid = search.grid;
  std::sort(grid.begin(), grid.end());

  AlphaOptimum out;
  bool found = false;
  for (double alpha : grid) {
    AlphaCurvePoint pt = evaluate_alpha(search, alpha);
    if (!pt.feasible) {
      char msg[160];
      std::snprintf(msg, sizeof msg, "alpha=%.6g skipped: broadcast power bound not met (K=%zu)", alpha, pt.k);
      out.warnings.emplace_back(msg);
    } else if (!found || pt.estimate->probability < out.p_out_star) {
      found = true;
      out.alpha_star = alpha;
      out.k_star = pt.k;
      out.p_out_star = pt.estimate->probability;
    }
    out.curve.push_back(std::move(pt));
  }
  if (!found) {
    fail(ErrorCode::InfeasibleAllocation, "no alpha on the grid satisfies the broadcast power bound");
  }
  return out;
}

}  // namespace coopbf
