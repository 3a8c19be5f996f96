#include "coopbf/outage.hpp"

#include <cmath>

#include "coopbf/error.hpp"
#include "coopbf/parallel.hpp"
#include "coopbf/special.hpp"

namespace coopbf {

void OutageConfig::validate() const {
  require(std::isfinite(r_tr) && r_tr >= 0.0, "target rate must be nonnegative");
  require(std::isfinite(p2) && p2 > 0.0, "phase-2 power must be positive");
  require(std::isfinite(sigma_n2) && sigma_n2 > 0.0, "noise variance must be positive");
  require(m >= 1 && k >= 1, "antenna and node counts must be positive");
  require(trials >= 1, "at least one trial is required");
  if (correlation) {
    require(correlation->size() == m, "correlation size must match the antenna count");
  }
}

double outage_threshold(double r_tr, double p2, double sigma_n2) {
  require(std::isfinite(r_tr) && r_tr >= 0.0, "target rate must be nonnegative");
  require(p2 > 0.0, "phase-2 power must be positive");
  require(sigma_n2 > 0.0, "noise variance must be positive");
  return (std::exp2(r_tr) - 1.0) * sigma_n2 / p2;
}

bool shannon_achievable(double r_tr, double snr) {
  require(snr >= 0.0, "SNR must be nonnegative");
  return r_tr <= std::log2(1.0 + snr);
}

OutageEstimate make_estimate(std::uint64_t outages, std::uint64_t trials, double threshold) {
  OutageEstimate est;
  est.trials = trials;
  est.outages = outages;
  est.probability = static_cast<double>(outages) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
  est.threshold = threshold;
  return est;
}

OutageEstimate monte_carlo_outage(const OutageConfig& cfg) {
  cfg.validate();
  const double threshold = outage_threshold(cfg.r_tr, cfg.p2, cfg.sigma_n2);
  const auto m = static_cast<Eigen::Index>(cfg.m);
  const auto k = static_cast<Eigen::Index>(cfg.k);
  const Eigen::MatrixXcd corr = cfg.correlation ? Eigen::MatrixXcd(cfg.correlation->entries().cast<Complex>())
                                                : Eigen::MatrixXcd();

  auto make_trial = [&] {
    return [&, h = Eigen::MatrixXcd(m, k), ch = Eigen::MatrixXcd(m, k),
            v = Eigen::VectorXcd(k)](Rng& rng) mutable {
      fill_iid_rayleigh(h, rng);
      const BeamformingWeights w = draw_weights(cfg.k, rng);
      const Eigen::MatrixXcd* eff = &h;
      if (cfg.correlation) {
        ch.noalias() = corr * h;
        eff = &ch;
      }
      double gain = 0.0;
      if (cfg.gain_mode == GainMode::Frobenius) {
        for (Eigen::Index i = 0; i < k; ++i) {
          const double a = w.amplitude(static_cast<std::size_t>(i));
          gain += a * a * eff->col(i).squaredNorm();
        }
      } else {
        for (Eigen::Index i = 0; i < k; ++i) {
          v(i) = w.coefficient(static_cast<std::size_t>(i));
        }
        gain = (*eff * v).squaredNorm();
      }
      return gain < threshold;
    };
  };

  const std::uint64_t outages = count_events(cfg.trials, cfg.seed, cfg.stream, cfg.workers, make_trial);
  return make_estimate(outages, cfg.trials, threshold);
}

double analytical_outage(std::size_t m, std::size_t k, double r_tr, double p2, double sigma_n2,
                         BoundVariant variant) {
  require(m >= 1 && k >= 1, "antenna and node counts must be positive");
  const double tau = outage_threshold(r_tr, p2, sigma_n2);
  const double mk = static_cast<double>(m) * static_cast<double>(k);
  if (variant == BoundVariant::Printed) {
    return regularized_lower_gamma(mk / 2.0, tau / 2.0);
  }
  return regularized_lower_gamma(mk, tau);
}

}  // namespace coopbf
