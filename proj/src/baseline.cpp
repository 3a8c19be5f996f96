#include "coopbf/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "coopbf/error.hpp"
#include "coopbf/parallel.hpp"
#include "coopbf/powerplan.hpp"

namespace coopbf {

namespace {

// log2 det(I + scale * H H^H) via LU; the matrix is Hermitian positive
// definite so |det| is the product of |u_ii|.
double log2_det_capacity(const Eigen::MatrixXcd& h, double scale, Eigen::MatrixXcd& work) {
  work.noalias() = h * h.adjoint();
  work *= scale;
  work.diagonal().array() += 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(work);
  double bits = 0.0;
  for (Eigen::Index i = 0; i < lu.matrixLU().rows(); ++i) {
    bits += std::log2(std::abs(lu.matrixLU()(i, i)));
  }
  return bits;
}

}  // namespace

void MimoConfig::validate() const {
  require(n_tx >= 1 && n_rx >= 1, "antenna counts must be positive");
  require(std::isfinite(p_mimo) && p_mimo > 0.0, "MIMO power must be positive");
  require(std::isfinite(sigma_n2) && sigma_n2 > 0.0, "noise variance must be positive");
  require(std::isfinite(r_tr) && r_tr >= 0.0, "target rate must be nonnegative");
  require(trials >= 1, "at least one trial is required");
}

double mimo_capacity(const ChannelMatrix& h, double p_mimo, double sigma_n2) {
  require(p_mimo > 0.0 && sigma_n2 > 0.0, "powers must be positive");
  const double scale = p_mimo / (static_cast<double>(h.cols()) * sigma_n2);
  Eigen::MatrixXcd work(h.entries().rows(), h.entries().rows());
  return log2_det_capacity(h.entries(), scale, work);
}

OutageEstimate mimo_outage(const MimoConfig& cfg) {
  cfg.validate();
  const double scale = cfg.p_mimo / (static_cast<double>(cfg.n_tx) * cfg.sigma_n2);
  const auto rx = static_cast<Eigen::Index>(cfg.n_rx);
  const auto tx = static_cast<Eigen::Index>(cfg.n_tx);

  auto make_trial = [&] {
    return [&, h = Eigen::MatrixXcd(rx, tx), work = Eigen::MatrixXcd(rx, rx)](Rng& rng) mutable {
      fill_iid_rayleigh(h, rng);
      return log2_det_capacity(h, scale, work) < cfg.r_tr;
    };
  };
  const std::uint64_t outages = count_events(cfg.trials, cfg.seed, streams::kMimo, cfg.workers, make_trial);
  // The outage threshold here is on capacity, in bits/s/Hz.
  return make_estimate(outages, cfg.trials, cfg.r_tr);
}

double noise_for_snr_db(double p_total, double snr_db) {
  require(p_total > 0.0 && std::isfinite(snr_db), "invalid SNR point");
  return p_total / std::pow(10.0, snr_db / 10.0);
}

std::vector<ComparisonRow> compare_systems(std::span<const double> snr_db_grid,
                                           const ProposedSystem& proposed, MimoConfig mimo) {
  require(!snr_db_grid.empty(), "SNR grid must be nonempty");
  std::vector<double> grid(snr_db_grid.begin(), snr_db_grid.end());
  std::sort(grid.begin(), grid.end());

  const PowerAllocation alloc = split(proposed.p_total, proposed.alpha);
  const std::size_t k = cluster_size(proposed.alpha, proposed.p_total, proposed.p_s);

  std::vector<ComparisonRow> rows;
  rows.reserve(grid.size());
  for (double snr_db : grid) {
    const double sigma_n2 = noise_for_snr_db(proposed.p_total, snr_db);
    OutageConfig cfg;
    cfg.r_tr = proposed.r_tr;
    cfg.p2 = alloc.p2;
    cfg.sigma_n2 = sigma_n2;
    cfg.m = proposed.m;
    cfg.k = k;
    cfg.trials = proposed.trials;
    cfg.seed = proposed.seed;
    cfg.gain_mode = proposed.gain_mode;
    cfg.workers = proposed.workers;

    mimo.p_mimo = proposed.p_total;
    mimo.sigma_n2 = sigma_n2;

    ComparisonRow row;
    row.snr_db = snr_db;
    row.k = k;
    row.proposed = monte_carlo_outage(cfg);
    row.mimo = mimo_outage(mimo);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace coopbf
