#include "coopbf/beamform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "coopbf/error.hpp"

namespace coopbf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_columns(const ChannelMatrix& h, const BeamformingWeights& w) {
  if (h.cols() != w.size()) {
    fail(ErrorCode::InvalidArgument, "channel has " + std::to_string(h.cols()) +
                                         " columns but there are " + std::to_string(w.size()) +
                                         " weights");
  }
}

Eigen::Map<const Eigen::VectorXcd> as_vector(std::span<const Complex> v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

std::vector<Complex> to_std(const Eigen::VectorXcd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

BeamformingWeights::BeamformingWeights(std::vector<double> amplitudes, std::vector<double> phases)
    : amplitudes_(std::move(amplitudes)), phases_(std::move(phases)) {
  require(!amplitudes_.empty(), "beamforming needs at least one node");
  require(amplitudes_.size() == phases_.size(), "amplitude and phase counts differ");
  double power = 0.0;
  for (double a : amplitudes_) {
    require(std::isfinite(a) && a >= 0.0, "amplitudes must be finite and nonnegative");
    power += a * a;
  }
  require(power > 0.0, "at least one amplitude must be positive");
  const double scale = 1.0 / std::sqrt(power);
  for (double& a : amplitudes_) {
    a *= scale;
  }
  for (double& theta : phases_) {
    require(std::isfinite(theta), "phases must be finite");
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) {
      theta += kTwoPi;
    }
    if (theta >= kTwoPi) {
      theta = 0.0;
    }
  }
}

Complex BeamformingWeights::coefficient(std::size_t i) const {
  return std::polar(amplitudes_.at(i), phases_.at(i));
}

BeamformingWeights draw_weights(std::size_t k, Rng& rng) {
  require(k >= 1, "beamforming needs at least one node");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> amplitudes(k);
  std::vector<double> phases(k);
  double power = 0.0;
  do {
    power = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      amplitudes[i] = unit(rng);
      phases[i] = angle(rng);
      power += amplitudes[i] * amplitudes[i];
    }
  } while (power == 0.0);
  return {std::move(amplitudes), std::move(phases)};
}

ChannelMatrix effective_channel(const ChannelMatrix& h, const BeamformingWeights& w) {
  check_columns(h, w);
  Eigen::MatrixXcd out = h.entries();
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.col(static_cast<Eigen::Index>(i)) *= w.coefficient(i);
  }
  return ChannelMatrix(std::move(out));
}

double channel_gain(const ChannelMatrix& h, const BeamformingWeights& w, GainMode mode) {
  check_columns(h, w);
  if (mode == GainMode::Frobenius) {
    // |a e^{j theta}|^2 = a^2, so phases drop out column by column.
    double gain = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double a = w.amplitude(i);
      gain += a * a * h.entries().col(static_cast<Eigen::Index>(i)).squaredNorm();
    }
    return gain;
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = w.coefficient(i);
  }
  return (h.entries() * v).squaredNorm();
}

double received_snr(double gain, double p2, double sigma_n2) {
  require(p2 > 0.0, "transmit power must be positive");
  require(sigma_n2 > 0.0, "noise variance must be positive");
  require(gain >= 0.0, "channel gain must be nonnegative");
  return (p2 / sigma_n2) * gain;
}

std::vector<Complex> transmit(std::span<const Complex> x, const ChannelMatrix& h,
                              const BeamformingWeights& w, std::span<const Complex> noise) {
  check_columns(h, w);
  require(x.size() == h.cols(), "input vector length must equal the node count");
  require(noise.size() == h.rows(), "noise vector length must equal the antenna count");
  const ChannelMatrix eff = effective_channel(h, w);
  const Eigen::VectorXcd y = eff.entries() * as_vector(x) + as_vector(noise);
  return to_std(y);
}

std::vector<Complex> mrc_reconstruct(std::span<const Complex> y, const ChannelMatrix& h,
                                     const BeamformingWeights& w) {
  check_columns(h, w);
  require(y.size() == h.rows(), "received vector length must equal the antenna count");
  const ChannelMatrix eff = effective_channel(h, w);
  const double gain = eff.entries().squaredNorm();
  if (gain <= kDegenerateGain) {
    fail(ErrorCode::DegenerateChannel, "effective channel gain too small for MRC");
  }
  const Eigen::VectorXcd xhat = (eff.entries().adjoint() * as_vector(y)) / gain;
  return to_std(xhat);
}

TransmissionOutcome simulate_transmission(std::span<const Complex> x, const ChannelMatrix& h,
                                          const BeamformingWeights& w,
                                          std::span<const Complex> noise) {
  TransmissionOutcome out;
  out.received = transmit(x, h, w, noise);
  out.gain = channel_gain(h, w, GainMode::Frobenius);
  out.reconstructed = mrc_reconstruct(out.received, h, w);
  return out;
}

}  // namespace coopbf
