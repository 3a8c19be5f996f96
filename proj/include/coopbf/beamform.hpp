#ifndef COOPBF_BEAMFORM_HPP
#define COOPBF_BEAMFORM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "coopbf/channel.hpp"
#include "coopbf/rng.hpp"

namespace coopbf {

/// Per-node complex weights a_i * exp(j theta_i). Amplitudes are normalized
/// to unit total power (sum a_i^2 = 1); the phase-2 transmit power enters
/// only through the SNR scaling, never through the weights.
class BeamformingWeights {
public:
  /// Rescales `amplitudes` to unit power and wraps `phases` into [0, 2pi).
  /// Throws InvalidArgument on mismatched lengths, negative amplitudes or an
  /// all-zero amplitude vector.
  BeamformingWeights(std::vector<double> amplitudes, std::vector<double> phases);

  [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
  [[nodiscard]] double amplitude(std::size_t i) const { return amplitudes_.at(i); }
  [[nodiscard]] double phase(std::size_t i) const { return phases_.at(i); }
  [[nodiscard]] Complex coefficient(std::size_t i) const;
  [[nodiscard]] const std::vector<double>& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] const std::vector<double>& phases() const noexcept { return phases_; }

private:
  std::vector<double> amplitudes_;
  std::vector<double> phases_;
};

/// How ||H V_b||^2 is read.
enum class GainMode {
  Frobenius,  // squared Frobenius norm of the M x K product
  Vector,     // ||H v||^2, all nodes carrying one common symbol
};

/// Outcome of pushing one symbol vector through the beamforming channel.
struct TransmissionOutcome {
  std::vector<Complex> received;       // y, length M
  double gain;                         // ||H V_b||_F^2
  std::vector<Complex> reconstructed;  // MRC estimate, length K
};

/// MRC refuses channels whose gain is at or below this value.
inline constexpr double kDegenerateGain = 1e-15;

/// a_i ~ U(0,1) then normalized; theta_i ~ U[0, 2pi).
BeamformingWeights draw_weights(std::size_t k, Rng& rng);

/// H * diag(a_i exp(j theta_i)).
ChannelMatrix effective_channel(const ChannelMatrix& h, const BeamformingWeights& w);

double channel_gain(const ChannelMatrix& h, const BeamformingWeights& w,
                    GainMode mode = GainMode::Frobenius);

/// (p2 / sigma_n2) * gain.
double received_snr(double gain, double p2, double sigma_n2);

/// y = H V_b x + n.
std::vector<Complex> transmit(std::span<const Complex> x, const ChannelMatrix& h,
                              const BeamformingWeights& w, std::span<const Complex> noise);

/// x_hat = (H V_b)^H y / ||H V_b||_F^2. Exact for a single stream; with K > 1
/// this is the plain matched filter with no further equalization.
std::vector<Complex> mrc_reconstruct(std::span<const Complex> y, const ChannelMatrix& h,
                                     const BeamformingWeights& w);

/// transmit followed by mrc_reconstruct.
TransmissionOutcome simulate_transmission(std::span<const Complex> x, const ChannelMatrix& h,
                                          const BeamformingWeights& w,
                                          std::span<const Complex> noise);

}  // namespace coopbf

#endif  // COOPBF_BEAMFORM_HPP
