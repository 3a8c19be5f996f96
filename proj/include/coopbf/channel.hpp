#ifndef COOPBF_CHANNEL_HPP
#define COOPBF_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "coopbf/rng.hpp"

namespace coopbf {

using Complex = std::complex<double>;

/// Complex M x K fading coefficients: rows are receive antennas, columns are
/// transmitting nodes. Immutable once constructed.
class ChannelMatrix {
public:
  /// Throws InvalidArgument on an empty shape or a non-finite entry.
  explicit ChannelMatrix(Eigen::MatrixXcd entries);

  [[nodiscard]] std::size_t rows() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  [[nodiscard]] std::size_t cols() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  [[nodiscard]] const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  bool operator==(const ChannelMatrix& other) const { return entries_ == other.entries_; }

private:
  Eigen::MatrixXcd entries_;
};

/// Real symmetric m x m receive-side correlation with unit diagonal.
/// The correlation level is computed once at construction.
class CorrelationMatrix {
public:
  /// Validates symmetry, unit diagonal and positive semidefiniteness.
  explicit CorrelationMatrix(Eigen::MatrixXd entries);

  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  [[nodiscard]] double level() const noexcept { return level_; }

private:
  Eigen::MatrixXd entries_;
  double level_;
};

struct ConditionDiagnostics {
  std::vector<double> eigenvalues;  // descending
  double condition_number;          // +inf when rank deficient
};

/// Eigenvalues below this fraction of the largest make the condition number
/// saturate to +infinity.
inline constexpr double kConditionSaturation = 1e-12;

/// iid CN(0,1) entries: real and imaginary parts each N(0, 1/2).
ChannelMatrix draw_iid_rayleigh(std::size_t m, std::size_t k, Rng& rng);

/// Fills `out` (already sized) with iid CN(0,1) entries in column-major order.
/// Same draw sequence as draw_iid_rayleigh; used by the Monte Carlo hot loops.
void fill_iid_rayleigh(Eigen::MatrixXcd& out, Rng& rng);

/// C[i][j] = r^|i-j|, 0 <= r < 1.
CorrelationMatrix exponential_correlation(std::size_t m, double r);

/// ||C - diag(C)||_F / ||diag(C)||_F for any square matrix. Throws
/// DivisionByZero when the diagonal is entirely zero.
double correlation_level(const Eigen::MatrixXd& c);
double correlation_level(const CorrelationMatrix& c);

/// Receive-side correlation: returns C * H.
ChannelMatrix apply_correlation(const CorrelationMatrix& c, const ChannelMatrix& h);

/// Spectrum of H^H H and its condition number.
ConditionDiagnostics condition_diagnostics(const ChannelMatrix& h_eff);

}  // namespace coopbf

#endif  // COOPBF_CHANNEL_HPP
