#include "coopbf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coopbf/error.hpp"

namespace coopbf {

ChannelMatrix::ChannelMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  require(entries_.rows() >= 1 && entries_.cols() >= 1, "channel matrix must be at least 1x1");
  require(entries_.allFinite(), "channel matrix entries must be finite");
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)), level_(0.0) {
  require(entries_.rows() >= 1 && entries_.rows() == entries_.cols(),
          "correlation matrix must be square and nonempty");
  require(entries_.allFinite(), "correlation matrix entries must be finite");
  constexpr double tol = 1e-12;
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    require(std::abs(entries_(i, i) - 1.0) <= tol, "correlation matrix must have a unit diagonal");
    for (Eigen::Index j = 0; j < i; ++j) {
      require(std::abs(entries_(i, j) - entries_(j, i)) <= tol, "correlation matrix must be symmetric");
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(entries_, Eigen::EigenvaluesOnly);
  require(eig.eigenvalues().minCoeff() >= -1e-10 * static_cast<double>(entries_.rows()),
          "correlation matrix must be positive semidefinite");
  level_ = correlation_level(entries_);
}

void fill_iid_rayleigh(Eigen::MatrixXcd& out, Rng& rng) {
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      const double re = half(rng);
      const double im = half(rng);
      out(i, j) = Complex(re, im);
    }
  }
}

ChannelMatrix draw_iid_rayleigh(std::size_t m, std::size_t k, Rng& rng) {
  require(m >= 1 && k >= 1, "channel dimensions must be positive");
  Eigen::MatrixXcd h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  fill_iid_rayleigh(h, rng);
  return ChannelMatrix(std::move(h));
}

CorrelationMatrix exponential_correlation(std::size_t m, double r) {
  require(m >= 1, "correlation size must be positive");
  require(r >= 0.0 && r < 1.0, "exponential correlation coefficient must lie in [0, 1)");
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      c(i, j) = std::pow(r, static_cast<double>(std::abs(i - j)));
    }
  }
  return CorrelationMatrix(std::move(c));
}

double correlation_level(const Eigen::MatrixXd& c) {
  require(c.rows() >= 1 && c.rows() == c.cols(), "correlation level needs a square matrix");
  const Eigen::VectorXd diag = c.diagonal();
  const double diag_norm = diag.norm();
  if (diag_norm == 0.0) {
    fail(ErrorCode::DivisionByZero, "correlation level undefined for an all-zero diagonal");
  }
  Eigen::MatrixXd off = c;
  off.diagonal().setZero();
  return off.norm() / diag_norm;
}

double correlation_level(const CorrelationMatrix& c) { return correlation_level(c.entries()); }

ChannelMatrix apply_correlation(const CorrelationMatrix& c, const ChannelMatrix& h) {
  if (c.size() != h.rows()) {
    fail(ErrorCode::InvalidArgument,
         "correlation is " + std::to_string(c.size()) + "x" + std::to_string(c.size()) +
             " but channel has " + std::to_string(h.rows()) + " rows");
  }
  return ChannelMatrix(c.entries().cast<Complex>() * h.entries());
}

ConditionDiagnostics condition_diagnostics(const ChannelMatrix& h_eff) {
  const Eigen::MatrixXcd gram = h_eff.entries().adjoint() * h_eff.entries();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);

  ConditionDiagnostics out;
  const Eigen::VectorXd& ev = eig.eigenvalues();  // ascending
  out.eigenvalues.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = ev.size(); i-- > 0;) {
    out.eigenvalues.push_back(std::max(ev(i), 0.0));
  }
  const double largest = out.eigenvalues.front();
  const double smallest = out.eigenvalues.back();
  if (largest <= 0.0 || smallest < kConditionSaturation * largest) {
    out.condition_number = std::numeric_limits<double>::infinity();
  } else {
    out.condition_number = largest / smallest;
  }
  return out;
}

}  // namespace coopbf
