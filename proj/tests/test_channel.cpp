#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "coopbf/channel.hpp"
#include "coopbf/error.hpp"
#include "oracles.hpp"

namespace coopbf {
namespace {

TEST(ChannelMatrix, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(ChannelMatrix(Eigen::MatrixXcd(0, 2)), Error);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(1, 0) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  EXPECT_THROW(ChannelMatrix{bad}, Error);
}

TEST(DrawIidRayleigh, SameSeedSameMatrix) {
  Rng a = substream(42, 7, 0);
  Rng b = substream(42, 7, 0);
  EXPECT_EQ(draw_iid_rayleigh(3, 3, a), draw_iid_rayleigh(3, 3, b));
}

TEST(DrawIidRayleigh, DifferentBlocksDiffer) {
  Rng a = substream(42, 7, 0);
  Rng b = substream(42, 7, 1);
  EXPECT_FALSE(draw_iid_rayleigh(3, 3, a) == draw_iid_rayleigh(3, 3, b));
}

TEST(DrawIidRayleigh, Shape) {
  Rng rng = substream(1, 0, 0);
  const ChannelMatrix h = draw_iid_rayleigh(2, 5, rng);
  EXPECT_EQ(h.rows(), 2U);
  EXPECT_EQ(h.cols(), 5U);
}

TEST(DrawIidRayleigh, ZeroDimensionIsInvalid) {
  Rng rng = substream(1, 0, 0);
  try {
    draw_iid_rayleigh(0, 3, rng);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_THROW(draw_iid_rayleigh(3, 0, rng), Error);
}

// |CN(0,1)|^2 is Exp(1): mean 1, and each quadrature carries half the power.
TEST(DrawIidRayleigh, UnitVarianceOverAMillionDraws) {
  Rng rng = substream(2024, 0, 0);
  constexpr int n = 1000000;
  double power = 0.0;
  double real_power = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex h = draw_iid_rayleigh(1, 1, rng)(0, 0);
    power += std::norm(h);
    real_power += h.real() * h.real();
  }
  EXPECT_NEAR(power / n, 1.0, 0.01);
  EXPECT_NEAR(real_power / n, 0.5, 0.01);
}

TEST(ExponentialCorrelation, ZeroCoefficientIsIdentity) {
  const CorrelationMatrix c = exponential_correlation(3, 0.0);
  EXPECT_TRUE(c.entries().isApprox(Eigen::MatrixXd::Identity(3, 3), 0.0));
  EXPECT_EQ(c.level(), 0.0);
}

TEST(ExponentialCorrelation, TwoByTwo) {
  const CorrelationMatrix c = exponential_correlation(2, 0.5);
  Eigen::MatrixXd expected(2, 2);
  expected << 1.0, 0.5, 0.5, 1.0;
  EXPECT_EQ(c.entries(), expected);
}

TEST(ExponentialCorrelation, StoredLevelMatchesHandFrobenius) {
  const CorrelationMatrix c = exponential_correlation(3, 0.5);
  // Off-diagonal: four entries 0.5 and two entries 0.25; diagonal: three ones.
  const double hand = oracle::frobenius({{0.0, 0.5, 0.25}, {0.5, 0.0, 0.5}, {0.25, 0.5, 0.0}}) /
                      oracle::frobenius({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  EXPECT_NEAR(hand, 0.6123724356957945, 1e-15);
  EXPECT_NEAR(c.level(), hand, 1e-15);
  EXPECT_EQ(c.level(), correlation_level(c));
}

TEST(ExponentialCorrelation, CoefficientOutsideUnitInterval) {
  EXPECT_THROW(exponential_correlation(3, 1.0), Error);
  EXPECT_THROW(exponential_correlation(3, -0.1), Error);
  EXPECT_THROW(exponential_correlation(0, 0.5), Error);
}

TEST(ExponentialCorrelation, LevelStrictlyIncreasingInR) {
  for (std::size_t m : {2U, 3U, 5U}) {
    double previous = -1.0;
    for (int i = 0; i < 100; ++i) {
      const double level = exponential_correlation(m, i / 100.0).level();
      EXPECT_GT(level, previous) << "m=" << m << " r=" << i / 100.0;
      previous = level;
    }
  }
}

TEST(CorrelationMatrix, RejectsInvalidMatrices) {
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.2, 0.3, 1.0;
  EXPECT_THROW(CorrelationMatrix{asym}, Error);
  Eigen::MatrixXd not_unit(2, 2);
  not_unit << 2.0, 0.0, 0.0, 1.0;
  EXPECT_THROW(CorrelationMatrix{not_unit}, Error);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1.0, 1.5, 1.5, 1.0;
  EXPECT_THROW(CorrelationMatrix{indefinite}, Error);
}

TEST(CorrelationLevel, IdentityIsZero) {
  for (int m = 1; m <= 8; ++m) {
    EXPECT_EQ(correlation_level(Eigen::MatrixXd::Identity(m, m)), 0.0);
  }
}

TEST(CorrelationLevel, HandComputedCases) {
  Eigen::MatrixXd half(2, 2);
  half << 1.0, 0.5, 0.5, 1.0;
  EXPECT_NEAR(correlation_level(half), oracle::frobenius({{0.0, 0.5}, {0.5, 0.0}}) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(correlation_level(half), 0.5, 1e-15);

  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(2, 2);
  EXPECT_NEAR(correlation_level(ones), 1.0, 1e-15);
  EXPECT_NEAR(CorrelationMatrix(ones).level(), 1.0, 1e-15);
}

TEST(CorrelationLevel, ZeroDiagonalIsDivisionByZero) {
  Eigen::MatrixXd c(2, 2);
  c << 0.0, 1.0, 1.0, 0.0;
  try {
    correlation_level(c);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(CorrelationLevel, InvariantUnderSymmetricPermutation) {
  const Eigen::MatrixXd c = exponential_correlation(4, 0.6).entries();
  std::vector<int> order{0, 1, 2, 3};
  do {
    Eigen::PermutationMatrix<Eigen::Dynamic> p(4);
    for (int i = 0; i < 4; ++i) {
      p.indices()[i] = order[static_cast<std::size_t>(i)];
    }
    const Eigen::MatrixXd permuted = p * c * p.transpose();
    EXPECT_NEAR(correlation_level(permuted), correlation_level(c), 1e-14);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(ApplyCorrelation, IdentityIsExact) {
  Rng rng = substream(3, 0, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ChannelMatrix h = draw_iid_rayleigh(3, 4, rng);
    EXPECT_EQ(apply_correlation(exponential_correlation(3, 0.0), h), h);
  }
}

TEST(ApplyCorrelation, RankOneCollapse) {
  Eigen::MatrixXcd h(2, 1);
  h << Complex(0.3, -1.2), Complex(-0.7, 0.4);
  const ChannelMatrix out = apply_correlation(CorrelationMatrix(Eigen::MatrixXd::Ones(2, 2)), ChannelMatrix(h));
  EXPECT_EQ(out(0, 0), h(0, 0) + h(1, 0));
  EXPECT_EQ(out(1, 0), h(0, 0) + h(1, 0));
}

TEST(ApplyCorrelation, DimensionMismatch) {
  Rng rng = substream(3, 0, 0);
  EXPECT_THROW(apply_correlation(exponential_correlation(2, 0.5), draw_iid_rayleigh(3, 2, rng)), Error);
}

// E[(C h)(C h)^H] = C E[h h^H] C^T = C C^T for iid CN(0,1) columns.
TEST(ApplyCorrelation, CovariancePropagation) {
  const CorrelationMatrix c = exponential_correlation(3, 0.5);
  const Eigen::MatrixXd expected = c.entries() * c.entries().transpose();
  Rng rng = substream(11, 0, 0);
  constexpr int n = 100000;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(3, 3);
  for (int i = 0; i < n; ++i) {
    const ChannelMatrix y = apply_correlation(c, draw_iid_rayleigh(3, 1, rng));
    acc += y.entries() * y.entries().adjoint();
  }
  acc /= static_cast<double>(n);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(acc(i, j).real(), expected(i, j), 0.02) << i << "," << j;
      EXPECT_NEAR(acc(i, j).imag(), 0.0, 0.02) << i << "," << j;
    }
  }
}

TEST(ConditionDiagnostics, OrthonormalColumns) {
  // First two columns of the 3-point DFT, scaled to unit norm.
  const double pi = std::acos(-1.0);
  Eigen::MatrixXcd q(3, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      q(i, j) = std::polar(1.0 / std::sqrt(3.0), -2.0 * pi * i * j / 3.0);
    }
  }
  const ConditionDiagnostics d = condition_diagnostics(ChannelMatrix(q));
  ASSERT_EQ(d.eigenvalues.size(), 2U);
  EXPECT_NEAR(d.eigenvalues[0], 1.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-12);
  EXPECT_NEAR(d.condition_number, 1.0, 1e-12);
}

TEST(ConditionDiagnostics, ScaledIdentity) {
  const ConditionDiagnostics d = condition_diagnostics(ChannelMatrix(2.0 * Eigen::MatrixXcd::Identity(2, 2)));
  ASSERT_EQ(d.eigenvalues.size(), 2U);
  EXPECT_NEAR(d.eigenvalues[0], 4.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues[1], 4.0, 1e-12);
  EXPECT_NEAR(d.condition_number, 1.0, 1e-12);
}

TEST(ConditionDiagnostics, DescendingAndSaturatedWhenRankDeficient) {
  Rng rng = substream(5, 0, 0);
  const ConditionDiagnostics d = condition_diagnostics(draw_iid_rayleigh(2, 4, rng));
  ASSERT_EQ(d.eigenvalues.size(), 4U);
  EXPECT_TRUE(std::is_sorted(d.eigenvalues.rbegin(), d.eigenvalues.rend()));
  EXPECT_TRUE(std::isinf(d.condition_number));
}

TEST(ConditionDiagnostics, CorrelationRaisesMeanConditionNumber) {
  const auto mean_condition = [](double r) {
    const CorrelationMatrix c = exponential_correlation(3, r);
    Rng rng = substream(99, 0, 0);
    double sum = 0.0;
    constexpr int n = 10000;
    for (int i = 0; i < n; ++i) {
      sum += condition_diagnostics(apply_correlation(c, draw_iid_rayleigh(3, 2, rng))).condition_number;
    }
    return sum / n;
  };
  EXPECT_GT(mean_condition(0.75), mean_condition(0.0));
}

}  // namespace
}  // namespace coopbf
