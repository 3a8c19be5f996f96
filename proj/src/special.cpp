#include "coopbf/special.hpp"

#include <cmath>
#include <limits>

#include "coopbf/error.hpp"

namespace coopbf {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 10000;

// log of x^s e^{-x} / Gamma(s)
double log_prefactor(double s, double x) { return s * std::log(x) - x - std::lgamma(s); }

// P(s, x) by sum_{n>=0} x^n / (s (s+1) ... (s+n)).
double lower_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  double denom = s;
  for (int n = 1; n < kMaxIterations; ++n) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(log_prefactor(s, x));
}

// Q(s, x) = 1 - P(s, x) by the continued fraction
// 1/(x+1-s- 1(1-s)/(x+3-s- 2(2-s)/(x+5-s- ...))), evaluated with modified Lentz.
double upper_fraction(double s, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) {
      d = tiny;
    }
    c = b + an / c;
    if (std::abs(c) < tiny) {
      c = tiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      break;
    }
  }
  return std::exp(log_prefactor(s, x)) * h;
}

}  // namespace

double regularized_lower_gamma(double s, double x) {
  require(std::isfinite(s) && s > 0.0, "gamma shape must be positive and finite");
  require(!std::isnan(x) && x >= 0.0, "gamma argument must be nonnegative");
  if (x == 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return 1.0;
  }
  if (x < s + 1.0) {
    return std::min(1.0, lower_series(s, x));
  }
  return std::max(0.0, 1.0 - upper_fraction(s, x));
}

}  // namespace coopbf
