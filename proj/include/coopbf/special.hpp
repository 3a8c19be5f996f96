#ifndef COOPBF_SPECIAL_HPP
#define COOPBF_SPECIAL_HPP

namespace coopbf {

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
///
/// Uses the power series below x = s + 1 and the Legendre continued fraction
/// (modified Lentz) above it; both converge to ~1e-15 relative, which keeps
/// the absolute error under 1e-12 on s in (0, 1e3], x in [0, 1e4].
/// Throws InvalidArgument when s <= 0, x < 0 or either is non-finite.
double regularized_lower_gamma(double s, double x);

}  // namespace coopbf

#endif  // COOPBF_SPECIAL_HPP
