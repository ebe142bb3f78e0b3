#pragma once

namespace tmoments {

// ln Gamma(x) for x > 0. Stirling series for x >= 15, upward recurrence below.
double log_gamma(double x);

// ln Gamma(x + h) - ln Gamma(x), formed without subtracting two large logs
// when x is large.
double log_gamma_ratio(double x, double h);

/// Regularized incomplete beta function I_x(a, b).
///
/// Evaluated with the modified Lentz continued fraction, switching to
/// 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2). I_0 = 0 and I_1 = 1 are
/// returned exactly.
double reg_inc_beta(double a, double b, double x);

/// Same as reg_inc_beta(a, b, x) but with the complement y = 1 - x supplied
/// by the caller. Callers that can form y without cancellation (the t CDF
/// can) should use this overload; x + y must equal 1 up to rounding.
double reg_inc_beta(double a, double b, double x, double y);

/// Student's t normalizing constant
/// C(nu) = Gamma((nu+1)/2) / (Gamma(nu/2) sqrt(pi nu)), the standard t
/// density at zero.
double normalizing_constant(double nu);

/// ln C(nu).
double log_normalizing_constant(double nu);

}  // namespace tmoments
