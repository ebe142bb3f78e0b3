#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace tmoments {

/// Location-scale Student's t: X = mu + sigma * T_nu.
struct StudentParams {
    double mu = 0.0;
    double nu = 1.0;
    double sigma = 1.0;

    /// Throws DomainError unless nu > 0, sigma > 0 and all fields are finite.
    void validate() const;
};

double pdf(double x, const StudentParams& p);
double cdf(double x, const StudentParams& p);

/// 1 - cdf(x, p), evaluated directly so that small upper tails keep their
/// relative accuracy.
double survival(double x, const StudentParams& p);

/// P(X > 0).
double prob_positive(const StudentParams& p);

/// Inverse CDF. Bracketed root-finding on the CDF; |cdf(x) - q| <= 1e-10.
double quantile(double q, const StudentParams& p);

/// Inverse survival function: x with survival(x, p) == s, for s in (0, 1).
/// Keeps relative accuracy for tiny s, which quantile(1 - s) cannot.
double inverse_survival(double s, const StudentParams& p);

/// n i.i.d. draws, deterministic in (p, n, seed).
std::vector<double> sample(const StudentParams& p, std::size_t n, std::uint64_t seed);

namespace detail {
// Standard t (location 0, scale 1) building blocks shared with the
// folded and truncated modules.
double std_cdf(double t, double nu);
double std_survival(double t, double nu);
double std_inverse_survival(double s, double nu);
}  // namespace detail

}  // namespace tmoments
