#pragma once

#include "tmoments/moments.hpp"
#include "tmoments/student.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tmoments {

/// |X| for X ~ T(nu, mu, sigma).
struct FoldedT {
    StudentParams params;
};

/// pdf(x) + pdf(-x) on x >= 0, zero for x < 0.
double pdf_folded(double x, const FoldedT& f);

/// E|X| = mu (2 P(X > 0) - 1) + 2 C(nu) nu / (nu - 1) [1 + mu^2/nu]^{-(nu-1)/2}
/// for sigma = 1; general sigma by reduction to location mu / sigma.
/// Throws NonexistentMoment for nu <= 1.
double mean_folded(const FoldedT& f);

/// E|X|^2 = E X^2 = sigma^2 nu / (nu - 2) + mu^2. Needs nu > 2.
double second_moment_folded(const FoldedT& f);

/// second_moment_folded - mean_folded^2. Needs nu > 2.
double variance_folded(const FoldedT& f);

/// Variance of |T_nu| at mu = 0 via the closed form
///   nu/(nu-2) - 4 nu / (pi (nu-1)^2) * (Gamma((nu+1)/2) / Gamma(nu/2))^2,
/// evaluated independently of variance_folded.
double variance_folded_central(double nu);

/// Mean, second moment and variance together. Needs nu > 2.
Moments moments_folded(const FoldedT& f);

/// |x| for each draw of the Student sampler with the same seed.
std::vector<double> sample_folded(const FoldedT& f, std::size_t n, std::uint64_t seed);

}  // namespace tmoments
