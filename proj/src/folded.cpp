#include "tmoments/folded.hpp"

#include "tmoments/error.hpp"
#include "tmoments/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tmoments {

Moments Moments::from_raw(double mean, double second_raw)
{
    return Moments{mean, second_raw, std::max(0.0, second_raw - mean * mean)};
}

namespace {

// E|T| for T ~ T(nu, m, 1).
double std_folded_mean(double m, double nu)
{
    const double a = std::fabs(m);
    // m (2 P(T > 0) - 1) == |m| (1 - 2 P(T_nu > |m|)); the distance to |m|
    // is kept separate so the result never rounds below |m|.
    const double decay = std::exp(-0.5 * (nu - 1.0) * std::log1p(a * a / nu));
    const double tail = 2.0 * normalizing_constant(nu) * nu / (nu - 1.0) * decay;
    const double gap = tail - 2.0 * a * detail::std_survival(a, nu);
    return a + std::max(0.0, gap);
}

}  // namespace

double pdf_folded(double x, const FoldedT& f)
{
    f.params.validate();
    if (x < 0.0) {
        return 0.0;
    }
    return pdf(x, f.params) + pdf(-x, f.params);
}

double mean_folded(const FoldedT& f)
{
    f.params.validate();
    require_moment(1, f.params.nu);
    const auto& p = f.params;
    return p.sigma * std_folded_mean(p.mu / p.sigma, p.nu);
}

double second_moment_folded(const FoldedT& f)
{
    f.params.validate();
    require_moment(2, f.params.nu);
    const auto& p = f.params;
    return p.sigma * p.sigma * p.nu / (p.nu - 2.0) + p.mu * p.mu;
}

double variance_folded(const FoldedT& f)
{
    return moments_folded(f).variance;
}

double variance_folded_central(double nu)
{
    if (!std::isfinite(nu)) {
        throw DomainError("variance_folded_central: nu must be finite");
    }
    require_moment(2, nu);
    const double log_ratio = log_gamma((nu + 1.0) / 2.0) - log_gamma(nu / 2.0);
    const double spread = 4.0 * nu / (std::numbers::pi * (nu - 1.0) * (nu - 1.0));
    return nu / (nu - 2.0) - spread * std::exp(2.0 * log_ratio);
}

Moments moments_folded(const FoldedT& f)
{
    f.params.validate();
    require_moment(2, f.params.nu);
    const auto& p = f.params;
    const double m = p.mu / p.sigma;
    const double mean = std_folded_mean(m, p.nu);
    const double second = p.nu / (p.nu - 2.0) + m * m;
    const double s2 = p.sigma * p.sigma;
    return Moments{p.sigma * mean, second_moment_folded(f),
                   std::max(0.0, s2 * (second - mean * mean))};
}

std::vector<double> sample_folded(const FoldedT& f, std::size_t n, std::uint64_t seed)
{
    auto draws = sample(f.params, n, seed);
    for (auto& x : draws) {
        x = std::fabs(x);
    }
    return draws;
}

}  // namespace tmoments
