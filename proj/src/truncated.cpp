#include "tmoments/truncated.hpp"

#include "tmoments/error.hpp"
#include "tmoments/random.hpp"
#include "tmoments/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace tmoments {

namespace {

constexpr double kRejectionThreshold = 0.1;

double decay_factor(double m, double nu)
{
    // [1 + m^2/nu]^{-(nu-1)/2}
    return std::exp(-0.5 * (nu - 1.0) * std::log1p(m * m / nu));
}

// Standardized location of Y = (X - lower) / sigma.
double shifted_location(const TruncatedT& t)
{
    return (t.params.mu - t.lower) / t.params.sigma;
}

}  // namespace

namespace detail {

double std_trunc_mean(double m, double nu)
{
    const double p = std_survival(-m, nu);
    return m + normalizing_constant(nu) * nu / (nu - 1.0) * decay_factor(m, nu) / p;
}

double std_trunc_second(double m, double nu)
{
    const double p = std_survival(-m, nu);
    const double q = std_survival(-m * std::sqrt((nu - 2.0) / nu), nu - 2.0);
    // nu C(nu)/C(nu-2) sqrt(nu/(nu-2)) == nu (nu-1)/(nu-2)
    const double tail = nu * (nu - 1.0) / (nu - 2.0);
    return 2.0 * m * std_trunc_mean(m, nu) - (nu + m * m) + tail * q / p;
}

double std_trunc_second_wrong_constant(double m, double nu)
{
    const double p = std_survival(-m, nu);
    const double q = std_survival(-m * std::sqrt((nu - 2.0) / nu), nu - 2.0);
    const double c_ratio = std::exp(log_normalizing_constant(nu) - log_normalizing_constant(nu - 2.0));
    return (nu - m * m) + nu * c_ratio * std::sqrt(nu / (nu - 2.0)) * q / p
        + 2.0 * m * std_trunc_mean(m, nu);
}

}  // namespace detail

void TruncatedT::validate() const
{
    params.validate();
    if (!std::isfinite(lower)) {
        throw DomainError("truncation point must be finite");
    }
}

double truncation_mass(const TruncatedT& t)
{
    t.validate();
    return survival(t.lower, t.params);
}

double pdf_truncated(double x, const TruncatedT& t)
{
    t.validate();
    if (!(x > t.lower)) {
        return 0.0;
    }
    return pdf(x, t.params) / truncation_mass(t);
}

double mean_truncated(const TruncatedT& t)
{
    t.validate();
    require_moment(1, t.params.nu);
    return t.lower + t.params.sigma * detail::std_trunc_mean(shifted_location(t), t.params.nu);
}

double second_moment_truncated(const TruncatedT& t)
{
    return moments_truncated(t).second_raw;
}

double variance_truncated(const TruncatedT& t)
{
    return moments_truncated(t).variance;
}

Moments moments_truncated(const TruncatedT& t)
{
    t.validate();
    require_moment(2, t.params.nu);
    const double m = shifted_location(t);
    const double nu = t.params.nu;
    const double sigma = t.params.sigma;
    const double mean0 = detail::std_trunc_mean(m, nu);
    const double second0 = detail::std_trunc_second(m, nu);
    // E[(sigma Y + L)^2] = sigma^2 E[Y^2] + 2 L sigma E[Y] + L^2
    const double mean = t.lower + sigma * mean0;
    const double second = sigma * sigma * second0 + 2.0 * t.lower * sigma * mean0
        + t.lower * t.lower;
    const double variance = std::max(0.0, sigma * sigma * (second0 - mean0 * mean0));
    return Moments{mean, second, variance};
}

std::vector<double> sample_truncated(const TruncatedT& t, std::size_t n, std::uint64_t seed)
{
    t.validate();
    if (n == 0) {
        throw DomainError("sample_truncated: n must be at least 1");
    }
    const auto& p = t.params;
    const double mass = truncation_mass(t);
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    if (mass >= kRejectionThreshold) {
        while (out.size() < n) {
            const double x = p.mu + p.sigma * draw_standard_t(rng, p.nu);
            if (x > t.lower) {
                out.push_back(x);
            }
        }
        return out;
    }
    const double a = (t.lower - p.mu) / p.sigma;
    if (p.nu >= 2.0 && a > 0.0) {
        // Tail proposal with density proportional to z f(z) on z > a; its
        // survival ((nu + a^2) / (nu + z^2))^((nu - 1) / 2) inverts in closed
        // form, and f / proposal is proportional to 1 / z, so accept with a / z.
        const double base = p.nu + a * a;
        while (out.size() < n) {
            const double grow = std::exp(-2.0 * std::log(rng.uniform()) / (p.nu - 1.0));
            const double z = std::sqrt(base * grow - p.nu);
            if (rng.uniform() * z <= a) {
                const double x = p.mu + p.sigma * z;
                if (x > t.lower) {
                    out.push_back(x);
                }
            }
        }
        return out;
    }
    while (out.size() < n) {
        const double s = rng.uniform() * mass;
        const double x = p.mu + p.sigma * detail::std_inverse_survival(s, p.nu);
        if (x > t.lower) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace tmoments
