#include "tmoments/student.hpp"

#include "tmoments/error.hpp"
#include "tmoments/random.hpp"
#include "tmoments/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <string>

namespace tmoments {

void StudentParams::validate() const
{
    if (!std::isfinite(mu)) {
        throw DomainError("location mu must be finite");
    }
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw DomainError("degrees of freedom nu must be positive and finite, got "
                          + std::to_string(nu));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw DomainError("scale sigma must be positive and finite, got "
                          + std::to_string(sigma));
    }
}

namespace detail {

double std_cdf(double t, double nu)
{
    if (std::isnan(t)) {
        throw DomainError("cdf: argument is NaN");
    }
    const double r2 = t * t / nu;
    // x = nu / (nu + t^2), y = t^2 / (nu + t^2), each formed without 1 - x.
    const double x = 1.0 / (1.0 + r2);
    const double y = std::isinf(r2) ? 1.0 : r2 / (1.0 + r2);
    const double half_tail = 0.5 * reg_inc_beta(0.5 * nu, 0.5, x, y);
    return t <= 0.0 ? half_tail : 1.0 - half_tail;
}

double std_survival(double t, double nu)
{
    return std_cdf(-t, nu);
}

double std_inverse_survival(double s, double nu)
{
    if (s == 0.5) {
        return 0.0;
    }
    if (s > 0.5) {
        return -std_inverse_survival(1.0 - s, nu);
    }

    const double log_target = std::log(s);
    const double log_c = log_normalizing_constant(nu);
    // Newton on g(u) = log S(sinh u) - log s in u = asinh(t), where log S is
    // close to linear in the tail. g is decreasing; [lo, hi] brackets the root
    // and catches steps that overshoot.
    auto log_survival = [&](double u) { return std::log(std_survival(std::sinh(u), nu)); };
    auto log_slope = [&](double u, double log_surv) {
        const double t = std::sinh(u);
        const double log1p_r2 =
            t > 1e150 ? 2.0 * std::log(t) - std::log(nu) : std::log1p(t * t / nu);
        const double log_pdf = log_c - 0.5 * (nu + 1.0) * log1p_r2;
        const double log_cosh = u + std::log1p(std::exp(-2.0 * u)) - std::numbers::ln2;
        return -std::exp(log_pdf + log_cosh - log_surv);
    };

    constexpr double kMaxU = 700.0;
    double lo = 0.0;
    double hi = kMaxU;
    // Tail asymptote S(t) ~ C nu^((nu-1)/2) t^-nu as the starting point.
    const double log_t0 = (log_c + 0.5 * (nu - 1.0) * std::log(nu) - log_target) / nu;
    double u = std::clamp(std::asinh(std::exp(std::min(log_t0, 600.0))), 1e-3, kMaxU - 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        const double log_surv = log_survival(u);
        const double g = log_surv - log_target;
        if (g == 0.0) {
            return std::sinh(u);
        }
        (g > 0.0 ? lo : hi) = u;
        const double slope = log_slope(u, log_surv);
        double next = u - g / slope;
        if (!std::isfinite(next) || !(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const bool converged =
            std::fabs(next - u) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, u)
            || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, u);
        u = next;
        if (converged) {
            break;
        }
    }
    if (u >= kMaxU - 1e-9 && log_survival(kMaxU) > log_target) {
        throw DomainError("quantile: tail probability " + std::to_string(s)
                          + " is beyond the representable range for nu = " + std::to_string(nu));
    }
    return std::sinh(u);
}

}  // namespace detail

double pdf(double x, const StudentParams& p)
{
    p.validate();
    const double z = (x - p.mu) / p.sigma;
    const double log_kernel = -0.5 * (p.nu + 1.0) * std::log1p(z * z / p.nu);
    return std::exp(log_normalizing_constant(p.nu) + log_kernel) / p.sigma;
}

double cdf(double x, const StudentParams& p)
{
    p.validate();
    return detail::std_cdf((x - p.mu) / p.sigma, p.nu);
}

double survival(double x, const StudentParams& p)
{
    p.validate();
    return detail::std_survival((x - p.mu) / p.sigma, p.nu);
}

double prob_positive(const StudentParams& p)
{
    return survival(0.0, p);
}

double quantile(double q, const StudentParams& p)
{
    p.validate();
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("quantile: probability must lie in (0, 1), got " + std::to_string(q));
    }
    const double t = q < 0.5 ? -detail::std_inverse_survival(q, p.nu)
                             : detail::std_inverse_survival(1.0 - q, p.nu);
    return p.mu + p.sigma * t;
}

double inverse_survival(double s, const StudentParams& p)
{
    p.validate();
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError("inverse_survival: probability must lie in (0, 1), got "
                          + std::to_string(s));
    }
    return p.mu + p.sigma * detail::std_inverse_survival(s, p.nu);
}

std::vector<double> sample(const StudentParams& p, std::size_t n, std::uint64_t seed)
{
    p.validate();
    if (n == 0) {
        throw DomainError("sample: n must be at least 1");
    }
    SplitMix64 rng(seed);
    std::vector<double> out(n);
    for (auto& x : out) {
        x = p.mu + p.sigma * draw_standard_t(rng, p.nu);
    }
    return out;
}

}  // namespace tmoments
