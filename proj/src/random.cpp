#include "tmoments/random.hpp"

#include <cmath>

namespace tmoments {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64::result_type SplitMix64::operator()() noexcept
{
    state_ += kGoldenGamma;
    return mix64(state_);
}

double SplitMix64::uniform() noexcept
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

SplitMix64 SplitMix64::split() noexcept
{
    return SplitMix64(mix64((*this)() ^ 0x6a09e667f3bcc909ULL));
}

SplitMix64 SplitMix64::fork(std::uint64_t key) const noexcept
{
    return SplitMix64(mix64(state_ ^ mix64(key + kGoldenGamma)));
}

double draw_normal(SplitMix64& rng) noexcept
{
    for (;;) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double v = 2.0 * rng.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double draw_gamma(SplitMix64& rng, double shape) noexcept
{
    if (shape < 1.0) {
        // Gamma(a) = Gamma(a + 1) * U^(1/a)
        const double boosted = draw_gamma(rng, shape + 1.0);
        return boosted * std::exp(std::log(rng.uniform()) / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = draw_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) {
            continue;
        }
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double draw_standard_t(SplitMix64& rng, double nu) noexcept
{
    const double z = draw_normal(rng);
    const double chi2 = 2.0 * draw_gamma(rng, 0.5 * nu);
    return z / std::sqrt(chi2 / nu);
}

}  // namespace tmoments
