#pragma once

#include "tmoments/folded.hpp"
#include "tmoments/student.hpp"
#include "tmoments/truncated.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tmoments {

/// Tolerances for the quadrature oracle.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const;
};

/// Monte Carlo oracle settings.
struct McConfig {
    std::size_t n = 1'000'000;
    std::uint64_t seed = 42;

    void validate() const;
};

using Distribution = std::variant<StudentParams, FoldedT, TruncatedT>;

/// Integral of (x - center)^power times the density over the support, by
/// adaptive quadrature after mapping x = mu + sigma sqrt(nu) cot(phi) onto a
/// finite angle and grading the tail endpoint. power must be 0, 1 or 2 and
/// the moment must exist. For the truncated law the integrand is divided by
/// P(X > lower) from the Student CDF.
double quad_moment(const Distribution& dist, int power, const QuadratureConfig& cfg = {},
                   double center = 0.0);

/// Central second moment by quadrature: the mean is integrated first and the
/// variance is integrated about it, avoiding the E[X^2] - E[X]^2 cancellation.
double quad_variance(const Distribution& dist, const QuadratureConfig& cfg = {});

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Seeded draws from any supported distribution.
std::vector<double> draw(const Distribution& dist, std::size_t n, std::uint64_t seed);

/// Sample mean of x^power over cfg.n seeded draws; std_error = SD / sqrt(n).
McEstimate mc_moment(const Distribution& dist, int power, const McConfig& cfg);

/// Summary statistics of one set of draws. The variance uses the n - 1
/// denominator; its standard error is SD((x - xbar)^2) / sqrt(n).
struct McSummary {
    McEstimate mean;
    McEstimate second_raw;
    McEstimate variance;
};
McSummary summarize_draws(std::span<const double> draws);

enum class Quantity { folded_mean, folded_var, trunc_mean, trunc_second, trunc_var };

inline constexpr Quantity kAllQuantities[] = {
    Quantity::folded_mean, Quantity::folded_var, Quantity::trunc_mean,
    Quantity::trunc_second, Quantity::trunc_var,
};

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

/// Highest raw moment order the quantity depends on.
int moment_order(Quantity q);

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v);

struct VerificationEntry {
    double mu = 0.0;
    double nu = 0.0;
    Quantity quantity = Quantity::folded_mean;
    double closed_form = 0.0;
    double quadrature = 0.0;
    double mc_estimate = 0.0;
    double mc_stderr = 0.0;
    double rel_err = 0.0;
    // The Monte Carlo band is only meaningful where the draws of x^k have a
    // finite variance, i.e. nu > 2k. Outside that range the estimate is still
    // reported but does not decide the verdict.
    bool mc_applicable = false;
    bool mc_within_band = false;
    Verdict verdict = Verdict::skipped;
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;
    bool overall_pass = true;

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
};

struct VerifyOptions {
    // Width of the Monte Carlo acceptance band in standard errors.
    double mc_band = 4.0;
    // Fault injection: added to every closed-form value before comparison.
    double closed_form_bias = 0.0;
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Compares every closed form with both oracles over the (mu, nu) grid.
/// Entries are ordered by mu, then nu, then quantity. A (quantity, nu) pair
/// whose moment does not exist is recorded as skipped. Grid points are
/// independent and may be evaluated concurrently; each draws from its own
/// stream derived from mcfg.seed and the point's grid position, so results do
/// not depend on the thread count.
VerificationReport verify_grid(std::span<const double> mu_grid, std::span<const double> nu_grid,
                               std::span<const Quantity> quantities, const QuadratureConfig& qcfg,
                               const McConfig& mcfg, double threshold,
                               const VerifyOptions& options = {});

}  // namespace tmoments
