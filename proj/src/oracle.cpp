#include "tmoments/oracle.hpp"

#include "quadrature.hpp"
#include "tmoments/error.hpp"
#include "tmoments/random.hpp"
#include "tmoments/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace tmoments {

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 10) {
        throw DomainError("max_subdivisions must be at least 10");
    }
}

void McConfig::validate() const
{
    if (n < 100) {
        throw DomainError("Monte Carlo sample count must be at least 100");
    }
}

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// One angular piece of a half-line moment integral. With
// x - loc = +/- sigma sqrt(nu) cot(phi) the t density becomes
// (C(nu)/sigma) sin(phi)^(nu+1), so
//   (x - c)^p f(x) dx = C sqrt(nu) [(loc - c) sin + s sigma sqrt(nu) cos]^p
//                       * sin^(nu-1-p) dphi.
// The tail sits at phi = 0 where the integrand behaves like phi^(nu-1-p);
// phi = w^m with m (nu - p) >= 4 makes it smooth in w.
double angular_piece(double loc, double sigma, double nu, int power, double center,
                     double weight, double phi_max, double cos_sign,
                     const QuadratureConfig& cfg)
{
    if (!(phi_max > 0.0)) {
        return 0.0;
    }
    const double grade = std::max(1.0, std::ceil(4.0 / (nu - power)));
    const double log_grade = std::log(grade);
    const double w_max = std::pow(phi_max, 1.0 / grade);
    const double prefactor = weight * normalizing_constant(nu) * std::sqrt(nu);
    const double spread = sigma * std::sqrt(nu);
    const double offset = loc - center;
    const double sin_exponent = nu - 1.0 - power;

    auto integrand = [&](double w) {
        const double log_w = std::log(w);
        const double phi = std::exp(grade * log_w);
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double log_sin = phi < 1e-8 ? grade * log_w : std::log(s);
        const double base = offset * s + cos_sign * spread * c;
        double poly = 1.0;
        for (int k = 0; k < power; ++k) {
            poly *= base;
        }
        if (poly == 0.0) {
            return 0.0;
        }
        return prefactor * poly
            * std::exp(sin_exponent * log_sin + log_grade + (grade - 1.0) * log_w);
    };
    return detail::integrate_gk21(integrand, 0.0, w_max, cfg.abs_tol, cfg.rel_tol,
                                  cfg.max_subdivisions)
        .value;
}

// Integral of (x - center)^power f(x) over (lower, inf), lower may be -inf.
double half_line(double loc, double sigma, double nu, double lower, int power, double center,
                 double weight, const QuadratureConfig& cfg)
{
    if (std::isinf(lower) && lower < 0.0) {
        return angular_piece(loc, sigma, nu, power, center, weight, kHalfPi, 1.0, cfg)
            + angular_piece(loc, sigma, nu, power, center, weight, kHalfPi, -1.0, cfg);
    }
    const double phi_max = kHalfPi - std::atan((lower - loc) / (sigma * std::sqrt(nu)));
    return angular_piece(loc, sigma, nu, power, center, weight, phi_max, 1.0, cfg);
}

const StudentParams& params_of(const Distribution& dist)
{
    return std::visit(
        [](const auto& d) -> const StudentParams& {
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, StudentParams>) {
                return d;
            } else {
                return d.params;
            }
        },
        dist);
}

}  // namespace

double quad_moment(const Distribution& dist, int power, const QuadratureConfig& cfg, double center)
{
    cfg.validate();
    if (power < 0 || power > 2) {
        throw DomainError("quad_moment: power must be 0, 1 or 2");
    }
    const auto& p = params_of(dist);
    p.validate();
    if (power > 0) {
        require_moment(power, p.nu);
    }
    constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

    if (std::holds_alternative<StudentParams>(dist)) {
        return half_line(p.mu, p.sigma, p.nu, kMinusInf, power, center, 1.0, cfg);
    }
    if (std::holds_alternative<FoldedT>(dist)) {
        // Folded density on x >= 0 is f(x; mu) + f(x; -mu).
        return half_line(p.mu, p.sigma, p.nu, 0.0, power, center, 1.0, cfg)
            + half_line(-p.mu, p.sigma, p.nu, 0.0, power, center, 1.0, cfg);
    }
    const auto& t = std::get<TruncatedT>(dist);
    t.validate();
    const double mass = truncation_mass(t);
    return half_line(p.mu, p.sigma, p.nu, t.lower, power, center, 1.0 / mass, cfg);
}

double quad_variance(const Distribution& dist, const QuadratureConfig& cfg)
{
    const double mean = quad_moment(dist, 1, cfg);
    return quad_moment(dist, 2, cfg, mean);
}

std::vector<double> draw(const Distribution& dist, std::size_t n, std::uint64_t seed)
{
    return std::visit(
        [&](const auto& d) -> std::vector<double> {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, StudentParams>) {
                return sample(d, n, seed);
            } else if constexpr (std::is_same_v<T, FoldedT>) {
                return sample_folded(d, n, seed);
            } else {
                return sample_truncated(d, n, seed);
            }
        },
        dist);
}

McEstimate mc_moment(const Distribution& dist, int power, const McConfig& cfg)
{
    cfg.validate();
    if (power < 0 || power > 2) {
        throw DomainError("mc_moment: power must be 0, 1 or 2");
    }
    const auto& p = params_of(dist);
    p.validate();
    if (power > 0) {
        require_moment(power, p.nu);
    }
    auto xs = draw(dist, cfg.n, cfg.seed);
    for (auto& x : xs) {
        x = std::pow(x, power);
    }
    return summarize_draws(xs).mean;
}

McSummary summarize_draws(std::span<const double> draws)
{
    const auto n = static_cast<double>(draws.size());
    if (draws.size() < 2) {
        throw DomainError("summarize_draws: need at least two draws");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double x : draws) {
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double second = sum_sq / n;

    double ss_mean = 0.0;    // sum (x - mean)^2
    double ss_second = 0.0;  // sum (x^2 - second)^2
    for (double x : draws) {
        const double d = x - mean;
        ss_mean += d * d;
        const double e = x * x - second;
        ss_second += e * e;
    }
    const double variance = ss_mean / (n - 1.0);
    const double centred_mean = ss_mean / n;
    double ss_variance = 0.0;  // sum ((x - mean)^2 - centred_mean)^2
    for (double x : draws) {
        const double d = x - mean;
        const double e = d * d - centred_mean;
        ss_variance += e * e;
    }
    const double root_n = std::sqrt(n);
    return McSummary{
        {mean, std::sqrt(ss_mean / (n - 1.0)) / root_n},
        {second, std::sqrt(ss_second / (n - 1.0)) / root_n},
        {variance, std::sqrt(ss_variance / (n - 1.0)) / root_n},
    };
}

std::string_view to_string(Quantity q)
{
    switch (q) {
    case Quantity::folded_mean: return "folded-mean";
    case Quantity::folded_var: return "folded-var";
    case Quantity::trunc_mean: return "trunc-mean";
    case Quantity::trunc_second: return "trunc-second";
    case Quantity::trunc_var: return "trunc-var";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name)
{
    for (Quantity q : kAllQuantities) {
        if (to_string(q) == name) {
            return q;
        }
    }
    return std::nullopt;
}

int moment_order(Quantity q)
{
    return (q == Quantity::folded_mean || q == Quantity::trunc_mean) ? 1 : 2;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::pass; }));
}

std::size_t VerificationReport::failed() const
{
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::fail; }));
}

std::size_t VerificationReport::skipped() const
{
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(),
        [](const auto& e) { return e.verdict == Verdict::skipped; }));
}

namespace {

bool is_folded(Quantity q)
{
    return q == Quantity::folded_mean || q == Quantity::folded_var;
}

struct PointJob {
    double mu;
    double nu;
    std::uint64_t folded_seed;
    std::uint64_t trunc_seed;
};

std::vector<VerificationEntry> evaluate_point(const PointJob& job,
                                              std::span<const Quantity> quantities,
                                              const QuadratureConfig& qcfg, const McConfig& mcfg,
                                              double threshold, const VerifyOptions& options)
{
    const StudentParams params{job.mu, job.nu, 1.0};
    const FoldedT folded{params};
    const TruncatedT truncated{params, 0.0};

    auto exists = [&](Quantity q) { return job.nu > moment_order(q); };
    const bool need_folded = std::any_of(quantities.begin(), quantities.end(),
                                         [&](Quantity q) { return is_folded(q) && exists(q); });
    const bool need_trunc = std::any_of(quantities.begin(), quantities.end(),
                                        [&](Quantity q) { return !is_folded(q) && exists(q); });

    std::optional<McSummary> folded_mc;
    std::optional<McSummary> trunc_mc;
    if (need_folded) {
        folded_mc = summarize_draws(sample_folded(folded, mcfg.n, job.folded_seed));
    }
    if (need_trunc) {
        trunc_mc = summarize_draws(sample_truncated(truncated, mcfg.n, job.trunc_seed));
    }

    std::vector<VerificationEntry> out;
    out.reserve(quantities.size());
    for (Quantity q : quantities) {
        VerificationEntry e;
        e.mu = job.mu;
        e.nu = job.nu;
        e.quantity = q;
        if (!exists(q)) {
            constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
            e.closed_form = e.quadrature = e.mc_estimate = e.mc_stderr = e.rel_err = kNaN;
            e.verdict = Verdict::skipped;
            out.push_back(e);
            continue;
        }
        McEstimate mc;
        switch (q) {
        case Quantity::folded_mean:
            e.closed_form = mean_folded(folded);
            e.quadrature = quad_moment(folded, 1, qcfg);
            mc = folded_mc->mean;
            break;
        case Quantity::folded_var:
            e.closed_form = variance_folded(folded);
            e.quadrature = quad_variance(folded, qcfg);
            mc = folded_mc->variance;
            break;
        case Quantity::trunc_mean:
            e.closed_form = mean_truncated(truncated);
            e.quadrature = quad_moment(truncated, 1, qcfg);
            mc = trunc_mc->mean;
            break;
        case Quantity::trunc_second:
            e.closed_form = second_moment_truncated(truncated);
            e.quadrature = quad_moment(truncated, 2, qcfg);
            mc = trunc_mc->second_raw;
            break;
        case Quantity::trunc_var:
            e.closed_form = variance_truncated(truncated);
            e.quadrature = quad_variance(truncated, qcfg);
            mc = trunc_mc->variance;
            break;
        }
        e.closed_form += options.closed_form_bias;
        e.mc_estimate = mc.estimate;
        e.mc_stderr = mc.std_error;
        e.rel_err = std::fabs(e.closed_form - e.quadrature) / std::max(std::fabs(e.quadrature), 1e-300);
        e.mc_applicable = job.nu > 2.0 * moment_order(q);
        e.mc_within_band = std::fabs(e.closed_form - mc.estimate) <= options.mc_band * mc.std_error;
        const bool quad_ok = e.rel_err < threshold;
        const bool mc_ok = !e.mc_applicable || e.mc_within_band;
        e.verdict = (quad_ok && mc_ok) ? Verdict::pass : Verdict::fail;
        out.push_back(e);
    }
    return out;
}

}  // namespace

VerificationReport verify_grid(std::span<const double> mu_grid, std::span<const double> nu_grid,
                               std::span<const Quantity> quantities, const QuadratureConfig& qcfg,
                               const McConfig& mcfg, double threshold,
                               const VerifyOptions& options)
{
    if (mu_grid.empty() || nu_grid.empty()) {
        throw DomainError("verify_grid: mu and nu grids must be non-empty");
    }
    if (quantities.empty()) {
        throw DomainError("verify_grid: no quantities requested");
    }
    std::vector<Quantity> ordered(quantities.begin(), quantities.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    if (!(threshold > 0.0)) {
        throw DomainError("verify_grid: threshold must be positive");
    }
    qcfg.validate();
    mcfg.validate();
    for (double nu : nu_grid) {
        StudentParams{0.0, nu, 1.0}.validate();
    }
    for (double mu : mu_grid) {
        StudentParams{mu, 1.0, 1.0}.validate();
    }

    const SplitMix64 root(mcfg.seed);
    std::vector<PointJob> jobs;
    jobs.reserve(mu_grid.size() * nu_grid.size());
    for (double mu : mu_grid) {
        for (double nu : nu_grid) {
            const auto index = static_cast<std::uint64_t>(jobs.size());
            jobs.push_back(PointJob{mu, nu, root.fork(2 * index)(), root.fork(2 * index + 1)()});
        }
    }

    std::vector<std::vector<VerificationEntry>> results(jobs.size());
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(jobs.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = evaluate_point(jobs[i], ordered, qcfg, mcfg, threshold, options);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    VerificationReport report;
    for (auto& chunk : results) {
        for (auto& e : chunk) {
            report.overall_pass = report.overall_pass && e.verdict != Verdict::fail;
            report.entries.push_back(e);
        }
    }
    return report;
}

}  // namespace tmoments
