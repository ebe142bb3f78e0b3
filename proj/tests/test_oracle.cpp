#include "test_support.hpp"

#include "tmoments/error.hpp"
#include "tmoments/oracle.hpp"
#include "tmoments/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

using namespace tmoments;
using doctest::Approx;

TEST_CASE("quad_moment basics")
{
    const QuadratureConfig cfg;
    CHECK(std::fabs(quad_moment(StudentParams{0.0, 3.0, 1.0}, 1, cfg)) <= cfg.abs_tol);
    CHECK(quad_moment(StudentParams{0.0, 5.0, 1.0}, 2, cfg) == Approx(5.0 / 3.0).epsilon(1e-10));
    CHECK(quad_moment(StudentParams{2.0, 4.0, 3.0}, 2, cfg) == Approx(9.0 * 2.0 + 4.0).epsilon(1e-10));
    const Distribution dists[] = {
        StudentParams{1.0, 1.2, 2.0},
        FoldedT{{-3.0, 0.7, 1.0}},
        TruncatedT{{-8.0, 2.2, 0.5}, 0.0},
        TruncatedT{{4.0, 30.0, 1.0}, 6.5},
    };
    for (const auto& d : dists) {
        CHECK(std::fabs(quad_moment(d, 0, cfg) - 1.0) <= cfg.abs_tol);
    }
}

TEST_CASE("quad_moment integrand agrees with direct integration of the density")
{
    const StudentParams p{1.5, 3.5, 0.8};
    for (int power : {0, 1, 2}) {
        const double direct = test::integrate_from(-0.5, [&](double x) {
            return std::pow(x, power) * pdf(x, p);
        });
        const TruncatedT t{p, -0.5};
        CHECK(quad_moment(t, power) * truncation_mass(t) == Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("quad_moment handles the heaviest admissible tails")
{
    // E[X^2] for nu = 2.05: the integrand in x decays like x^-1.05.
    CHECK(quad_moment(StudentParams{0.0, 2.05, 1.0}, 2) == Approx(2.05 / 0.05).epsilon(1e-9));
    CHECK(quad_moment(FoldedT{{0.0, 1.02, 1.0}}, 1)
          == Approx(2.0 * normalizing_constant(1.02) * 1.02 / 0.02).epsilon(1e-9));
}

TEST_CASE("quad_moment preconditions")
{
    CHECK_THROWS_AS(quad_moment(StudentParams{0.0, 1.0, 1.0}, 1), NonexistentMoment);
    CHECK_THROWS_AS(quad_moment(FoldedT{{0.0, 2.0, 1.0}}, 2), NonexistentMoment);
    CHECK_THROWS_AS(quad_moment(StudentParams{0.0, 3.0, 1.0}, 3), DomainError);
    CHECK_THROWS_AS(quad_moment(StudentParams{0.0, 3.0, 1.0}, 0, QuadratureConfig{0.0, 1e-10, 100}),
                    DomainError);
    CHECK_THROWS_AS(quad_moment(StudentParams{0.0, 3.0, 1.0}, 0, QuadratureConfig{1e-10, 1e-10, 5}),
                    DomainError);
}

TEST_CASE("quad_moment reports non-convergence instead of returning")
{
    const QuadratureConfig tight{1e-300, 1e-300, 10};
    CHECK_THROWS_AS(quad_moment(TruncatedT{{0.3, 2.5, 1.0}, 0.0}, 2, tight), OracleError);
}

TEST_CASE("quad_moment is bit-reproducible")
{
    const TruncatedT t{{-2.0, 2.7, 1.1}, 0.0};
    const double a = quad_moment(t, 2);
    const double b = quad_moment(t, 2);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("mc_moment")
{
    const McConfig cfg{1'000'000, 5};
    const FoldedT f{{0.0, 4.0, 1.0}};
    const auto est = mc_moment(f, 1, cfg);
    CHECK(std::fabs(est.estimate - 1.0) <= 4.0 * est.std_error);
    const auto again = mc_moment(f, 1, cfg);
    CHECK(est.estimate == again.estimate);
    CHECK(est.std_error == again.std_error);

    const auto bigger = mc_moment(f, 1, McConfig{4'000'000, 6});
    const double ratio = bigger.std_error / est.std_error;
    CHECK(ratio >= 0.4);
    CHECK(ratio <= 0.6);

    CHECK_THROWS_AS(mc_moment(f, 2, McConfig{99, 1}), DomainError);
    CHECK_THROWS_AS(mc_moment(FoldedT{{0.0, 1.0, 1.0}}, 1, cfg), DomainError);
}

TEST_CASE("summarize_draws on a known sample")
{
    const double xs[] = {1.0, 2.0, 3.0, 4.0};
    const auto s = summarize_draws(xs);
    CHECK(s.mean.estimate == Approx(2.5));
    CHECK(s.variance.estimate == Approx(5.0 / 3.0));
    CHECK(s.second_raw.estimate == Approx(7.5));
    CHECK(s.mean.std_error == Approx(std::sqrt(5.0 / 3.0) / 2.0));
}

TEST_CASE("quantity names")
{
    for (Quantity q : kAllQuantities) {
        CHECK(parse_quantity(to_string(q)) == q);
    }
    CHECK_FALSE(parse_quantity("folded-skew").has_value());
}

TEST_CASE("verify_grid")
{
    const double mus[] = {-2.0, 0.0, 3.5};
    const double nus[] = {1.5, 2.5, 6.0};
    const McConfig mcfg{20000, 42};
    const QuadratureConfig qcfg;

    SUBCASE("passes and skips nonexistent moments")
    {
        const auto report = verify_grid(mus, nus, kAllQuantities, qcfg, mcfg, 1e-8);
        CHECK(report.overall_pass);
        CHECK(report.entries.size() == 3 * 3 * 5);
        // nu = 1.5: only the two means exist.
        CHECK(report.skipped() == 3 * 3);
        CHECK(report.failed() == 0);
        for (const auto& e : report.entries) {
            if (e.verdict != Verdict::skipped) {
                CHECK(e.rel_err < 1e-8);
            }
            CHECK(e.mc_applicable == (e.verdict != Verdict::skipped && e.nu > 2.0 * moment_order(e.quantity)));
        }
        // Ordering: mu, then nu, then quantity.
        CHECK(report.entries.front().mu == -2.0);
        CHECK(report.entries.front().nu == 1.5);
        CHECK(report.entries[1].quantity == Quantity::folded_var);
        CHECK(report.entries.back().mu == 3.5);
        CHECK(report.entries.back().quantity == Quantity::trunc_var);
    }

    SUBCASE("fault injection fails the report")
    {
        VerifyOptions options;
        options.closed_form_bias = 1e-3;
        const auto report = verify_grid(mus, nus, kAllQuantities, qcfg, mcfg, 1e-8, options);
        CHECK_FALSE(report.overall_pass);
        CHECK(report.failed() == report.entries.size() - report.skipped());
    }

    SUBCASE("results do not depend on the thread count")
    {
        VerifyOptions one;
        one.threads = 1;
        VerifyOptions four;
        four.threads = 4;
        const auto a = verify_grid(mus, nus, kAllQuantities, qcfg, mcfg, 1e-8, one);
        const auto b = verify_grid(mus, nus, kAllQuantities, qcfg, mcfg, 1e-8, four);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            if (a.entries[i].verdict == Verdict::skipped) {
                continue;
            }
            CHECK(a.entries[i].mc_estimate == b.entries[i].mc_estimate);
            CHECK(a.entries[i].quadrature == b.entries[i].quadrature);
        }
    }

    SUBCASE("argument errors")
    {
        const std::vector<double> empty;
        CHECK_THROWS_AS(verify_grid(empty, nus, kAllQuantities, qcfg, mcfg, 1e-8), DomainError);
        CHECK_THROWS_AS(verify_grid(mus, empty, kAllQuantities, qcfg, mcfg, 1e-8), DomainError);
        CHECK_THROWS_AS(verify_grid(mus, nus, kAllQuantities, qcfg, mcfg, 0.0), DomainError);
        CHECK_THROWS_AS(verify_grid(mus, nus, std::span<const Quantity>{}, qcfg, mcfg, 1e-8), DomainError);
    }
}
