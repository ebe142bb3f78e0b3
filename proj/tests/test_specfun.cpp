#include "test_support.hpp"

#include "tmoments/error.hpp"
#include "tmoments/specfun.hpp"
#include "tmoments/student.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace tmoments;
using doctest::Approx;

TEST_CASE("log_gamma at exact points")
{
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(0.5) == Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
    CHECK(log_gamma(6.0) == Approx(std::log(120.0)).epsilon(1e-15));
    CHECK(log_gamma(1.5) == Approx(std::log(0.5 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
    // 20! fits in a double exactly (2432902008176640000).
    CHECK(log_gamma(21.0) == Approx(std::log(2432902008176640000.0)).epsilon(1e-15));
}

TEST_CASE("log_gamma relative accuracy on [0.1, 1e6]")
{
    test::Gen gen(7);
    double worst = 0.0;
    for (int i = 0; i < 4000; ++i) {
        const double x = gen.log_uniform(0.1, 1e6);
        const double ref = boost::math::lgamma(x);
        const double rel = std::fabs(log_gamma(x) - ref) / std::fabs(ref);
        worst = std::max(worst, rel);
    }
    // Near the roots at 1 and 2.
    for (double x : {0.999, 0.9999999, 1.0000001, 1.01, 1.99, 1.9999999, 2.0000001, 2.02}) {
        const double ref = boost::math::lgamma(x);
        worst = std::max(worst, std::fabs(log_gamma(x) - ref) / std::fabs(ref));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("log_gamma recurrence")
{
    for (double x = 0.1; x <= 100.0; x += 0.37) {
        CHECK(std::exp(log_gamma(x + 1.0) - log_gamma(x)) == Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("log_gamma_ratio matches the plain difference and stays accurate for large x")
{
    for (double x : {0.3, 2.0, 14.9, 15.0, 40.0, 1234.5}) {
        for (double h : {0.5, 1.0, 2.5}) {
            CHECK(log_gamma_ratio(x, h)
                  == Approx(log_gamma(x + h) - log_gamma(x)).epsilon(1e-12));
        }
    }
    // Gamma(x + 1) / Gamma(x) = x exactly.
    CHECK(std::exp(log_gamma_ratio(5e5, 1.0)) == Approx(5e5).epsilon(1e-14));
}

TEST_CASE("log_gamma domain")
{
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("reg_inc_beta examples")
{
    CHECK(reg_inc_beta(1.0, 1.0, 0.25) == Approx(0.25).epsilon(1e-15));
    for (double a : {0.1, 0.5, 1.0, 3.7, 25.0, 400.0}) {
        CHECK(reg_inc_beta(a, a, 0.5) == Approx(0.5).epsilon(1e-13));
    }
    CHECK(reg_inc_beta(0.5, 0.5, 0.5) == Approx(0.5).epsilon(1e-14));
    // arcsine law: I_x(1/2, 1/2) = (2/pi) asin(sqrt x)
    CHECK(reg_inc_beta(0.5, 0.5, 0.1)
          == Approx(2.0 / std::numbers::pi * std::asin(std::sqrt(0.1))).epsilon(1e-14));
}

TEST_CASE("reg_inc_beta endpoints are exact")
{
    CHECK(reg_inc_beta(2.5, 0.5, 0.0) == 0.0);
    CHECK(reg_inc_beta(2.5, 0.5, 1.0) == 1.0);
}

TEST_CASE("reg_inc_beta absolute accuracy against an independent implementation")
{
    test::Gen gen(11);
    double worst = 0.0;
    for (int i = 0; i < 3000; ++i) {
        const double a = gen.log_uniform(0.05, 200.0);
        const double b = gen.log_uniform(0.05, 200.0);
        const double x = gen.uniform(0.0, 1.0);
        worst = std::max(worst, std::fabs(reg_inc_beta(a, b, x) - boost::math::ibeta(a, b, x)));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("reg_inc_beta reflection symmetry")
{
    test::Gen gen(3);
    for (int i = 0; i < 500; ++i) {
        const double a = gen.log_uniform(0.05, 100.0);
        const double b = gen.log_uniform(0.05, 100.0);
        const double x = gen.uniform(0.0, 1.0);
        CHECK(std::fabs(reg_inc_beta(a, b, x) + reg_inc_beta(b, a, 1.0 - x) - 1.0) <= 1e-13);
    }
}

TEST_CASE("reg_inc_beta is monotone in x")
{
    for (auto [a, b] : {std::pair{0.5, 0.5}, {2.0, 0.5}, {15.0, 0.5}, {0.3, 7.0}, {50.0, 60.0}}) {
        double prev = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double v = reg_inc_beta(a, b, i / 2000.0);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("reg_inc_beta domain")
{
    CHECK_THROWS_AS(reg_inc_beta(0.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(reg_inc_beta(1.0, -1.0, 0.5), DomainError);
    CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, -0.1), DomainError);
}

TEST_CASE("normalizing_constant examples")
{
    CHECK(normalizing_constant(1.0) == Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(normalizing_constant(2.0) == Approx(1.0 / (2.0 * std::numbers::sqrt2)).epsilon(1e-15));
    CHECK(normalizing_constant(4.0) == Approx(0.375).epsilon(1e-15));
    CHECK_THROWS_AS(normalizing_constant(0.0), DomainError);
    CHECK_THROWS_AS(normalizing_constant(-2.0), DomainError);
}

TEST_CASE("normalizing_constant is the standard t density at zero")
{
    for (double nu : {0.3, 1.0, 1.5, 2.0, 2.5, 3.0, 7.5, 30.0, 200.0, 1e4}) {
        CHECK(normalizing_constant(nu) == Approx(pdf(0.0, {0.0, nu, 1.0})).epsilon(1e-13));
    }
}

TEST_CASE("normalizing_constant tends to the normal density")
{
    CHECK(std::fabs(normalizing_constant(1e6) - 1.0 / std::sqrt(2.0 * std::numbers::pi)) <= 1e-6);
}

TEST_CASE("C(nu)/C(nu-2) gamma-free identity")
{
    // C(nu)/C(nu-2) = ((nu-1)/(nu-2)) sqrt((nu-2)/nu)
    for (double nu : {2.1, 2.5, 3.0, 5.0, 10.0, 30.0, 171.0, 500.0}) {
        const double via_logs
            = std::exp(log_normalizing_constant(nu) - log_normalizing_constant(nu - 2.0));
        CHECK(via_logs == Approx((nu - 1.0) / (nu - 2.0) * std::sqrt((nu - 2.0) / nu)).epsilon(1e-12));
    }
}
