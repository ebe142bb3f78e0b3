#include "quadrature.hpp"

#include "tmoments/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace tmoments::detail {

namespace {

// 21-point Kronrod abscissae / weights and the embedded 10-point Gauss weights
// (QUADPACK dqk21). Gauss nodes are the odd-indexed Kronrod nodes.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

Segment apply_rule(const std::function<double(double)>& f, double a, double b)
{
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    constexpr double kUflow = std::numeric_limits<double>::min();

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_centre = f(centre);

    double res_k = kWgk[10] * f_centre;
    double res_g = 0.0;
    double res_abs = std::fabs(res_k);
    double f_lo[10];
    double f_hi[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f_lo[j] = f(centre - dx);
        f_hi[j] = f(centre + dx);
        const double pair = f_lo[j] + f_hi[j];
        res_k += kWgk[j] * pair;
        res_abs += kWgk[j] * (std::fabs(f_lo[j]) + std::fabs(f_hi[j]));
        if (j % 2 == 1) {
            res_g += kWg[j / 2] * pair;
        }
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[10] * std::fabs(f_centre - mean);
    for (int j = 0; j < 10; ++j) {
        res_asc += kWgk[j] * (std::fabs(f_lo[j] - mean) + std::fabs(f_hi[j] - mean));
    }

    const double scale = std::fabs(half);
    res_abs *= scale;
    res_asc *= scale;
    double err = std::fabs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    if (res_abs > kUflow / (50.0 * kEps)) {
        err = std::max(50.0 * kEps * res_abs, err);
    }
    return Segment{a, b, res_k * half, err};
}

}  // namespace

QuadResult integrate_gk21(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_intervals)
{
    std::vector<Segment> segments;
    segments.reserve(static_cast<std::size_t>(max_intervals));
    segments.push_back(apply_rule(f, a, b));

    auto totals = [&segments]() {
        double value = 0.0;
        double error = 0.0;
        for (const auto& s : segments) {
            value += s.value;
            error += s.error;
        }
        return std::pair{value, error};
    };

    auto [value, error] = totals();
    while (!(error <= std::max(abs_tol, rel_tol * std::fabs(value)))) {
        if (!std::isfinite(value) || !std::isfinite(error)) {
            throw OracleError("quadrature: integrand produced a non-finite value");
        }
        if (static_cast<int>(segments.size()) >= max_intervals) {
            std::ostringstream msg;
            msg << "quadrature: no convergence within " << max_intervals
                << " subdivisions (estimate " << value << ", error " << error << ")";
            throw OracleError(msg.str());
        }
        const auto worst = std::max_element(
            segments.begin(), segments.end(),
            [](const Segment& l, const Segment& r) { return l.error < r.error; });
        const double mid = 0.5 * (worst->a + worst->b);
        const Segment left = apply_rule(f, worst->a, mid);
        const Segment right = apply_rule(f, mid, worst->b);
        *worst = left;
        segments.push_back(right);
        std::tie(value, error) = totals();
    }

    // Sum in a fixed (positional) order so the result does not depend on the
    // refinement history.
    std::sort(segments.begin(), segments.end(),
              [](const Segment& l, const Segment& r) { return l.a < r.a; });
    auto [ordered_value, ordered_error] = totals();
    return QuadResult{ordered_value, ordered_error, static_cast<int>(segments.size())};
}

}  // namespace tmoments::detail
