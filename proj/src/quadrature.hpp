#pragma once

#include <functional>

namespace tmoments::detail {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (10/21 point) integration on a finite
/// interval [a, b]. The interval with the largest error estimate is bisected
/// until the summed estimate drops below max(abs_tol, rel_tol * |I|).
/// Throws OracleError if that takes more than max_intervals intervals.
QuadResult integrate_gk21(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_intervals);

}  // namespace tmoments::detail
