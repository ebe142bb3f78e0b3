#pragma once

namespace tmoments {

/// First two moments of a derived variate.
/// Invariant: variance == second_raw - mean * mean (clamped at zero).
struct Moments {
    double mean = 0.0;
    double second_raw = 0.0;
    double variance = 0.0;

    static Moments from_raw(double mean, double second_raw);
};

}  // namespace tmoments
