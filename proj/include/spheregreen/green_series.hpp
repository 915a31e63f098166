#pragma once

#include <optional>

#include "spheregreen/parameters.hpp"

namespace spheregreen {

struct SeriesOptions {
    int l_max = 10000;
    double tail_tol = 1e-8;
    /// Starting radius of Abel summation; the damped series is evaluated at
    /// r_j = 1 - (1 - abel_r) 2^{-j} and extrapolated to r = 1.
    std::optional<double> abel_r;
    /// Degree omitted from the sum (the resonant L).
    std::optional<int> skip_l;

    void validate() const;
};

struct SeriesResult {
    double value;
    /// Bound on the omitted tail. +inf when no convergent bound exists (n >= 4).
    /// For Abel evaluation: the extrapolation error estimate.
    double tail_bound;
    int terms;
};

/// G_a(cos theta) = sum_{l != skip_l} ((lambda+l)/lambda) C_l(cos theta) / (l^2(l+2 lambda)^2 + a).
///
/// Direct summation stops once series_tail_bound drops below tail_tol or l_max is
/// reached. Direct summation is refused for n >= 5 (divergence_error) unless
/// abel_r is set, and at theta = 0 for n >= 4 where G_a itself is infinite.
/// At theta = 0 on S^3 with a = 0 the closed tail of the sum is added exactly.
SeriesResult green_series_eval(const GreenParameter& p, double theta, const SeriesOptions& opts);

/// Upper bound on sum_{l > l0} |term_l| from the sup bound on C_l, valid at every
/// theta. Requires l0 > L; nonincreasing in l0; +inf for n >= 4.
double series_tail_bound(const GreenParameter& p, int l0, const SphereDim& dim);

}  // namespace spheregreen
