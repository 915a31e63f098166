#include "spheregreen/green_series.hpp"

#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace spheregreen {

void SeriesOptions::validate() const
{
    if (l_max < 1) {
        throw parameter_error("series l_max must be at least 1");
    }
    if (!(tail_tol > 0.0)) {
        throw parameter_error("series tail tolerance must be positive");
    }
    if (abel_r && !(*abel_r > 0.0 && *abel_r < 1.0)) {
        throw parameter_error("Abel radius must lie in (0, 1)");
    }
    if (skip_l && *skip_l < 0) {
        throw parameter_error("skip_l must be nonnegative");
    }
}

double series_tail_bound(const GreenParameter& p, int l0, const SphereDim& dim)
{
    if (p.L() && !(l0 > *p.L())) {
        throw domain_error("series_tail_bound requires l0 > L");
    }
    const int n = dim.n();
    if (n >= 4) {
        return std::numeric_limits<double>::infinity();
    }
    const double l1 = l0 + 1.0;
    // For l > l0 > L: l^2(l+2 lambda)^2 + a >= kappa l^2(l+2 lambda)^2.
    double kappa = 1.0;
    if (p.a() < 0.0) {
        const double m = l1 * (l1 + 2.0 * dim.lambda());
        kappa = 1.0 + p.a() / (m * m);
        if (!(kappa > 0.0)) {
            return std::numeric_limits<double>::infinity();
        }
    }
    if (n == 2) {
        // (2l+1)/(l^2(l+1)^2) = 1/l^2 - 1/(l+1)^2 telescopes
        return 1.0 / (l1 * l1) / kappa;
    }
    // n = 3: (l+1)^2/(l^2(l+2)^2) = u + u^2, u = 1/(l(l+2)), sum u telescopes
    const double sum_u = 0.5 * (1.0 / l1 + 1.0 / (l1 + 1.0));
    const double u_max = 1.0 / (l1 * (l1 + 2.0));
    return (1.0 + u_max) * sum_u / kappa;
}

namespace {

void check_resonance(const GreenParameter& p, const std::optional<int>& skip)
{
    const auto res = p.resonant_degree();
    if (res && (!skip || *skip != *res)) {
        throw resonance_error("a = " + std::to_string(p.a()) + " is resonant at degree " + std::to_string(*res) +
                              "; the series must skip l = " + std::to_string(*res));
    }
    if (skip && (!res || *skip != *res)) {
        throw parameter_error("skip_l = " + std::to_string(*skip) + " is not the resonant degree of a");
    }
}

// Sum over l > N of (l+1)^2 / (l^2 (l+2)^2), exact.
double s3_zero_tail(int N)
{
    const double n1 = N + 1.0;
    const double pair = 1.0 / n1 + 1.0 / (n1 + 1.0);
    const double sum_u = 0.5 * pair;
    const double sum_u2 = 0.25 * (boost::math::trigamma(n1) + boost::math::trigamma(n1 + 2.0) - pair);
    return sum_u + sum_u2;
}

SeriesResult direct_sum(const GreenParameter& p, double theta, const SeriesOptions& opts)
{
    const SphereDim& dim = p.dim();
    const double lam = dim.lambda();
    const double t = std::cos(theta);
    const auto skip = opts.skip_l;
    const double L = p.L().value_or(-1.0);
    const bool closed_tail = dim.n() == 3 && p.a() == 0.0 && theta == 0.0;

    double sum = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    double prev = 1.0;
    double cur = 1.0;
    int l = 0;
    for (; l <= opts.l_max; ++l) {
        if (l == 1) {
            cur = 2.0 * lam * t;
        } else if (l >= 2) {
            const double next = (2.0 * (l + lam - 1.0) * t * cur - (l + 2.0 * lam - 2.0) * prev) / l;
            prev = cur;
            cur = next;
        }
        if (!skip || l != *skip) {
            sum += (lam + l) / lam * cur / p.symbol(l);
        }
        if (!closed_tail && l > L) {
            tail = series_tail_bound(p, l, dim);
            if (tail < opts.tail_tol) {
                break;
            }
        }
    }
    const int last = std::min(l, opts.l_max);
    if (closed_tail) {
        sum += s3_zero_tail(last);
        tail = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(sum);
    }
    return {sum, tail, last + 1};
}

// Bound on |((lambda+l)/lambda) C_l / symbol(l)| for the Abel tail, valid for l > L.
double term_bound(const GreenParameter& p, int l)
{
    const double lam = p.lambda();
    return (lam + l) / lam * gegenbauer_sup_bound(l, p.dim()) / std::abs(p.symbol(l));
}

SeriesResult abel_sum(const GreenParameter& p, double theta, const SeriesOptions& opts)
{
    const SphereDim& dim = p.dim();
    const double lam = dim.lambda();
    const double t = std::cos(theta);
    const auto skip = opts.skip_l;
    const double L = p.L().value_or(-1.0);
    constexpr int levels = 8;
    constexpr int hard_cap = 20000000;
    const double h0 = 1.0 - *opts.abel_r;
    const double damp_tol = 1e-3 * opts.tail_tol;

    // Coefficients of the undamped series, extended lazily.
    std::vector<double> coef;
    double prev = 1.0;
    double cur = 1.0;
    auto extend_to = [&](int upto) {
        for (int l = static_cast<int>(coef.size()); l <= upto; ++l) {
            if (l == 1) {
                cur = 2.0 * lam * t;
            } else if (l >= 2) {
                const double next = (2.0 * (l + lam - 1.0) * t * cur - (l + 2.0 * lam - 2.0) * prev) / l;
                prev = cur;
                cur = next;
            }
            coef.push_back((skip && l == *skip) ? 0.0 : (lam + l) / lam * cur / p.symbol(l));
        }
    };

    std::vector<double> values(levels);
    int max_terms = 0;
    for (int j = 0; j < levels; ++j) {
        const double r = 1.0 - h0 * std::ldexp(1.0, -j);
        double sum = 0.0;
        double rl = 1.0;
        int l = 0;
        for (;; ++l) {
            extend_to(l);
            sum += rl * coef[l];
            if (l > L + 1) {
                // b_{l+1} r^{l+1} / (1 - q) with q >= the ratio of successive bounds
                const double b1 = term_bound(p, l + 1);
                const double b2 = term_bound(p, l + 2);
                const double q = r * b2 / b1;
                if (q < 1.0 && rl * r * b1 / (1.0 - q) < damp_tol) {
                    break;
                }
            }
            if (l >= hard_cap) {
                throw divergence_error("Abel-damped series did not reach its tail tolerance");
            }
            rl *= r;
        }
        values[j] = sum;
        max_terms = std::max(max_terms, l + 1);
    }

    // Richardson extrapolation in h = 1 - r with h halving each level.
    std::vector<double> row = values;
    double estimate = std::numeric_limits<double>::infinity();
    for (int k = 1; k < levels; ++k) {
        const double factor = std::ldexp(1.0, k) - 1.0;
        std::vector<double> next(levels - k);
        for (int j = 0; j + k < levels; ++j) {
            next[j] = row[j + 1] + (row[j + 1] - row[j]) / factor;
        }
        estimate = std::abs(next.back() - row.back());
        row = std::move(next);
    }
    return {row.back(), estimate + damp_tol, max_terms};
}

}  // namespace

SeriesResult green_series_eval(const GreenParameter& p, double theta, const SeriesOptions& opts)
{
    opts.validate();
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw domain_error("theta must lie in [0, pi]");
    }
    check_resonance(p, opts.skip_l);
    const int n = p.dim().n();
    if (theta == 0.0 && n >= 4) {
        throw divergence_error("G_a is unbounded at theta = 0 for n >= 4");
    }
    if (opts.abel_r) {
        return abel_sum(p, theta, opts);
    }
    if (n >= 5) {
        throw divergence_error("direct Gegenbauer series has no convergent tail bound for n = " + std::to_string(n) +
                               " (n >= 5); supply an Abel radius or use the integral representation");
    }
    return direct_sum(p, theta, opts);
}

}  // namespace spheregreen
