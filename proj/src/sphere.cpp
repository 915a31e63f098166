#include "spheregreen/sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spheregreen/errors.hpp"

namespace spheregreen {

double sphere_measure(int n)
{
    const double half = 0.5 * (n + 1);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

SphereDim::SphereDim(int n) : n_(n)
{
    if (n < 2) {
        throw parameter_error("sphere dimension must satisfy n >= 2, got " + std::to_string(n));
    }
    sigma_ = sphere_measure(n);
    sigma_equator_ = sphere_measure(n - 1);
}

namespace {

void check_gegenbauer_args(double lambda, double t)
{
    if (!(lambda > 0.0)) {
        throw domain_error("Gegenbauer order must be positive");
    }
    if (!(std::abs(t) <= 1.0)) {
        throw domain_error("Gegenbauer argument outside [-1, 1]");
    }
}

}  // namespace

double gegenbauer(int l, double lambda, double t)
{
    check_gegenbauer_args(lambda, t);
    if (l < 0) {
        throw domain_error("Gegenbauer degree must be nonnegative");
    }
    if (l == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * lambda * t;
    for (int k = 2; k <= l; ++k) {
        // k C_k = 2 (k + lambda - 1) t C_{k-1} - (k + 2 lambda - 2) C_{k-2}
        const double next = (2.0 * (k + lambda - 1.0) * t * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

void gegenbauer_sweep(double lambda, double t, std::span<double> out)
{
    check_gegenbauer_args(lambda, t);
    if (out.empty()) {
        return;
    }
    out[0] = 1.0;
    if (out.size() > 1) {
        out[1] = 2.0 * lambda * t;
    }
    for (std::size_t k = 2; k < out.size(); ++k) {
        const double kd = static_cast<double>(k);
        out[k] = (2.0 * (kd + lambda - 1.0) * t * out[k - 1] - (kd + 2.0 * lambda - 2.0) * out[k - 2]) / kd;
    }
}

double gegenbauer_at_one(int l, double lambda)
{
    // binom(l + 2 lambda - 1, l) = Gamma(l + 2 lambda) / (Gamma(2 lambda) l!)
    return std::exp(std::lgamma(l + 2.0 * lambda) - std::lgamma(2.0 * lambda) - std::lgamma(l + 1.0));
}

double gegenbauer_norm(int l, double lambda)
{
    const double log_h = std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::numbers::ln2 +
                         std::lgamma(l + 2.0 * lambda) - std::log(l + lambda) - 2.0 * std::lgamma(lambda) -
                         std::lgamma(l + 1.0);
    return std::exp(log_h);
}

double gegenbauer_sup_bound(int l, const SphereDim& dim)
{
    const int n = dim.n();
    if (n == 2) {
        return 1.0;
    }
    return std::pow(static_cast<double>(n + l - 2), n - 2);
}

namespace {

void check_poisson_args(double r, double t)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw domain_error("Poisson kernel requires 0 <= r < 1");
    }
    if (!(std::abs(t) <= 1.0)) {
        throw domain_error("Poisson kernel argument outside [-1, 1]");
    }
}

// 1 - 2 r t + r^2 written without cancellation near r = t = 1.
double kernel_base(double r, double t)
{
    return (1.0 - r) * (1.0 - r) + 2.0 * r * (1.0 - t);
}

// Sigma_n p_r(t)
double scaled_kernel(double r, double t, int n)
{
    const double base = kernel_base(r, t);
    double denom;
    if (n % 2 == 1) {
        denom = 1.0;
        for (int k = 0; k < (n + 1) / 2; ++k) {
            denom *= base;
        }
    } else {
        denom = std::pow(base, 0.5 * (n + 1));
    }
    return (1.0 - r) * (1.0 + r) / denom;
}

// Bound b_l = r^l ((lambda+l)/lambda) S(l) on |term_l| and the ratio b_{l+1}/b_l,
// which is nonincreasing in l.
double bound_ratio(double r, int l, const SphereDim& dim)
{
    const double lam = dim.lambda();
    double q = r * (lam + l + 1.0) / (lam + l);
    if (dim.n() > 2) {
        q *= std::pow(static_cast<double>(dim.n() + l - 1) / static_cast<double>(dim.n() + l - 2), dim.n() - 2);
    }
    return q;
}

double geometric_tail(double next_bound, double ratio)
{
    if (ratio >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return next_bound / (1.0 - ratio);
}

// sum_{l >= first} r^l ((lambda+l)/lambda) C_l(t), summed until the bounded tail
// falls below tol_rel times the leading bound.
// With scaled set the result is divided by r^first.
double head_free_series(double r, double t, const SphereDim& dim, int first, double tol_rel, double* tail_out,
                        int* terms_out, bool scaled = false)
{
    const double lam = dim.lambda();
    double sum = 0.0;
    double prev = 1.0;
    double cur = 2.0 * lam * t;
    double rl = 1.0;
    double lead = -1.0;
    double tail = std::numeric_limits<double>::infinity();
    int l = 0;
    for (;; ++l) {
        double c;
        if (l == 0) {
            c = 1.0;
        } else if (l == 1) {
            c = cur;
        } else {
            const double next = (2.0 * (l + lam - 1.0) * t * cur - (l + 2.0 * lam - 2.0) * prev) / l;
            prev = cur;
            cur = next;
            c = cur;
        }
        if (l >= first) {
            sum += rl * (lam + l) / lam * c;
            const double b = rl * (lam + l) / lam * gegenbauer_sup_bound(l, dim);
            if (lead < 0.0) {
                lead = b;
            }
            const double q = bound_ratio(r, l, dim);
            tail = geometric_tail(b * q, q);
            if (tail <= tol_rel * lead || lead == 0.0) {
                break;
            }
        }
        if (!scaled || l >= first) {
            rl *= r;
        }
        if (l > 1000000) {
            break;
        }
    }
    if (tail_out != nullptr) {
        *tail_out = tail;
    }
    if (terms_out != nullptr) {
        *terms_out = l + 1;
    }
    return sum;
}

}  // namespace

double poisson_kernel(double r, double t, const SphereDim& dim)
{
    check_poisson_args(r, t);
    return scaled_kernel(r, t, dim.n()) / dim.sigma();
}

PoissonSeriesResult poisson_kernel_series(double r, double t, const SphereDim& dim, double tail_tol)
{
    check_poisson_args(r, t);
    const double lam = dim.lambda();
    double sum = 0.0;
    double prev = 1.0;
    double cur = 1.0;
    double rl = 1.0;
    double tail = std::numeric_limits<double>::infinity();
    int l = 0;
    for (;; ++l) {
        if (l == 1) {
            prev = 1.0;
            cur = 2.0 * lam * t;
        } else if (l >= 2) {
            const double next = (2.0 * (l + lam - 1.0) * t * cur - (l + 2.0 * lam - 2.0) * prev) / l;
            prev = cur;
            cur = next;
        }
        sum += rl * (lam + l) / lam * cur;
        const double q = bound_ratio(r, l, dim);
        const double next_bound = rl * r * (lam + l + 1.0) / lam * gegenbauer_sup_bound(l + 1, dim);
        tail = geometric_tail(next_bound, q) / dim.sigma();
        if (tail < tail_tol || r == 0.0) {
            break;
        }
        rl *= r;
    }
    if (r == 0.0) {
        tail = 0.0;
    }
    return {sum / dim.sigma(), tail, l + 1};
}

double poisson_bracket(double r, double t, const SphereDim& dim, int drop_through)
{
    check_poisson_args(r, t);
    if (drop_through < 0) {
        return scaled_kernel(r, t, dim.n());
    }
    constexpr double series_radius = 0.5;
    if (r <= series_radius) {
        return head_free_series(r, t, dim, drop_through + 1, 1e-17, nullptr, nullptr);
    }
    const double lam = dim.lambda();
    double head = 0.0;
    double prev = 1.0;
    double cur = 1.0;
    double rl = 1.0;
    for (int l = 0; l <= drop_through; ++l) {
        if (l == 1) {
            cur = 2.0 * lam * t;
        } else if (l >= 2) {
            const double next = (2.0 * (l + lam - 1.0) * t * cur - (l + 2.0 * lam - 2.0) * prev) / l;
            prev = cur;
            cur = next;
        }
        head += rl * (lam + l) / lam * cur;
        rl *= r;
    }
    return scaled_kernel(r, t, dim.n()) - head;
}

double poisson_bracket_scaled(double r, double t, const SphereDim& dim, int drop_through)
{
    check_poisson_args(r, t);
    if (drop_through < 0) {
        return scaled_kernel(r, t, dim.n());
    }
    if (r <= 0.5) {
        return head_free_series(r, t, dim, drop_through + 1, 1e-17, nullptr, nullptr, true);
    }
    return poisson_bracket(r, t, dim, drop_through) / std::pow(r, drop_through + 1);
}

namespace {

double flux_weight(double s, int n)
{
    return std::pow((1.0 - s) * (1.0 + s), 0.5 * n);
}

double flux_laplacian(const ZonalEvaluator& f, double t, double h, int n)
{
    const double f0 = f(t);
    const double fp = f(t + h);
    const double fm = f(t - h);
    const double flux = flux_weight(t + 0.5 * h, n) * (fp - f0) - flux_weight(t - 0.5 * h, n) * (f0 - fm);
    return flux / (h * h) / std::pow((1.0 - t) * (1.0 + t), 0.5 * (n - 2));
}

}  // namespace

double zonal_laplace_beltrami(const ZonalEvaluator& f, double t, double h, const SphereDim& dim)
{
    if (!(h > 0.0)) {
        throw domain_error("finite-difference step must be positive");
    }
    if (!(1.0 - std::abs(t) >= 2.0 * h)) {
        throw domain_error("stencil reaches within 2h of a pole");
    }
    return flux_laplacian(f, t, h, dim.n());
}

double zonal_bilaplace_beltrami(const ZonalEvaluator& f, double t, double h, const SphereDim& dim)
{
    if (!(h > 0.0)) {
        throw domain_error("finite-difference step must be positive");
    }
    if (!(1.0 - std::abs(t) >= 3.0 * h)) {
        throw domain_error("composed stencil reaches within 3h of a pole");
    }
    const int n = dim.n();
    const ZonalEvaluator inner = [&](double s) { return flux_laplacian(f, s, h, n); };
    return flux_laplacian(inner, t, h, n);
}

}  // namespace spheregreen
