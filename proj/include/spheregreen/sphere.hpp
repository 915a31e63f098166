#pragma once

#include <functional>
#include <span>

namespace spheregreen {

/// Dimension of the unit sphere S^n in R^{n+1}, together with the Gegenbauer
/// order lambda = (n-1)/2 and the total surface measure Sigma_n.
class SphereDim {
public:
    explicit SphereDim(int n);

    int n() const noexcept { return n_; }
    /// lambda = (n-1)/2, always a positive half-integer for n >= 2.
    double lambda() const noexcept { return 0.5 * (n_ - 1); }
    /// 2*lambda = n-1 as an exact integer.
    int two_lambda() const noexcept { return n_ - 1; }
    /// Sigma_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
    double sigma() const noexcept { return sigma_; }
    /// Sigma_{n-1}, the measure of the equatorial sphere.
    double sigma_equator() const noexcept { return sigma_equator_; }

    friend bool operator==(const SphereDim& a, const SphereDim& b) noexcept { return a.n_ == b.n_; }

private:
    int n_;
    double sigma_;
    double sigma_equator_;
};

/// Surface measure of S^n for any n >= 1.
double sphere_measure(int n);

/// C_l^lambda(t) by the ascending three-term recurrence.
/// Throws domain_error for |t| > 1 or lambda <= 0.
double gegenbauer(int l, double lambda, double t);

/// Fills out[l] = C_l^lambda(t) for l = 0..out.size()-1 in one sweep.
void gegenbauer_sweep(double lambda, double t, std::span<double> out);

/// C_l^lambda(1) = binom(l + 2 lambda - 1, l), the maximum of |C_l^lambda| on [-1,1].
double gegenbauer_at_one(int l, double lambda);

/// Squared norm h_l = int_{-1}^{1} (C_l^lambda)^2 (1-t^2)^{lambda-1/2} dt.
double gegenbauer_norm(int l, double lambda);

/// Uniform bound |C_l^lambda(cos theta)| <= (n+l-2)^{n-2}; for n = 2 this is the
/// Legendre bound 1.
double gegenbauer_sup_bound(int l, const SphereDim& dim);

/// Poisson kernel (1/Sigma_n) (1-r^2) / (1 - 2 r t + r^2)^{(n+1)/2}.
/// Throws domain_error unless 0 <= r < 1 and |t| <= 1.
double poisson_kernel(double r, double t, const SphereDim& dim);

struct PoissonSeriesResult {
    double value;
    double tail_bound;  ///< sup-bound estimate of the omitted tail
    int terms;
};

/// Series form (1/Sigma_n) sum_l r^l ((lambda+l)/lambda) C_l^lambda(t), truncated
/// once the sup-bound geometric tail falls below tail_tol.
PoissonSeriesResult poisson_kernel_series(double r, double t, const SphereDim& dim, double tail_tol = 1e-14);

/// Sigma_n p_r(t) - sum_{l <= drop_through} r^l ((lambda+l)/lambda) C_l(t).
/// For small r the omitted-head series is summed directly so the result keeps
/// full relative accuracy as it vanishes like r^{drop_through+1}.
double poisson_bracket(double r, double t, const SphereDim& dim, int drop_through);

/// poisson_bracket / r^{drop_through+1}, finite and free of underflow as r -> 0.
double poisson_bracket_scaled(double r, double t, const SphereDim& dim, int drop_through);

using ZonalEvaluator = std::function<double(double)>;

/// Zonal Laplace-Beltrami operator (1-t^2)^{-(n-2)/2} d/dt[(1-t^2)^{n/2} df/dt]
/// by the second-order flux-form central difference with step h.
/// Requires 1 - |t| >= 2h.
double zonal_laplace_beltrami(const ZonalEvaluator& f, double t, double h, const SphereDim& dim);

/// The same operator applied twice, (Delta_h)^2 f(t). Requires 1 - |t| >= 3h.
double zonal_bilaplace_beltrami(const ZonalEvaluator& f, double t, double h, const SphereDim& dim);

}  // namespace spheregreen
