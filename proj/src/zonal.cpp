#include "spheregreen/zonal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spheregreen/errors.hpp"

namespace spheregreen {

ZonalFunction::ZonalFunction(SphereDim dim, std::vector<double> coeffs) : dim_(dim), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw parameter_error("zonal function needs at least one coefficient");
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c)) {
            throw parameter_error("zonal function coefficients must be finite");
        }
    }
}

ZonalFunction::ZonalFunction(SphereDim dim, std::vector<double> coeffs, ZonalEvaluator evaluator, double tolerance)
    : ZonalFunction(dim, std::move(coeffs))
{
    evaluator_ = std::move(evaluator);
    tolerance_ = tolerance;
    const int samples = std::max(2 * l_max() + 8, 32);
    for (int j = 0; j < samples; ++j) {
        const double t = std::cos(std::numbers::pi * (j + 0.5) / samples);
        const double diff = std::abs(evaluator_(t) - synthesize(coeffs_, dim_.lambda(), t));
        if (!(diff <= tolerance_)) {
            throw parameter_error("evaluator and coefficients disagree by " + std::to_string(diff) + " at t = " +
                                  std::to_string(t));
        }
    }
}

ZonalFunction ZonalFunction::zero(SphereDim dim, int l_max)
{
    return ZonalFunction(dim, std::vector<double>(static_cast<std::size_t>(std::max(l_max, 0)) + 1, 0.0));
}

ZonalFunction ZonalFunction::gegenbauer_basis(SphereDim dim, int l)
{
    std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
    c[l] = 1.0;
    return ZonalFunction(dim, std::move(c));
}

double ZonalFunction::operator()(double t) const
{
    if (evaluator_) {
        return evaluator_(t);
    }
    return synthesize(coeffs_, dim_.lambda(), t);
}

double synthesize(std::span<const double> coeffs, double lambda, double t)
{
    if (!(std::abs(t) <= 1.0)) {
        throw domain_error("synthesis point outside [-1, 1]");
    }
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 0) {
        return 0.0;
    }
    if (n == 0) {
        return coeffs[0];
    }
    // phi_{k+1} = alpha_k phi_k + beta_k phi_{k-1}
    auto alpha = [&](int k) { return 2.0 * (k + lambda) * t / (k + 1.0); };
    auto beta = [&](int k) { return -(k + 2.0 * lambda - 1.0) / (k + 1.0); };
    double b1 = 0.0;  // b_{k+1}
    double b2 = 0.0;  // b_{k+2}
    for (int k = n; k >= 1; --k) {
        const double bk = coeffs[k] + alpha(k) * b1 + beta(k + 1) * b2;
        b2 = b1;
        b1 = bk;
    }
    return coeffs[0] + b1 * 2.0 * lambda * t + beta(1) * b2;
}

double synthesize(const ZonalFunction& zf, double t)
{
    return synthesize(zf.coeffs(), zf.dim().lambda(), t);
}

namespace {

std::vector<double> project_with_rule(const ZonalEvaluator& f, double lambda, int l_max, int points)
{
    const GaussRule rule = gauss_gegenbauer(points, lambda);
    std::vector<double> coeffs(static_cast<std::size_t>(l_max) + 1, 0.0);
    std::vector<double> basis(coeffs.size());
    for (int i = 0; i < points; ++i) {
        const double fx = f(rule.nodes[i]) * rule.weights[i];
        gegenbauer_sweep(lambda, rule.nodes[i], basis);
        for (int l = 0; l <= l_max; ++l) {
            coeffs[l] += fx * basis[l];
        }
    }
    for (int l = 0; l <= l_max; ++l) {
        coeffs[l] /= gegenbauer_norm(l, lambda);
    }
    return coeffs;
}

std::vector<double> project_adaptive(const ZonalEvaluator& f, const SphereDim& dim, int l_max,
                                     const QuadratureSpec& quad)
{
    const double lambda = dim.lambda();
    const int n = dim.n();
    std::vector<double> basis(static_cast<std::size_t>(l_max) + 1);
    auto integrand = [&](double theta) {
        const double t = std::cos(theta);
        gegenbauer_sweep(lambda, t, basis);
        const double weight = f(t) * std::pow(std::sin(theta), n - 1);
        Eigen::VectorXd v(l_max + 1);
        for (int l = 0; l <= l_max; ++l) {
            v[l] = weight * basis[l];
        }
        return v;
    };
    const auto res = integrate<Eigen::VectorXd>(integrand, 0.0, std::numbers::pi, quad);
    std::vector<double> coeffs(basis.size());
    for (int l = 0; l <= l_max; ++l) {
        coeffs[l] = res.value[l] / gegenbauer_norm(l, lambda);
    }
    return coeffs;
}

}  // namespace

ZonalFunction analyze(const ZonalEvaluator& f, const SphereDim& dim, int l_max, const QuadratureSpec& quad)
{
    quad.validate();
    if (l_max < 0) {
        throw parameter_error("l_max must be nonnegative");
    }
    const double lambda = dim.lambda();
    const int base_points = 2 * l_max + 16;
    std::vector<double> coarse = project_with_rule(f, lambda, l_max, base_points);
    std::vector<double> fine = project_with_rule(f, lambda, l_max, 2 * base_points);
    double scale = 0.0;
    double diff = 0.0;
    for (int l = 0; l <= l_max; ++l) {
        scale = std::max(scale, std::abs(fine[l]));
        diff = std::max(diff, std::abs(fine[l] - coarse[l]));
    }
    if (diff <= std::max(quad.abs_tol, quad.rel_tol * scale)) {
        return ZonalFunction(dim, std::move(fine));
    }
    return ZonalFunction(dim, project_adaptive(f, dim, l_max, quad));
}

ZonalFunction convolve_zonal(const ZonalFunction& f, const ZonalFunction& g)
{
    if (!(f.dim() == g.dim())) {
        throw parameter_error("convolution of zonal functions on spheres of different dimension");
    }
    const double lambda = f.dim().lambda();
    const int l_max = std::min(f.l_max(), g.l_max());
    std::vector<double> c(static_cast<std::size_t>(l_max) + 1);
    for (int l = 0; l <= l_max; ++l) {
        c[l] = f.coeff(l) * g.coeff(l) * lambda / (lambda + l);
    }
    return ZonalFunction(f.dim(), std::move(c));
}

}  // namespace spheregreen
