#include "spheregreen/green_integral.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spheregreen {

namespace {

QuadratureSpec with_flags(QuadratureSpec spec, Singularity flags)
{
    spec.singularity_flags = flags;
    return spec;
}

void check_theta(double theta, double lower)
{
    if (!(theta >= lower && theta <= std::numbers::pi)) {
        throw domain_error("theta = " + std::to_string(theta) + " outside [" + std::to_string(lower) +
                           ", pi] for the integral route; use the series route near the pole");
    }
}

void check_k(double k)
{
    if (!(k > -1.0)) {
        throw parameter_error("k must exceed -1");
    }
}

}  // namespace

IntegralPlan make_integral_plan(const GreenParameter& p)
{
    if (!p.integral_admissible()) {
        throw parameter_error("integral representation needs 0 < L <= (sqrt 2 - 1) lambda (-lambda^4 <= a < 0); a = " +
                              std::to_string(p.a()));
    }
    const double lam = p.lambda();
    const double L = *p.L();
    const double s = std::sqrt(std::max(0.0, *p.discriminant()));
    const double A = 1.0 / (4.0 * L * (L + lam) * (L + 2.0 * lam));
    const double B = s > 0.0 ? 1.0 / (4.0 * L * (L + 2.0 * lam) * s) : std::numeric_limits<double>::infinity();

    IntegralPlan plan;
    plan.exponents = {-L - 1.0, L + 2.0 * lam - 1.0, lam + s - 1.0, lam - s - 1.0};
    plan.weights = {A, -A, B, -B};
    plan.split_degree = static_cast<int>(std::floor(L));
    const int additive = static_cast<int>(std::ceil(L));
    for (int l = 0; l < additive; ++l) {
        plan.additive_coeffs.push_back((lam + l) / lam / p.symbol(l));
    }
    return plan;
}

IntegralResult green_integral_eval(const GreenParameter& p, double theta, const QuadratureSpec& quad)
{
    const IntegralPlan plan = make_integral_plan(p);
    check_theta(theta, integral_theta_min);
    const SphereDim& dim = p.dim();
    const double lam = p.lambda();
    const double L = *p.L();
    const double s = std::sqrt(std::max(0.0, *p.discriminant()));
    const double A = plan.weights[0];
    const double C = 1.0 / (4.0 * L * (L + 2.0 * lam));
    const int m = plan.split_degree;
    const double t = std::cos(theta);

    // r^{m+1} times the four-power weight, written with expm1 so that neither the
    // r -> 0 powers nor the r -> 1 cancellation lose precision.
    auto weight = [&](double r) {
        const double x = std::log(r);
        const double a_part = -A * std::pow(r, m - L) * std::expm1(2.0 * (L + lam) * x);
        const double shifted = s > 0.0 ? std::expm1(2.0 * s * x) / s : 2.0 * x;
        const double b_part = C * std::pow(r, m + lam - s) * shifted;
        return a_part + b_part;
    };
    auto integrand = [&](double r) { return weight(r) * poisson_bracket_scaled(r, t, dim, m); };

    const auto res = integrate_unit_interval<double>(integrand, m - L, with_flags(quad, Singularity::left_endpoint_power));
    double value = res.value;
    for (std::size_t l = 0; l < plan.additive_coeffs.size(); ++l) {
        value += plan.additive_coeffs[l] * gegenbauer(static_cast<int>(l), lam, t);
    }
    return {value, res.error};
}

IntegralResult i_k(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad)
{
    check_k(k);
    check_theta(theta, std::numeric_limits<double>::min());
    const double t = std::cos(theta);
    auto integrand = [&](double r) { return std::pow(r, k) * poisson_bracket_scaled(r, t, dim, 0); };
    const auto res = integrate_unit_interval<double>(integrand, k, with_flags(quad, Singularity::left_endpoint_power));
    return {res.value, res.error};
}

IntegralResult j_k(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad)
{
    check_k(k);
    check_theta(theta, std::numeric_limits<double>::min());
    const double t = std::cos(theta);
    auto integrand = [&](double r) { return -std::log(r) * std::pow(r, k) * poisson_bracket_scaled(r, t, dim, 0); };
    const auto res = integrate_unit_interval<double>(
        integrand, k, with_flags(quad, Singularity::left_endpoint_power | Singularity::log_endpoint));
    return {res.value, res.error};
}

IntegralResult j_k_nested(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad)
{
    check_k(k);
    check_theta(theta, std::numeric_limits<double>::min());
    const double t = std::cos(theta);
    QuadratureSpec inner_spec = with_flags(quad, Singularity::left_endpoint_power);
    inner_spec.abs_tol = 0.1 * quad.abs_tol;
    inner_spec.rel_tol = 0.1 * quad.rel_tol;
    double inner_error = 0.0;
    // (1/R) int_0^R r^{k-1} [..] dr = R^k int_0^1 v^k S(R v) dv with [..] = r S(r)
    auto outer = [&](double R) {
        auto inner = [&](double v) { return std::pow(v, k) * poisson_bracket_scaled(R * v, t, dim, 0); };
        const auto res = integrate_unit_interval<double>(inner, k, inner_spec);
        inner_error = std::max(inner_error, res.error);
        return std::pow(R, k) * res.value;
    };
    const auto res = integrate_unit_interval<double>(outer, k, with_flags(quad, Singularity::left_endpoint_power));
    return {res.value, res.error + inner_error};
}

IntegralResult green_zero_eval(const SphereDim& dim, double theta, const QuadratureSpec& quad)
{
    check_theta(theta, integral_theta_min);
    const double t = std::cos(theta);
    const double two_lam = dim.two_lambda();
    const double lam = dim.lambda();
    const double cj = 1.0 / (4.0 * lam * lam);
    const double ci = 1.0 / (4.0 * lam * lam * lam);
    auto integrand = [&](double r) {
        const double x = std::log(r);
        const double r2l = std::pow(r, two_lam);
        // cj (1 + r^{2 lam})(-ln r) - ci (1 - r^{2 lam})
        const double w = -cj * (1.0 + r2l) * x + ci * std::expm1(two_lam * x);
        return w * poisson_bracket_scaled(r, t, dim, 0);
    };
    const auto res = integrate_unit_interval<double>(
        integrand, 0.0, with_flags(quad, Singularity::left_endpoint_power | Singularity::log_endpoint));
    return {res.value, res.error};
}

namespace {

using cplx = std::complex<double>;

// Euler integral of Appell F1 for Re c > Re a > 0:
// F1(a; b1, b2; c; x, y) = Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 u^{a-1}(1-u)^{c-a-1}(1-ux)^{-b1}(1-uy)^{-b2} du.
// Returns the real and imaginary parts.
QuadResult<Eigen::VectorXd> appell_f1_euler(double a, double b1, double b2, double c, cplx x, cplx y,
                                            const QuadratureSpec& quad)
{
    const double gamma_factor = std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(c - a));
    auto integrand = [&](double u) {
        const cplx value = std::pow(u, a - 1.0) * std::pow(1.0 - u, c - a - 1.0) * std::pow(1.0 - u * x, -b1) *
                           std::pow(1.0 - u * y, -b2);
        Eigen::VectorXd v(2);
        v << value.real(), value.imag();
        return v;
    };
    auto res = integrate_unit_interval<Eigen::VectorXd>(integrand, a - 1.0,
                                                        with_flags(quad, Singularity::left_endpoint_power));
    res.value *= gamma_factor;
    res.error *= gamma_factor;
    return res;
}

}  // namespace

AppellCheck appell_identity_check(double alpha, double lambda, double theta, const QuadratureSpec& quad)
{
    if (!(alpha > 0.0)) {
        throw parameter_error("alpha must be positive");
    }
    const double two_lam = 2.0 * lambda;
    if (!(lambda > 0.0) || two_lam != std::round(two_lam)) {
        throw parameter_error("lambda must be a positive half-integer");
    }
    if (!(theta > 0.0 && theta <= std::numbers::pi)) {
        throw domain_error("theta must lie in (0, pi]");
    }
    const double chord = 2.0 * (1.0 - std::cos(theta));
    auto lhs_integrand = [&](double r) {
        const double base = (1.0 - r) * (1.0 - r) + r * chord;
        return std::pow(r, alpha) / std::pow(base, lambda + 1.0);
    };
    const auto lhs = integrate_unit_interval<double>(lhs_integrand, alpha,
                                                     with_flags(quad, Singularity::left_endpoint_power));

    const cplx z = std::polar(1.0, theta);
    const auto f1 = appell_f1_euler(alpha + 1.0, lambda + 1.0, lambda + 1.0, alpha + 2.0, z, std::conj(z), quad);
    const double rhs = f1.value[0] / (alpha + 1.0);
    // imaginary roundoff scales with the size of the real part
    const double residue = std::abs(f1.value[1]) / std::max(1.0, std::abs(f1.value[0]));
    if (residue > std::max(quad.abs_tol, 1e-10)) {
        throw std::logic_error("conjugate imaginary parts failed to cancel: residue " + std::to_string(residue));
    }
    return {lhs.value, rhs, std::abs(lhs.value - rhs), residue};
}

}  // namespace spheregreen
