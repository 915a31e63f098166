#pragma once

#include <array>
#include <vector>

#include "spheregreen/parameters.hpp"
#include "spheregreen/quadrature.hpp"

namespace spheregreen {

/// Smallest polar angle accepted by the integral route; the Poisson kernel peak
/// near r = 1 sharpens like theta^{-n} below it.
inline constexpr double integral_theta_min = 1e-3;

/// G_a(cos theta) = sum_{l < ceil L} g_l C_l(cos theta)
///   + int_0^1 sum_j w_j r^{e_j} [Sigma_n p_r(cos theta) - sum_{l <= floor L} r^l ((lambda+l)/lambda) C_l] dr
struct IntegralPlan {
    /// -L-1, L+2 lambda-1, lambda+s-1, lambda-s-1 with s = sqrt(discriminant)
    std::array<double, 4> exponents;
    /// +A, -A, +B, -B (B is +inf when s = 0; the evaluator uses the limit)
    std::array<double, 4> weights;
    int split_degree;
    /// g_l = ((lambda+l)/lambda) / (l^2(l+2 lambda)^2 + a), l < ceil L
    std::vector<double> additive_coeffs;
};

/// Throws parameter_error unless 0 < L <= (sqrt 2 - 1) lambda.
IntegralPlan make_integral_plan(const GreenParameter& p);

struct IntegralResult {
    double value;
    double error;
};

/// Integral representation of G_a for a < 0. Throws parameter_error outside
/// 0 < L <= (sqrt 2 - 1) lambda, domain_error for theta outside [integral_theta_min, pi],
/// quadrature_error when the tolerance cannot be met.
IntegralResult green_integral_eval(const GreenParameter& p, double theta, const QuadratureSpec& quad);

/// I_k = int_0^1 r^{k-1} [Sigma_n p_r(cos theta) - 1] dr, k > -1.
IntegralResult i_k(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad);

/// J_k = int_0^1 r^{k-1} [Sigma_n p_r(cos theta) - 1] (-ln r) dr, k > -1.
IntegralResult j_k(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad);

/// J_k as the iterated integral int_0^1 (1/R) int_0^R r^{k-1} [Sigma_n p_r - 1] dr dR.
IntegralResult j_k_nested(double k, double theta, const SphereDim& dim, const QuadratureSpec& quad);

/// G_0 = (J_0 + J_{2 lambda})/(4 lambda^2) - (I_0 - I_{2 lambda})/(4 lambda^3), summed
/// under one integral sign. theta in [integral_theta_min, pi].
IntegralResult green_zero_eval(const SphereDim& dim, double theta, const QuadratureSpec& quad);

struct AppellCheck {
    double lhs;                ///< int_0^1 r^alpha / (1 - 2 r cos theta + r^2)^{lambda+1} dr
    double rhs;                ///< F1(alpha+1; lambda+1, lambda+1; alpha+2; e^{i theta}, e^{-i theta}) / (alpha+1)
    double difference;         ///< |lhs - rhs|
    double imaginary_residue;  ///< |Im| / max(1, |Re|) of the complex Euler integral
};

/// Compares direct quadrature of the r^alpha moment of the kernel power with the
/// Euler-integral form of Appell F1 evaluated in complex arithmetic. Throws
/// std::logic_error when the imaginary parts fail to cancel below
/// max(quad.abs_tol, 1e-10).
AppellCheck appell_identity_check(double alpha, double lambda, double theta, const QuadratureSpec& quad);

}  // namespace spheregreen
