#include "spheregreen/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "spheregreen/sphere.hpp"

namespace spheregreen {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw parameter_error("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw parameter_error("max_subdivisions must be at least 1");
    }
}

int endpoint_substitution_power(double leading_exponent)
{
    // m (e + 1) - 1 >= 1  <=>  m >= 2 / (e + 1)
    const double need = 2.0 / (leading_exponent + 1.0);
    int m = static_cast<int>(std::ceil(need - 1e-12));
    return std::max(m, 1);
}

namespace {

// C_N, C_{N-1} and C_N' at x in (-1, 1).
struct GegenbauerTriple {
    double cn;
    double cnm1;
    double dcn;
};

GegenbauerTriple gegenbauer_with_derivative(int n, double lambda, double x)
{
    double prev = 1.0;
    double cur = 2.0 * lambda * x;
    if (n == 1) {
        return {cur, 1.0, 2.0 * lambda};
    }
    for (int k = 2; k <= n; ++k) {
        const double next = (2.0 * (k + lambda - 1.0) * x * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    // (1 - x^2) C_N' = -N x C_N + (N + 2 lambda - 1) C_{N-1}
    const double d = (-n * x * cur + (n + 2.0 * lambda - 1.0) * prev) / ((1.0 - x) * (1.0 + x));
    return {cur, prev, d};
}

}  // namespace

GaussRule gauss_gegenbauer(int points, double lambda)
{
    if (points < 1) {
        throw parameter_error("Gauss rule needs at least one node");
    }
    if (!(lambda > 0.0)) {
        throw domain_error("Gegenbauer order must be positive");
    }
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    if (points == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = std::sqrt(std::numbers::pi) * std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda + 1.0));
        return rule;
    }

    // Jacobi matrix of the monic Gegenbauer family: zero diagonal, off-diagonal
    // b_k = sqrt(k (k + 2 lambda - 1) / (4 (k + lambda) (k + lambda - 1))).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
    Eigen::VectorXd off(points - 1);
    for (int k = 1; k < points; ++k) {
        off[k - 1] = std::sqrt(k * (k + 2.0 * lambda - 1.0) / (4.0 * (k + lambda) * (k + lambda - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);

    // Christoffel weights: w_i = (k_N / k_{N-1}) h_{N-1} / (C_N'(x_i) C_{N-1}(x_i)).
    const double ratio = 2.0 * (points + lambda - 1.0) / points;
    const double h_prev = gegenbauer_norm(points - 1, lambda);
    for (int i = 0; i < points; ++i) {
        double x = solver.eigenvalues()[i];
        GegenbauerTriple g = gegenbauer_with_derivative(points, lambda, x);
        for (int it = 0; it < 3; ++it) {
            const double step = g.cn / g.dcn;
            x -= step;
            g = gegenbauer_with_derivative(points, lambda, x);
            if (std::abs(step) < 1e-17) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = ratio * h_prev / (g.dcn * g.cnm1);
    }
    return rule;
}

GaussRule gauss_legendre(int points, double a, double b)
{
    GaussRule rule = gauss_gegenbauer(points, 0.5);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < points; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

}  // namespace spheregreen
