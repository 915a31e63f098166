#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "spheregreen/errors.hpp"

namespace spheregreen {

enum class Singularity : std::uint8_t {
    none = 0,
    left_endpoint_power = 1 << 0,  ///< integrand ~ x^e (e > -1) at the left end
    log_endpoint = 1 << 1,         ///< integrand carries a log factor at the left end
};

constexpr Singularity operator|(Singularity a, Singularity b)
{
    return static_cast<Singularity>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

constexpr bool has_flag(Singularity set, Singularity flag)
{
    return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(flag)) != 0;
}

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 2000;
    Singularity singularity_flags = Singularity::none;

    /// Throws parameter_error if a tolerance is not positive or max_subdivisions < 1.
    void validate() const;
};

template <typename Value>
struct QuadResult {
    Value value;
    double error;
    int subdivisions;
    long evaluations;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double norm_inf(double v) { return std::abs(v); }
inline double norm_inf(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

template <typename Value>
struct Panel {
    double a;
    double b;
    Value value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename Value, typename F>
Panel<Value> gk15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value fc = f(center);
    Value kronrod = fc * kronrod_weights[7];
    Value gauss = fc * gauss_weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        Value f1 = f(center - dx);
        Value f2 = f(center + dx);
        Value s = f1 + f2;
        kronrod = kronrod + s * kronrod_weights[j];
        if (j % 2 == 1) {
            gauss = gauss + s * gauss_weights[j / 2];
        }
    }
    Value k = kronrod * half;
    Value g = gauss * half;
    double err = norm_inf(Value(k - g));
    return {a, b, k, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. The panel
/// with the largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |I|). Value may be double or Eigen::VectorXd.
/// Throws quadrature_error when max_subdivisions is exhausted first.
template <typename Value, typename F>
QuadResult<Value> integrate(F&& f, double a, double b, const QuadratureSpec& spec)
{
    spec.validate();
    std::priority_queue<detail::Panel<Value>> panels;
    long evals = 0;
    auto counted = [&](double x) {
        ++evals;
        return Value(f(x));
    };
    auto first = detail::gk15<Value>(counted, a, b);
    Value total = first.value;
    double err = first.error;
    panels.push(std::move(first));
    int subdivisions = 1;
    auto converged = [&] {
        return err <= std::max(spec.abs_tol, spec.rel_tol * detail::norm_inf(total));
    };
    while (!converged()) {
        if (subdivisions >= spec.max_subdivisions || !detail::is_finite(total)) {
            throw quadrature_error("adaptive quadrature did not converge within " +
                                       std::to_string(spec.max_subdivisions) + " subdivisions",
                                   detail::norm_inf(total), err);
        }
        detail::Panel<Value> worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw quadrature_error("adaptive quadrature reached machine resolution", detail::norm_inf(total), err);
        }
        auto left = detail::gk15<Value>(counted, worst.a, mid);
        auto right = detail::gk15<Value>(counted, mid, worst.b);
        total = total - worst.value + left.value + right.value;
        err = err - worst.error + left.error + right.error;
        panels.push(std::move(left));
        panels.push(std::move(right));
        ++subdivisions;
        if (panels.size() % 64 == 0) {
            // Re-sum to keep the running totals free of drift.
            auto copy = panels;
            Value t = copy.top().value * 0.0;
            double e = 0.0;
            while (!copy.empty()) {
                t = t + copy.top().value;
                e += copy.top().error;
                copy.pop();
            }
            total = t;
            err = e;
        }
    }
    return {total, err, subdivisions, evals};
}

/// Smallest integer m >= 1 such that substituting x = s^m into an integrand
/// behaving like x^leading_exponent at 0 yields a leading power s^{m(e+1)-1} >= 1.
int endpoint_substitution_power(double leading_exponent);

/// Integral over (0, 1) of f, where f(x) ~ x^leading_exponent near 0 (exponent > -1).
/// With Singularity::left_endpoint_power set, x = s^m is substituted (m from
/// endpoint_substitution_power, raised by one when log_endpoint is also set).
template <typename Value, typename F>
QuadResult<Value> integrate_unit_interval(F&& f, double leading_exponent, const QuadratureSpec& spec)
{
    if (!has_flag(spec.singularity_flags, Singularity::left_endpoint_power)) {
        return integrate<Value>(f, 0.0, 1.0, spec);
    }
    if (!(leading_exponent > -1.0)) {
        throw parameter_error("integrand is not integrable at 0 (leading exponent <= -1)");
    }
    int m = endpoint_substitution_power(leading_exponent);
    if (has_flag(spec.singularity_flags, Singularity::log_endpoint)) {
        ++m;
    }
    if (m == 1) {
        return integrate<Value>(f, 0.0, 1.0, spec);
    }
    const double md = m;
    // Kronrod nodes are interior, so s > 0 at every evaluation.
    auto g = [&](double s) -> Value {
        const double sm1 = std::pow(s, m - 1);
        return Value(f(sm1 * s)) * (md * sm1);
    };
    return integrate<Value>(g, 0.0, 1.0, spec);
}

/// Nodes and weights of the N-point Gauss rule for the weight (1-t^2)^{lambda-1/2}
/// on [-1, 1] (Golub-Welsch, nodes polished by Newton on C_N^lambda).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_gegenbauer(int points, double lambda);

/// Plain Gauss-Legendre rule mapped to [a, b].
GaussRule gauss_legendre(int points, double a, double b);

}  // namespace spheregreen
