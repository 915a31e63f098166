#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spheregreen/quadrature.hpp"
#include "spheregreen/sphere.hpp"

namespace spheregreen {

/// A zonal function on S^n held as Gegenbauer coefficients f(t) = sum_l c_l C_l^lambda(t),
/// optionally paired with a pointwise evaluator for the same function.
class ZonalFunction {
public:
    ZonalFunction(SphereDim dim, std::vector<double> coeffs);

    /// Pairs coefficients with an evaluator; throws parameter_error when the two
    /// disagree by more than tolerance on a Chebyshev sample grid.
    ZonalFunction(SphereDim dim, std::vector<double> coeffs, ZonalEvaluator evaluator, double tolerance);

    /// The zero function of the given band limit.
    static ZonalFunction zero(SphereDim dim, int l_max);
    /// C_l^lambda itself.
    static ZonalFunction gegenbauer_basis(SphereDim dim, int l);

    const SphereDim& dim() const noexcept { return dim_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    int l_max() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int l) const noexcept { return l >= 0 && l <= l_max() ? coeffs_[l] : 0.0; }
    bool has_evaluator() const noexcept { return static_cast<bool>(evaluator_); }
    double tolerance() const noexcept { return tolerance_; }

    /// Pointwise value: the evaluator when present, otherwise the synthesized series.
    double operator()(double t) const;

private:
    SphereDim dim_;
    std::vector<double> coeffs_;
    ZonalEvaluator evaluator_;
    double tolerance_ = 0.0;
};

/// Gegenbauer coefficients c_l = (1/h_l) int f C_l (1-t^2)^{lambda-1/2} dt for l <= l_max.
/// Uses Gauss-Gegenbauer rules of 2 l_max + 16 and twice as many nodes; if those
/// disagree beyond the tolerance, falls back to adaptive quadrature in theta.
ZonalFunction analyze(const ZonalEvaluator& f, const SphereDim& dim, int l_max, const QuadratureSpec& quad);

/// sum_{l <= l_max} c_l C_l^lambda(t) by Clenshaw recurrence.
double synthesize(const ZonalFunction& zf, double t);

/// Same sum for bare coefficients.
double synthesize(std::span<const double> coeffs, double lambda, double t);

/// Zonal convolution (f * g)(x) = (1/Sigma_n) int f(y) g(x.y) dsigma(y). With this
/// mean-normalized measure the degree-l coefficient is
///     (f*g)^(l) = f^(l) g^(l) lambda / (lambda + l),
/// i.e. the normalization constant c_l of the spectral rule is 1. This is the
/// unique choice for which ((lambda+l)/lambda) (C_l * C_l) = C_l holds.
ZonalFunction convolve_zonal(const ZonalFunction& f, const ZonalFunction& g);

}  // namespace spheregreen
