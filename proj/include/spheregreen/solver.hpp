#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spheregreen/green.hpp"
#include "spheregreen/parameters.hpp"
#include "spheregreen/zonal.hpp"

namespace spheregreen {

/// (Delta^2 + a) u = f on S^n for zonal, band-limited f.
class BiharmonicProblem {
public:
    /// In the resonant case f^(L) must vanish to 1e-12; otherwise resonance_error
    /// is thrown, or f^(L) is zeroed when project_resonant is set.
    static BiharmonicProblem make(const GreenParameter& param, const ZonalFunction& rhs, bool project_resonant = false);

    const SphereDim& dim() const noexcept { return param_.dim(); }
    const GreenParameter& param() const noexcept { return param_; }
    const ZonalFunction& rhs() const noexcept { return rhs_; }
    bool resonant_projection() const noexcept { return projected_; }

private:
    BiharmonicProblem(GreenParameter param, ZonalFunction rhs, bool projected)
        : param_(std::move(param)), rhs_(std::move(rhs)), projected_(projected)
    {}

    GreenParameter param_;
    ZonalFunction rhs_;
    bool projected_;
};

inline constexpr double resonance_tolerance = 1e-12;

/// u^(l) = f^(l) / (l^2(l+2 lambda)^2 + a), with u^(L) = 0 in the resonant case.
ZonalFunction solve_spectral(const BiharmonicProblem& prob);

/// Coefficient-wise (l^2(l+2 lambda)^2 + a) u^(l).
ZonalFunction apply_forward(const ZonalFunction& u, const GreenParameter& param);

struct ConvolutionOptions {
    GreenOptions green;
    /// Quadrature in theta for the Funk-Hecke multipliers.
    QuadratureSpec theta_quad{1e-11, 1e-11, 4000, Singularity::none};
};

/// u = f * G, computed as u^(l) = f^(l) mu_l with the Funk-Hecke multiplier
/// mu_l = (Sigma_{n-1}/Sigma_n) int_0^pi G(theta) C_l(cos theta)/C_l(1) sin^{n-1} theta d theta
/// obtained by quadrature of the chosen Green evaluator.
ZonalFunction solve_by_convolution(const BiharmonicProblem& prob, GreenMethod method, const ConvolutionOptions& opts = {});

/// The same with an arbitrary kernel theta -> G(cos theta).
ZonalFunction solve_by_convolution(const BiharmonicProblem& prob, const std::function<double(double)>& kernel,
                                   const QuadratureSpec& theta_quad);

/// max over the grid of |(Delta_h)^2 u + a u - f| at t = cos theta, with the
/// composed second-order finite-difference zonal Laplace-Beltrami operator.
double residual(const BiharmonicProblem& prob, const ZonalFunction& u, std::span<const double> thetas, double h);

}  // namespace spheregreen
