#include "spheregreen/solver.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace spheregreen {

BiharmonicProblem BiharmonicProblem::make(const GreenParameter& param, const ZonalFunction& rhs, bool project_resonant)
{
    if (!(param.dim() == rhs.dim())) {
        throw parameter_error("right-hand side lives on S^" + std::to_string(rhs.dim().n()) + ", operator on S^" +
                              std::to_string(param.dim().n()));
    }
    const auto L = param.resonant_degree();
    if (!L || std::abs(rhs.coeff(*L)) <= resonance_tolerance) {
        return BiharmonicProblem(param, rhs, false);
    }
    if (!project_resonant) {
        throw resonance_error("resonant degree L = " + std::to_string(*L) + " requires f^(L) = 0, got " +
                              std::to_string(rhs.coeff(*L)));
    }
    std::vector<double> c(rhs.coeffs().begin(), rhs.coeffs().end());
    c[*L] = 0.0;
    return BiharmonicProblem(param, ZonalFunction(rhs.dim(), std::move(c)), true);
}

ZonalFunction solve_spectral(const BiharmonicProblem& prob)
{
    const auto& f = prob.rhs();
    const auto L = prob.param().resonant_degree();
    std::vector<double> u(f.coeffs().size());
    for (int l = 0; l <= f.l_max(); ++l) {
        u[l] = (L && l == *L) ? 0.0 : f.coeff(l) / prob.param().symbol(l);
    }
    return ZonalFunction(prob.dim(), std::move(u));
}

ZonalFunction apply_forward(const ZonalFunction& u, const GreenParameter& param)
{
    if (!(u.dim() == param.dim())) {
        throw parameter_error("dimension mismatch between u and the operator");
    }
    std::vector<double> f(u.coeffs().size());
    for (int l = 0; l <= u.l_max(); ++l) {
        f[l] = param.symbol(l) * u.coeff(l);
    }
    return ZonalFunction(u.dim(), std::move(f));
}

ZonalFunction solve_by_convolution(const BiharmonicProblem& prob, const std::function<double(double)>& kernel,
                                   const QuadratureSpec& theta_quad)
{
    const SphereDim& dim = prob.dim();
    const auto& f = prob.rhs();
    const int l_max = f.l_max();
    const double lam = dim.lambda();
    const int n = dim.n();

    std::vector<double> basis(static_cast<std::size_t>(l_max) + 1);
    std::vector<double> at_one(basis.size());
    for (int l = 0; l <= l_max; ++l) {
        at_one[l] = gegenbauer_at_one(l, lam);
    }
    auto integrand = [&](double theta) {
        const double t = std::cos(theta);
        gegenbauer_sweep(lam, t, basis);
        const double w = kernel(theta) * std::pow(std::sin(theta), n - 1);
        Eigen::VectorXd v(l_max + 1);
        for (int l = 0; l <= l_max; ++l) {
            v[l] = w * basis[l] / at_one[l];
        }
        return v;
    };
    const auto mu = integrate<Eigen::VectorXd>(integrand, 0.0, std::numbers::pi, theta_quad);
    const double scale = dim.sigma_equator() / dim.sigma();

    const auto L = prob.param().resonant_degree();
    std::vector<double> u(basis.size());
    for (int l = 0; l <= l_max; ++l) {
        u[l] = (L && l == *L) ? 0.0 : f.coeff(l) * scale * mu.value[l];
    }
    return ZonalFunction(dim, std::move(u));
}

ZonalFunction solve_by_convolution(const BiharmonicProblem& prob, GreenMethod method, const ConvolutionOptions& opts)
{
    return solve_by_convolution(prob, green_kernel(prob.param(), method, opts.green), opts.theta_quad);
}

double residual(const BiharmonicProblem& prob, const ZonalFunction& u, std::span<const double> thetas, double h)
{
    const ZonalEvaluator ue = [&u](double t) { return u(t); };
    const double a = prob.param().a();
    double worst = 0.0;
    for (double theta : thetas) {
        if (!(theta > 0.0 && theta < std::numbers::pi)) {
            throw domain_error("residual grid must lie inside (0, pi)");
        }
        const double t = std::cos(theta);
        const double r = zonal_bilaplace_beltrami(ue, t, h, prob.dim()) + a * u(t) - prob.rhs()(t);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace spheregreen
