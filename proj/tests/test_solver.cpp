#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spheregreen/solver.hpp"

using namespace spheregreen;
using std::numbers::pi;

namespace {

const SphereDim d3(3);

std::vector<double> interior_grid()
{
    std::vector<double> g;
    for (int i = 0; i < 12; ++i) {
        g.push_back(0.4 + (pi - 0.8) * i / 11.0);
    }
    return g;
}

}  // namespace

TEST_CASE("spectral solve examples")
{
    const auto u = solve_spectral(BiharmonicProblem::make(GreenParameter::from_a(d3, 0.0), ZonalFunction::gegenbauer_basis(d3, 2)));
    CHECK(u.coeff(2) == 1.0 / 64.0);
    CHECK(u.coeff(0) == 0.0);
    CHECK(u.coeff(1) == 0.0);
    const auto v = solve_spectral(BiharmonicProblem::make(GreenParameter::from_a(d3, -576.0 / 625.0), ZonalFunction(d3, {1.0})));
    CHECK(v.coeff(0) == doctest::Approx(-625.0 / 576.0).epsilon(1e-15));
    const auto w = solve_spectral(BiharmonicProblem::make(GreenParameter::from_a(d3, -9.0), ZonalFunction::gegenbauer_basis(d3, 2)));
    CHECK(w.coeff(2) == doctest::Approx(1.0 / 55.0).epsilon(1e-15));
    CHECK(w.coeff(1) == 0.0);
}

TEST_CASE("resonance contract")
{
    const auto p = GreenParameter::from_a(d3, -9.0);
    const ZonalFunction f(d3, {0.0, 1.0, 0.5});
    CHECK_THROWS_AS(BiharmonicProblem::make(p, f), resonance_error);
    const auto prob = BiharmonicProblem::make(p, f, true);
    CHECK(prob.resonant_projection());
    CHECK(prob.rhs().coeff(1) == 0.0);
    CHECK_FALSE(BiharmonicProblem::make(p, ZonalFunction(d3, {0.0, 1e-13})).resonant_projection());
    CHECK_THROWS_AS(BiharmonicProblem::make(p, ZonalFunction(SphereDim(2), {1.0})), parameter_error);
    CHECK(apply_forward(ZonalFunction::gegenbauer_basis(d3, 1), p).coeff(1) == 0.0);
}

TEST_CASE("forward operator round trip")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const SphereDim d(2 + trial % 5);
        const double a = trial % 2 ? u(rng) * 3.0 : 0.0;
        const auto p = GreenParameter::from_a(d, a);
        std::vector<double> c(10);
        for (double& x : c) {
            x = u(rng);
        }
        if (p.resonant_degree()) {
            c[*p.resonant_degree()] = 0.0;
        }
        const auto f = apply_forward(solve_spectral(BiharmonicProblem::make(p, ZonalFunction(d, c))), p);
        for (int l = 0; l < 10; ++l) {
            CHECK(f.coeff(l) == doctest::Approx(c[l]).epsilon(1e-14).scale(1e-14));
        }
    }
    // a = 0: coefficients multiplied by l^2(l+2 lambda)^2
    const auto g = apply_forward(ZonalFunction(d3, {1.0, 1.0, 1.0, 1.0}), GreenParameter::from_a(d3, 0.0));
    CHECK(g.coeff(0) == 0.0);
    CHECK(g.coeff(1) == 9.0);
    CHECK(g.coeff(3) == 225.0);
}

TEST_CASE("convolution solve examples")
{
    const auto p0 = GreenParameter::from_a(d3, 0.0);
    const auto u = solve_by_convolution(BiharmonicProblem::make(p0, ZonalFunction(d3, {0.0, 1.0, 0.0, 0.5})), GreenMethod::closed);
    CHECK(u.coeff(0) == doctest::Approx(0.0).scale(1e-8));
    CHECK(u.coeff(1) == doctest::Approx(1.0 / 9.0).epsilon(1e-8));
    CHECK(u.coeff(2) == doctest::Approx(0.0).scale(1e-8));
    CHECK(u.coeff(3) == doctest::Approx(0.5 / 225.0).epsilon(1e-8));

    const auto pa = GreenParameter::from_a(d3, -576.0 / 625.0);
    const auto v = solve_by_convolution(BiharmonicProblem::make(pa, ZonalFunction::gegenbauer_basis(d3, 2)), GreenMethod::integral);
    CHECK(v.coeff(2) == doctest::Approx(1.0 / (64.0 - 0.9216)).epsilon(1e-6));

    const auto z = solve_by_convolution(BiharmonicProblem::make(pa, ZonalFunction::zero(d3, 3)), GreenMethod::series);
    for (double c : z.coeffs()) {
        CHECK(c == 0.0);
    }
}

TEST_CASE("convolution does not depend on the kernel representative in the resonant case")
{
    const auto p = GreenParameter::from_a(d3, -9.0);
    const auto prob = BiharmonicProblem::make(p, ZonalFunction(d3, {0.4, 0.0, -1.0, 0.25}));
    GreenOptions o;
    const auto g = green_kernel(p, GreenMethod::series, o);
    const QuadratureSpec q{1e-11, 1e-11, 4000};
    const auto base = solve_by_convolution(prob, g, q);
    for (double c : {1.0, -3.7}) {
        const auto shifted = solve_by_convolution(prob, [&](double th) { return g(th) + c * gegenbauer(1, 1.0, std::cos(th)); }, q);
        for (int l = 0; l <= 3; ++l) {
            CHECK(shifted.coeff(l) == doctest::Approx(base.coeff(l)).epsilon(1e-10).scale(1e-10));
        }
    }
}

TEST_CASE("finite-difference residual")
{
    const auto p0 = GreenParameter::from_a(d3, 0.0);
    const auto prob = BiharmonicProblem::make(p0, ZonalFunction::gegenbauer_basis(d3, 2));
    const auto u = solve_spectral(prob);
    const auto grid = interior_grid();
    const double r1 = residual(prob, u, grid, 4e-3);
    const double r2 = residual(prob, u, grid, 2e-3);
    CHECK(r2 < 1e-2);
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.15));
    CHECK(residual(prob, u, grid, 1e-3) < 1e-3);
    // a wrong solution keeps a finite residual
    const ZonalFunction wrong(d3, {0.0, 0.0, 1.0 / 60.0});
    CHECK(residual(prob, wrong, grid, 2e-3) > 0.05);
    CHECK_THROWS_AS(residual(prob, u, std::vector<double>{0.0}, 1e-3), domain_error);
}
