#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "spheregreen/errors.hpp"
#include "spheregreen/quadrature.hpp"
#include "spheregreen/sphere.hpp"

using namespace spheregreen;
using std::numbers::pi;

namespace {

// Explicit sum C_l^lam(t) = sum_k (-1)^k Gamma(l-k+lam) / (Gamma(lam) k! (l-2k)!) (2t)^{l-2k}
double gegenbauer_explicit(int l, double lam, double t)
{
    double s = 0.0;
    for (int k = 0; 2 * k <= l; ++k) {
        const double lg = std::lgamma(l - k + lam) - std::lgamma(lam) - std::lgamma(k + 1.0) - std::lgamma(l - 2.0 * k + 1.0);
        s += (k % 2 ? -1.0 : 1.0) * std::exp(lg) * std::pow(2.0 * t, l - 2 * k);
    }
    return s;
}

}  // namespace

TEST_CASE("sphere dimension constants")
{
    CHECK_THROWS_AS(SphereDim(1), parameter_error);
    const SphereDim s2(2);
    CHECK(s2.lambda() == 0.5);
    CHECK(s2.sigma() == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(s2.sigma_equator() == doctest::Approx(2.0 * pi).epsilon(1e-15));
    const SphereDim s3(3);
    CHECK(s3.sigma() == doctest::Approx(2.0 * pi * pi).epsilon(1e-15));
    CHECK(s3.two_lambda() == 2);
    CHECK(sphere_measure(1) == doctest::Approx(2.0 * pi));
    CHECK(SphereDim(5) == SphereDim(5));
}

TEST_CASE("gegenbauer recurrence against independent formulas")
{
    for (double t : {-1.0, -0.73, -0.2, 0.0, 0.41, 0.999, 1.0}) {
        const double theta = std::acos(t);
        for (int l = 0; l <= 30; ++l) {
            // Chebyshev of the second kind
            const double u = (std::abs(std::sin(theta)) < 1e-12) ? (l + 1.0) * std::pow(t, l) : std::sin((l + 1) * theta) / std::sin(theta);
            CHECK(gegenbauer(l, 1.0, t) == doctest::Approx(u).epsilon(1e-11));
            CHECK(gegenbauer(l, 0.5, t) == doctest::Approx(std::legendre(l, t)).epsilon(1e-12));
        }
        for (double lam : {1.5, 2.5, 7.5}) {
            for (int l = 0; l <= 12; ++l) {
                CHECK(gegenbauer(l, lam, t) == doctest::Approx(gegenbauer_explicit(l, lam, t)).epsilon(1e-10).scale(1.0));
            }
        }
    }
    CHECK_THROWS_AS(gegenbauer(2, 1.0, 1.5), domain_error);
    CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), domain_error);
}

TEST_CASE("gegenbauer sweep, value at one, sup bound")
{
    std::vector<double> out(40);
    gegenbauer_sweep(2.5, 0.3, out);
    for (int l = 0; l < 40; ++l) {
        CHECK(out[l] == doctest::Approx(gegenbauer(l, 2.5, 0.3)).epsilon(1e-13));
    }
    for (int n : {2, 3, 4, 6, 9}) {
        const SphereDim d(n);
        for (int l = 0; l <= 40; ++l) {
            CHECK(gegenbauer_at_one(l, d.lambda()) == doctest::Approx(gegenbauer(l, d.lambda(), 1.0)).epsilon(1e-12));
            CHECK(gegenbauer_sup_bound(l, d) >= gegenbauer_at_one(l, d.lambda()) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("gegenbauer norms against quadrature")
{
    QuadratureSpec q;
    for (double lam : {0.5, 1.0, 1.5, 3.0}) {
        for (int l = 0; l <= 8; ++l) {
            auto f = [&](double theta) {
                const double c = gegenbauer(l, lam, std::cos(theta));
                return c * c * std::pow(std::sin(theta), 2.0 * lam);
            };
            const double h = integrate<double>(f, 0.0, pi, q).value;
            CHECK(gegenbauer_norm(l, lam) == doctest::Approx(h).epsilon(1e-11));
        }
    }
}

TEST_CASE("poisson kernel closed form and series")
{
    for (int n : {2, 3, 4, 6}) {
        const SphereDim d(n);
        for (double r : {0.0, 0.1, 0.5, 0.9}) {
            for (double t : {-1.0, -0.3, 0.2, 0.95}) {
                const auto s = poisson_kernel_series(r, t, d, 1e-15);
                const double c = poisson_kernel(r, t, d);
                CHECK(s.value == doctest::Approx(c).epsilon(1e-12).scale(1.0));
                CHECK(s.tail_bound >= 0.0);
            }
        }
    }
    // total mass 1: (Sigma_{n-1}) int p_r(cos theta) sin^{n-1} theta = 1
    const SphereDim d3(3);
    auto f = [&](double theta) { return poisson_kernel(0.7, std::cos(theta), d3) * std::pow(std::sin(theta), 2); };
    CHECK(d3.sigma_equator() * integrate<double>(f, 0.0, pi, QuadratureSpec{}).value == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_THROWS_AS(poisson_kernel(1.0, 0.0, d3), domain_error);
    CHECK_THROWS_AS(poisson_kernel(0.5, 1.1, d3), domain_error);
}

TEST_CASE("poisson bracket vanishes to the dropped order")
{
    const SphereDim d(4);
    const double t = std::cos(1.1);
    for (int drop : {0, 1, 2}) {
        // leading surviving term: r^{drop+1} (lambda+drop+1)/lambda C_{drop+1}(t)
        const double lead = (d.lambda() + drop + 1) / d.lambda() * gegenbauer(drop + 1, d.lambda(), t);
        for (double r : {1e-3, 1e-4}) {
            CHECK(poisson_bracket(r, t, d, drop) / std::pow(r, drop + 1) == doctest::Approx(lead).epsilon(200 * r));
        }
        // scaled form is the same quantity divided by r^{drop+1}
        for (double r : {1e-3, 0.3, 0.6, 0.95}) {
            CHECK(poisson_bracket_scaled(r, t, d, drop) * std::pow(r, drop + 1) ==
                  doctest::Approx(poisson_bracket(r, t, d, drop)).epsilon(1e-11).scale(1e-300));
        }
    }
    // both branches agree at the switch radius
    CHECK(poisson_bracket(0.5, t, d, 1) == doctest::Approx(poisson_bracket(0.5000000001, t, d, 1)).epsilon(1e-8));
}

TEST_CASE("laplace-beltrami stencil: eigenfunctions and order")
{
    for (int n : {2, 3, 4}) {
        const SphereDim d(n);
        const double lam = d.lambda();
        for (int l = 2; l <= 6; ++l) {
            ZonalEvaluator f = [&](double t) { return gegenbauer(l, lam, t); };
            const double t = 0.37;
            const double exact = -l * (l + 2.0 * lam) * gegenbauer(l, lam, t);
            const double e1 = std::abs(zonal_laplace_beltrami(f, t, 1e-2, d) - exact);
            const double e2 = std::abs(zonal_laplace_beltrami(f, t, 5e-3, d) - exact);
            CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.05));
        }
    }
    const SphereDim d(3);
    ZonalEvaluator one = [](double) { return 1.0; };
    CHECK(zonal_laplace_beltrami(one, 0.2, 1e-3, d) == 0.0);
    CHECK_THROWS_AS(zonal_laplace_beltrami(one, 0.999, 1e-3, d), domain_error);
    CHECK_THROWS_AS(zonal_bilaplace_beltrami(one, 0.9975, 1e-3, d), domain_error);
    CHECK_THROWS_AS(zonal_laplace_beltrami(one, 0.2, 0.0, d), domain_error);
    // composed operator on C_2^1: l^2 (l+2)^2 = 64
    ZonalEvaluator c2 = [](double t) { return gegenbauer(2, 1.0, t); };
    CHECK(zonal_bilaplace_beltrami(c2, 0.1, 1e-3, d) == doctest::Approx(64.0 * gegenbauer(2, 1.0, 0.1)).epsilon(1e-3));
}
