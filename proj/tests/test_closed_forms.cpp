#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spheregreen/closed_forms.hpp"
#include "spheregreen/quadrature.hpp"
#include "spheregreen/sphere.hpp"

using namespace spheregreen;
using std::numbers::pi;

TEST_CASE("G_0 on S^3")
{
    CHECK(g0_s3(0.0) == doctest::Approx(0.88496703342411322).epsilon(1e-15));
    CHECK(g0_s3(pi) == doctest::Approx(-0.34873351671205661).epsilon(1e-15));
    CHECK(g0_s3(pi / 2) == doctest::Approx(-0.040308379178014152).epsilon(1e-14));
    CHECK_THROWS_AS(g0_s3(-0.1), domain_error);
    // mean zero: the degree-0 coefficient vanishes
    const double m = integrate<double>([](double t) { return g0_s3(t) * std::sin(t) * std::sin(t); }, 0.0, pi, QuadratureSpec{}).value;
    CHECK(std::abs(m) < 1e-12);
}

TEST_CASE("assembly of G_0 from the I and J closed forms")
{
    for (int i = 1; i <= 20; ++i) {
        const double theta = pi * i / 20.0;
        const double i0_minus_i2 = i0_s3(theta) - i2_s3(theta);
        CHECK(i0_minus_i2 == doctest::Approx(-0.5 + pi_minus_theta_cot(theta)).epsilon(1e-12));
        CHECK(0.25 * j0j2_s3(theta) - 0.25 * i0_minus_i2 == doctest::Approx(g0_s3(theta)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("I_0 and I_2 values")
{
    CHECK(i0_s3(pi / 2) == doctest::Approx(-0.84657359027997265).epsilon(1e-15));
    CHECK(i2_s3(pi / 2) == doctest::Approx(-0.34657359027997265).epsilon(1e-15));
    CHECK(i0_s3(pi) == doctest::Approx(-1.9431471805599453).epsilon(1e-15));
    CHECK(i2_s3(pi) == doctest::Approx(-0.44314718055994531).epsilon(1e-15));
    CHECK_THROWS_AS(i0_s3(0.0), domain_error);
}

TEST_CASE("(pi - theta) cot theta near pi")
{
    CHECK(pi_minus_theta_cot(pi) == -1.0);
    CHECK(pi_minus_theta_cot(pi / 2) == doctest::Approx(0.0).scale(1.0));
    for (double phi : {1e-12, 1e-8, 1e-5, 1e-3}) {
        const double th = pi - phi;
        CHECK(pi_minus_theta_cot(th) == doctest::Approx(-(pi - th) / std::tan(pi - th)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(pi_minus_theta_cot(0.0), domain_error);
}

TEST_CASE("dilogarithm pair")
{
    CHECK(dilog_pair(0.0) == doctest::Approx(pi * pi / 3));
    CHECK(dilog_pair(pi) == doctest::Approx(-pi * pi / 6));
    CHECK(dilog_pair(pi / 2) == doctest::Approx(-pi * pi / 24));
    for (double theta : {0.5, 2.0, 4.0}) {
        double s = 0.0;
        for (int l = 200000; l >= 1; --l) {
            s += 2.0 * std::cos(l * theta) / (double(l) * l);
        }
        CHECK(dilog_pair(theta) == doctest::Approx(s).epsilon(1e-9));
    }
    CHECK_THROWS_AS(dilog_pair(7.0), domain_error);
}

TEST_CASE("root sum on S^3 with L = 2/5")
{
    // tests/oracles/oracle_values.txt
    CHECK(ga_s3_L25(pi / 2) == doctest::Approx(-1.1260498254911588).epsilon(1e-13));
    CHECK(ga_s3_L25(pi) == doctest::Approx(-1.4826905549446273).epsilon(1e-13));
    for (double theta : {0.05, 0.3, 1.0, 2.0, 3.0}) {
        CHECK(ga_s3_L25_root_sum(theta) == doctest::Approx(ga_s3_L25_reduced(theta)).epsilon(1e-12));
    }
    // continuity across the switches near both poles
    CHECK(ga_s3_L25(pi - 1.0001e-3) == doctest::Approx(ga_s3_L25_root_sum(pi - 1.0001e-3)).epsilon(1e-11));
    CHECK(ga_s3_L25_reduced(1e-4 - 1e-12) == doctest::Approx(ga_s3_L25_reduced(1e-4 + 1e-12)).epsilon(1e-10));
    CHECK(ga_s3_L25(pi - 1e-10) == doctest::Approx(ga_s3_L25(pi)).epsilon(1e-9));
    CHECK_THROWS_AS(ga_s3_L25_root_sum(pi), domain_error);
    CHECK_THROWS_AS(ga_s3_L25(0.0), domain_error);
}

TEST_CASE("Laplace-Beltrami Green function on S^3")
{
    CHECK(poisson_green_k_s3(pi / 2) == doctest::Approx(0.25));
    CHECK(poisson_green_k_s3(pi / 4) == doctest::Approx(0.25 - 3 * pi / 8));
    CHECK_THROWS_AS(poisson_green_k_s3(pi), domain_error);
    // Delta G_0 = K, second order in h
    const SphereDim d(3);
    ZonalEvaluator g = [](double t) { return g0_s3(std::acos(t)); };
    for (double theta : {0.7, 1.5, 2.4}) {
        const double t = std::cos(theta);
        const double e1 = std::abs(zonal_laplace_beltrami(g, t, 4e-3, d) - poisson_green_k_s3(theta));
        const double e2 = std::abs(zonal_laplace_beltrami(g, t, 2e-3, d) - poisson_green_k_s3(theta));
        CHECK(e2 < 1e-5);
        CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
    }
}

TEST_CASE("registry")
{
    CHECK(closed_form_registry().size() == 7);
    CHECK(closed_form_info(ClosedFormId::DILOG_PAIR).theta_max == doctest::Approx(2 * pi));
    CHECK(green_closed_forms(GreenParameter::from_a(SphereDim(3), 0.0)).front() == ClosedFormId::G0_S3);
    CHECK(green_closed_forms(GreenParameter::from_L(SphereDim(3), 0.4)).front() == ClosedFormId::GA_S3_L25);
    CHECK(green_closed_forms(GreenParameter::from_a(SphereDim(5), 0.0)).empty());
    CHECK(evaluate_closed_form(ClosedFormId::I2_S3, 1.0) == i2_s3(1.0));
}
