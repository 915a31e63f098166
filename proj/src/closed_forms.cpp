#include "spheregreen/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace spheregreen {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<ClosedFormInfo, 7> registry{{
    {ClosedFormId::G0_S3, "G0_S3", "G_0 on S^3: (3 + 4 pi^2 - 12 pi theta + 6 theta^2)/48", 0.0, pi, false, false},
    {ClosedFormId::GA_S3_L25, "GA_S3_L25",
     "G_a on S^3, a = -576/625: (25/48) sum_k (alpha_k - pi)(sin 2a + sin 4a + sin 6a)/(1 + 2cos 2a + 2cos 4a), "
     "alpha_k = (theta + 2 k pi)/5",
     0.0, pi, true, false},
    {ClosedFormId::I0_S3, "I0_S3", "I_0 on S^3: -1 + 1/(2-2cos t) + ((pi-t)/2) cot t - (1/2) ln(2-2cos t)", 0.0, pi,
     true, false},
    {ClosedFormId::I2_S3, "I2_S3", "I_2 on S^3: cos t/(2-2cos t) - ((pi-t)/2) cot t - (1/2) ln(2-2cos t)", 0.0, pi,
     true, false},
    {ClosedFormId::J0J2_S3, "J0J2_S3", "J_0 + J_2 on S^3: -1/4 + (pi-t) cot t + L2(e^{it}) + L2(e^{-it})", 0.0, pi, true,
     false},
    {ClosedFormId::DILOG_PAIR, "DILOG_PAIR", "L2(e^{it}) + L2(e^{-it}) = pi^2/3 - pi t + t^2/2", 0.0, 2.0 * pi, false,
     false},
    {ClosedFormId::POISSON_KERNEL_K_S3, "POISSON_KERNEL_K_S3", "Laplace-Beltrami Green function on S^3: 1/4 + ((t-pi)/2) cot t",
     0.0, pi, true, true},
}};

void check_domain(ClosedFormId id, double theta)
{
    const ClosedFormInfo& info = closed_form_info(id);
    const bool low_ok = info.min_open ? theta > info.theta_min : theta >= info.theta_min;
    const bool high_ok = info.max_open ? theta < info.theta_max : theta <= info.theta_max;
    if (!(low_ok && high_ok)) {
        throw domain_error(std::string(info.name) + ": theta = " + std::to_string(theta) + " outside its domain");
    }
}

// 2 - 2cos theta without cancellation near 0
double chord_squared(double theta)
{
    const double s = std::sin(0.5 * theta);
    return 4.0 * s * s;
}

const double sin_pi5 = std::sin(pi / 5.0);
const double sin_2pi5 = std::sin(2.0 * pi / 5.0);
constexpr double ga_prefactor = 25.0 * pi / 96.0;

// Taylor coefficient of theta^j in sin(7(pi-theta)/5)/sin(2pi/5) + sin((pi-theta)/5)/sin(pi/5).
double reduced_numerator_taylor(int j)
{
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) {
        fact *= i;
    }
    const double shift = 0.5 * pi * j;
    return (std::pow(-1.4, j) * std::sin(1.4 * pi + shift) / sin_2pi5 +
            std::pow(-0.2, j) * std::sin(0.2 * pi + shift) / sin_pi5) /
           fact;
}

}  // namespace

std::span<const ClosedFormInfo> closed_form_registry()
{
    return registry;
}

const ClosedFormInfo& closed_form_info(ClosedFormId id)
{
    for (const auto& info : registry) {
        if (info.id == id) {
            return info;
        }
    }
    throw parameter_error("unknown closed form");
}

std::vector<ClosedFormId> green_closed_forms(const GreenParameter& p)
{
    std::vector<ClosedFormId> out;
    if (p.dim().n() != 3) {
        return out;
    }
    if (p.a() == 0.0) {
        out.push_back(ClosedFormId::G0_S3);
    } else if (p.L() && std::abs(*p.L() - 0.4) <= 1e-12) {
        out.push_back(ClosedFormId::GA_S3_L25);
    }
    return out;
}

double evaluate_closed_form(ClosedFormId id, double theta)
{
    switch (id) {
    case ClosedFormId::G0_S3:
        return g0_s3(theta);
    case ClosedFormId::GA_S3_L25:
        return ga_s3_L25(theta);
    case ClosedFormId::I0_S3:
        return i0_s3(theta);
    case ClosedFormId::I2_S3:
        return i2_s3(theta);
    case ClosedFormId::J0J2_S3:
        return j0j2_s3(theta);
    case ClosedFormId::DILOG_PAIR:
        return dilog_pair(theta);
    case ClosedFormId::POISSON_KERNEL_K_S3:
        return poisson_green_k_s3(theta);
    }
    throw parameter_error("unknown closed form");
}

double g0_s3(double theta)
{
    check_domain(ClosedFormId::G0_S3, theta);
    return (3.0 + 4.0 * pi * pi - 12.0 * pi * theta + 6.0 * theta * theta) / 48.0;
}

double ga_s3_L25_root_sum(double theta)
{
    check_domain(ClosedFormId::GA_S3_L25, theta);
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double alpha = (theta + 2.0 * k * pi) / 5.0;
        const double den = 1.0 + 2.0 * std::cos(2.0 * alpha) + 2.0 * std::cos(4.0 * alpha);
        if (std::abs(den) < 1e-12) {
            throw domain_error("GA_S3_L25: vanishing denominator at theta = " + std::to_string(theta));
        }
        const double num = std::sin(2.0 * alpha) + std::sin(4.0 * alpha) + std::sin(6.0 * alpha);
        sum += (alpha - pi) * num / den;
    }
    return 25.0 / 48.0 * sum;
}

double ga_s3_L25_reduced(double theta)
{
    check_domain(ClosedFormId::GA_S3_L25, theta);
    if (theta < 1e-4) {
        const double c1 = reduced_numerator_taylor(1);
        const double c2 = reduced_numerator_taylor(2);
        const double c3 = reduced_numerator_taylor(3);
        return -ga_prefactor * (c1 + c2 * theta + (c3 + c1 / 6.0) * theta * theta);
    }
    const double phi = pi - theta;
    if (phi == 0.0) {
        return -ga_prefactor * (1.4 / sin_2pi5 + 0.2 / sin_pi5);
    }
    const double num = std::sin(1.4 * phi) / sin_2pi5 + std::sin(0.2 * phi) / sin_pi5;
    const double den = theta < 0.5 * pi ? std::sin(theta) : std::sin(phi);
    return -ga_prefactor * num / den;
}

double ga_s3_L25(double theta)
{
    check_domain(ClosedFormId::GA_S3_L25, theta);
    // 1 + 2cos 2a + 2cos 4a = sin 5a / sin a, so every denominator is at least |sin theta|
    if (std::sin(theta) < 1e-3) {
        return ga_s3_L25_reduced(theta);
    }
    return ga_s3_L25_root_sum(theta);
}

double dilog_pair(double theta)
{
    check_domain(ClosedFormId::DILOG_PAIR, theta);
    return pi * pi / 3.0 - pi * theta + 0.5 * theta * theta;
}

double pi_minus_theta_cot(double theta)
{
    if (!(theta > 0.0 && theta <= pi)) {
        throw domain_error("(pi - theta) cot theta needs theta in (0, pi]");
    }
    if (theta < 0.5 * pi) {
        return (pi - theta) * std::cos(theta) / std::sin(theta);
    }
    const double phi = pi - theta;
    if (phi < 1e-4) {
        const double p2 = phi * phi;
        return -(1.0 - p2 / 3.0 - p2 * p2 / 45.0);
    }
    return -phi * std::cos(phi) / std::sin(phi);
}

double i0_s3(double theta)
{
    check_domain(ClosedFormId::I0_S3, theta);
    const double c = chord_squared(theta);
    return -1.0 + 1.0 / c + 0.5 * pi_minus_theta_cot(theta) - 0.5 * std::log(c);
}

double i2_s3(double theta)
{
    check_domain(ClosedFormId::I2_S3, theta);
    const double c = chord_squared(theta);
    return std::cos(theta) / c - 0.5 * pi_minus_theta_cot(theta) - 0.5 * std::log(c);
}

double j0j2_s3(double theta)
{
    check_domain(ClosedFormId::J0J2_S3, theta);
    return -0.25 + pi_minus_theta_cot(theta) + dilog_pair(theta);
}

double poisson_green_k_s3(double theta)
{
    check_domain(ClosedFormId::POISSON_KERNEL_K_S3, theta);
    return 0.25 - 0.5 * pi_minus_theta_cot(theta);
}

}  // namespace spheregreen
