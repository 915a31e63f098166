#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spheregreen/parameters.hpp"

namespace spheregreen {

enum class ClosedFormId { G0_S3, GA_S3_L25, I0_S3, I2_S3, J0J2_S3, DILOG_PAIR, POISSON_KERNEL_K_S3 };

struct ClosedFormInfo {
    ClosedFormId id;
    std::string_view name;
    std::string_view formula;
    /// Closed domain in theta; the open ends are listed separately.
    double theta_min;
    double theta_max;
    bool min_open;
    bool max_open;
};

std::span<const ClosedFormInfo> closed_form_registry();
const ClosedFormInfo& closed_form_info(ClosedFormId id);

/// Closed forms of G_a applicable to (n, a): G0_S3 for n=3, a=0 and GA_S3_L25 for
/// n=3, L=2/5. Empty otherwise.
std::vector<ClosedFormId> green_closed_forms(const GreenParameter& p);

/// Evaluates any registered formula; throws domain_error outside its domain.
double evaluate_closed_form(ClosedFormId id, double theta);

/// (3 + 4 pi^2 - 12 pi theta + 6 theta^2) / 48, theta in [0, pi].
double g0_s3(double theta);

/// G_a on S^3 with L = 2/5 (a = -576/625):
///   (25/48) sum_{alpha} (alpha - pi)(sin 2alpha + sin 4alpha + sin 6alpha)/(1 + 2cos 2alpha + 2cos 4alpha),
/// alpha = (theta + 2 kappa pi)/5, kappa = 0..4. Where a denominator comes close to
/// zero (theta near 0 or pi) the collapsed form ga_s3_L25_reduced is used.
double ga_s3_L25(double theta);

/// The root sum evaluated term by term, without any fallback. Throws domain_error
/// when a denominator vanishes to within 1e-12.
double ga_s3_L25_root_sum(double theta);

/// The same function summed in closed form over kappa, with phi = pi - theta:
///   -(25 pi/96) [sin(7phi/5)/sin(2pi/5) + sin(phi/5)/sin(pi/5)] / sin phi.
double ga_s3_L25_reduced(double theta);

/// L2(e^{i theta}) + L2(e^{-i theta}) = pi^2/3 - pi theta + theta^2/2, theta in [0, 2 pi].
double dilog_pair(double theta);

/// (pi - theta) cot theta, with its limit -1 at theta = pi. Throws at theta = 0.
double pi_minus_theta_cot(double theta);

/// -1 + 1/(2 - 2cos theta) + ((pi - theta)/2) cot theta - (1/2) ln(2 - 2cos theta).
double i0_s3(double theta);

/// cos theta/(2 - 2cos theta) - ((pi - theta)/2) cot theta - (1/2) ln(2 - 2cos theta).
double i2_s3(double theta);

/// J_0 + J_2 = -1/4 + (pi - theta) cot theta + dilog_pair(theta).
double j0j2_s3(double theta);

/// Green function of the Laplace-Beltrami operator on S^3:
/// 1/4 + ((theta - pi)/2) cot theta, theta in (0, pi).
double poisson_green_k_s3(double theta);

}  // namespace spheregreen
