#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "spheregreen/green_series.hpp"
#include "spheregreen/parameters.hpp"
#include "spheregreen/quadrature.hpp"

namespace spheregreen {

enum class GreenMethod { series, integral, closed };

std::string_view to_string(GreenMethod m);
/// "series", "integral" or "closed"; throws parameter_error otherwise.
GreenMethod parse_green_method(std::string_view name);

struct GreenOptions {
    SeriesOptions series;
    QuadratureSpec quad;
};

struct GreenValue {
    double value;
    double error;
};

/// G_a(cos theta) by the selected route. The series route skips the resonant
/// degree automatically; the integral route uses the a < 0 representation or,
/// for a = 0, the I_k / J_k combination; the closed route covers n = 3 with
/// a = 0 or L = 2/5. Unsupported combinations raise parameter_error.
GreenValue evaluate_green(const GreenParameter& p, double theta, GreenMethod method, const GreenOptions& opts);

/// theta -> G_a(cos theta) for use as a convolution kernel. Below the integral
/// route's theta_min the series is used instead (n <= 3; n >= 4 throws).
std::function<double(double)> green_kernel(const GreenParameter& p, GreenMethod method, const GreenOptions& opts);

}  // namespace spheregreen
