#include "spheregreen/green.hpp"

#include "spheregreen/closed_forms.hpp"
#include "spheregreen/green_integral.hpp"

namespace spheregreen {

std::string_view to_string(GreenMethod m)
{
    switch (m) {
    case GreenMethod::series:
        return "series";
    case GreenMethod::integral:
        return "integral";
    case GreenMethod::closed:
        return "closed";
    }
    return "unknown";
}

GreenMethod parse_green_method(std::string_view name)
{
    if (name == "series") {
        return GreenMethod::series;
    }
    if (name == "integral") {
        return GreenMethod::integral;
    }
    if (name == "closed") {
        return GreenMethod::closed;
    }
    throw parameter_error("unknown Green evaluation method '" + std::string(name) + "'");
}

GreenValue evaluate_green(const GreenParameter& p, double theta, GreenMethod method, const GreenOptions& opts)
{
    switch (method) {
    case GreenMethod::series: {
        SeriesOptions so = opts.series;
        so.skip_l = p.resonant_degree();
        const auto r = green_series_eval(p, theta, so);
        return {r.value, r.tail_bound};
    }
    case GreenMethod::integral: {
        if (p.a() > 0.0) {
            throw parameter_error("no integral representation for a > 0");
        }
        const auto r = p.a() == 0.0 ? green_zero_eval(p.dim(), theta, opts.quad) : green_integral_eval(p, theta, opts.quad);
        return {r.value, r.error};
    }
    case GreenMethod::closed: {
        const auto ids = green_closed_forms(p);
        if (ids.empty()) {
            throw parameter_error("no closed form for n = " + std::to_string(p.dim().n()) +
                                  ", a = " + std::to_string(p.a()));
        }
        return {evaluate_closed_form(ids.front(), theta), 0.0};
    }
    }
    throw parameter_error("unknown Green evaluation method");
}

std::function<double(double)> green_kernel(const GreenParameter& p, GreenMethod method, const GreenOptions& opts)
{
    if (method == GreenMethod::integral) {
        return [p, opts](double theta) {
            if (theta < integral_theta_min) {
                if (p.dim().n() >= 4) {
                    throw divergence_error("G_a is unbounded near theta = 0 for n >= 4");
                }
                return evaluate_green(p, theta, GreenMethod::series, opts).value;
            }
            return evaluate_green(p, theta, GreenMethod::integral, opts).value;
        };
    }
    return [p, method, opts](double theta) { return evaluate_green(p, theta, method, opts).value; };
}

}  // namespace spheregreen
