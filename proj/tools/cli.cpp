#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "spheregreen/closed_forms.hpp"
#include "spheregreen/green_integral.hpp"
#include "spheregreen/parameters.hpp"
#include "spheregreen/solver.hpp"

#ifndef SPHEREGREEN_VERSION_STRING
#define SPHEREGREEN_VERSION_STRING "0.0.0"
#endif

namespace spheregreen::cli {

using nlohmann::json;

namespace {

std::string format_real(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(const std::string& text, const char* what)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty() || !std::isfinite(v)) {
        throw parameter_error(std::string("malformed ") + what + ": '" + text + "'");
    }
    return v;
}

GreenParameter make_parameter(int n, const std::optional<double>& a, const std::optional<double>& L)
{
    if (a.has_value() == L.has_value()) {
        throw parameter_error("exactly one of --a and --L is required");
    }
    const SphereDim dim(n);
    return a ? GreenParameter::from_a(dim, *a) : GreenParameter::from_L(dim, *L);
}

std::vector<GreenMethod> applicable_methods(const GreenParameter& p, const std::optional<double>& abel_r)
{
    std::vector<GreenMethod> out;
    if (p.dim().n() <= 4 || abel_r) {
        out.push_back(GreenMethod::series);
    }
    if (p.a() == 0.0 || p.integral_admissible()) {
        out.push_back(GreenMethod::integral);
    }
    if (!green_closed_forms(p).empty()) {
        out.push_back(GreenMethod::closed);
    }
    return out;
}

// Runs tasks on at most worker_count() threads; rethrows the first failure in task order.
template <typename Task>
void parallel_for(std::size_t count, Task&& task)
{
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), count));
    std::vector<std::exception_ptr> failures(count);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(body);
    }
    body();
    pool.clear();
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream;

    OutputTarget(const std::string& path, std::ostream& fallback) : stream(&fallback)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw parameter_error("cannot open output file '" + path + "'");
            }
            stream = &file;
        }
    }
};

}  // namespace

std::vector<double> ThetaGrid::points() const
{
    std::vector<double> out;
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < count; ++i) {
        out.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
    }
    return out;
}

ThetaGrid parse_theta_grid(const std::string& text)
{
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw parameter_error("theta grid must be start:stop:count, got '" + text + "'");
    }
    ThetaGrid g;
    g.start = parse_real(text.substr(0, first), "theta start");
    g.stop = parse_real(text.substr(first + 1, second - first - 1), "theta stop");
    const double count = parse_real(text.substr(second + 1), "theta count");
    if (count != std::floor(count) || count < 1 || count > 1e7) {
        throw parameter_error("theta count must be a positive integer");
    }
    g.count = static_cast<int>(count);
    for (double v : {g.start, g.stop}) {
        if (v < 0.0 || v > std::numbers::pi) {
            throw parameter_error("theta values are radians in [0, pi]; got " + format_real(v));
        }
    }
    if (g.stop < g.start) {
        throw parameter_error("theta grid stop precedes start");
    }
    return g;
}

unsigned worker_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPHERE_GREEN_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return hw;
}

std::string version_string()
{
    return SPHEREGREEN_VERSION_STRING;
}

EvaluationReport run_eval(const EvalRequest& req)
{
    const GreenParameter p = make_parameter(req.n, req.a, req.L);
    if (!(req.tol > 0.0)) {
        throw parameter_error("--tol must be positive");
    }
    GreenOptions opts;
    opts.series.l_max = req.l_max;
    opts.series.tail_tol = req.tol;
    opts.series.abel_r = req.abel_r;
    opts.quad.abs_tol = 1e-2 * req.tol;
    opts.quad.rel_tol = 1e-2 * req.tol;
    opts.series.validate();

    std::vector<GreenMethod> methods;
    const bool all = req.method == "all";
    if (all) {
        methods = applicable_methods(p, req.abel_r);
    } else {
        methods.push_back(parse_green_method(req.method));
    }

    const std::vector<double> thetas = req.grid.points();
    std::vector<ReportRow> rows(thetas.size() * methods.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double theta = thetas[i / methods.size()];
        const GreenMethod m = methods[i % methods.size()];
        const auto t0 = std::chrono::steady_clock::now();
        const GreenValue g = evaluate_green(p, theta, m, opts);
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        rows[i] = {theta, std::string(to_string(m)), g.value, std::abs(g.error), dt.count(), std::nullopt};
    });

    if (all) {
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            double disc = 0.0;
            for (std::size_t i = 0; i < methods.size(); ++i) {
                for (std::size_t j = i + 1; j < methods.size(); ++j) {
                    disc = std::max(disc, std::abs(rows[k * methods.size() + i].value - rows[k * methods.size() + j].value));
                }
            }
            for (std::size_t i = 0; i < methods.size(); ++i) {
                rows[k * methods.size() + i].max_discrepancy = disc;
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& x, const ReportRow& y) {
        return x.theta != y.theta ? x.theta < y.theta : x.method < y.method;
    });
    return {req.n, p.a(), p.L(), req.tol, version_string(), std::move(rows)};
}

void write_csv(std::ostream& os, const EvaluationReport& report)
{
    const bool disc = !report.rows.empty() && report.rows.front().max_discrepancy.has_value();
    os << "theta,method,value,err_estimate,wall_time_ms" << (disc ? ",max_discrepancy" : "") << "\r\n";
    for (const auto& r : report.rows) {
        os << format_real(r.theta) << ',' << r.method << ',' << format_real(r.value) << ','
           << format_real(r.err_estimate) << ',' << format_real(r.wall_time_ms);
        if (disc) {
            os << ',' << format_real(*r.max_discrepancy);
        }
        os << "\r\n";
    }
}

void write_json(std::ostream& os, const EvaluationReport& report)
{
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row{{"theta", r.theta},
                 {"method", r.method},
                 {"value", r.value},
                 {"err_estimate", std::isfinite(r.err_estimate) ? json(r.err_estimate) : json("inf")},
                 {"wall_time_ms", r.wall_time_ms}};
        if (r.max_discrepancy) {
            row["max_discrepancy"] = *r.max_discrepancy;
        }
        rows.push_back(std::move(row));
    }
    json meta{{"n", report.n}, {"a", report.a}, {"tol", report.tol}, {"version", report.version}};
    meta["L"] = report.L ? json(*report.L) : json(nullptr);
    os << json{{"metadata", meta}, {"rows", rows}}.dump(2) << '\n';
}

namespace {

json pair_row(const ExponentPair& e)
{
    return json{{"n", e.n},
                {"lambda", to_string(e.lambda)},
                {"L", to_string(e.L)},
                {"a", to_string(e.a())},
                {"exponent_plus", to_string(e.e_plus)},
                {"exponent_minus", to_string(e.e_minus)}};
}

void write_pairs(std::ostream& os, const std::vector<ExponentPair>& pairs, const std::string& format)
{
    if (format == "json") {
        json rows = json::array();
        for (const auto& e : pairs) {
            rows.push_back(pair_row(e));
        }
        os << rows.dump(2) << '\n';
        return;
    }
    os << "n,lambda,L,a,exponent_plus,exponent_minus\r\n";
    for (const auto& e : pairs) {
        os << e.n << ',' << to_string(e.lambda) << ',' << to_string(e.L) << ',' << to_string(e.a()) << ','
           << to_string(e.e_plus) << ',' << to_string(e.e_minus) << "\r\n";
    }
}

ZonalFunction read_rhs(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in) {
        throw parameter_error("cannot open right-hand side file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw parameter_error("malformed right-hand side JSON: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("lmax") || !doc.contains("coeffs") || !doc["lmax"].is_number_integer() ||
        !doc["coeffs"].is_array()) {
        throw parameter_error("right-hand side must be {\"n\": int, \"lmax\": int, \"coeffs\": [real]}");
    }
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<int>() != n)) {
        throw parameter_error("right-hand side n does not match --n");
    }
    const int lmax = doc["lmax"].get<int>();
    std::vector<double> c;
    for (const auto& v : doc["coeffs"]) {
        if (!v.is_number()) {
            throw parameter_error("coefficients must be numbers");
        }
        c.push_back(v.get<double>());
    }
    if (lmax < 0 || static_cast<int>(c.size()) != lmax + 1) {
        throw parameter_error("coeffs must have lmax + 1 entries");
    }
    return ZonalFunction(SphereDim(n), std::move(c));
}

GreenMethod default_convolution_method(const GreenParameter& p)
{
    if (!green_closed_forms(p).empty()) {
        return GreenMethod::closed;
    }
    if (p.a() == 0.0 || p.integral_admissible()) {
        return GreenMethod::integral;
    }
    return GreenMethod::series;
}

std::vector<double> residual_grid(double h)
{
    // every stencil point must stay 3 * (2h) away from the poles in t
    const double lo = std::max(0.3, std::acos(1.0 - 6.0 * h) + 1e-3);
    std::vector<double> out;
    constexpr int points = 16;
    for (int i = 0; i < points; ++i) {
        out.push_back(lo + (std::numbers::pi - 2.0 * lo) * i / (points - 1));
    }
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Green functions of (Delta_{S^n})^2 + a on the n-sphere"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    EvalRequest ev;
    std::string theta_text = "0.1:3.141592653589793:16";
    std::string out_path;
    std::string format = "csv";
    auto* eval = app.add_subcommand("eval", "evaluate G_a on a theta grid");
    eval->add_option("--n", ev.n, "sphere dimension")->required();
    auto* a_opt = eval->add_option("--a", ev.a, "shift a");
    auto* L_opt = eval->add_option("--L", ev.L, "L with a = -L^2 (L + 2 lambda)^2");
    a_opt->excludes(L_opt);
    eval->add_option("--theta", theta_text, "start:stop:count in radians")->capture_default_str();
    eval->add_option("--method", ev.method, "series|integral|closed|all")
        ->check(CLI::IsMember({"series", "integral", "closed", "all"}))
        ->capture_default_str();
    eval->add_option("--tol", ev.tol, "series tail tolerance; quadrature uses tol/100")->capture_default_str();
    eval->add_option("--l-max", ev.l_max, "series truncation cap")->capture_default_str();
    eval->add_option("--abel", ev.abel_r, "Abel summation starting radius in (0,1)");
    eval->add_option("--out", out_path, "output file (default stdout)");
    eval->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    int n_max = 0;
    bool rational = false;
    std::string alpha_text;
    int family_n = 0;
    auto* params = app.add_subcommand("params", "integer-exponent parameter table");
    auto* n_max_opt = params->add_option("--n-max", n_max, "largest sphere dimension");
    params->add_flag("--rational", rational, "query one rational family");
    params->add_option("--alpha", alpha_text, "alpha = p/q >= 1 for --rational");
    params->add_option("--n", family_n, "sphere dimension for --rational");
    params->add_option("--out", out_path, "output file (default stdout)");
    params->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    int solve_n = 0;
    std::optional<double> solve_a;
    std::optional<double> solve_L;
    std::string rhs_path;
    std::string via = "spectral";
    std::string green_name;
    bool project = false;
    std::optional<double> verify_h;
    auto* solve = app.add_subcommand("solve", "solve (Delta^2 + a) u = f for zonal f");
    solve->add_option("--n", solve_n, "sphere dimension")->required();
    auto* sa = solve->add_option("--a", solve_a, "shift a");
    auto* sL = solve->add_option("--L", solve_L, "L with a = -L^2 (L + 2 lambda)^2");
    sa->excludes(sL);
    solve->add_option("--rhs", rhs_path, "JSON coefficient file")->required();
    solve->add_option("--via", via, "spectral|convolution")
        ->check(CLI::IsMember({"spectral", "convolution"}))
        ->capture_default_str();
    solve->add_option("--green", green_name, "Green evaluator for --via convolution: series|integral|closed");
    solve->add_option("--out", out_path, "output file (default stdout)");
    solve->add_flag("--project-resonant", project, "zero f^(L) in the resonant case");
    solve->add_option("--verify-fd", verify_h, "finite-difference step for the residual check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : parameter_failure;
    }

    try {
        if (eval->parsed()) {
            ev.grid = parse_theta_grid(theta_text);
            const EvaluationReport report = run_eval(ev);
            OutputTarget target(out_path, out);
            if (format == "json") {
                write_json(*target.stream, report);
            } else {
                write_csv(*target.stream, report);
            }
        } else if (params->parsed()) {
            std::vector<ExponentPair> pairs;
            if (rational) {
                if (alpha_text.empty() || family_n == 0) {
                    throw parameter_error("--rational needs --alpha and --n");
                }
                const SphereDim dim(family_n);
                pairs.push_back(rational_L_family(Rational(dim.two_lambda(), 2), parse_rational(alpha_text)));
            } else {
                if (n_max_opt->count() == 0) {
                    throw parameter_error("--n-max is required");
                }
                pairs = enumerate_integer_exponent_pairs(n_max);
            }
            OutputTarget target(out_path, out);
            write_pairs(*target.stream, pairs, format);
        } else if (solve->parsed()) {
            const GreenParameter p = make_parameter(solve_n, solve_a, solve_L);
            const auto prob = BiharmonicProblem::make(p, read_rhs(rhs_path, solve_n), project);
            json doc;
            ZonalFunction u = ZonalFunction::zero(prob.dim(), 0);
            if (via == "spectral") {
                u = solve_spectral(prob);
            } else {
                const GreenMethod m = green_name.empty() ? default_convolution_method(p) : parse_green_method(green_name);
                u = solve_by_convolution(prob, m);
                doc["green"] = std::string(to_string(m));
            }
            doc["n"] = solve_n;
            doc["a"] = p.a();
            doc["lmax"] = u.l_max();
            doc["coeffs"] = std::vector<double>(u.coeffs().begin(), u.coeffs().end());
            doc["via"] = via;
            doc["projected_resonant"] = prob.resonant_projection();
            if (verify_h) {
                const double h = *verify_h;
                if (!(h > 0.0 && h <= 0.02)) {
                    throw parameter_error("--verify-fd step must lie in (0, 0.02]");
                }
                const auto grid = residual_grid(h);
                const double r1 = residual(prob, u, grid, h);
                const double r2 = residual(prob, u, grid, 2.0 * h);
                doc["verify_fd"] = {{"h", h},
                                    {"residual", r1},
                                    {"residual_2h", r2},
                                    {"order", std::log2(r2 / r1)},
                                    {"grid", grid}};
            }
            doc["version"] = version_string();
            OutputTarget target(out_path, out);
            *target.stream << doc.dump(2) << '\n';
        }
    } catch (const resonance_error& e) {
        err << "resonance violation: " << e.what() << '\n';
        return resonance_violation;
    } catch (const quadrature_error& e) {
        err << "quadrature failure: " << e.what() << '\n';
        return quadrature_failure;
    } catch (const divergence_error& e) {
        err << "divergence: " << e.what() << '\n';
        return parameter_failure;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << '\n';
        return parameter_failure;
    } catch (const std::domain_error& e) {
        err << "parameter error: " << e.what() << '\n';
        return parameter_failure;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return ok;
}

}  // namespace spheregreen::cli
