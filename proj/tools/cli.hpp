#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spheregreen/green.hpp"

namespace spheregreen::cli {

enum ExitCode : int { ok = 0, parameter_failure = 2, quadrature_failure = 3, resonance_violation = 4 };

struct ThetaGrid {
    double start;
    double stop;
    int count;

    std::vector<double> points() const;
};

/// "start:stop:count" in radians, inclusive endpoints, values in [0, pi].
ThetaGrid parse_theta_grid(const std::string& text);

struct ReportRow {
    double theta;
    std::string method;
    double value;
    double err_estimate;
    double wall_time_ms;
    std::optional<double> max_discrepancy;
};

struct EvaluationReport {
    int n;
    double a;
    std::optional<double> L;
    double tol;
    std::string version;
    std::vector<ReportRow> rows;
};

struct EvalRequest {
    int n;
    std::optional<double> a;
    std::optional<double> L;
    ThetaGrid grid;
    std::string method = "series";
    double tol = 1e-8;
    int l_max = 10000;
    std::optional<double> abel_r;
};

/// Rows sorted by (theta, method); with method "all" every applicable route is
/// evaluated and each row carries the largest pairwise discrepancy at its theta.
EvaluationReport run_eval(const EvalRequest& req);

void write_csv(std::ostream& os, const EvaluationReport& report);
void write_json(std::ostream& os, const EvaluationReport& report);

/// SPHERE_GREEN_THREADS, 0 or unset meaning hardware concurrency.
unsigned worker_count();

std::string version_string();

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spheregreen::cli
