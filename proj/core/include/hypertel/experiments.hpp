#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypertel/solver.hpp"

namespace hypertel {

enum class ExperimentMode { Minimal, Nonminimal };

// One measured point of the height-growth experiment on the h_Omega family.
// H is the natural log of the telescoper height; nan marks a timed-out or
// skipped row (r = d = -1 there).
struct HeightRecord {
    long omega = 0;
    long r = -1;
    long d = -1;
    double H = 0.0;
    double ln_bound = 0.0; // ln of the Theorem 1 bound at this shape
    double runtime_ms = 0.0;
    long escalations = 0;
    bool timed_out = false;
};

struct ExperimentOptions {
    ExperimentMode mode = ExperimentMode::Minimal;
    long omega_cap = 0; // 0: default 8 (minimal) or 2 (nonminimal)
    long per_omega_timeout_ms = 300000;
    int threads = 0; // 0: HYPERTEL_THREADS, else 1
};

// Solves h_Omega for Omega = 1..omega_max, one row each, sorted by Omega.
// Rows past the desk-scale cap and per-row timeouts are recorded in the row
// (timed_out, H = nan), never raised. ln_bound is filled for every row.
std::vector<HeightRecord> run_height_experiment(long omega_max,
                                                const ExperimentOptions& opts = {});

// Three-function bases over Omega: a common weight g times {1, 1/w, 1/w^2}
// with g = ln w (M1), 1 (M2), ln w / w (M3), 1/w (M4).
enum class FitModel { M1, M2, M3, M4 };

const char* fit_model_name(FitModel m);

struct FitResult {
    FitModel model = FitModel::M1;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double rss = 0.0;
};

// Ordinary least squares of value against the model basis at the sample
// points (omega, value); the normal equations are formed and solved in exact
// rational arithmetic and only the results are rounded.
FitResult least_squares_fit(const std::vector<std::pair<double, double>>& points, FitModel model);

double fit_eval(const FitResult& fit, double omega);

// Writes heights.csv, fits.csv and a gnuplot-ready heights.dat into dir.
// Byte-deterministic for fixed input; floats carry 12 significant digits.
void emit_report(const std::vector<HeightRecord>& records, const std::vector<FitResult>& fits,
                 const std::string& dir);

} // namespace hypertel
