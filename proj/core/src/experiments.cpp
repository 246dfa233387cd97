#include "hypertel/experiments.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <limits>
#include <thread>

#include "hypertel/bounds.hpp"

namespace hypertel {

namespace {

int worker_count(int requested, size_t work) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("HYPERTEL_THREADS")) t = std::atoi(env);
        if (t <= 0) t = 1;
    }
    if (static_cast<size_t>(t) > work) t = static_cast<int>(work);
    return t < 1 ? 1 : t;
}

} // namespace

std::vector<HeightRecord> run_height_experiment(long omega_max, const ExperimentOptions& opts) {
    if (omega_max < 1) fail(ErrorCode::InvalidOmega, "omega_max must be at least 1");
    const long cap =
        opts.omega_cap > 0 ? opts.omega_cap : (opts.mode == ExperimentMode::Minimal ? 8 : 2);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<HeightRecord> records(static_cast<size_t>(omega_max));
    for (long w = 1; w <= omega_max; ++w) {
        HeightRecord& rec = records[static_cast<size_t>(w - 1)];
        rec.omega = w;
        rec.ln_bound = theorem1_height_ln(family_h_omega(w), HeightVariant::Theorem);
        if (w > cap) {
            rec.H = nan;
            rec.timed_out = true;
        }
    }

    std::vector<long> work;
    for (long w = 1; w <= std::min(omega_max, cap); ++w) work.push_back(w);
    if (work.empty()) return records;

    std::atomic<size_t> cursor{0};
    std::vector<std::exception_ptr> errors(work.size());
    auto runner = [&] {
        for (;;) {
            size_t j = cursor.fetch_add(1);
            if (j >= work.size()) return;
            long w = work[j];
            HeightRecord& rec = records[static_cast<size_t>(w - 1)];
            auto t0 = std::chrono::steady_clock::now();
            try {
                ProperTerm term = family_h_omega(w);
                Deadline dl = Deadline::in_ms(opts.per_omega_timeout_ms);
                CTRelation rel = opts.mode == ExperimentMode::Minimal
                                     ? solve_minimal(term, &dl)
                                     : solve_nonminimal(term, &dl);
                rec.r = effective_order(rel);
                rec.d = rel.degree;
                rec.H = height_of(rel);
                rec.escalations = rel.escalations;
            } catch (const Error& e) {
                if (e.code() == ErrorCode::Timeout) {
                    rec.r = -1;
                    rec.d = -1;
                    rec.H = nan;
                    rec.timed_out = true;
                } else {
                    errors[j] = std::current_exception();
                }
            } catch (...) {
                errors[j] = std::current_exception();
            }
            rec.runtime_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        }
    };

    int threads = worker_count(opts.threads, work.size());
    if (threads == 1) {
        runner();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(runner);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return records;
}

const char* fit_model_name(FitModel m) {
    switch (m) {
    case FitModel::M1: return "M1";
    case FitModel::M2: return "M2";
    case FitModel::M3: return "M3";
    case FitModel::M4: return "M4";
    }
    return "M1";
}

namespace {

void model_basis(FitModel model, double w, double out[3]) {
    double g = 1.0;
    switch (model) {
    case FitModel::M1: g = std::log(w); break;
    case FitModel::M2: g = 1.0; break;
    case FitModel::M3: g = std::log(w) / w; break;
    case FitModel::M4: g = 1.0 / w; break;
    }
    out[0] = g;
    out[1] = g / w;
    out[2] = g / (w * w);
}

Rat det3(const Rat m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

FitResult least_squares_fit(const std::vector<std::pair<double, double>>& points, FitModel model) {
    if (points.size() < 3)
        fail(ErrorCode::HypothesisViolation, "least squares needs at least 3 points");
    for (const auto& [w, y] : points)
        if (!std::isfinite(w) || !std::isfinite(y) || w < 1.0)
            fail(ErrorCode::HypothesisViolation, "sample points must be finite with omega >= 1");
    if (model == FitModel::M1 || model == FitModel::M3) {
        bool weighted = false;
        for (const auto& [w, y] : points)
            if (w >= 2.0) weighted = true;
        if (!weighted)
            fail(ErrorCode::HypothesisViolation,
                 "log-weighted models need a sample point with omega >= 2");
    }

    Rat xtx[3][3], xty[3];
    std::vector<std::array<Rat, 3>> rows;
    std::vector<Rat> ys;
    rows.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [w, y] : points) {
        double b[3];
        model_basis(model, w, b);
        std::array<Rat, 3> rb{Rat(b[0]), Rat(b[1]), Rat(b[2])};
        Rat ry(y);
        for (int i = 0; i < 3; ++i) {
            xty[i] += rb[static_cast<size_t>(i)] * ry;
            for (int j = 0; j < 3; ++j)
                xtx[i][j] += rb[static_cast<size_t>(i)] * rb[static_cast<size_t>(j)];
        }
        rows.push_back(std::move(rb));
        ys.push_back(std::move(ry));
    }

    Rat det = det3(xtx);
    if (det == 0)
        fail(ErrorCode::RankDeficient, "basis columns are linearly dependent on this sample");

    Rat coef[3];
    for (int c = 0; c < 3; ++c) {
        Rat m[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = (j == c) ? xty[i] : xtx[i][j];
        coef[c] = det3(m) / det;
    }

    Rat rss(0);
    for (size_t p = 0; p < rows.size(); ++p) {
        Rat resid = ys[p];
        for (int j = 0; j < 3; ++j) resid -= coef[j] * rows[p][static_cast<size_t>(j)];
        rss += resid * resid;
    }

    FitResult fit;
    fit.model = model;
    fit.c0 = coef[0].get_d();
    fit.c1 = coef[1].get_d();
    fit.c2 = coef[2].get_d();
    fit.rss = rss.get_d();
    return fit;
}

double fit_eval(const FitResult& fit, double omega) {
    double b[3];
    model_basis(fit.model, omega, b);
    return fit.c0 * b[0] + fit.c1 * b[1] + fit.c2 * b[2];
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    size_t n = std::fwrite(body.data(), 1, body.size(), f);
    bool ok = (n == body.size()) && std::fclose(f) == 0;
    if (!ok) fail(ErrorCode::IoError, "short write to " + path.string());
}

} // namespace

void emit_report(const std::vector<HeightRecord>& records, const std::vector<FitResult>& fits,
                 const std::string& dir) {
    if (records.empty()) fail(ErrorCode::HypothesisViolation, "no records to report");
    std::filesystem::path out(dir);
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create " + dir + ": " + ec.message());

    std::string heights = "omega,r,d,H,H_over_omega3,H_over_omega5,ln_bound,runtime_ms\n";
    for (const auto& rec : records) {
        double w = static_cast<double>(rec.omega);
        double w3 = w * w * w;
        heights += std::to_string(rec.omega) + ',' + std::to_string(rec.r) + ',' +
                   std::to_string(rec.d) + ',' + fmt(rec.H) + ',' + fmt(rec.H / w3) + ',' +
                   fmt(rec.H / (w3 * w * w)) + ',' + fmt(rec.ln_bound) + ',' +
                   fmt(rec.runtime_ms) + '\n';
    }
    write_file(out / "heights.csv", heights);

    std::string ftab = "model,c0,c1,c2,rss\n";
    for (const auto& fit : fits)
        ftab += std::string(fit_model_name(fit.model)) + ',' + fmt(fit.c0) + ',' + fmt(fit.c1) +
                ',' + fmt(fit.c2) + ',' + fmt(fit.rss) + '\n';
    write_file(out / "fits.csv", ftab);

    std::string dat = "# omega H H_over_omega3 H_over_omega5 ln_bound\n";
    for (const auto& rec : records) {
        double w = static_cast<double>(rec.omega);
        double w3 = w * w * w;
        dat += std::to_string(rec.omega) + ' ' + fmt(rec.H) + ' ' + fmt(rec.H / w3) + ' ' +
               fmt(rec.H / (w3 * w * w)) + ' ' + fmt(rec.ln_bound) + '\n';
    }
    write_file(out / "heights.dat", dat);
}

} // namespace hypertel
