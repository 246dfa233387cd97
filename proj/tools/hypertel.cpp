#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypertel/bounds.hpp"
#include "hypertel/experiments.hpp"
#include "hypertel/modular.hpp"
#include "hypertel/prover.hpp"
#include "hypertel/relation_io.hpp"
#include "hypertel/term_io.hpp"

using nlohmann::json;
using namespace hypertel;

namespace {

struct Options {
    std::string term_path;
    std::string relation_path;
    std::string out;
    bool as_json = false;
    long timeout_s = 300;
    long grid = 5;
    long r = -1;
    std::string variant = "theorem";
    int prime_bits = 30;
    int stability = 2;
    std::vector<uint64_t> forced_primes;
    std::string klo, khi;
    std::string rhs = "1";
    std::string family = "h-omega";
    long max_omega = 3;
    std::string mode = "minimal";
    long cap = 0;
    std::string fit_in;
    std::string column = "H_over_omega3";
    std::string model = "M1";
};

Deadline deadline_of(const Options& o) { return Deadline::in_ms(o.timeout_s * 1000); }

void emit(const Options& o, const json& j, const std::string& text) {
    std::string body = o.as_json ? j.dump(2) + "\n" : text;
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(o.out, std::ios::binary);
    if (!os || !(os << body))
        fail(ErrorCode::IoError, "cannot write " + o.out);
}

json relation_json(const CTRelation& rel) { return json::parse(relation_to_json_text(rel)); }

int cmd_shape(const Options& o) {
    ShapeParams sp = shape_params(term_from_file(o.term_path));
    json j{{"nu", sp.nu},     {"theta", sp.theta}, {"delta", sp.delta},
           {"lambda", sp.lambda}, {"mu", sp.mu},   {"Omega", int_to_string(sp.omega)}};
    std::ostringstream os;
    os << "nu=" << sp.nu << " theta=" << sp.theta << " delta=" << sp.delta
       << " lambda=" << sp.lambda << " mu=" << sp.mu << " Omega=" << sp.omega.get_str() << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_telescope(const Options& o, bool minimal) {
    ProperTerm term = term_from_file(o.term_path);
    Deadline dl = deadline_of(o);
    CTRelation rel = minimal ? solve_minimal(term, &dl) : solve_nonminimal(term, &dl);
    json j = relation_json(rel);
    j["height"] = height_of(rel);
    if (!minimal) {
        j["escalations"] = rel.escalations;
        j["unknowns"] = rel.unknowns;
        j["equations"] = rel.equations;
    }
    std::ostringstream os;
    os << "L = " << operator_str(rel) << "\n"
       << "Y = " << rel.Y.str() << "\n"
       << "order " << effective_order(rel) << ", degree " << rel.degree << ", height "
       << height_of(rel) << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_verify(const Options& o) {
    ProperTerm term = term_from_file(o.term_path);
    CTRelation rel = relation_from_file(term, o.relation_path);
    long pass = 0, failcnt = 0, skip = 0;
    std::vector<std::pair<Int, Int>> points;
    for (long n = 0; n <= o.grid; ++n)
        for (long k = 0; k <= o.grid; ++k) points.emplace_back(n, k);
    for (const auto& rep : telescoping_check(term, rel, points)) {
        if (rep.status == PointStatus::Pass) ++pass;
        else if (rep.status == PointStatus::Fail) ++failcnt;
        else ++skip;
    }
    bool identity = verify_relation(term, rel);
    json j{{"identity", identity},
           {"grid", o.grid},
           {"points_pass", pass},
           {"points_fail", failcnt},
           {"points_skipped", skip}};
    std::ostringstream os;
    os << "identity " << (identity ? "holds" : "FAILS") << "; grid [0," << o.grid << "]^2: "
       << pass << " pass, " << failcnt << " fail, " << skip << " skipped\n";
    emit(o, j, os.str());
    return failcnt == 0 && identity ? 0 : 1;
}

int cmd_bounds(const Options& o) {
    ProperTerm term = term_from_file(o.term_path);
    ShapeParams sp = shape_params(term);
    long r = o.r >= 0 ? o.r : sp.nu;
    HeightVariant variant =
        o.variant == "derivation" ? HeightVariant::Derivation : HeightVariant::Theorem;
    BoundReport rep = bound_report(term, r, variant);
    json j{{"order_bound", rep.order_bound},
           {"degree_threshold", rep.degree_threshold.get_str()},
           {"theorem1_height", int_to_string(rep.theorem1_height)},
           {"theorem1_ln", rep.theorem1_ln}};
    if (rep.remark3_defined) j["remark3_exponent"] = rep.remark3;
    std::ostringstream os;
    os << "order bound nu = " << rep.order_bound << "\n"
       << "degree threshold at r=" << r << ": " << rep.degree_threshold.get_str() << "\n"
       << "height bound (" << o.variant << "): " << int_to_string(rep.theorem1_height)
       << " (ln = " << rep.theorem1_ln << ")\n";
    if (rep.remark3_defined) os << "asymptotic height exponent: " << rep.remark3 << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_modular(const Options& o) {
    ProperTerm term = term_from_file(o.term_path);
    ModularPolicy policy;
    policy.start_bits = o.prime_bits;
    policy.stability_rounds = o.stability;
    policy.forced_primes = o.forced_primes;
    Deadline dl = deadline_of(o);
    ModularResult res = modular_telescoper(term, policy, &dl);
    json j = relation_json(res.relation);
    json primes = json::array();
    for (uint64_t p : res.report.primes_used) primes.push_back(p);
    j["report"] = json{{"prime_count", res.report.prime_count},
                       {"unlucky_count", res.report.unlucky_count},
                       {"resets", res.report.resets},
                       {"smallest_prime", res.report.smallest_prime},
                       {"height", res.report.height},
                       {"predicted_primes", res.report.predicted_primes},
                       {"primes_used", primes}};
    std::ostringstream os;
    os << "L = " << operator_str(res.relation) << "\n"
       << res.report.prime_count << " primes (" << res.report.unlucky_count << " unlucky, "
       << res.report.resets << " resets), height " << res.report.height << ", predicted "
       << res.report.predicted_primes << "\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_prove(const Options& o) {
    ProperTerm term = term_from_file(o.term_path);
    SupportWindow window{parse_affine(o.klo), parse_affine(o.khi)};
    Rat rhs(int_from_string(o.rhs));
    Deadline dl = deadline_of(o);
    ProofReport rep = prove_identity(term, window, rhs, &dl);
    json j{{"verdict", verdict_name(rep.verdict)},
           {"r", rep.r},
           {"d", rep.d},
           {"n0", int_to_string(rep.n0)},
           {"points_checked", rep.points_checked},
           {"height_bound_ln", rep.height_bound_ln}};
    if (rep.counterexample) j["counterexample"] = int_to_string(*rep.counterexample);
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    std::ostringstream os;
    os << verdict_name(rep.verdict);
    if (rep.counterexample) os << " at n = " << int_to_string(*rep.counterexample);
    if (!rep.reason.empty()) os << " (" << rep.reason << ")";
    os << "; order " << rep.r << ", degree " << rep.d << ", n0 = " << int_to_string(rep.n0)
       << ", " << rep.points_checked << " points checked\n";
    emit(o, j, os.str());
    return 0;
}

int cmd_experiment(const Options& o) {
    if (o.family != "h-omega") fail(ErrorCode::HypothesisViolation, "unknown family " + o.family);
    ExperimentOptions opts;
    opts.mode = o.mode == "nonminimal" ? ExperimentMode::Nonminimal : ExperimentMode::Minimal;
    opts.omega_cap = o.cap;
    opts.per_omega_timeout_ms = o.timeout_s * 1000;
    auto records = run_height_experiment(o.max_omega, opts);
    emit_report(records, {}, o.out);
    std::cout << "wrote " << records.size() << " rows to " << o.out << "/heights.csv\n";
    return 0;
}

std::vector<std::pair<double, double>> read_column(const std::string& path,
                                                   const std::string& column) {
    std::ifstream is(path);
    if (!is) fail(ErrorCode::IoError, "cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) fail(ErrorCode::IoError, "empty CSV " + path);
    std::vector<std::string> headers;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) headers.push_back(cell);
    long omega_col = -1, value_col = -1;
    for (size_t i = 0; i < headers.size(); ++i) {
        if (headers[i] == "omega") omega_col = static_cast<long>(i);
        if (headers[i] == column) value_col = static_cast<long>(i);
    }
    if (omega_col < 0 || value_col < 0)
        fail(ErrorCode::IoError, "column " + column + " not present in " + path);
    std::vector<std::pair<double, double>> points;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (static_cast<long>(cells.size()) <= std::max(omega_col, value_col)) continue;
        try {
            double w = std::stod(cells[static_cast<size_t>(omega_col)]);
            double v = std::stod(cells[static_cast<size_t>(value_col)]);
            if (std::isfinite(w) && std::isfinite(v)) points.emplace_back(w, v);
        } catch (const std::exception&) {
            fail(ErrorCode::IoError, "malformed CSV row: " + line);
        }
    }
    return points;
}

int cmd_fit(const Options& o) {
    FitModel model;
    if (o.model == "M1") model = FitModel::M1;
    else if (o.model == "M2") model = FitModel::M2;
    else if (o.model == "M3") model = FitModel::M3;
    else if (o.model == "M4") model = FitModel::M4;
    else fail(ErrorCode::HypothesisViolation, "unknown model " + o.model);
    auto points = read_column(o.fit_in, o.column);
    FitResult fit = least_squares_fit(points, model);
    json j{{"model", fit_model_name(fit.model)},
           {"c0", fit.c0},
           {"c1", fit.c1},
           {"c2", fit.c2},
           {"rss", fit.rss},
           {"points", points.size()}};
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: c0=%.12g c1=%.12g c2=%.12g rss=%.12g (%zu points)\n",
                  fit_model_name(fit.model), fit.c0, fit.c1, fit.c2, fit.rss, points.size());
    emit(o, j, buf);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Creative telescoping for proper hypergeometric terms"};
    app.require_subcommand(1);
    app.add_option("--timeout", o.timeout_s, "per-task wall clock limit, seconds")
        ->default_val(300);

    auto add_term = [&](CLI::App* cmd) {
        cmd->add_option("--term", o.term_path, "term JSON file")->required();
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.as_json, "machine-readable output");
        cmd->add_option("--out", o.out, "write output to a file");
    };

    CLI::App* shape = app.add_subcommand("shape", "shape parameters of a term");
    add_term(shape);
    add_json(shape);

    CLI::App* telescope = app.add_subcommand("telescope", "compute a telescoping relation");
    telescope->require_subcommand(1);
    CLI::App* tmin = telescope->add_subcommand("min", "order-nu ansatz");
    CLI::App* tnon = telescope->add_subcommand("nonmin", "order-2nu integer ansatz");
    for (CLI::App* cmd : {tmin, tnon}) {
        add_term(cmd);
        add_json(cmd);
    }

    CLI::App* verify = app.add_subcommand("verify", "check a stored relation against a term");
    add_term(verify);
    verify->add_option("--relation", o.relation_path, "relation JSON file")->required();
    verify->add_option("--grid", o.grid, "pointwise check on [0,N]^2")->default_val(5);
    add_json(verify);

    CLI::App* bounds = app.add_subcommand("bounds", "order, degree and height bounds");
    add_term(bounds);
    bounds->add_option("--r", o.r, "order for the degree threshold (default nu)");
    bounds->add_option("--variant", o.variant, "theorem|derivation")
        ->check(CLI::IsMember({"theorem", "derivation"}));
    add_json(bounds);

    CLI::App* modular = app.add_subcommand("modular", "CRT telescoper with per-prime solves");
    add_term(modular);
    modular->add_option("--prime-bits", o.prime_bits, "primes descend from 2^bits")
        ->default_val(30);
    modular->add_option("--stability", o.stability, "identical reconstructions required")
        ->default_val(2);
    modular->add_option("--force-prime", o.forced_primes, "primes tried before the schedule");
    add_json(modular);

    CLI::App* prove = app.add_subcommand("prove", "two-line identity proof, sum = rhs");
    add_term(prove);
    prove->add_option("--klo", o.klo, "lower support bound, e.g. \"0\"")->required();
    prove->add_option("--khi", o.khi, "upper support bound, e.g. \"n\"")->required();
    prove->add_option("--rhs", o.rhs, "right-hand constant")->default_val("1");
    add_json(prove);

    CLI::App* experiment = app.add_subcommand("experiment", "height growth on the h_Omega family");
    experiment->add_option("--family", o.family, "term family")->default_val("h-omega");
    experiment->add_option("--max", o.max_omega, "largest Omega")->required();
    experiment->add_option("--mode", o.mode, "minimal|nonminimal")
        ->check(CLI::IsMember({"minimal", "nonminimal"}))
        ->default_val("minimal");
    experiment->add_option("--cap", o.cap, "desk-scale cap override");
    experiment->add_option("--out", o.out, "output directory")->required();

    CLI::App* fit = app.add_subcommand("fit", "least squares against the four model bases");
    fit->add_option("--in", o.fit_in, "heights.csv path")->required();
    fit->add_option("--column", o.column, "value column")->default_val("H_over_omega3");
    fit->add_option("--model", o.model, "M1|M2|M3|M4")
        ->check(CLI::IsMember({"M1", "M2", "M3", "M4"}))
        ->default_val("M1");
    add_json(fit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (shape->parsed()) return cmd_shape(o);
        if (telescope->parsed()) return cmd_telescope(o, tmin->parsed());
        if (verify->parsed()) return cmd_verify(o);
        if (bounds->parsed()) return cmd_bounds(o);
        if (modular->parsed()) return cmd_modular(o);
        if (prove->parsed()) return cmd_prove(o);
        if (experiment->parsed()) return cmd_experiment(o);
        if (fit->parsed()) return cmd_fit(o);
    } catch (const Error& e) {
        json err{{"error", e.code_name()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
