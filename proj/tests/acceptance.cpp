// Acceptance gate: one check per shipping criterion, each printed as a
// single [PASS]/[FAIL] line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertel/bounds.hpp"
#include "hypertel/experiments.hpp"
#include "hypertel/modular.hpp"
#include "hypertel/prover.hpp"
#include "hypertel/solver.hpp"
#include "test_util.hpp"

using namespace hypertel;
using namespace hypertel::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void run(int idx, const char* name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        report(idx, name, true, detail);
    } catch (const Error& e) {
        report(idx, name, false, std::string(e.code_name()) + ": " + e.what());
    } catch (const std::exception& e) {
        report(idx, name, false, e.what());
    }
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. binomial oracle
std::string criterion_binomial() {
    ProperTerm t = binomial_term();
    auto t0 = Clock::now();
    CTRelation rel = solve_minimal(t);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    require(rel.r == 1 && rel.ell.size() == 2, "ansatz order is not 1");
    require(rel.ell[0] == UniPoly(Int(-2)) && rel.ell[1] == UniPoly(Int(1)),
            "operator is not S_n - 2");
    require(rel.Y == BiPoly::constant(Int(-1), KBasis::Binomial), "Y is not -1");
    require(verify_relation(t, rel), "defining identity fails");
    std::vector<std::pair<Int, Int>> points;
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= 5; ++k) points.emplace_back(n, k);
    long pass = 0;
    for (const auto& rep : telescoping_check(t, rel, points)) {
        require(rep.status != PointStatus::Fail,
                fmt("telescoping fails at n=%s k=%s", rep.n.get_str().c_str(),
                    rep.k.get_str().c_str()));
        if (rep.status == PointStatus::Pass) ++pass;
    }
    require(ms < 1000.0, fmt("took %.1f ms", ms));
    return fmt("L = S_n - 2, %ld grid points pass, %.2f ms", pass, ms);
}

// 2. h_Omega family at desk scale
std::string criterion_h_omega() {
    double prev = -1.0;
    double worst_ms = 0.0;
    for (long omega = 1; omega <= 4; ++omega) {
        ProperTerm t = family_h_omega(omega);
        auto t0 = Clock::now();
        CTRelation rel = solve_minimal(t);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        worst_ms = std::max(worst_ms, ms);
        require(effective_order(rel) == omega + 1,
                fmt("order %ld at Omega=%ld", effective_order(rel), omega));
        require(verify_relation(t, rel), fmt("identity fails at Omega=%ld", omega));
        double h = height_of(rel);
        require(h >= prev, fmt("height drops at Omega=%ld", omega));
        require(max_ell_coeff(rel) <= theorem1_height_bound(t, HeightVariant::Theorem),
                fmt("height bound exceeded at Omega=%ld", omega));
        prev = h;
        require(ms < 300000.0, fmt("Omega=%ld took %.0f ms", omega, ms));
    }
    return fmt("orders 2..5, heights nondecreasing, slowest solve %.1f ms", worst_ms);
}

// 3. height bound calculator
std::string criterion_height_calculator() {
    ProperTerm t = binomial_term();
    Int thm = theorem1_height_bound(t, HeightVariant::Theorem);
    Int der = theorem1_height_bound(t, HeightVariant::Derivation);
    require(thm == 8192, "theorem variant is " + thm.get_str());
    require(der == 16384, "derivation variant is " + der.get_str());
    return "8192 and 16384 on the binomial term";
}

// 4. norm inequality property suites, 1000 cases each
std::string criterion_norm_inequalities() {
    Rng rng(20240001);
    long checked = 0;

    for (int it = 0; it < 1000; ++it) { // conversion
        BiPoly p = rand_bipoly(rng, KBasis::Standard, 3, 6, 1000000);
        long dk = std::max(p.deg_k(), 0L);
        Int cap = factorial(static_cast<unsigned long>(dk));
        require(p.to_binomial().norm() <= cap * cap * p.norm(),
                "conversion bound violated");
        ++checked;
    }
    for (int it = 0; it < 1000; ++it) { // shift
        KBasis basis = (it % 2 == 0) ? KBasis::Standard : KBasis::Binomial;
        BiPoly q = rand_bipoly(rng, basis, 3, 6, 1000000);
        long r = it % 6;
        long dn = std::max(q.deg_n(), 0L);
        require(q.shift_n(Int(r)).norm() <=
                    pow_int(Int(1 + r), static_cast<unsigned long>(dn)) * q.norm(),
                "shift bound violated");
        ++checked;
    }
    for (int it = 0; it < 1000; ++it) { // univariate products
        long m = 2 + static_cast<long>(it % 4);
        UniPoly prod(Int(1));
        Int heights(1);
        long dmax = 0;
        bool zero = false;
        for (long i = 0; i < m; ++i) {
            UniPoly p = rand_unipoly(rng, 6, 1000000);
            if (p.is_zero()) zero = true;
            dmax = std::max(dmax, p.degree());
            heights *= p.height();
            prod = prod * p;
        }
        if (!zero)
            require(prod.height() <=
                        pow_int(Int(dmax + 1), static_cast<unsigned long>(m - 1)) * heights,
                    "product bound violated");
        ++checked;
    }
    for (int it = 0; it < 1000; ++it) { // chained linear multipliers
        BiPoly q = rand_bipoly(rng, KBasis::Binomial, 2, 6, 1000000);
        long m = 1 + static_cast<long>(it % 5);
        Int M(0);
        BiPoly prod = q;
        for (long i = 0; i < m; ++i) {
            Int a = rand_int(rng, -9, 9), b = rand_int(rng, -9, 9), c = rand_int(rng, -9, 9);
            M = std::max(M, std::max(abs_int(a), std::max(abs_int(b), abs_int(c))));
            prod = prod.mul_linear_binomial(a, b, c);
        }
        long dk = std::max(q.deg_k(), 0L);
        Int rise(1);
        for (long i = 0; i < m; ++i) rise *= Int(dk + 2 + i);
        require(prod.norm() <= pow_int(2 * M, static_cast<unsigned long>(m)) * rise * q.norm(),
                "multiplier chain bound violated");
        ++checked;
    }
    return fmt("%ld randomized cases, zero violations", checked);
}

// 5. kernel bound suite, 500 matrices
std::string criterion_kernel_bounds() {
    Rng rng(20240002);
    long done = 0, vectors = 0;
    while (done < 500) {
        size_t rows = 1 + rng() % 5, cols = 2 + rng() % 6;
        PolyMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                long deg = static_cast<long>(rng() % 3);
                std::vector<Int> c(deg + 1);
                for (auto& v : c) v = rand_int(rng, -9, 9);
                m.at(i, j) = UniPoly(std::move(c));
            }
        size_t rho = rank_poly(m);
        if (rho == 0) continue;
        size_t m0 = 1 + rng() % std::min(rho, cols - 1);
        PolyMatrix a0(rows, m0);
        long d0 = 0, d1 = 0;
        Int M0(0), M1(0);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                const UniPoly& e = m.at(i, j);
                if (j < m0) {
                    a0.at(i, j) = e;
                    d0 = std::max(d0, std::max(e.degree(), 0L));
                    M0 = std::max(M0, e.height());
                } else {
                    d1 = std::max(d1, std::max(e.degree(), 0L));
                    M1 = std::max(M1, e.height());
                }
            }
        if (rank_poly(a0) != m0) continue;
        if (M0 == 0 || M1 == 0) continue;
        KernelBound bound =
            kernel_bound(d0, d1, M0, M1, static_cast<long>(m0), static_cast<long>(rho));
        for (const auto& v : nullspace_poly(m)) {
            for (size_t i = 0; i < rows; ++i) {
                UniPoly acc;
                for (size_t j = 0; j < cols; ++j) acc = acc + m.at(i, j) * v[j];
                require(acc.is_zero(), "A*v != 0");
            }
            for (const auto& e : v) {
                require(e.degree() <= bound.degree, "kernel degree bound violated");
                require(e.height() <= bound.height, "kernel height bound violated");
            }
            ++vectors;
        }
        ++done;
    }
    return fmt("500 matrices, %ld kernel vectors within bounds", vectors);
}

// 6. modular pipeline
std::string criterion_modular() {
    long worst = 0;
    const ProperTerm terms[] = {binomial_term(), family_h_omega(1), family_h_omega(2),
                                binomial_squared_term()};
    for (const ProperTerm& t : terms) {
        CTRelation exact = solve_minimal(t);
        ModularResult mod = modular_telescoper(t);
        require(mod.relation.ell == exact.ell && mod.relation.Y == exact.Y,
                "modular and exact answers differ");
        double h = height_of(exact);
        double lp = std::log(static_cast<double>(mod.report.smallest_prime));
        long budget = 2 * static_cast<long>(std::ceil(h / lp)) + 4;
        require(mod.report.prime_count <= budget,
                fmt("%ld primes against budget %ld", mod.report.prime_count, budget));
        worst = std::max(worst, mod.report.prime_count);
    }

    // an injected unlucky prime must not change the answer
    ProperTerm h2 = family_h_omega(2);
    CTRelation exact = solve_minimal(h2);
    ModularPolicy policy;
    policy.forced_primes = {5};
    ModularResult mod = modular_telescoper(h2, policy);
    require(mod.relation.ell == exact.ell && mod.relation.Y == exact.Y,
            "unlucky prime changed the answer");
    require(mod.report.unlucky_count >= 1, "forced prime 5 was not flagged unlucky");
    return fmt("4 terms bit-identical, max %ld primes, unlucky prime survived", worst);
}

// 7. nonminimal solver
std::string criterion_nonminimal() {
    ProperTerm bin = binomial_term();
    CTRelation rel = solve_nonminimal(bin);
    require(rel.r == 2, fmt("binomial ansatz order %ld", rel.r));
    require(verify_relation(bin, rel), "binomial identity fails");
    UniPoly acc;
    Int two(1);
    for (long i = 0; i <= rel.r; ++i) {
        acc = acc + rel.ell[i] * two;
        two *= 2;
    }
    require(acc.is_zero(), "sum l_i(n) 2^i is not the zero polynomial");

    ProperTerm h1 = family_h_omega(1);
    ShapeParams sp = shape_params(h1);
    CTRelation rel1 = solve_nonminimal(h1);
    require(rel1.r == 2 * sp.nu, fmt("h_1 ansatz order %ld", rel1.r));
    require(verify_relation(h1, rel1), "h_1 identity fails");
    require(rel1.escalations > 0 || rel1.degree <= 4 * sp.nu * sp.theta,
            fmt("h_1 degree %ld with no escalation", rel1.degree));
    return fmt("binomial order 2 annihilates 2^n; h_1 order %ld degree %ld", rel1.r,
               rel1.degree);
}

// 8. fit round trip
std::string criterion_fit() {
    struct Case {
        FitModel model;
        double c0, c1, c2;
    };
    const Case cases[] = {
        {FitModel::M1, 1.43, 3.30, -1.66},
        {FitModel::M2, 5.06, -9.22, 4.23},
        {FitModel::M3, 34.8, -167.0, 221.0},
        {FitModel::M4, 58.9, -182.0, 123.0},
    };
    const std::vector<double> ws{2, 3, 5, 8, 13, 21, 34};
    for (const Case& c : cases) {
        FitResult planted{c.model, c.c0, c.c1, c.c2, 0.0};
        std::vector<std::pair<double, double>> pts;
        for (double w : ws) pts.emplace_back(w, fit_eval(planted, w));
        FitResult fit = least_squares_fit(pts, c.model);
        require(std::abs(fit.c0 - c.c0) <= 1e-9 * std::max(1.0, std::abs(c.c0)),
                fmt("%s c0 off by %.3g", fit_model_name(c.model), fit.c0 - c.c0));
        require(std::abs(fit.c1 - c.c1) <= 1e-9 * std::max(1.0, std::abs(c.c1)),
                fmt("%s c1 off by %.3g", fit_model_name(c.model), fit.c1 - c.c1));
        require(std::abs(fit.c2 - c.c2) <= 1e-9 * std::max(1.0, std::abs(c.c2)),
                fmt("%s c2 off by %.3g", fit_model_name(c.model), fit.c2 - c.c2));
    }
    bool degenerate_rejected = false;
    try {
        least_squares_fit({{3, 1.0}, {3, 1.0}, {3, 1.0}, {3, 1.0}}, FitModel::M2);
    } catch (const Error& e) {
        degenerate_rejected = e.code() == ErrorCode::RankDeficient;
    }
    require(degenerate_rejected, "degenerate samples not rejected");
    return "all four models recovered to 1e-9, degenerate samples rejected";
}

// 9. prover
std::string criterion_prover() {
    ProperTerm good = binomial_squared_ratio_term();
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    for (long n = 0; n <= 20; ++n)
        require(exact_sum(good, Int(n), w) == Rat(1), fmt("brute-force sum wrong at n=%ld", n));

    ProofReport rep = prove_identity(good, w, Rat(1));
    require(rep.verdict == Verdict::Proven, "expected Proven, got " +
                                                std::string(verdict_name(rep.verdict)) +
                                                (rep.reason.empty() ? "" : ": " + rep.reason));

    CTRelation rel = solve_minimal(good);
    require(Int(rep.n0) <= leading_root_bound(rel.ell[effective_order(rel)]),
            "n0 exceeds the leading-coefficient root bound");

    TermInput in;
    in.p = BiPoly::linear(Int(1), Int(0), Int(2), KBasis::Standard);
    in.factors = good.factors;
    ProperTerm mutated = normalize(in);
    ProofReport bad = prove_identity(mutated, w, Rat(1));
    require(bad.verdict == Verdict::Disproven, "mutation not disproven");
    require(bad.counterexample.has_value(), "no witness reported");

    CTRelation mrel = solve_minimal(mutated);
    require(Int(bad.n0) <= leading_root_bound(mrel.ell[effective_order(mrel)]),
            "n0 exceeds the bound on the mutated run");
    return fmt("Proven with %ld points; mutation disproven at n=%s", rep.points_checked,
               bad.counterexample->get_str().c_str());
}

// 10. construction audits
std::string criterion_construction_audits() {
    const ProperTerm terms[] = {binomial_term(),  family_h_omega(1),
                                family_h_omega(2), family_h_omega(3),
                                binomial_squared_term(), binomial_squared_ratio_term()};
    long audited = 0;
    for (const ProperTerm& t : terms) {
        ShapeParams sp = shape_params(t);
        for (long r = sp.nu; r <= sp.nu + 1; ++r) {
            AZPolys az = build_az_polys(t, r);
            long s = sp.delta + (sp.theta - 1) * sp.nu;
            AZAudit audit = audit_az_polys(t, az, s);
            require(audit.degrees_ok, "degree bound violated");
            require(audit.p_heights_ok, "P height bound violated");
            require(audit.qr_heights_ok, "Q/R height bound violated");
            audited += static_cast<long>(az.P.size()) + 2;
        }
    }
    return fmt("%ld polynomials audited across %zu terms", audited, std::size(terms));
}

} // namespace

int main() {
    run(1, "binomial telescoper oracle", criterion_binomial);
    run(2, "h_Omega desk-scale family", criterion_h_omega);
    run(3, "height bound calculator", criterion_height_calculator);
    run(4, "norm inequality property suites", criterion_norm_inequalities);
    run(5, "kernel degree/height bounds", criterion_kernel_bounds);
    run(6, "modular pipeline", criterion_modular);
    run(7, "nonminimal solver", criterion_nonminimal);
    run(8, "fit round trip", criterion_fit);
    run(9, "two-line prover", criterion_prover);
    run(10, "construction bound audits", criterion_construction_audits);

    if (failures) {
        std::printf("%d criterion%s failed\n", failures, failures == 1 ? "" : "s");
        return 1;
    }
    std::printf("all 10 criteria pass\n");
    return 0;
}
