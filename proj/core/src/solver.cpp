#include "hypertel/solver.hpp"

#include <algorithm>
#include <tuple>

namespace hypertel {

namespace {

// columns of R*C(k,j) - Q*S_k(C(k,j)) for j = 0..s
std::vector<BiPoly> certificate_columns(const AZPolys& az, long s) {
    std::vector<BiPoly> cols;
    cols.reserve(s + 1);
    for (long j = 0; j <= s; ++j) {
        BiPoly mono = BiPoly::monomial(1, 0, j, KBasis::Binomial);
        cols.push_back(az.R * mono - az.Q * mono.shift_k_binomial());
    }
    return cols;
}

Int vector_height(const std::vector<UniPoly>& v) {
    Int h(0);
    for (const auto& p : v) h = std::max(h, p.height());
    return h;
}

// smallest (max l-degree, coefficient height, first-nonzero index) among
// kernel vectors with a nonzero telescoper part; nullopt if none qualifies
std::optional<size_t> select_solution(const std::vector<std::vector<UniPoly>>& basis,
                                      size_t ell_count) {
    std::optional<size_t> best;
    std::tuple<long, Int, size_t> best_key;
    for (size_t b = 0; b < basis.size(); ++b) {
        long dmax = -1;
        for (size_t i = 0; i < ell_count; ++i) dmax = std::max(dmax, basis[b][i].degree());
        if (dmax < 0) continue;
        size_t first = 0;
        while (first < basis[b].size() && basis[b][first].is_zero()) ++first;
        std::tuple<long, Int, size_t> key{dmax, vector_height(basis[b]), first};
        if (!best || key < best_key) {
            best = b;
            best_key = key;
        }
    }
    return best;
}

// flip signs so the last nonzero l_i has a positive leading coefficient
void orient(std::vector<UniPoly>& ell, std::vector<UniPoly>& ys) {
    for (size_t i = ell.size(); i-- > 0;) {
        if (ell[i].is_zero()) continue;
        if (ell[i].leading() < 0) {
            for (auto& p : ell) p = -p;
            for (auto& p : ys) p = -p;
        }
        return;
    }
}

} // namespace

CTRelation assemble_relation(const ProperTerm& term, std::vector<UniPoly> ell,
                             std::vector<UniPoly> ys, long r, long s, RelationKind kind) {
    CTRelation rel;
    orient(ell, ys);
    rel.ell = std::move(ell);
    rel.Y = BiPoly::from_k_coeffs(ys, KBasis::Binomial);
    rel.r = r;
    rel.s = s;
    rel.kind = kind;
    rel.certificate = assemble_certificate(term, r, rel.Y);
    for (const auto& p : rel.ell) rel.degree = std::max(rel.degree, p.degree());
    if (!verify_relation(term, rel))
        fail(ErrorCode::InternalInconsistency, "computed relation fails the defining identity");
    return rel;
}

long effective_order(const CTRelation& rel) {
    for (size_t i = rel.ell.size(); i-- > 0;)
        if (!rel.ell[i].is_zero()) return static_cast<long>(i);
    fail(ErrorCode::ZeroOperator, "relation has no nonzero telescoper coefficient");
}

PolyMatrix minimal_system(const ProperTerm& term) {
    ShapeParams sp = shape_params(term);
    long r = sp.nu;
    long s = sp.delta + (sp.theta - 1) * sp.nu;
    AZPolys az = build_az_polys(term, r);
    auto cert_cols = certificate_columns(az, s);

    size_t rows = static_cast<size_t>(sp.delta + sp.theta * sp.nu + 1);
    size_t cols = static_cast<size_t>(r + 1 + s + 1);
    PolyMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        for (long j = 0; j <= r; ++j) m.at(i, j) = az.P[j].k_coeff(i);
        for (long j = 0; j <= s; ++j) m.at(i, r + 1 + j) = cert_cols[j].k_coeff(i);
    }
    return m;
}

CTRelation solve_minimal(const ProperTerm& term, const Deadline* dl) {
    ShapeParams sp = shape_params(term);
    long r = sp.nu;
    long s = sp.delta + (sp.theta - 1) * sp.nu;
    PolyMatrix m = minimal_system(term);
    auto basis = nullspace_poly(m, dl);
    if (basis.empty())
        fail(ErrorCode::InternalInconsistency,
             "order-nu system has full column rank, contradicting its row count");
    auto pick = select_solution(basis, static_cast<size_t>(r + 1));
    if (!pick)
        fail(ErrorCode::DegenerateTerm,
             "every kernel vector has a zero telescoper part (term is rational in n)");
    auto& v = basis[*pick];
    std::vector<UniPoly> ell(v.begin(), v.begin() + r + 1);
    std::vector<UniPoly> ys(v.begin() + r + 1, v.end());
    return assemble_relation(term, std::move(ell), std::move(ys), r, s, RelationKind::Minimal);
}

IntMatrix nonminimal_system(const ProperTerm& term, long r, long d, long s) {
    if (r < 0 || d < 0 || s < 0)
        fail(ErrorCode::HypothesisViolation, "system parameters must be nonnegative");
    ShapeParams sp = shape_params(term);
    AZPolys az = build_az_polys(term, r);
    auto cert_cols = certificate_columns(az, s);

    std::vector<BiPoly> cols;
    cols.reserve((r + 1) * (d + 1) + (s + 1) * (s + d + 1));
    for (long j = 0; j <= r; ++j)
        for (long i = 0; i <= d; ++i)
            cols.push_back(az.P[j].mul_unipoly_n(UniPoly::monomial(1, i)));
    for (long j = 0; j <= s; ++j)
        for (long i = 0; i <= s + d; ++i)
            cols.push_back(cert_cols[j].mul_unipoly_n(UniPoly::monomial(1, i)));

    long dP = sp.delta + r * sp.theta;
    long n_max = std::max(dP + d, sp.nu + s + d);
    long k_max = std::max(dP, sp.nu + s);
    std::vector<std::vector<Int>> rows;
    for (long ni = 0; ni <= n_max; ++ni) {
        for (long ki = 0; ki <= k_max; ++ki) {
            std::vector<Int> row;
            row.reserve(cols.size());
            bool nonzero = false;
            for (const auto& c : cols) {
                row.push_back(c.coeff(ni, ki));
                if (row.back() != 0) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    IntMatrix m(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

CTRelation solve_nonminimal(const ProperTerm& term, const Deadline* dl) {
    ShapeParams sp = shape_params(term);
    long r = 2 * sp.nu;
    long d = 4 * sp.nu * sp.theta;
    long s = std::max(sp.delta + r * sp.theta - sp.nu, 0L);
    for (long round = 0; round < 5; ++round) {
        IntMatrix m = nonminimal_system(term, r, d, s);
        auto basis = nullspace_int(m, dl);
        std::vector<std::vector<UniPoly>> packed;
        packed.reserve(basis.size());
        for (const auto& v : basis) {
            std::vector<UniPoly> w;
            w.reserve(r + 1 + s + 1);
            size_t off = 0;
            for (long j = 0; j <= r; ++j, off += d + 1)
                w.emplace_back(std::vector<Int>(v.begin() + off, v.begin() + off + d + 1));
            for (long j = 0; j <= s; ++j, off += s + d + 1)
                w.emplace_back(std::vector<Int>(v.begin() + off, v.begin() + off + s + d + 1));
            packed.push_back(std::move(w));
        }
        auto pick = select_solution(packed, static_cast<size_t>(r + 1));
        if (pick) {
            auto& w = packed[*pick];
            std::vector<UniPoly> ell(w.begin(), w.begin() + r + 1);
            std::vector<UniPoly> ys(w.begin() + r + 1, w.end());
            CTRelation rel = assemble_relation(term, std::move(ell), std::move(ys), r, s,
                                             RelationKind::Nonminimal);
            rel.escalations = round;
            rel.unknowns = m.cols;
            rel.equations = m.rows;
            return rel;
        }
        d += sp.nu + 1;
    }
    CTRelation rel = solve_minimal(term, dl);
    rel.escalations = 5;
    return rel;
}

bool verify_relation(const ProperTerm& term, const CTRelation& rel) {
    if (rel.ell.size() != static_cast<size_t>(rel.r + 1))
        fail(ErrorCode::HypothesisViolation, "coefficient list does not match the stated order");
    AZPolys az = build_az_polys(term, rel.r);
    BiPoly lhs(KBasis::Binomial);
    for (long i = 0; i <= rel.r; ++i) lhs = lhs + az.P[i].mul_unipoly_n(rel.ell[i]);
    BiPoly rhs = az.Q * rel.Y.shift_k_binomial() - az.R * rel.Y;
    return lhs == rhs;
}

Int max_ell_coeff(const CTRelation& rel) {
    Int h(0);
    for (const auto& p : rel.ell) h = std::max(h, p.height());
    if (h == 0) fail(ErrorCode::ZeroOperator, "telescoper is identically zero");
    return h;
}

double height_of(const CTRelation& rel) { return ln_of(max_ell_coeff(rel)); }

} // namespace hypertel
