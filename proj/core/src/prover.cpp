#include "hypertel/prover.hpp"

#include <algorithm>
#include <cctype>

#include "hypertel/bounds.hpp"

namespace hypertel {

std::vector<Int> integer_roots(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "every integer is a root of zero");
    const auto& c = p.coeffs();
    size_t e = 0;
    while (c[e] == 0) ++e;

    std::vector<Int> roots;
    if (e > 0) roots.push_back(0);

    std::vector<Int> shifted(c.begin() + e, c.end());
    if (shifted.size() <= 1) return roots;
    Int content = 0;
    for (const auto& a : shifted) content = gcd_int(content, a);
    for (auto& a : shifted) a /= content;
    UniPoly q(std::move(shifted));

    Int t = abs_int(q.coeff(0));
    std::vector<Int> candidates;
    for (Int i = 1; i * i <= t; ++i) {
        if (t % i != 0) continue;
        candidates.push_back(i);
        candidates.push_back(t / i);
    }
    for (const auto& cand : candidates) {
        if (q.eval(cand) == 0) roots.push_back(cand);
        if (q.eval(-cand) == 0) roots.push_back(-cand);
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int leading_root_bound(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "no root bound for the zero polynomial");
    return p.height();
}

namespace {

Int signed_literal(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return int_from_string(s);
}

} // namespace

AffineBound parse_affine(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(ErrorCode::HypothesisViolation, "empty affine bound");

    size_t pos = t.find('n');
    if (pos == std::string::npos) return {Int(0), signed_literal(t)};

    std::string head = t.substr(0, pos);
    std::string tail = t.substr(pos + 1);
    if (!head.empty() && head.back() == '*') head.pop_back();
    Int slope;
    if (head.empty() || head == "+")
        slope = 1;
    else if (head == "-")
        slope = -1;
    else
        slope = signed_literal(head);
    Int offset = 0;
    if (!tail.empty()) {
        if (tail[0] != '+' && tail[0] != '-')
            fail(ErrorCode::HypothesisViolation, "affine bound must look like a*n+b: " + s);
        offset = signed_literal(tail);
    }
    return {slope, offset};
}

Rat exact_sum(const ProperTerm& term, const Int& n, const SupportWindow& window) {
    Int klo = window.k_lo(n), khi = window.k_hi(n);
    for (long t = 1; t <= 3; ++t) {
        for (const Int& edge : {Int(klo - t), Int(khi + t)}) {
            TermValue v = eval_term(term, n, edge);
            if (!v.defined() || !v.is_zero())
                fail(ErrorCode::WindowViolation,
                     "support leaks past the declared window at n=" + int_to_string(n) +
                         ", k=" + int_to_string(edge));
        }
    }
    Rat sum(0);
    for (Int k = klo; k <= khi; ++k) {
        TermValue v = eval_term(term, n, k);
        if (!v.defined())
            fail(ErrorCode::SingularTerm, "undefined summand at n=" + int_to_string(n) +
                                              ", k=" + int_to_string(k));
        if (v.kind == TermValue::Kind::Rational) sum += v.value;
    }
    return sum;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Disproven: return "Disproven";
    case Verdict::Inapplicable: return "Inapplicable";
    }
    return "Inapplicable";
}

namespace {

std::string point_str(const Int& n, const Int& k) {
    return "(n=" + int_to_string(n) + ", k=" + int_to_string(k) + ")";
}

// The value of C(n,k)h(n,k): factored certificate times the summand where
// both are defined, else the Gamma-quotient normal form, which extends the
// product across poles of C cancelled by zeros of h.
std::optional<Rat> certified_value(const ProperTerm& term, const Certificate& cert, const Int& n,
                                   const Int& k) {
    TermValue hv = eval_term(term, n, k);
    if (hv.defined()) {
        if (auto cv = eval_certificate(cert, n, k)) return *cv * hv.value;
    }
    return eval_certified_product(term, cert, n, k);
}

// One row of the telescoping audit: over the union of the shifted windows,
// sum_i l_i(n) h(n+i,k) must equal Ch(n,k+1) - Ch(n,k) pointwise and Ch must
// vanish at both ends of the range.
std::optional<std::string> audit_row(const ProperTerm& term, const CTRelation& rel,
                                     const SupportWindow& window, long n, long r,
                                     const Deadline* dl) {
    Int nz(n);
    Int K_lo = window.k_lo(nz), K_hi = window.k_hi(nz);
    for (long i = 1; i <= r; ++i) {
        Int row(n + i);
        K_lo = std::min(K_lo, window.k_lo(row));
        K_hi = std::max(K_hi, window.k_hi(row));
    }

    std::vector<Int> lv;
    lv.reserve(static_cast<size_t>(r) + 1);
    for (long i = 0; i <= r; ++i) lv.push_back(rel.ell[static_cast<size_t>(i)].eval(nz));

    auto prev = certified_value(term, rel.certificate, nz, K_lo);
    if (!prev || *prev != 0)
        return "certificate product does not vanish below the window at " + point_str(nz, K_lo);

    for (Int k = K_lo; k <= K_hi; ++k) {
        check_deadline(dl, "telescoping audit");
        Rat lhs(0);
        for (long i = 0; i <= r; ++i) {
            if (lv[static_cast<size_t>(i)] == 0) continue;
            TermValue hv = eval_term(term, Int(n + i), k);
            if (!hv.defined())
                return "summand undefined at " + point_str(Int(n + i), k);
            if (hv.kind == TermValue::Kind::Rational)
                lhs += Rat(lv[static_cast<size_t>(i)]) * hv.value;
        }
        auto cur = certified_value(term, rel.certificate, nz, k + 1);
        if (!cur)
            return "certificate product undefined at " + point_str(nz, Int(k + 1));
        if (lhs != *cur - *prev)
            return "telescoping relation fails at " + point_str(nz, k);
        prev = cur;
    }
    if (*prev != 0)
        return "certificate product does not vanish above the window at " +
               point_str(nz, Int(K_hi + 1));
    return std::nullopt;
}

} // namespace

ProofReport prove_identity(const ProperTerm& term, const SupportWindow& window,
                           const Rat& rhs_constant, const Deadline* dl) {
    CTRelation rel = solve_minimal(term, dl);
    long r = effective_order(rel);
    long d = 0;
    for (long i = 0; i <= r; ++i)
        d = std::max(d, rel.ell[static_cast<size_t>(i)].degree());

    auto roots = integer_roots(rel.ell[static_cast<size_t>(r)]);
    Int n0 = roots.empty() ? Int(0) : roots.back();
    long n0l = to_long_checked(n0, "greatest root of the leading coefficient");
    long N = std::max(r + d + 1, r + n0l + 1);

    ProofReport rep;
    rep.r = r;
    rep.d = d;
    rep.n0 = n0;
    rep.height_bound_ln = theorem1_height_ln(term, HeightVariant::Theorem);

    for (long n = 0; n <= N; ++n) {
        check_deadline(dl, "prover sum sweep");
        Rat s = exact_sum(term, Int(n), window);
        rep.points_checked = n + 1;
        if (s != rhs_constant) {
            rep.verdict = Verdict::Disproven;
            rep.counterexample = Int(n);
            return rep;
        }
    }

    for (long n = 0; n <= N; ++n) {
        if (auto why = audit_row(term, rel, window, n, r, dl)) {
            rep.verdict = Verdict::Inapplicable;
            rep.reason = *why;
            return rep;
        }
    }

    rep.verdict = Verdict::Proven;
    return rep;
}

} // namespace hypertel
