#include "hypertel/linalg.hpp"

#include <tuple>

namespace hypertel {

long PolyMatrix::max_degree() const {
    long d = 0;
    for (const auto& e : a) d = std::max(d, std::max(e.degree(), 0L));
    return d;
}

Int PolyMatrix::max_height() const {
    Int h = 0;
    for (const auto& e : a) h = std::max(h, e.height());
    return h;
}

namespace {

struct PolyOps {
    using Elem = UniPoly;
    static bool is_zero(const Elem& e) { return e.is_zero(); }
    static Elem one() { return UniPoly(Int(1)); }
    static Elem mul(const Elem& x, const Elem& y) { return x * y; }
    static Elem sub(const Elem& x, const Elem& y) { return x - y; }
    static Elem div_exact(const Elem& x, const Elem& y) { return UniPoly::divide_exact(x, y); }
    static Elem neg(const Elem& x) { return -x; }
    static std::pair<long, Int> pivot_key(const Elem& e) {
        return {e.degree(), e.height()};
    }
};

struct IntOps {
    using Elem = Int;
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem one() { return Int(1); }
    static Elem mul(const Elem& x, const Elem& y) { return x * y; }
    static Elem sub(const Elem& x, const Elem& y) { return x - y; }
    static Elem div_exact(const Elem& x, const Elem& y) {
        if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()))
            fail(ErrorCode::InternalInconsistency, "inexact division in integer elimination");
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
    }
    static Elem neg(const Elem& x) { return -x; }
    static Int pivot_key(const Elem& e) { return abs_int(e); }
};

} // namespace

void normalize_poly_vector(std::vector<UniPoly>& v) {
    UniPoly g;
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : poly_gcd(g, e);
        if (g.degree() == 0 && g.coeff(0) == 1) break;
    }
    if (g.is_zero()) return;
    for (auto& e : v) e = UniPoly::divide_exact(e, g);
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        if (e.leading() < 0)
            for (auto& f : v) f = -f;
        break;
    }
}

void normalize_int_vector(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& e : v) g = gcd_int(g, e);
    if (g == 0) return;
    for (auto& e : v) {
        Int q;
        mpz_divexact(q.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        e = q;
    }
    for (const auto& e : v) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : v) f = -f;
        break;
    }
}

std::vector<std::vector<UniPoly>> nullspace_poly(const PolyMatrix& m, const Deadline* dl) {
    FractionFreeKernel<PolyOps> elim(m.rows, m.cols, m.a);
    elim.run(dl);
    auto basis = elim.kernel();
    for (auto& v : basis) normalize_poly_vector(v);
    return basis;
}

std::vector<std::vector<Int>> nullspace_int(const IntMatrix& m, const Deadline* dl) {
    FractionFreeKernel<IntOps> elim(m.rows, m.cols, m.a);
    elim.run(dl);
    auto basis = elim.kernel();
    for (auto& v : basis) normalize_int_vector(v);
    return basis;
}

size_t rank_poly(const PolyMatrix& m, const Deadline* dl) {
    FractionFreeKernel<PolyOps> elim(m.rows, m.cols, m.a);
    elim.run(dl);
    return elim.rank();
}

KernelBound kernel_bound(long d0, long d1, const Int& M0, const Int& M1,
                         long m0, long rho) {
    if (rho < m0)
        fail(ErrorCode::HypothesisViolation, "rank below the full-rank block width");
    if (m0 < 1 || d0 < 0 || d1 < 0 || M0 < 0 || M1 < 0)
        fail(ErrorCode::HypothesisViolation, "kernel bound parameters out of range");
    long dmax = std::max(d0, d1);
    KernelBound b;
    b.degree = (m0 - 1) * d0 + (rho - m0) * d1 + dmax;
    Int mmax = std::max(M0, M1);
    b.height = factorial(rho) * pow_int(Int(dmax + 1), rho - 1) * pow_int(M0, m0 - 1) *
               pow_int(M1, rho - m0) * mmax;
    return b;
}

} // namespace hypertel
