#include "hypertel/az.hpp"

namespace hypertel {

namespace {

// acc *= (an*n + bk*k + c0)(an*n + bk*k + c0+1)...(an*n + bk*k + c0+e-1)
void mul_rising(BiPoly& acc, const Int& an, const Int& bk, const Int& c0, long e) {
    for (long t = 0; t < e; ++t) acc = acc.mul_linear_binomial(an, bk, c0 + t);
}

long as_long(const Int& v) { return to_long_checked(v, "factor exponent"); }

Rat rat_pow(const Int& base, const Int& e) {
    if (e >= 0) return Rat(pow_int(base, as_long(e)));
    if (base == 0) fail(ErrorCode::InternalInconsistency, "0 raised to a negative power");
    return Rat(1) / Rat(pow_int(base, as_long(-e)));
}

} // namespace

std::vector<BiPoly> build_P(const ProperTerm& term, long r) {
    if (r < 0) fail(ErrorCode::NegativeExponent, "ansatz order must be nonnegative");
    BiPoly p_b = term.p.to_binomial();
    std::vector<BiPoly> P;
    P.reserve(r + 1);
    for (long i = 0; i <= r; ++i) {
        BiPoly acc = p_b.shift_n(i) * pow_int(term.x, i);
        for (const auto& f : term.factors_of(Role::A))
            mul_rising(acc, f.n_coef, f.k_coef, f.const_coef, as_long(Int(i) * f.n_coef));
        for (const auto& f : term.factors_of(Role::B))
            mul_rising(acc, f.n_coef, -f.k_coef, f.const_coef, as_long(Int(i) * f.n_coef));
        for (const auto& f : term.factors_of(Role::U))
            mul_rising(acc, f.n_coef, f.k_coef, f.const_coef + Int(i) * f.n_coef,
                       as_long(Int(r - i) * f.n_coef));
        for (const auto& f : term.factors_of(Role::V))
            mul_rising(acc, f.n_coef, -f.k_coef, f.const_coef + Int(i) * f.n_coef,
                       as_long(Int(r - i) * f.n_coef));
        P.push_back(std::move(acc));
    }
    return P;
}

std::pair<BiPoly, BiPoly> build_QR(const ProperTerm& term, long r) {
    if (r < 0) fail(ErrorCode::NegativeExponent, "ansatz order must be nonnegative");
    BiPoly Q = BiPoly::constant(term.y, KBasis::Binomial);
    for (const auto& f : term.factors_of(Role::A))
        mul_rising(Q, f.n_coef, f.k_coef, f.const_coef, as_long(f.k_coef));
    for (const auto& f : term.factors_of(Role::V))
        mul_rising(Q, f.n_coef, -f.k_coef, f.const_coef + Int(r) * f.n_coef - f.k_coef,
                   as_long(f.k_coef));
    BiPoly R = BiPoly::constant(1, KBasis::Binomial);
    for (const auto& f : term.factors_of(Role::U))
        mul_rising(R, f.n_coef, f.k_coef, f.const_coef + Int(r) * f.n_coef - f.k_coef,
                   as_long(f.k_coef));
    for (const auto& f : term.factors_of(Role::B))
        mul_rising(R, f.n_coef, -f.k_coef, f.const_coef, as_long(f.k_coef));
    return {std::move(Q), std::move(R)};
}

AZPolys build_az_polys(const ProperTerm& term, long r) {
    AZPolys az;
    az.P = build_P(term, r);
    std::tie(az.Q, az.R) = build_QR(term, r);
    az.r = r;
    return az;
}

Certificate assemble_certificate(const ProperTerm& term, long r, const BiPoly& Y) {
    if (Y.basis() != KBasis::Binomial)
        fail(ErrorCode::InternalInconsistency, "certificate Y must be in the binomial k-basis");
    Certificate cert;
    cert.Y = Y;
    cert.p_divisor = term.p;
    cert.r = r;
    for (const auto& f : term.factors_of(Role::B)) {
        long e = as_long(f.k_coef);
        if (e != 0) cert.factors.push_back({f.n_coef, -f.k_coef, f.const_coef, e, false});
    }
    for (const auto& f : term.factors_of(Role::U)) {
        long e = as_long(Int(r) * f.n_coef - f.k_coef);
        if (e != 0) cert.factors.push_back({f.n_coef, f.k_coef, f.const_coef, e, true});
    }
    for (const auto& f : term.factors_of(Role::V)) {
        long e = as_long(Int(r) * f.n_coef);
        if (e != 0) cert.factors.push_back({f.n_coef, -f.k_coef, f.const_coef, e, true});
    }
    return cert;
}

std::optional<Rat> eval_certificate(const Certificate& cert, const Int& n, const Int& k) {
    Rat p = cert.p_divisor.eval(n, k);
    if (p == 0) return std::nullopt;
    Rat val = cert.Y.eval(n, k) / p;
    for (const auto& f : cert.factors) {
        Int arg = f.a * n + f.b * k + f.c;
        Rat rf;
        if (!rising_factorial_value(arg, f.exponent, rf)) return std::nullopt;
        if (f.denominator) {
            if (rf == 0) return std::nullopt;
            val /= rf;
        } else {
            val *= rf;
        }
    }
    return val;
}

std::optional<Rat> eval_certified_product(const ProperTerm& term, const Certificate& cert,
                                          const Int& n, const Int& k) {
    long r = cert.r;
    std::vector<Int> num_args, den_args;
    for (const auto& f : term.factors_of(Role::A))
        num_args.push_back(f.n_coef * n + f.k_coef * k + f.const_coef);
    for (const auto& f : term.factors_of(Role::B))
        num_args.push_back(f.n_coef * n - f.k_coef * k + f.const_coef + f.k_coef);
    for (const auto& f : term.factors_of(Role::U))
        den_args.push_back(f.n_coef * n + f.k_coef * k + f.const_coef + Int(r) * f.n_coef -
                           f.k_coef);
    for (const auto& f : term.factors_of(Role::V))
        den_args.push_back(f.n_coef * n - f.k_coef * k + f.const_coef + Int(r) * f.n_coef);
    for (const auto& a : num_args)
        if (a <= 0) return std::nullopt;
    for (const auto& a : den_args)
        if (a <= 0) return Rat(0);
    Rat val = cert.Y.eval(n, k) * rat_pow(term.x, n) * rat_pow(term.y, k);
    for (const auto& a : num_args) val *= Rat(factorial(as_long(a - 1)));
    for (const auto& a : den_args) val /= Rat(factorial(as_long(a - 1)));
    return val;
}

std::vector<PointReport> telescoping_check(const ProperTerm& term,
                                           const std::vector<UniPoly>& ell,
                                           const Certificate& cert,
                                           const std::vector<std::pair<Int, Int>>& points) {
    std::vector<PointReport> reports;
    reports.reserve(points.size());
    for (const auto& [n, k] : points) {
        PointReport rep{n, k, PointStatus::Skipped};
        bool ok = true;
        Rat lhs = 0;
        for (size_t i = 0; i < ell.size(); ++i) {
            TermValue tv = eval_term(term, n + Int(i), k);
            if (!tv.defined()) {
                ok = false;
                break;
            }
            lhs += Rat(ell[i].eval(n)) * tv.value;
        }
        if (ok) {
            TermValue h0 = eval_term(term, n, k);
            TermValue h1 = eval_term(term, n, k + 1);
            auto c0 = eval_certificate(cert, n, k);
            auto c1 = eval_certificate(cert, n, k + 1);
            if (!h0.defined() || !h1.defined() || !c0 || !c1) {
                ok = false;
            } else {
                Rat rhs = *c1 * h1.value - *c0 * h0.value;
                rep.status = (lhs == rhs) ? PointStatus::Pass : PointStatus::Fail;
            }
        }
        reports.push_back(rep);
    }
    return reports;
}

AZAudit audit_az_polys(const ProperTerm& term, const AZPolys& az, long s) {
    ShapeParams sp = shape_params(term);
    long r = az.r;
    AZAudit audit;

    long dP = sp.delta + r * sp.theta;
    audit.degrees_ok = true;
    for (const auto& Pi : az.P)
        if (Pi.total_degree() > dP) audit.degrees_ok = false;
    if (az.Q.total_degree() > sp.nu || az.R.total_degree() > sp.nu) audit.degrees_ok = false;

    Int growth = 2 * Int(r + 2) * sp.omega - 2;
    Int p_bound = term.p.norm() * pow_int(factorial(sp.delta), 2) *
                  pow_int(Int(1 + r), sp.delta) * pow_int(term.x, r) *
                  factorial(sp.delta + sp.theta * r + 1) * pow_int(growth, sp.theta * r);
    audit.p_heights_ok = true;
    for (const auto& Pi : az.P)
        if (Pi.norm() > p_bound) audit.p_heights_ok = false;

    audit.qr_heights_ok = true;
    Int growth_nu = pow_int(growth, sp.nu);
    for (long j = 0; j <= s; ++j) {
        BiPoly mono = BiPoly::monomial(1, 0, j, KBasis::Binomial);
        Int scale = pow_int(Int(j + sp.nu + 1), sp.nu) * growth_nu;
        if ((az.Q * mono.shift_k_binomial()).norm() > term.y * scale) audit.qr_heights_ok = false;
        if ((az.R * mono).norm() > scale) audit.qr_heights_ok = false;
    }
    return audit;
}

} // namespace hypertel
