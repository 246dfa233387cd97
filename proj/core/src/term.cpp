#include "hypertel/term.hpp"

#include <algorithm>
#include <map>

namespace hypertel {

const char* role_name(Role r) {
    switch (r) {
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::U: return "U";
        case Role::V: return "V";
    }
    return "?";
}

std::vector<GammaFactor> ProperTerm::factors_of(Role r) const {
    std::vector<GammaFactor> out;
    for (const auto& f : factors)
        if (f.role == r) out.push_back(f);
    return out;
}

ProperTerm normalize(const TermInput& input) {
    if (input.p.basis() != KBasis::Standard)
        fail(ErrorCode::InternalInconsistency, "term polynomial must be in the standard basis");
    if (input.p.is_zero())
        fail(ErrorCode::ZeroPolynomial, "term polynomial part is zero");
    if (input.x <= 0 || input.y <= 0)
        fail(ErrorCode::NonpositiveBase, "geometric bases x, y must be positive");
    std::map<Role, std::vector<GammaFactor>> by_role;
    for (const auto& f : input.factors) {
        if (f.n_coef < 0 || f.k_coef < 0 || f.const_coef < 0)
            fail(ErrorCode::NegativeCoefficient,
                 std::string("negative coefficient in ") + role_name(f.role) + "-factor");
        by_role[f.role].push_back(f);
    }
    size_t m = 0;
    for (Role r : {Role::A, Role::B, Role::U, Role::V})
        m = std::max(m, by_role[r].size());
    ProperTerm t;
    t.p = input.p;
    t.x = input.x;
    t.y = input.y;
    t.M = static_cast<long>(m);
    for (Role r : {Role::A, Role::B, Role::U, Role::V}) {
        auto& v = by_role[r];
        while (v.size() < m) v.push_back({r, Int(0), Int(0), Int(1)});
        for (const auto& f : v) t.factors.push_back(f);
    }
    return t;
}

ShapeParams shape_params(const ProperTerm& t) {
    Int sum_ap_vp(0), sum_up_bp(0), sum_ab(0), sum_uv(0), omega(0);
    for (const auto& f : t.factors) {
        omega = std::max(omega, std::max(f.n_coef, std::max(f.k_coef, f.const_coef)));
        switch (f.role) {
            case Role::A:
                sum_ap_vp += f.k_coef;
                sum_ab += f.n_coef;
                break;
            case Role::B:
                sum_up_bp += f.k_coef;
                sum_ab += f.n_coef;
                break;
            case Role::U:
                sum_up_bp += f.k_coef;
                sum_uv += f.n_coef;
                break;
            case Role::V:
                sum_ap_vp += f.k_coef;
                sum_uv += f.n_coef;
                break;
        }
    }
    ShapeParams s;
    s.nu = to_long_checked(std::max(sum_ap_vp, sum_up_bp), "nu");
    s.theta = to_long_checked(std::max(sum_ab, sum_uv), "theta");
    s.delta = std::max<long>(t.p.total_degree(), 0);
    s.lambda = to_long_checked(sum_uv, "lambda");
    s.mu = to_long_checked(sum_ab - sum_uv, "mu");
    s.omega = omega;
    return s;
}

namespace {

// Gamma-argument at an integer point, with the role's k-sign applied.
Int gamma_arg(const GammaFactor& f, const Int& n, const Int& k) {
    Int kk = (f.role == Role::B || f.role == Role::V) ? Int(-f.k_coef) : f.k_coef;
    return f.n_coef * n + kk * k + f.const_coef;
}

Int gamma_at(const Int& t) {
    // t >= 1 guaranteed by callers
    if (!t.fits_ulong_p())
        fail(ErrorCode::Overflow, "Gamma argument too large for exact evaluation");
    return factorial(t.get_ui() - 1);
}

Rat int_power(const Int& base, const Int& e) {
    if (!abs_int(e).fits_ulong_p())
        fail(ErrorCode::Overflow, "exponent too large for exact evaluation");
    unsigned long ae = abs_int(e).get_ui();
    Int p = pow_int(base, ae);
    if (e >= 0) return Rat(p);
    Rat r(Int(1), p);
    r.canonicalize();
    return r;
}

} // namespace

TermValue eval_term(const ProperTerm& t, const Int& n, const Int& k) {
    bool num_pole = false, den_pole = false;
    for (const auto& f : t.factors) {
        Int arg = gamma_arg(f, n, k);
        if (arg <= 0) {
            if (f.role == Role::A || f.role == Role::B)
                num_pole = true;
            else
                den_pole = true;
        }
    }
    if (num_pole) return TermValue::undefined();
    if (den_pole) return TermValue::zero();
    Rat val = t.p.eval(n, k) * int_power(t.x, n) * int_power(t.y, k);
    Int num(1), den(1);
    for (const auto& f : t.factors) {
        Int g = gamma_at(gamma_arg(f, n, k));
        if (f.role == Role::A || f.role == Role::B)
            num *= g;
        else
            den *= g;
    }
    Rat frac(num, den);
    frac.canonicalize();
    return TermValue::rational(val * frac);
}

ProperTerm family_h_omega(long omega) {
    if (omega < 1) fail(ErrorCode::InvalidOmega, "h_Omega requires Omega >= 1");
    TermInput in;
    in.p = BiPoly::constant(Int(1), KBasis::Standard);
    in.factors.push_back({Role::A, Int(0), Int(omega), Int(0)});
    in.factors.push_back({Role::V, Int(omega), Int(1), Int(0)});
    return normalize(in);
}

} // namespace hypertel
