#include "hypertel/bounds.hpp"

#include <cmath>
#include <limits>

namespace hypertel {

long order_bound(const ProperTerm& term) { return shape_params(term).nu; }

Rat chen_degree_threshold(const ProperTerm& term, long r) {
    ShapeParams sp = shape_params(term);
    if (r < sp.nu)
        fail(ErrorCode::OrderTooSmall, "degree threshold requires order at least nu");
    Int mu_abs = abs_int(Int(sp.mu));
    Rat numer = Rat(Int(sp.theta) * sp.nu - 1) * r +
                Rat(sp.nu) * (Int(2) * sp.delta + mu_abs + 3 - (1 + mu_abs) * sp.nu) / 2 - 1;
    return numer / Rat(r - sp.nu + 1);
}

namespace {

struct BoundFactors {
    std::vector<std::pair<Int, long>> powers; // (base, exponent)
};

BoundFactors theorem1_factors(const ProperTerm& term, HeightVariant variant) {
    ShapeParams sp = shape_params(term);
    long nu = sp.nu, th = sp.theta, de = sp.delta;
    long fact_exp = (variant == HeightVariant::Derivation) ? nu + 2 : nu + 1;
    BoundFactors f;
    f.powers.push_back({std::max(pow_int(term.x, nu), Int(term.y + 1)), 1});
    f.powers.push_back({term.p.norm(), nu + 1});
    f.powers.push_back({factorial(de + th * nu + 1), fact_exp});
    f.powers.push_back({Int(nu + 1), de * (nu + 1)});
    f.powers.push_back({term.y + 1, de + (th - 1) * nu + 1});
    f.powers.push_back({factorial(de), 2 * (nu + 1)});
    f.powers.push_back({term.x, nu * nu});
    f.powers.push_back({Int(de + th * nu + 1), de + (th + de + 2) * nu + (th - 1) * nu * nu});
    f.powers.push_back({2 * Int(nu + 2) * sp.omega - 2, (de + th + 1) * nu + (2 * th - 1) * nu * nu});
    return f;
}

} // namespace

Int theorem1_height_bound(const ProperTerm& term, HeightVariant variant) {
    Int v(1);
    for (const auto& [base, exp] : theorem1_factors(term, variant).powers)
        v *= pow_int(base, exp);
    return v;
}

double theorem1_height_ln(const ProperTerm& term, HeightVariant variant) {
    double v = 0.0;
    for (const auto& [base, exp] : theorem1_factors(term, variant).powers) {
        if (base == 0) return -std::numeric_limits<double>::infinity();
        v += static_cast<double>(exp) * ln_of(base);
    }
    return v;
}

double remark3_exponent(const ProperTerm& term) {
    ShapeParams sp = shape_params(term);
    if (sp.omega < 2)
        fail(ErrorCode::OmegaTooSmall, "height-growth estimate needs Omega >= 2");
    long m = static_cast<long>(term.factors_of(Role::A).size());
    double momega = static_cast<double>(m) * mpz_get_d(sp.omega.get_mpz_t());
    return 64.0 * momega * momega * momega * std::log(mpz_get_d(sp.omega.get_mpz_t()));
}

BoundReport bound_report(const ProperTerm& term, long r, HeightVariant variant) {
    BoundReport rep;
    ShapeParams sp = shape_params(term);
    rep.order_bound = sp.nu;
    rep.degree_threshold = chen_degree_threshold(term, r);
    rep.theorem1_height = theorem1_height_bound(term, variant);
    rep.theorem1_ln = theorem1_height_ln(term, variant);
    if (sp.omega >= 2) {
        rep.remark3_defined = true;
        rep.remark3 = remark3_exponent(term);
    }
    return rep;
}

} // namespace hypertel
