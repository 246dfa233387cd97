#pragma once

#include <string>
#include <vector>

#include "hypertel/bipoly.hpp"

namespace hypertel {

// Gamma-factor roles. A and U arguments carry +k, B and V carry -k;
// A, B sit in the numerator, U, V in the denominator:
//   A: Gamma(a*n + a'*k + a'')      numerator
//   B: Gamma(b*n - b'*k + b'')      numerator
//   U: Gamma(u*n + u'*k + u'')      denominator
//   V: Gamma(v*n - v'*k + v'')      denominator
enum class Role { A, B, U, V };

const char* role_name(Role r);

struct GammaFactor {
    Role role;
    Int n_coef, k_coef, const_coef; // all nonnegative; sign of k applied per role

    bool operator==(const GammaFactor& o) const {
        return role == o.role && n_coef == o.n_coef && k_coef == o.k_coef &&
               const_coef == o.const_coef;
    }
};

struct TermInput {
    BiPoly p; // standard basis
    Int x{1}, y{1};
    std::vector<GammaFactor> factors;
};

// Normalized proper hypergeometric term
//   h(n,k) = p(n,k) * x^n * y^k * prod_m G(A_m) G(B_m) / (G(U_m) G(V_m)),
// with every role padded to exactly M factors using Gamma(0n+0k+1).
struct ProperTerm {
    BiPoly p; // standard basis, nonzero
    Int x, y; // positive
    std::vector<GammaFactor> factors; // grouped A, B, U, V; M of each
    long M = 0;

    std::vector<GammaFactor> factors_of(Role r) const;
};

// Validates and pads. Raises NegativeCoefficient, ZeroPolynomial,
// NonpositiveBase.
ProperTerm normalize(const TermInput& input);

struct ShapeParams {
    long nu = 0;     // max{sum(a'+v'), sum(u'+b')}
    long theta = 0;  // max{sum(a+b), sum(u+v)}
    long delta = 0;  // total degree of p
    long lambda = 0; // sum(u+v)
    long mu = 0;     // sum(a+b-u-v)
    Int omega;       // max coefficient magnitude over all factors
};

ShapeParams shape_params(const ProperTerm& t);

struct TermValue {
    enum class Kind { Rational, Zero, Undefined } kind = Kind::Undefined;
    Rat value; // 0 unless Rational

    bool defined() const { return kind != Kind::Undefined; }
    bool is_zero() const {
        return kind == Kind::Zero || (kind == Kind::Rational && value == 0);
    }
    static TermValue rational(Rat v) { return {Kind::Rational, std::move(v)}; }
    static TermValue zero() { return {Kind::Zero, Rat(0)}; }
    static TermValue undefined() { return {Kind::Undefined, Rat(0)}; }
};

// Exact evaluation at integer points. Undefined iff some numerator
// Gamma-argument is a nonpositive integer; Zero iff some denominator
// argument is nonpositive and no numerator argument is.
TermValue eval_term(const ProperTerm& t, const Int& n, const Int& k);

// h_Omega = Gamma(Omega*k) / Gamma(Omega*n - k); raises InvalidOmega
// unless Omega >= 1.
ProperTerm family_h_omega(long omega);

} // namespace hypertel
