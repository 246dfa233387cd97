#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypertel/bipoly.hpp"
#include "hypertel/term.hpp"
#include "hypertel/unipoly.hpp"

namespace hypertel {

// The polynomials entering the telescoping identity
//   l_0 P_0 + ... + l_r P_r = Q*S_k(Y) - R*Y
// all kept in the binomial k-basis.
struct AZPolys {
    std::vector<BiPoly> P; // P_0..P_r
    BiPoly Q, R;
    long r = 0;
};

// P_i = x^i * S_n^i(p) * prod over factors of rising-factorial powers:
//   (a n + a'k + a'')^(ov i*a) (b n - b'k + b'')^(ov i*b)
//   (u n + u'k + u'' + i*u)^(ov (r-i)*u) (v n - v'k + v'' + i*v)^(ov (r-i)*v)
// built purely by linear-factor multiplication in the binomial basis.
std::vector<BiPoly> build_P(const ProperTerm& term, long r);

// Q = y * prod (a n + a'k + a'')^(ov a') (v n - v'k + v'' + rv - v')^(ov v')
// R =     prod (u n + u'k + u'' + ru - u')^(ov u') (b n - b'k + b'')^(ov b')
std::pair<BiPoly, BiPoly> build_QR(const ProperTerm& term, long r);

AZPolys build_az_polys(const ProperTerm& term, long r);

// One rising-factorial power (a n + b k + c)^(ov exponent) of the certificate,
// exponent possibly negative: x^(ov -m) = 1/((x-m)...(x-1)).
struct CertFactor {
    Int a, b, c;
    long exponent = 0;
    bool denominator = false;
};

// C = (Y/p) * prod (b n - b'k + b'')^(ov b')
//           / ( (u n + u'k + u'')^(ov ru-u') (v n - v'k + v'')^(ov rv) )
// kept factored; no rational-function cancellation.
struct Certificate {
    BiPoly Y;         // binomial k-basis
    BiPoly p_divisor; // the term's p, standard basis
    std::vector<CertFactor> factors;
    long r = 0;
};

Certificate assemble_certificate(const ProperTerm& term, long r, const BiPoly& Y);

// exact value of C at an integer point, or nullopt at a pole
std::optional<Rat> eval_certificate(const Certificate& cert, const Int& n, const Int& k);

// Value of the product C*h via its Gamma-quotient normal form
//   Y * x^n y^k * prod G(a n+a'k+a'') G(b n-b'k+b''+b')
//              / prod G(u n+u'k+u''+ru-u') G(v n-v'k+v''+rv)
// which extends C*h across points where C has a pole against a zero of h.
// nullopt when a numerator Gamma-argument is nonpositive; exact 0 when only
// denominator arguments are nonpositive.
std::optional<Rat> eval_certified_product(const ProperTerm& term, const Certificate& cert,
                                          const Int& n, const Int& k);

enum class PointStatus { Pass, Fail, Skipped };

struct PointReport {
    Int n, k;
    PointStatus status;
};

// Exact check of sum_i l_i(n) h(n+i,k) = C(n,k+1)h(n,k+1) - C(n,k)h(n,k)
// point by point; singular points (undefined h or certificate pole) are
// reported as skipped.
std::vector<PointReport> telescoping_check(const ProperTerm& term,
                                           const std::vector<UniPoly>& ell,
                                           const Certificate& cert,
                                           const std::vector<std::pair<Int, Int>>& points);

// Degree and height audit of the constructed polynomials:
//   total deg P_i <= delta + r*theta, total deg Q, R <= nu,
//   |P_i|_{s,b} <= |p|_{s,s} delta!^2 (1+r)^delta x^r (delta+theta r+1)! (2(r+2)Omega-2)^(theta r)
//   |Q*S_k(C(k,j))|, |R*C(k,j)| <= [y] (j+nu+1)^nu (2(r+2)Omega-2)^nu for j <= s.
struct AZAudit {
    bool degrees_ok = false;
    bool p_heights_ok = false;
    bool qr_heights_ok = false;
    bool all_ok() const { return degrees_ok && p_heights_ok && qr_heights_ok; }
};

AZAudit audit_az_polys(const ProperTerm& term, const AZPolys& az, long s);

} // namespace hypertel
