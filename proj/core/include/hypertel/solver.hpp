#pragma once

#include <vector>

#include "hypertel/az.hpp"
#include "hypertel/linalg.hpp"
#include "hypertel/term.hpp"

namespace hypertel {

enum class RelationKind { Minimal, Nonminimal };

// A creative telescoping relation: L = l_0 + l_1 S_n + ... + l_r S_n^r with
//   l_0 P_0 + ... + l_r P_r = Q*S_k(Y) - R*Y.
// Normalized so the last nonzero l_i has positive leading coefficient and the
// full (l, Y) coefficient vector has content 1. r is the ansatz order; the
// top entries may be zero for nonminimal ansatz solutions.
struct CTRelation {
    std::vector<UniPoly> ell; // size r+1
    BiPoly Y;                 // binomial k-basis
    long r = 0;
    RelationKind kind = RelationKind::Minimal;
    Certificate certificate;

    long degree = 0;      // max deg l_i
    long s = 0;           // k-degree bound used for Y
    long escalations = 0; // nonminimal degree escalation rounds used
    size_t unknowns = 0, equations = 0;
};

// index of the last nonzero l_i (the operator's true order)
long effective_order(const CTRelation& rel);

// The order-nu system: rows indexed by C(k,i) for i = 0..delta+theta*nu,
// columns l_0..l_nu then y_0..y_s with s = delta+(theta-1)*nu. Certificate
// columns carry the coefficients of R*C(k,j) - Q*S_k(C(k,j)), so kernel
// vectors are read directly as (l, Y).
PolyMatrix minimal_system(const ProperTerm& term);

CTRelation solve_minimal(const ProperTerm& term, const Deadline* dl = nullptr);

// Integer system over unknowns l_{i,j} (n-power i <= d, shift j <= r) and
// y_{i,j} (n-power i <= s+d, k-index j <= s), equations indexed by monomials
// n^i C(k,j); all-zero rows dropped.
IntMatrix nonminimal_system(const ProperTerm& term, long r, long d, long s);

// r = 2*nu, d = 4*nu*theta, s = delta + r*theta - nu; escalates d by nu+1 when
// the kernel has no vector with nonzero telescoper part, falling back to
// solve_minimal after 5 rounds.
CTRelation solve_nonminimal(const ProperTerm& term, const Deadline* dl = nullptr);

// Orient (last nonzero l_i leading-positive), attach Y and the certificate,
// and verify the defining identity; the shared final step of every solve path.
CTRelation assemble_relation(const ProperTerm& term, std::vector<UniPoly> ell,
                             std::vector<UniPoly> ys, long r, long s, RelationKind kind);

// exact check of l_0 P_0 + ... + l_r P_r = Q*S_k(Y) - R*Y
bool verify_relation(const ProperTerm& term, const CTRelation& rel);

// natural log of the largest |integer coefficient| across all l_i
double height_of(const CTRelation& rel);
Int max_ell_coeff(const CTRelation& rel);

inline std::vector<PointReport> telescoping_check(const ProperTerm& term, const CTRelation& rel,
                                                  const std::vector<std::pair<Int, Int>>& points) {
    return telescoping_check(term, rel.ell, rel.certificate, points);
}

} // namespace hypertel
