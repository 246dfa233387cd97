#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertel/solver.hpp"

namespace hypertel {

// All nonnegative integer roots, sorted ascending: factor out n^e, take the
// primitive part, test the nonnegative divisors of the trailing coefficient.
std::vector<Int> integer_roots(const UniPoly& p);

// The height of p, which bounds every integer root in absolute value;
// reported for comparison, never iterated over.
Int leading_root_bound(const UniPoly& p);

// slope*n + offset
struct AffineBound {
    Int slope, offset;
    Int operator()(const Int& n) const { return slope * n + offset; }
};

// "a*n+b", "n-1", "2n", "0", with optional spaces
AffineBound parse_affine(const std::string& s);

// Declared support of the summand: h(n,k) = 0 for k outside
// [k_lo(n), k_hi(n)], spot-verified at the window edges.
struct SupportWindow {
    AffineBound k_lo, k_hi;
};

// Sum of h(n, k) over the window at this n, exact. Raises SingularTerm on an
// undefined value inside the window and WindowViolation when one of the edge
// spot-checks (window +-1..3) is nonzero.
Rat exact_sum(const ProperTerm& term, const Int& n, const SupportWindow& window);

enum class Verdict { Proven, Disproven, Inapplicable };

const char* verdict_name(Verdict v);

struct ProofReport {
    Verdict verdict = Verdict::Inapplicable;
    std::optional<Int> counterexample; // Disproven: first n with sum != rhs
    std::string reason;                // Inapplicable: which hypothesis failed
    long r = 0;         // effective telescoper order
    long d = 0;         // max coefficient degree
    Int n0;             // greatest nonnegative integer root of the leading l
    long points_checked = 0;
    double height_bound_ln = 0.0; // ln of the Theorem 1 bound (never iterated)
};

// Proves sum_k h(n,k) = rhs_constant for all n >= 0: computes the minimal
// telescoper, sets N = max(r+d+1, r+n0+1), checks the sum at n = 0..N, then
// audits the pointwise telescoping relation (including vanishing boundaries)
// over the same range. Proven only when both sweeps pass; a failed sum gives
// Disproven with the witness n; a failed audit gives Inapplicable.
ProofReport prove_identity(const ProperTerm& term, const SupportWindow& window,
                           const Rat& rhs_constant = Rat(1), const Deadline* dl = nullptr);

} // namespace hypertel
