#pragma once

#include "hypertel/term.hpp"

namespace hypertel {

// smallest guaranteed telescoper order: nu
long order_bound(const ProperTerm& term);

// Exact threshold ((theta*nu-1)r + nu(2delta+|mu|+3-(1+|mu|)nu)/2 - 1)/(r-nu+1);
// a telescoper of degree d exists for every integer d strictly above it.
Rat chen_degree_threshold(const ProperTerm& term, long r);

enum class HeightVariant { Theorem, Derivation };

// Exact height bound for the minimal-order telescoper's coefficients:
//   max{x^nu, y+1} * |p|^{nu+1} * (delta+theta*nu+1)!^{nu+1}
//   * (nu+1)^{delta(nu+1)} * (y+1)^{delta+(theta-1)nu+1} * delta!^{2(nu+1)}
//   * x^{nu^2} * (delta+theta*nu+1)^{delta+(theta+delta+2)nu+(theta-1)nu^2}
//   * (2(nu+2)Omega-2)^{(delta+theta+1)nu+(2theta-1)nu^2}.
// The Derivation variant raises the factorial exponent from nu+1 to nu+2.
Int theorem1_height_bound(const ProperTerm& term,
                          HeightVariant variant = HeightVariant::Theorem);

// ln of the same bound, summed factor-wise in floating point
double theorem1_height_ln(const ProperTerm& term,
                          HeightVariant variant = HeightVariant::Theorem);

// leading-term height-growth estimate 64*(M*Omega)^3*ln(Omega)
double remark3_exponent(const ProperTerm& term);

struct BoundReport {
    long order_bound = 0;
    Rat degree_threshold;
    Int theorem1_height;
    double theorem1_ln = 0.0;
    bool remark3_defined = false;
    double remark3 = 0.0;
};

BoundReport bound_report(const ProperTerm& term, long r, HeightVariant variant);

} // namespace hypertel
