#pragma once

#include <string>
#include <vector>

#include "hypertel/unipoly.hpp"

namespace hypertel {

enum class KBasis { Standard, Binomial };

// Dense bivariate polynomial: coefficient grid c[i][j] for n^i * B_j(k),
// where B_j is k^j (Standard) or C(k,j) (Binomial). The k-basis is part of
// the value; polynomials in different bases never compare equal.
// Invariant: rectangular grid with no all-zero trailing row or column; the
// zero polynomial has an empty grid.
class BiPoly {
public:
    BiPoly() : basis_(KBasis::Standard) {}
    explicit BiPoly(KBasis basis) : basis_(basis) {}
    BiPoly(KBasis basis, std::vector<std::vector<Int>> grid);

    static BiPoly constant(const Int& c, KBasis basis);
    // c * n^i * B_j(k)
    static BiPoly monomial(const Int& c, size_t i, size_t j, KBasis basis);
    // a*n + b*k + c in the given basis (k = C(k,1), so grids agree)
    static BiPoly linear(const Int& a, const Int& b, const Int& c, KBasis basis);
    static BiPoly from_unipoly_n(const UniPoly& p, KBasis basis);
    // sum_j cols[j](n) * B_j(k)
    static BiPoly from_k_coeffs(const std::vector<UniPoly>& cols, KBasis basis);

    KBasis basis() const { return basis_; }
    bool is_zero() const { return c_.empty(); }
    long deg_n() const { return static_cast<long>(c_.size()) - 1; }
    long deg_k() const { return c_.empty() ? -1 : static_cast<long>(c_[0].size()) - 1; }
    // max i+j over nonzero cells; -1 for zero
    long total_degree() const;
    const Int& coeff(size_t i, size_t j) const;
    // coefficient of B_j(k) as a polynomial in n
    UniPoly k_coeff(size_t j) const;

    // max |c[i][j]|: ||.||_{s,s} on Standard grids, ||.||_{s,b} on Binomial
    Int norm() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const Int& s) const;
    // multiplication by a polynomial in n only; k-basis preserved
    BiPoly mul_unipoly_n(const UniPoly& p) const;
    // general same-basis product (Standard: convolution; Binomial: via
    // C(k,i)*C(k,j) = sum_t C(t,i)*C(i,i+j-t)*C(k,t))
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return basis_ == o.basis_ && c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // (a*n + b*k + c) * this, entirely in the binomial k-basis:
    // for q = sum_i q_i(n) C(k,i), the product has coefficient
    // (a*n + b*i + c)*q_i + b*i*q_{i-1} at C(k,i).
    BiPoly mul_linear_binomial(const Int& a, const Int& b, const Int& c) const;

    BiPoly to_binomial() const;  // k^m = sum_i S(m,i) i! C(k,i)
    BiPoly to_standard() const;  // rejects non-integral results

    BiPoly shift_n(const Int& r) const;     // n -> n + r, either basis
    BiPoly shift_k_binomial() const;        // k -> k + 1, binomial basis only

    Rat eval(const Int& n, const Int& k) const;

    std::string str() const;

private:
    void trim();
    KBasis basis_;
    std::vector<std::vector<Int>> c_;
};

// (a*n + b*k + c)^{rising m} as a binomial-basis BiPoly; m must be >= 0
// (negative exponents exist only symbolically inside certificates).
BiPoly rising_factorial_binomial(const Int& a, const Int& b, const Int& c, long m);

// Product (t)(t+1)...(t+m-1) for integers, with the usual extension
// t^{rising -m} = 1/((t-m)...(t-1)); nullopt when a denominator factor is 0.
bool rising_factorial_value(const Int& t, long m, Rat& out);

} // namespace hypertel
