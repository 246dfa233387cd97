#pragma once

#include <string>
#include <vector>

#include "hypertel/integer.hpp"

namespace hypertel {

// Dense univariate polynomial over Z in the standard power basis.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Int& c) { if (c != 0) c_.push_back(c); }
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable(); // n
    static UniPoly linear(const Int& a, const Int& b); // a*n + b
    static UniPoly monomial(const Int& c, size_t i);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    // max |coefficient| in the standard basis (the |.|_s norm); 0 for zero
    Int height() const;
    // coefficients w.r.t. the binomial basis C(n,i); integral for integer
    // polynomials since Z[n] lies in the Z-span of the C(n,i)
    std::vector<Int> binomial_coeffs() const;
    // max |coefficient| w.r.t. C(n,i) (the |.|_b norm)
    Int height_binomial() const;
    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    Int content() const;

    Int eval(const Int& n) const;
    UniPoly shifted(const Int& r) const; // n -> n + r

    // Exact division; raises InternalInconsistency if b is zero or the
    // division leaves a remainder.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

    std::string str(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Int> c_;
};

// Full gcd in Z[n] (integer content included), nonnegative leading coefficient.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

} // namespace hypertel
