#pragma once

#include <vector>

#include "hypertel/elimination.hpp"
#include "hypertel/integer.hpp"
#include "hypertel/unipoly.hpp"

namespace hypertel {

// dense row-major matrix over Z[n]
struct PolyMatrix {
    size_t rows = 0, cols = 0;
    std::vector<UniPoly> a;

    PolyMatrix() = default;
    PolyMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    UniPoly& at(size_t r, size_t c) { return a[r * cols + c]; }
    const UniPoly& at(size_t r, size_t c) const { return a[r * cols + c]; }

    long max_degree() const;
    Int max_height() const;
};

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Int& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Kernel basis over Q(n), returned as primitive integer-polynomial vectors:
// entries share no common polynomial factor or integer content, and the first
// nonzero entry has positive leading coefficient. One vector per free column.
std::vector<std::vector<UniPoly>> nullspace_poly(const PolyMatrix& m,
                                                 const Deadline* dl = nullptr);

// Same for integer matrices: primitive vectors, first nonzero entry positive.
std::vector<std::vector<Int>> nullspace_int(const IntMatrix& m,
                                            const Deadline* dl = nullptr);

size_t rank_poly(const PolyMatrix& m, const Deadline* dl = nullptr);

// reduce a polynomial vector to its primitive normal form (in place)
void normalize_poly_vector(std::vector<UniPoly>& v);
void normalize_int_vector(std::vector<Int>& v);

// A priori bounds for kernel vectors of a two-block matrix A = (A_0, A_1)
// where A_0 has m0 columns of degree <= d0 and height <= M0, A_1 has degree
// <= d1 and height <= M1, rank(A) = rho, and A_0 has full column rank.
struct KernelBound {
    long degree;
    Int height;
};

KernelBound kernel_bound(long d0, long d1, const Int& M0, const Int& M1,
                         long m0, long rho);

} // namespace hypertel
