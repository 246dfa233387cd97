#include <doctest.h>

#include "hypertel/bipoly.hpp"
#include "test_util.hpp"

using namespace hypertel;
using hypertel::testing::Rng;
using hypertel::testing::rand_bipoly;
using hypertel::testing::rand_int;
using hypertel::testing::rand_unipoly;

TEST_CASE("norms") {
    BiPoly p(KBasis::Standard, {{Int(2), Int(-5)}, {Int(3), Int(0)}}); // 2 - 5k + 3n
    CHECK(p.norm() == 5);
    CHECK(BiPoly().norm() == 0);
    BiPoly b(KBasis::Binomial, {{Int(0), Int(1), Int(2)}}); // C(k,1) + 2 C(k,2)
    CHECK(b.norm() == 2);
}

TEST_CASE("basis conversion") {
    BiPoly k2 = BiPoly::monomial(Int(1), 0, 2, KBasis::Standard);
    BiPoly b = k2.to_binomial();
    CHECK(b.coeff(0, 1) == 1);
    CHECK(b.coeff(0, 2) == 2);
    CHECK(b.to_standard() == k2);

    BiPoly n3 = BiPoly::monomial(Int(1), 3, 0, KBasis::Standard);
    CHECK(n3.to_binomial().coeff(3, 0) == 1);

    for (Int k(0); k <= 3; ++k) CHECK(b.eval(Int(0), k) == k2.eval(Int(0), k));
}

TEST_CASE("round trip on random polynomials") {
    Rng rng(9102);
    for (int it = 0; it < 100; ++it) {
        BiPoly p = rand_bipoly(rng, KBasis::Standard, 3, 6, 1000);
        CHECK(p.to_binomial().to_standard() == p);
    }
}

TEST_CASE("conversion height bound on random polynomials") {
    Rng rng(9103);
    for (int it = 0; it < 300; ++it) {
        BiPoly p = rand_bipoly(rng, KBasis::Standard, 3, 6, 1000000);
        long dk = std::max(p.deg_k(), 0L);
        CHECK(p.to_binomial().norm() <=
              factorial(static_cast<unsigned long>(dk)) *
                  factorial(static_cast<unsigned long>(dk)) * p.norm());
    }
}

TEST_CASE("shift_n bound in both bases") {
    Rng rng(9104);
    for (int it = 0; it < 300; ++it) {
        KBasis basis = (it % 2 == 0) ? KBasis::Standard : KBasis::Binomial;
        BiPoly q = rand_bipoly(rng, basis, 3, 4, 1000000);
        long r = it % 6;
        BiPoly shifted = q.shift_n(Int(r));
        long dn = std::max(q.deg_n(), 0L);
        CHECK(shifted.norm() <=
              pow_int(Int(1 + r), static_cast<unsigned long>(dn)) * q.norm());
        if (r == 0) CHECK(shifted == q);
    }
    BiPoly q = BiPoly::monomial(Int(1), 2, 0, KBasis::Standard);
    BiPoly s = q.shift_n(Int(2));
    CHECK(s.coeff(0, 0) == 4);
    CHECK(s.coeff(1, 0) == 4);
    CHECK(s.coeff(2, 0) == 1);
}

TEST_CASE("shift_k in the binomial basis") {
    // C(k+1,1) = C(k,0) + C(k,1)
    BiPoly c1 = BiPoly::monomial(Int(1), 0, 1, KBasis::Binomial);
    BiPoly s = c1.shift_k_binomial();
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(0, 1) == 1);
    CHECK(s.norm() == c1.norm());

    BiPoly c = BiPoly::constant(Int(5), KBasis::Binomial);
    CHECK(c.shift_k_binomial() == c);

    Rng rng(9105);
    for (int it = 0; it < 100; ++it) {
        BiPoly q = rand_bipoly(rng, KBasis::Binomial, 2, 4, 1000);
        BiPoly shifted = q.shift_k_binomial();
        for (Int n(0); n <= 2; ++n)
            for (Int k(0); k <= 6; ++k)
                CHECK(shifted.eval(n, k) == q.eval(n, Int(k + 1)));
    }
}

TEST_CASE("linear multiplication in the binomial basis") {
    BiPoly c1 = BiPoly::monomial(Int(1), 0, 1, KBasis::Binomial);
    BiPoly kq = c1.mul_linear_binomial(Int(0), Int(1), Int(0)); // k * C(k,1)
    CHECK(kq.coeff(0, 1) == 1);
    CHECK(kq.coeff(0, 2) == 2);

    BiPoly one = BiPoly::constant(Int(1), KBasis::Binomial);
    BiPoly nk1 = one.mul_linear_binomial(Int(1), Int(-1), Int(1)); // n - k + 1
    CHECK(nk1.coeff(0, 0) == 1);
    CHECK(nk1.coeff(1, 0) == 1);
    CHECK(nk1.coeff(0, 1) == -1);

    BiPoly n = one.mul_linear_binomial(Int(1), Int(0), Int(0));
    CHECK(n == BiPoly::monomial(Int(1), 1, 0, KBasis::Binomial));
}

TEST_CASE("linear multiplication agrees with pointwise products") {
    Rng rng(9106);
    for (int it = 0; it < 200; ++it) {
        BiPoly q = rand_bipoly(rng, KBasis::Binomial, 2, 4, 1000);
        Int a = rand_int(rng, -5, 5), b = rand_int(rng, -5, 5), c = rand_int(rng, -5, 5);
        BiPoly got = q.mul_linear_binomial(a, b, c);
        CHECK(got.deg_k() <= q.deg_k() + (b != 0 ? 1 : 0));
        for (Int n(0); n <= 2; ++n)
            for (Int k(0); k <= 6; ++k)
                CHECK(got.eval(n, k) == Rat(a * n + b * k + c) * q.eval(n, k));
    }
}

TEST_CASE("single linear multiplier height bound") {
    Rng rng(9107);
    for (int it = 0; it < 300; ++it) {
        BiPoly q = rand_bipoly(rng, KBasis::Binomial, 2, 4, 1000000);
        Int a = rand_int(rng, -9, 9), b = rand_int(rng, -9, 9), c = rand_int(rng, -9, 9);
        Int M = std::max(abs_int(a), std::max(abs_int(b), abs_int(c)));
        long dk = std::max(q.deg_k(), 0L);
        CHECK(q.mul_linear_binomial(a, b, c).norm() <= 2 * M * Int(dk + 2) * q.norm());
    }
}

TEST_CASE("univariate product height bound") {
    Rng rng(9108);
    for (int it = 0; it < 300; ++it) {
        long m = 2 + static_cast<long>(it % 4);
        std::vector<UniPoly> ps;
        UniPoly prod(Int(1));
        Int rhs(1);
        long dmax = 0;
        bool zero = false;
        for (long i = 0; i < m; ++i) {
            UniPoly p = rand_unipoly(rng, 4, 1000);
            if (p.is_zero()) zero = true;
            dmax = std::max(dmax, p.degree());
            rhs *= p.height();
            prod = prod * p;
            ps.push_back(p);
        }
        if (zero) {
            CHECK(prod.is_zero());
            continue;
        }
        CHECK(prod.height() <= pow_int(Int(dmax + 1), static_cast<unsigned long>(m - 1)) * rhs);
    }
}

TEST_CASE("chained linear multiplier height bound") {
    Rng rng(9109);
    for (int it = 0; it < 300; ++it) {
        BiPoly q = rand_bipoly(rng, KBasis::Binomial, 2, 3, 1000);
        long m = 1 + static_cast<long>(it % 5);
        Int M(0);
        BiPoly prod = q;
        for (long i = 0; i < m; ++i) {
            Int a = rand_int(rng, -9, 9), b = rand_int(rng, -9, 9), c = rand_int(rng, -9, 9);
            M = std::max(M, std::max(abs_int(a), std::max(abs_int(b), abs_int(c))));
            prod = prod.mul_linear_binomial(a, b, c);
        }
        long dk = std::max(q.deg_k(), 0L);
        Int rise(1);
        for (long i = 0; i < m; ++i) rise *= Int(dk + 2 + i);
        CHECK(prod.norm() <= pow_int(2 * M, static_cast<unsigned long>(m)) * rise * q.norm());
    }
}

TEST_CASE("rising factorial polynomials") {
    BiPoly n2 = rising_factorial_binomial(Int(1), Int(0), Int(0), 2); // n(n+1)
    CHECK(n2.coeff(1, 0) == 1);
    CHECK(n2.coeff(2, 0) == 1);
    CHECK(rising_factorial_binomial(Int(3), Int(-2), Int(5), 0) ==
          BiPoly::constant(Int(1), KBasis::Binomial));
    CHECK(rising_factorial_binomial(Int(1), Int(-1), Int(1), 1) ==
          BiPoly::linear(Int(1), Int(-1), Int(1), KBasis::Binomial));
    CHECK_THROWS_AS(rising_factorial_binomial(Int(1), Int(0), Int(0), -1), Error);
}

TEST_CASE("rising factorial values with negative exponent") {
    Rat out;
    REQUIRE(rising_factorial_value(Int(3), 2, out));
    CHECK(out == Rat(12));
    REQUIRE(rising_factorial_value(Int(5), 0, out));
    CHECK(out == Rat(1));
    REQUIRE(rising_factorial_value(Int(5), -2, out)); // 1/((5-2)(5-1)) = 1/12
    CHECK(out == Rat(1, 12));
    CHECK_FALSE(rising_factorial_value(Int(2), -2, out)); // hits factor 0? (2-2)=0
}

TEST_CASE("general product matches evaluation") {
    Rng rng(9110);
    for (int it = 0; it < 60; ++it) {
        BiPoly a = rand_bipoly(rng, KBasis::Binomial, 2, 3, 100);
        BiPoly b = rand_bipoly(rng, KBasis::Binomial, 2, 3, 100);
        BiPoly ab = a * b;
        for (Int n(0); n <= 2; ++n)
            for (Int k(0); k <= 4; ++k) CHECK(ab.eval(n, k) == a.eval(n, k) * b.eval(n, k));
    }
}
