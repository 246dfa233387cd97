#include <doctest.h>

#include "hypertel/bounds.hpp"
#include "hypertel/solver.hpp"
#include "test_util.hpp"

using namespace hypertel;
using hypertel::testing::binomial_term;
using hypertel::testing::binomial_squared_ratio_term;
using hypertel::testing::binomial_squared_term;

TEST_CASE("minimal system shape") {
    ProperTerm t = binomial_term();
    PolyMatrix m = minimal_system(t);
    // delta + theta*nu + 1 rows, (nu+1) + (s+1) columns, s = delta+(theta-1)nu
    CHECK(m.rows == 2);
    CHECK(m.cols == 3);
}

TEST_CASE("binomial relation is S_n - 2 with Y = -1") {
    ProperTerm t = binomial_term();
    CTRelation rel = solve_minimal(t);
    REQUIRE(rel.r == 1);
    CHECK(rel.ell[0] == UniPoly(Int(-2)));
    CHECK(rel.ell[1] == UniPoly(Int(1)));
    CHECK(rel.Y == BiPoly::constant(Int(-1), KBasis::Binomial));
    CHECK(effective_order(rel) == 1);
    CHECK(rel.degree == 0);
    CHECK(verify_relation(t, rel));
    CHECK(max_ell_coeff(rel) == 2);
}

TEST_CASE("solutions verify on the other acceptance terms") {
    for (const ProperTerm& t :
         {binomial_squared_term(), binomial_squared_ratio_term(), family_h_omega(1)}) {
        CTRelation rel = solve_minimal(t);
        CHECK(verify_relation(t, rel));
        CHECK(effective_order(rel) >= 1);
    }
}

TEST_CASE("h_Omega minimal orders and heights") {
    double prev = 0.0;
    for (long omega = 1; omega <= 3; ++omega) {
        ProperTerm t = family_h_omega(omega);
        CTRelation rel = solve_minimal(t);
        CHECK(effective_order(rel) == omega + 1);
        CHECK(verify_relation(t, rel));
        double h = height_of(rel);
        CHECK(h >= prev);
        CHECK(h <= theorem1_height_ln(t, HeightVariant::Theorem));
        CHECK(max_ell_coeff(rel) <= theorem1_height_bound(t, HeightVariant::Theorem));
        prev = h;
    }
}

TEST_CASE("minimal degree stays under the kernel bound") {
    for (long omega = 1; omega <= 2; ++omega) {
        ProperTerm t = family_h_omega(omega);
        ShapeParams sp = shape_params(t);
        CTRelation rel = solve_minimal(t);
        long d = sp.delta + sp.theta * sp.nu;
        KernelBound kb = kernel_bound(d, d, pow_int(Int(2), 62), pow_int(Int(2), 62),
                                      sp.nu + 1, d + 1);
        CHECK(rel.degree <= kb.degree);
    }
}

TEST_CASE("nonminimal solve on the binomial annihilates 2^n") {
    ProperTerm t = binomial_term();
    CTRelation rel = solve_nonminimal(t);
    CHECK(rel.r == 2);
    CHECK(rel.kind == RelationKind::Nonminimal);
    CHECK(verify_relation(t, rel));
    UniPoly acc;
    Int two(1);
    for (long i = 0; i <= rel.r; ++i) {
        acc = acc + rel.ell[i] * two;
        two *= 2;
    }
    CHECK(acc.is_zero());
}

TEST_CASE("nonminimal solve on h_1") {
    ProperTerm t = family_h_omega(1);
    ShapeParams sp = shape_params(t);
    CTRelation rel = solve_nonminimal(t);
    CHECK(rel.r == 2 * sp.nu);
    CHECK(verify_relation(t, rel));
    if (rel.escalations == 0) CHECK(rel.degree <= 4 * sp.nu * sp.theta);
}

TEST_CASE("assemble_relation rejects non-solutions") {
    ProperTerm t = binomial_term();
    std::vector<UniPoly> ell{UniPoly(Int(-3)), UniPoly(Int(1))};
    std::vector<UniPoly> ys{UniPoly(Int(-1))};
    CHECK_THROWS_AS(
        assemble_relation(t, std::move(ell), std::move(ys), 1, 0, RelationKind::Minimal), Error);
}

TEST_CASE("orientation and primitivity of the returned vector") {
    for (const ProperTerm& t : {binomial_squared_term(), family_h_omega(2)}) {
        CTRelation rel = solve_minimal(t);
        long top = effective_order(rel);
        CHECK(rel.ell[top].leading() > 0);
        Int g(0);
        for (const auto& p : rel.ell) g = gcd_int(g, p.content());
        for (long j = 0; j <= rel.s; ++j) g = gcd_int(g, rel.Y.k_coeff(j).content());
        CHECK(g == 1);
    }
}
