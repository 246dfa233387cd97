#include <doctest.h>

#include "hypertel/prover.hpp"
#include "hypertel/solver.hpp"
#include "test_util.hpp"

using namespace hypertel;
using hypertel::testing::binomial_term;
using hypertel::testing::binomial_squared_ratio_term;
using hypertel::testing::gf;

TEST_CASE("integer roots") {
    // (n-3)(n+5)n = n^3 + 2n^2 - 15n
    UniPoly p(std::vector<Int>{Int(0), Int(-15), Int(2), Int(1)});
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -5);
    CHECK(roots[1] == 0);
    CHECK(roots[2] == 3);

    CHECK(integer_roots(UniPoly(Int(7))).empty());
    CHECK(integer_roots(UniPoly::linear(Int(2), Int(-1))).empty()); // root 1/2
    CHECK_THROWS_AS(integer_roots(UniPoly()), Error);
}

TEST_CASE("root bound") {
    UniPoly p(std::vector<Int>{Int(-12), Int(1), Int(4)});
    CHECK(leading_root_bound(p) == 12);
    for (const Int& r : integer_roots(p)) CHECK(abs_int(r) <= leading_root_bound(p));
}

TEST_CASE("affine window parsing") {
    AffineBound b = parse_affine("2*n+3");
    CHECK(b.slope == 2);
    CHECK(b.offset == 3);
    CHECK(b(Int(5)) == 13);
    CHECK(parse_affine("n").slope == 1);
    CHECK(parse_affine("n").offset == 0);
    CHECK(parse_affine("-n-1")(Int(4)) == -5);
    CHECK(parse_affine("0").slope == 0);
    CHECK(parse_affine(" n + 2 ")(Int(1)) == 3);
    CHECK_THROWS_AS(parse_affine("k+1"), Error);
    CHECK_THROWS_AS(parse_affine(""), Error);
}

TEST_CASE("exact sums over a window") {
    ProperTerm t = binomial_term();
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    CHECK(exact_sum(t, Int(0), w) == Rat(1));
    CHECK(exact_sum(t, Int(4), w) == Rat(16));
    CHECK(exact_sum(t, Int(10), w) == Rat(1024));
}

TEST_CASE("window violations are reported") {
    ProperTerm t = binomial_term();
    SupportWindow narrow{parse_affine("0"), parse_affine("n-1")};
    CHECK_THROWS_AS(exact_sum(t, Int(3), narrow), Error); // C(3,3) = 1 just outside
}

TEST_CASE("proves the squared-binomial ratio identity") {
    ProperTerm t = binomial_squared_ratio_term();
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    ProofReport rep = prove_identity(t, w, Rat(1));
    CHECK(rep.verdict == Verdict::Proven);
    CHECK(rep.r >= 1);
    CHECK(rep.n0 >= 0);
    CHECK(rep.points_checked >= rep.r + 1);

    // brute force the sum for n <= 20 as an independent check
    for (long n = 0; n <= 20; ++n) {
        Rat sum = exact_sum(t, Int(n), w);
        CHECK(sum == Rat(1));
    }
}

TEST_CASE("root bound covers the proven run") {
    ProperTerm t = binomial_squared_ratio_term();
    CTRelation rel = solve_minimal(t);
    long top = effective_order(rel);
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    ProofReport rep = prove_identity(t, w, Rat(1));
    CHECK(Int(rep.n0) <= leading_root_bound(rel.ell[top]));
}

TEST_CASE("disproves the mutated identity with a witness") {
    TermInput in;
    in.p = BiPoly::linear(Int(1), Int(0), Int(2), KBasis::Standard); // p = n + 2
    in.factors = {gf(Role::A, 1, 0, 1), gf(Role::A, 1, 0, 1), gf(Role::A, 1, 0, 1),
                  gf(Role::A, 1, 0, 1), gf(Role::U, 0, 1, 1), gf(Role::U, 0, 1, 1),
                  gf(Role::U, 2, 0, 1), gf(Role::V, 1, 1, 1), gf(Role::V, 1, 1, 1)};
    ProperTerm t = normalize(in);
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    ProofReport rep = prove_identity(t, w, Rat(1));
    CHECK(rep.verdict == Verdict::Disproven);
    REQUIRE(rep.counterexample.has_value());
    CHECK(*rep.counterexample == 0); // sum at n=0 is 2, not 1
}

TEST_CASE("disproves a wrong right-hand side") {
    ProperTerm t = binomial_squared_ratio_term();
    SupportWindow w{parse_affine("0"), parse_affine("n")};
    ProofReport rep = prove_identity(t, w, Rat(3));
    CHECK(rep.verdict == Verdict::Disproven);
}
