#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypertel/elimination.hpp"
#include "hypertel/solver.hpp"

namespace hypertel {

bool is_prime_u64(uint64_t n);
// largest prime strictly below n; 0 when none exists
uint64_t prev_prime_below(uint64_t n);

// Support signature of a normalized kernel vector: ansatz parameters plus the
// per-entry degrees (-1 for zero entries). Two primes agree when their
// signatures are equal.
struct ModularSignature {
    long r = 0, s = 0;
    long kernel_dim = 0;
    std::vector<long> degrees;
    bool operator==(const ModularSignature& o) const {
        return r == o.r && s == o.s && kernel_dim == o.kernel_dim && degrees == o.degrees;
    }
    bool operator!=(const ModularSignature& o) const { return !(*this == o); }
};

struct ModularRelation {
    uint64_t prime = 0;
    std::vector<UniPoly> ell_mod; // coefficients in [0, prime)
    BiPoly Y_mod;                 // binomial k-basis, coefficients in [0, prime)
    ModularSignature shape;
    // the full normalized kernel vector (ell then y columns), coefficient
    // lists padded to the signature degrees; the CRT residue stream
    std::vector<std::vector<Int>> entries;
};

// The order-nu solve with all arithmetic mod prime, normalized so the leading
// coefficient of the last nonzero ell entry is 1 mod prime. Raises
// UnluckyPrime when the result's signature differs from `expected`.
ModularRelation solve_minimal_mod(const ProperTerm& term, uint64_t prime,
                                  const std::optional<ModularSignature>& expected = std::nullopt,
                                  const Deadline* dl = nullptr);

// unique a mod m1*m2 with a = a1 mod m1, a = a2 mod m2
Int crt_combine(const Int& a1, const Int& m1, const Int& a2, const Int& m2);

// n/d with |n|, d <= floor(sqrt(m/2)), d*a = n mod m, gcd(n,d) = 1
std::optional<Rat> try_rational_reconstruct(const Int& a, const Int& m);
Rat rational_reconstruct(const Int& a, const Int& m); // throws ReconstructionFailed

struct ModularPolicy {
    int start_bits = 30;        // primes descend from 2^start_bits
    int stability_rounds = 2;   // identical reconstructions required in a row
    std::vector<uint64_t> forced_primes; // consumed before the natural schedule
    long max_primes = 0;        // accepted-prime cap; 0 = derived from the height bound
};

struct ModularReport {
    long prime_count = 0;   // primes contributing to the final CRT modulus
    long unlucky_count = 0; // primes skipped by signature mismatch
    long resets = 0;        // consensus rebuilds after persistent mismatch
    uint64_t smallest_prime = 0;
    double height = 0.0;           // measured height of the result
    double predicted_primes = 0.0; // ceil(height / ln(average prime))
    std::vector<uint64_t> primes_used;
};

struct ModularResult {
    CTRelation relation;
    long prime_count = 0;
    ModularReport report;
};

// The CRT pipeline: per-prime solves, consensus by signature, coefficient-wise
// Chinese remaindering, rational reconstruction, stability rounds, and a final
// exact verification of the defining identity.
ModularResult modular_telescoper(const ProperTerm& term, const ModularPolicy& policy = {},
                                 const Deadline* dl = nullptr);

} // namespace hypertel
