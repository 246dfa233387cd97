#include "hypertel/modular.hpp"

#include <algorithm>
#include <cmath>

#include "hypertel/bounds.hpp"

namespace hypertel {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin below 2^64 with this base set
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 prev_prime_below(u64 n) {
    if (n <= 2) return 0;
    if (n == 3) return 2;
    u64 c = (n % 2 == 0) ? n - 1 : n - 2;
    for (; c >= 3; c -= 2)
        if (is_prime_u64(c)) return c;
    return 2;
}

namespace {

// dense polynomial over Z/p, trailing zeros trimmed
struct ModPoly {
    std::vector<u64> c;
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

struct ModOps {
    u64 p = 0;
    using Elem = ModPoly;

    bool is_zero(const Elem& e) const { return e.is_zero(); }
    Elem one() const { return {{1}}; }
    Elem neg(const Elem& e) const {
        Elem r = e;
        for (auto& x : r.c) x = x ? p - x : 0;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        Elem r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = static_cast<u64>((u128(a.c[i]) * b.c[j] + r.c[i + j]) % p);
        }
        r.trim();
        return r;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % p;
        r.trim();
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + p - b.c[i]) % p;
        r.trim();
        return r;
    }
    Elem div_exact(const Elem& a, const Elem& b) const {
        if (b.is_zero()) fail(ErrorCode::InternalInconsistency, "modular division by zero");
        if (a.is_zero()) return {};
        if (a.c.size() < b.c.size())
            fail(ErrorCode::InternalInconsistency, "inexact division in modular elimination");
        Elem rem = a, q;
        q.c.assign(a.c.size() - b.c.size() + 1, 0);
        u64 binv = invmod(b.c.back(), p);
        for (size_t t = q.c.size(); t-- > 0;) {
            size_t top = t + b.c.size() - 1;
            if (top >= rem.c.size() || rem.c[top] == 0) continue;
            u64 f = mulmod(rem.c[top], binv, p);
            q.c[t] = f;
            for (size_t i = 0; i < b.c.size(); ++i)
                rem.c[t + i] = (rem.c[t + i] + p - mulmod(f, b.c[i], p)) % p;
        }
        rem.trim();
        if (!rem.is_zero())
            fail(ErrorCode::InternalInconsistency, "inexact division in modular elimination");
        q.trim();
        return q;
    }
    long pivot_key(const Elem& e) const { return e.degree(); }
};

ModPoly reduce_mod(const UniPoly& q, u64 p) {
    ModPoly r;
    r.c.reserve(q.coeffs().size());
    Int pz(static_cast<unsigned long>(p));
    for (const auto& c : q.coeffs()) {
        Int m = c % pz;
        if (m < 0) m += pz;
        r.c.push_back(mpz_get_ui(m.get_mpz_t()));
    }
    r.trim();
    return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const ModOps& ops) {
    u64 binv = invmod(b.c.back(), ops.p);
    while (!a.is_zero() && a.c.size() >= b.c.size()) {
        u64 f = mulmod(a.c.back(), binv, ops.p);
        size_t off = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[off + i] = (a.c[off + i] + ops.p - mulmod(f, b.c[i], ops.p)) % ops.p;
        a.trim();
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const ModOps& ops) {
    while (!b.is_zero()) {
        ModPoly r = mod_rem(std::move(a), b, ops);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct MinimalShape {
    long r = 0, s = 0;
};

MinimalShape minimal_shape(const ProperTerm& term) {
    ShapeParams sp = shape_params(term);
    return {sp.nu, sp.delta + (sp.theta - 1) * sp.nu};
}

ModularRelation solve_mod_with_matrix(const ProperTerm& term, const PolyMatrix& A,
                                      const MinimalShape& shape, u64 prime,
                                      const std::optional<ModularSignature>& expected,
                                      const Deadline* dl, bool* kernel_lacks_ell) {
    if (prime <= 2 || !is_prime_u64(prime))
        fail(ErrorCode::HypothesisViolation, "modular solve needs an odd prime");
    Int pz(static_cast<unsigned long>(prime));
    if (term.x % pz == 0 || term.y % pz == 0)
        fail(ErrorCode::HypothesisViolation, "prime divides a geometric base");

    ModOps ops{prime};
    std::vector<ModPoly> entries;
    entries.reserve(A.a.size());
    for (const auto& e : A.a) entries.push_back(reduce_mod(e, prime));

    FractionFreeKernel<ModOps> elim(A.rows, A.cols, std::move(entries), ops);
    elim.run(dl);
    auto basis = elim.kernel();
    if (basis.empty())
        fail(ErrorCode::InternalInconsistency, "underdetermined system has no modular kernel");

    size_t ell_count = static_cast<size_t>(shape.r + 1);
    std::optional<size_t> best;
    std::pair<long, size_t> best_key{0, 0};
    for (size_t b = 0; b < basis.size(); ++b) {
        long dmax = -1;
        for (size_t i = 0; i < ell_count && i < basis[b].size(); ++i)
            dmax = std::max(dmax, basis[b][i].degree());
        if (dmax < 0) continue;
        size_t first = 0;
        while (first < basis[b].size() && basis[b][first].is_zero()) ++first;
        std::pair<long, size_t> key{dmax, first};
        if (!best || key < best_key) {
            best = b;
            best_key = key;
        }
    }
    if (!best) {
        if (kernel_lacks_ell) *kernel_lacks_ell = true;
        fail(ErrorCode::UnluckyPrime, "modular kernel has no telescoper part");
    }
    std::vector<ModPoly> v = std::move(basis[*best]);

    ModPoly g;
    for (const auto& e : v) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : mod_gcd(std::move(g), e, ops);
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0)
        for (auto& e : v)
            if (!e.is_zero()) e = ops.div_exact(e, g);

    u64 scale = 0;
    for (size_t i = ell_count; i-- > 0;)
        if (!v[i].is_zero()) {
            scale = invmod(v[i].c.back(), prime);
            break;
        }
    if (scale == 0)
        fail(ErrorCode::InternalInconsistency, "normalization lost the telescoper part");
    for (auto& e : v)
        for (auto& c : e.c) c = mulmod(c, scale, prime);

    for (size_t i = 0; i < A.rows; ++i) {
        ModPoly acc;
        for (size_t j = 0; j < A.cols; ++j)
            acc = ops.add(acc, ops.mul(reduce_mod(A.at(i, j), prime), v[j]));
        if (!acc.is_zero())
            fail(ErrorCode::InternalInconsistency, "modular kernel vector fails the system");
    }

    ModularRelation mr;
    mr.prime = prime;
    mr.shape.r = shape.r;
    mr.shape.s = shape.s;
    mr.shape.kernel_dim = static_cast<long>(basis.size());
    for (const auto& e : v) mr.shape.degrees.push_back(e.degree());
    if (expected && mr.shape != *expected)
        fail(ErrorCode::UnluckyPrime, "signature differs from the running consensus");

    std::vector<UniPoly> y_polys;
    for (size_t i = 0; i < v.size(); ++i) {
        std::vector<Int> coeffs;
        coeffs.reserve(v[i].c.size());
        for (u64 c : v[i].c) coeffs.emplace_back(static_cast<unsigned long>(c));
        mr.entries.push_back(coeffs);
        if (i < ell_count)
            mr.ell_mod.emplace_back(std::move(coeffs));
        else
            y_polys.emplace_back(std::move(coeffs));
    }
    mr.Y_mod = BiPoly::from_k_coeffs(y_polys, KBasis::Binomial);
    return mr;
}

} // namespace

ModularRelation solve_minimal_mod(const ProperTerm& term, u64 prime,
                                  const std::optional<ModularSignature>& expected,
                                  const Deadline* dl) {
    return solve_mod_with_matrix(term, minimal_system(term), minimal_shape(term), prime, expected,
                                 dl, nullptr);
}

Int crt_combine(const Int& a1, const Int& m1, const Int& a2, const Int& m2) {
    if (m1 <= 0 || m2 <= 0) fail(ErrorCode::HypothesisViolation, "moduli must be positive");
    if (gcd_int(m1, m2) != 1) fail(ErrorCode::NonCoprimeModuli, "moduli share a factor");
    if (m2 == 1) {
        Int x = a1 % m1;
        if (x < 0) x += m1;
        return x;
    }
    Int inv;
    mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    Int m = m1 * m2;
    Int t = ((a2 - a1) * inv) % m2;
    Int x = (a1 + m1 * t) % m;
    if (x < 0) x += m;
    return x;
}

std::optional<Rat> try_rational_reconstruct(const Int& a, const Int& m) {
    if (m <= 0 || a < 0 || a >= m) fail(ErrorCode::HypothesisViolation, "need 0 <= a < m");
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    Int num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0 || den > bound) return std::nullopt;
    if (gcd_int(num, den) != 1) return std::nullopt;
    if ((den * a - num) % m != 0) return std::nullopt;
    Rat f(num);
    f /= Rat(den);
    return f;
}

Rat rational_reconstruct(const Int& a, const Int& m) {
    auto r = try_rational_reconstruct(a, m);
    if (!r) fail(ErrorCode::ReconstructionFailed, "no bounded fraction matches the residue");
    return *r;
}

namespace {

// flattened residue stream, one entry per kernel-vector coefficient
std::vector<Int> flatten(const ModularRelation& mr) {
    std::vector<Int> out;
    for (const auto& e : mr.entries)
        for (const auto& c : e) out.push_back(c);
    return out;
}

struct PrimeStream {
    std::vector<u64> forced;
    size_t idx = 0;
    u64 cursor;
    const Int& x;
    const Int& y;

    PrimeStream(const ModularPolicy& policy, const Int& x_, const Int& y_)
        : forced(policy.forced_primes), cursor(u64(1) << policy.start_bits), x(x_), y(y_) {}

    bool admissible(u64 p) const {
        if (p <= 2 || !is_prime_u64(p)) return false;
        Int pz(static_cast<unsigned long>(p));
        return x % pz != 0 && y % pz != 0;
    }

    u64 next() {
        while (idx < forced.size()) {
            u64 p = forced[idx++];
            if (admissible(p)) return p;
        }
        for (;;) {
            cursor = prev_prime_below(cursor);
            if (cursor <= 2)
                fail(ErrorCode::ReconstructionFailed, "prime schedule exhausted");
            if (admissible(cursor)) return cursor;
        }
    }
};

} // namespace

ModularResult modular_telescoper(const ProperTerm& term, const ModularPolicy& policy,
                                 const Deadline* dl) {
    if (policy.start_bits < 3 || policy.start_bits > 62)
        fail(ErrorCode::HypothesisViolation, "start_bits out of range");
    if (policy.stability_rounds < 1)
        fail(ErrorCode::HypothesisViolation, "stability_rounds must be positive");

    MinimalShape shape = minimal_shape(term);
    PolyMatrix A = minimal_system(term);
    PrimeStream stream(policy, term.x, term.y);
    const double height_guess = std::max(theorem1_height_ln(term, HeightVariant::Theorem), 1.0);

    std::optional<ModularSignature> consensus;
    std::vector<Int> residues;
    Int modulus = 1;
    std::vector<u64> primes_used;
    std::vector<Int> last_candidate;
    bool have_candidate = false;
    int stable = 0;
    int unlucky_streak = 0, no_ell_streak = 0;
    long unlucky = 0, resets = 0, attempted = 0;

    auto reset_consensus = [&] {
        consensus.reset();
        residues.clear();
        modulus = 1;
        primes_used.clear();
        last_candidate.clear();
        have_candidate = false;
        stable = 0;
        unlucky_streak = 0;
        ++resets;
    };

    for (;;) {
        check_deadline(dl, "modular telescoper");
        long cap = policy.max_primes;
        if (cap <= 0) {
            double ln_pmin = std::log(static_cast<double>(
                primes_used.empty() ? (u64(1) << (policy.start_bits - 1))
                                    : *std::min_element(primes_used.begin(), primes_used.end())));
            cap = 2 * static_cast<long>(std::ceil(height_guess / ln_pmin)) +
                  policy.stability_rounds + 8;
        }
        if (static_cast<long>(primes_used.size()) > cap || attempted > 8 * cap + 64)
            fail(ErrorCode::ReconstructionFailed,
                 "prime budget exhausted without a stable reconstruction");

        u64 p = stream.next();
        ++attempted;
        ModularRelation mr;
        bool lacks_ell = false;
        try {
            mr = solve_mod_with_matrix(term, A, shape, p, consensus, dl, &lacks_ell);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnluckyPrime) throw;
            ++unlucky;
            ++unlucky_streak;
            no_ell_streak = lacks_ell ? no_ell_streak + 1 : 0;
            if (no_ell_streak >= 3)
                fail(ErrorCode::DegenerateTerm,
                     "no candidate with a nonzero telescoper across independent primes");
            if (unlucky_streak >= 3 && consensus) reset_consensus();
            continue;
        }
        unlucky_streak = 0;
        no_ell_streak = 0;

        std::vector<Int> flat = flatten(mr);
        if (!consensus) {
            consensus = mr.shape;
            residues = std::move(flat);
            modulus = Int(static_cast<unsigned long>(p));
            primes_used.assign(1, p);
        } else {
            Int pz(static_cast<unsigned long>(p));
            for (size_t i = 0; i < residues.size(); ++i)
                residues[i] = crt_combine(residues[i], modulus, flat[i], pz);
            modulus *= pz;
            primes_used.push_back(p);
        }

        std::vector<Rat> fracs;
        fracs.reserve(residues.size());
        bool reconstructed = true;
        Int den_lcm = 1;
        for (const auto& r : residues) {
            auto f = try_rational_reconstruct(r, modulus);
            if (!f) {
                reconstructed = false;
                break;
            }
            den_lcm = lcm_int(den_lcm, Int(f->get_den()));
            fracs.push_back(std::move(*f));
        }
        if (!reconstructed) {
            stable = 0;
            have_candidate = false;
            continue;
        }
        std::vector<Int> candidate;
        candidate.reserve(fracs.size());
        for (const auto& f : fracs)
            candidate.push_back(Int(f.get_num()) * (den_lcm / Int(f.get_den())));

        if (have_candidate && candidate == last_candidate) {
            ++stable;
        } else {
            stable = 1;
            last_candidate = std::move(candidate);
            have_candidate = true;
        }
        if (stable < policy.stability_rounds) continue;

        std::vector<UniPoly> ell, ys;
        size_t off = 0;
        for (size_t e = 0; e < consensus->degrees.size(); ++e) {
            size_t len = static_cast<size_t>(consensus->degrees[e] + 1);
            std::vector<Int> coeffs(last_candidate.begin() + off, last_candidate.begin() + off + len);
            off += len;
            if (e < static_cast<size_t>(shape.r + 1))
                ell.emplace_back(std::move(coeffs));
            else
                ys.emplace_back(std::move(coeffs));
        }
        while (ell.size() < static_cast<size_t>(shape.r + 1)) ell.emplace_back();
        while (ys.size() < static_cast<size_t>(shape.s + 1)) ys.emplace_back();

        CTRelation rel;
        try {
            rel = assemble_relation(term, std::move(ell), std::move(ys), shape.r, shape.s,
                                    RelationKind::Minimal);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InternalInconsistency) throw;
            reset_consensus();
            continue;
        }

        ModularReport report;
        report.prime_count = static_cast<long>(primes_used.size());
        report.unlucky_count = unlucky;
        report.resets = resets;
        report.smallest_prime = *std::min_element(primes_used.begin(), primes_used.end());
        report.height = height_of(rel);
        double avg = 0;
        for (u64 q : primes_used) avg += static_cast<double>(q);
        avg /= static_cast<double>(primes_used.size());
        report.predicted_primes = std::ceil(std::max(report.height, 0.0) / std::log(avg));
        report.primes_used = primes_used;
        long count = report.prime_count;
        return {std::move(rel), count, std::move(report)};
    }
}

} // namespace hypertel
