#include "hypertel/integer.hpp"

#include <cmath>

namespace hypertel {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NonpositiveBase: return "NonpositiveBase";
        case ErrorCode::InvalidOmega: return "InvalidOmega";
        case ErrorCode::NegativeExponent: return "NegativeExponent";
        case ErrorCode::NonIntegralConversion: return "NonIntegralConversion";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::DegenerateTerm: return "DegenerateTerm";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::OmegaTooSmall: return "OmegaTooSmall";
        case ErrorCode::UnluckyPrime: return "UnluckyPrime";
        case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
        case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
        case ErrorCode::ZeroOperator: return "ZeroOperator";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::SingularTerm: return "SingularTerm";
        case ErrorCode::WindowViolation: return "WindowViolation";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binomial_int(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

double ln_of(const Int& n) {
    if (n <= 0) fail(ErrorCode::InternalInconsistency, "ln_of: nonpositive argument");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

std::vector<Int> stirling2_row(unsigned long m) {
    std::vector<Int> row{Int(1)}; // S(0,0)=1
    for (unsigned long j = 1; j <= m; ++j) {
        std::vector<Int> next(j + 1, Int(0));
        for (unsigned long i = 0; i < row.size(); ++i) {
            if (i + 1 <= j) next[i + 1] += row[i];
            next[i] += Int(static_cast<long>(i)) * row[i];
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Int> stirling1_signed_row(unsigned long m) {
    // x^{falling j+1} = (x - j) * x^{falling j}
    std::vector<Int> row{Int(1)};
    for (unsigned long j = 1; j <= m; ++j) {
        std::vector<Int> next(j + 1, Int(0));
        for (unsigned long i = 0; i < row.size(); ++i) {
            next[i + 1] += row[i];
            next[i] -= Int(static_cast<long>(j - 1)) * row[i];
        }
        row = std::move(next);
    }
    return row;
}

long to_long_checked(const Int& v, const char* what) {
    if (!v.fits_slong_p())
        fail(ErrorCode::Overflow, std::string(what) + " does not fit a machine integer");
    return v.get_si();
}

std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::IoError, "malformed integer literal: " + s);
    }
}

} // namespace hypertel
