#pragma once

#include <stdexcept>
#include <string>

namespace hypertel {

// Every domain failure carries a stable machine-readable code; the CLI maps
// these to exit status 1 with a JSON object on stderr.
enum class ErrorCode {
    NegativeCoefficient,
    ZeroPolynomial,
    NonpositiveBase,
    InvalidOmega,
    NegativeExponent,
    NonIntegralConversion,
    HypothesisViolation,
    DegenerateTerm,
    InternalInconsistency,
    OrderTooSmall,
    OmegaTooSmall,
    UnluckyPrime,
    NonCoprimeModuli,
    ReconstructionFailed,
    ZeroOperator,
    RankDeficient,
    Timeout,
    IoError,
    SingularTerm,
    WindowViolation,
    Overflow,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace hypertel
