#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hypertel/error.hpp"

namespace hypertel {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int factorial(unsigned long n);
Int pow_int(const Int& base, unsigned long e);
Int binomial_int(const Int& n, unsigned long k); // top may be negative
Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// n = d*2^e with d in [0.5, 1); natural log accurate to double precision,
// valid far beyond double range.
double ln_of(const Int& n);

// Stirling numbers, row m: second kind S(m, 0..m); signed first kind s(m, 0..m)
// with x^{falling m} = sum_i s(m,i) x^i.
std::vector<Int> stirling2_row(unsigned long m);
std::vector<Int> stirling1_signed_row(unsigned long m);

long to_long_checked(const Int& v, const char* what);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

} // namespace hypertel
