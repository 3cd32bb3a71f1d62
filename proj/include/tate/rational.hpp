#pragma once

#include <gmpxx.h>
#include <string>

namespace tate {

// Exact rational scalar used throughout. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// base^e as an exact rational; e may be negative. base must be nonzero.
Rat rat_pow(long base, long e);

// Canonical rendering "num/den" (den > 0, gcd 1, sign on the numerator).
std::string rat_str(const Rat& x);

// Parses "n", "-n", "n/d", and power forms "n^a", "n/d^b", "n^a/d^b".
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

double rat_double(const Rat& x);

// |x| <= |y| comparison helper for interval tests.
Rat rat_abs(const Rat& x);

}  // namespace tate
