#pragma once

#include <string>

namespace tate {

// Problem instance: prime p, residue degree f, torus exponent m, level k.
// All formulas see the field only through the effective base q = p^f.
// The ramification index e is recorded but enters no formula.
struct Params {
    long p = 2;
    long f = 1;
    long m = 1;
    long k = 1;
    long e = 1;
    long q = 2;  // derived, p^f

    // Validates and derives q. Throws std::invalid_argument on bad input.
    static Params make(long p, long m, long k, long f = 1, long e = 1);

    // m * (q-1) * q^(k-1), the dimension of every level-k matrix.
    long coset_count() const;

    // Params at the next finer level (k+1), same field data.
    Params refined() const { return make(p, m, k + 1, f, e); }

    std::string to_string() const;

    bool operator==(const Params& o) const = default;
};

bool is_prime(long n);

}  // namespace tate
