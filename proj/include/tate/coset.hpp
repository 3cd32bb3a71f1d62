#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/params.hpp"
#include "tate/rational.hpp"

namespace tate {

// A point of the level-k quotient: valuation s in [0, m) and k digits over
// {0, ..., q-1} with a nonzero leading digit. The digit string is abstract
// (one symbol per residue class); no ring structure is assumed unless f = 1,
// in which case digit t of a coset with valuation s is the coefficient of
// p^(s+t) in the representative.
struct Coset {
    int s = 0;
    std::vector<int> digits;

    auto operator<=>(const Coset&) const = default;
};

// Thrown when v(x - y) is not determined at this level (identical cosets).
struct UnresolvedValuation : std::runtime_error {
    UnresolvedValuation() : std::runtime_error("valuation unresolved at this level") {}
};

// All level-k cosets in the canonical order: by s, then digits, lexicographic.
// This order is the index used by every matrix in the project.
std::vector<Coset> enumerate_cosets(const Params& params);

// Index of c in the canonical order, computed arithmetically.
long coset_index(const Coset& c, const Params& params);

// v(a - b) for any representatives. Throws UnresolvedValuation when a == b.
int valuation_of_difference(const Coset& a, const Coset& b);

// Additive Haar measure q^(-s-k) of the ball the coset represents.
Rat additive_measure(const Coset& c, const Params& params);

// Multiplicative Haar measure q^(-k); uniform across cosets.
Rat multiplicative_measure(const Coset& c, const Params& params);

// mu+ of the shell {v(z) = r, v(z-y) = i}: (q-2)q^(-r-1) at i = r,
// (q-1)q^(-i-1) for i > r. Throws on i < r.
Rat shell_measure(long r, long i, const Params& params);

// Coset of u*x for a unit u (gcd(u, p) = 1). Only for f = 1.
Coset unit_multiply(const Coset& c, long u, const Params& params);

// Coset of p^(m-1) * x^(-1). Only for f = 1.
Coset reflect(const Coset& c, const Params& params);

// Compact form "s:d0d1..."; digits rendered base-10 and '.'-separated when q > 10.
std::string coset_to_string(const Coset& c, const Params& params);

}  // namespace tate
