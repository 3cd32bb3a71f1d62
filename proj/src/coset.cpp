#include "tate/coset.hpp"

namespace tate {

std::vector<Coset> enumerate_cosets(const Params& params) {
    const long q = params.q;
    std::vector<Coset> out;
    out.reserve(static_cast<size_t>(params.coset_count()));
    for (int s = 0; s < params.m; ++s) {
        Coset c;
        c.s = s;
        c.digits.assign(static_cast<size_t>(params.k), 0);
        c.digits[0] = 1;
        while (true) {
            out.push_back(c);
            // next digit string, last digit fastest; leading digit stays nonzero
            int pos = static_cast<int>(c.digits.size()) - 1;
            while (pos >= 0) {
                if (++c.digits[static_cast<size_t>(pos)] < q) break;
                c.digits[static_cast<size_t>(pos)] = (pos == 0) ? 1 : 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

long coset_index(const Coset& c, const Params& params) {
    const long q = params.q;
    long block = (q - 1);
    for (long i = 0; i + 1 < params.k; ++i) block *= q;
    long idx = c.s * block;
    long off = c.digits[0] - 1;
    for (size_t t = 1; t < c.digits.size(); ++t) off = off * q + c.digits[t];
    return idx + off;
}

int valuation_of_difference(const Coset& a, const Coset& b) {
    if (a.s != b.s) return std::min(a.s, b.s);
    for (size_t t = 0; t < a.digits.size(); ++t)
        if (a.digits[t] != b.digits[t]) return a.s + static_cast<int>(t);
    throw UnresolvedValuation();
}

Rat additive_measure(const Coset& c, const Params& params) {
    return rat_pow(params.q, -(c.s + params.k));
}

Rat multiplicative_measure(const Coset&, const Params& params) {
    return rat_pow(params.q, -params.k);
}

Rat shell_measure(long r, long i, const Params& params) {
    if (r < 0 || r >= params.m) throw std::invalid_argument("shell_measure: r out of range");
    if (i < r) throw std::invalid_argument("shell_measure: i < r");
    const long q = params.q;
    if (i == r) return Rat(q - 2) * rat_pow(q, -(r + 1));
    return Rat(q - 1) * rat_pow(q, -(i + 1));
}

namespace {

Int coset_unit_part(const Coset& c, long p) {
    // digits as base-p expansion of the unit representative, digit 0 lowest
    Int u = 0;
    for (size_t t = c.digits.size(); t-- > 0;) u = u * p + c.digits[t];
    return u;
}

Coset coset_from_unit(const Int& u, int s, const Params& params) {
    Coset out;
    out.s = s;
    out.digits.resize(static_cast<size_t>(params.k));
    Int rest = u;
    for (long t = 0; t < params.k; ++t) {
        Int d = rest % params.p;
        out.digits[static_cast<size_t>(t)] = static_cast<int>(d.get_si());
        rest /= params.p;
    }
    return out;
}

Int p_power(long p, long k) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

Coset unit_multiply(const Coset& c, long u, const Params& params) {
    if (params.f != 1) throw std::invalid_argument("unit_multiply: unsupported for extensions");
    if (u % params.p == 0) throw std::invalid_argument("unit_multiply: u not a unit");
    Int pk = p_power(params.p, params.k);
    Int prod = coset_unit_part(c, params.p) * u;
    mpz_fdiv_r(prod.get_mpz_t(), prod.get_mpz_t(), pk.get_mpz_t());
    return coset_from_unit(prod, c.s, params);
}

Coset reflect(const Coset& c, const Params& params) {
    if (params.f != 1) throw std::invalid_argument("reflect: unsupported for extensions");
    Int pk = p_power(params.p, params.k);
    Int unit = coset_unit_part(c, params.p);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::logic_error("reflect: representative not a unit");
    return coset_from_unit(inv, static_cast<int>(params.m - 1 - c.s), params);
}

std::string coset_to_string(const Coset& c, const Params& params) {
    std::string out = std::to_string(c.s) + ":";
    for (size_t t = 0; t < c.digits.size(); ++t) {
        if (params.q > 10 && t > 0) out += '.';
        out += std::to_string(c.digits[t]);
    }
    return out;
}

}  // namespace tate
