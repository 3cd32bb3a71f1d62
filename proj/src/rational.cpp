#include "tate/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace tate {

Rat rat_pow(long base, long e) {
    if (base == 0) throw std::invalid_argument("rat_pow: zero base");
    Int b(base);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r;
    if (e >= 0) {
        r = Rat(p);
    } else {
        r = Rat(Int(1), p);
        r.canonicalize();
    }
    return r;
}

std::string rat_str(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

// "tok" is "digits" or "digits^digits"; returns the integer value.
Int parse_pow_token(const std::string& tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) {
        if (tok.empty()) throw std::invalid_argument("parse_rat: empty token");
        return Int(tok);
    }
    Int base(tok.substr(0, caret));
    std::string es = tok.substr(caret + 1);
    if (es.empty()) throw std::invalid_argument("parse_rat: empty exponent");
    unsigned long e = std::strtoul(es.c_str(), nullptr, 10);
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
        neg = (t[0] == '-');
        t = t.substr(1);
    }
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '^')
            throw std::invalid_argument("parse_rat: bad character in '" + s + "'");
    auto slash = t.find('/');
    Int num, den(1);
    if (slash == std::string::npos) {
        num = parse_pow_token(t);
    } else {
        num = parse_pow_token(t.substr(0, slash));
        den = parse_pow_token(t.substr(slash + 1));
    }
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

double rat_double(const Rat& x) { return x.get_d(); }

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace tate
