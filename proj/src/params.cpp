#include "tate/params.hpp"

#include <limits>
#include <stdexcept>

namespace tate {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Params Params::make(long p, long m, long k, long f, long e) {
    if (!is_prime(p)) throw std::invalid_argument("Params: p must be prime");
    if (f < 1) throw std::invalid_argument("Params: f must be >= 1");
    if (m < 1) throw std::invalid_argument("Params: m must be >= 1");
    if (k < 1) throw std::invalid_argument("Params: k must be >= 1");
    if (e < 1) throw std::invalid_argument("Params: e must be >= 1");
    long q = 1;
    for (long i = 0; i < f; ++i) {
        if (q > std::numeric_limits<long>::max() / p)
            throw std::invalid_argument("Params: q = p^f overflows");
        q *= p;
    }
    Params out;
    out.p = p;
    out.f = f;
    out.m = m;
    out.k = k;
    out.e = e;
    out.q = q;
    out.coset_count();  // overflow check
    return out;
}

long Params::coset_count() const {
    long n = m * (q - 1);
    for (long i = 0; i + 1 < k; ++i) {
        if (n > std::numeric_limits<long>::max() / q)
            throw std::invalid_argument("Params: coset count overflows");
        n *= q;
    }
    return n;
}

std::string Params::to_string() const {
    std::string s = "p=" + std::to_string(p) + ",f=" + std::to_string(f) +
                    ",m=" + std::to_string(m) + ",k=" + std::to_string(k);
    if (e != 1) s += ",e=" + std::to_string(e);
    return s;
}

}  // namespace tate
