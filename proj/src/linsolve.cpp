#include "tate/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "tate/parallel.hpp"

namespace tate {

namespace {

constexpr long kExactGaussCutoff = 96;

// ---- exact rational elimination ----

double pivot_proxy(const Rat& x) { return std::fabs(x.get_d()); }

}  // namespace

RationalMatrix solve_gauss_exact(const RationalMatrix& A, const RationalMatrix& B) {
    const long n = A.rows();
    if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
    const long w = B.cols();
    // augmented working copy
    std::vector<std::vector<Rat>> M(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        auto& row = M[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(n + w));
        for (long j = 0; j < n; ++j) row[static_cast<size_t>(j)] = A.at(i, j);
        for (long j = 0; j < w; ++j) row[static_cast<size_t>(n + j)] = B.at(i, j);
    }
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        double best = 0.0;
        for (long r = c; r < n; ++r) {
            if (M[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
            double mag = pivot_proxy(M[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            if (piv < 0 || mag > best) {
                piv = r;
                best = mag;
            }
        }
        if (piv < 0) throw SingularSystem();
        if (piv != c) std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(c)]);
        const auto& prow = M[static_cast<size_t>(c)];
        parallel_for(n - c - 1, [&](long t) {
            long r = c + 1 + t;
            auto& row = M[static_cast<size_t>(r)];
            if (row[static_cast<size_t>(c)] == 0) return;
            Rat f = row[static_cast<size_t>(c)] / prow[static_cast<size_t>(c)];
            row[static_cast<size_t>(c)] = 0;
            for (long j = c + 1; j < n + w; ++j)
                if (prow[static_cast<size_t>(j)] != 0)
                    row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        });
    }
    RationalMatrix X(n, w);
    for (long i = n - 1; i >= 0; --i) {
        const auto& row = M[static_cast<size_t>(i)];
        for (long j = 0; j < w; ++j) {
            Rat s = row[static_cast<size_t>(n + j)];
            for (long t = i + 1; t < n; ++t)
                if (row[static_cast<size_t>(t)] != 0) s -= row[static_cast<size_t>(t)] * X.at(t, j);
            X.at(i, j) = s / row[static_cast<size_t>(i)];
        }
    }
    return X;
}

namespace {

// ---- prime utilities (deterministic Miller-Rabin, valid for all 64-bit n) ----

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// idx-th prime below 2^62, scanning downward; deterministic sequence.
uint64_t nth_solver_prime(int idx) {
    static std::mutex mu;
    static std::vector<uint64_t> cache;
    static const uint64_t kStart = (uint64_t{1} << 62) - 1;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= idx) {
        uint64_t candidate = cache.empty() ? kStart : cache.back() - 2;
        while (!is_prime_u64(candidate)) candidate -= 2;
        cache.push_back(candidate);
    }
    return cache[static_cast<size_t>(idx)];
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

// ---- integer form of a rational matrix ----

struct IntegerForm {
    std::vector<Int> entries;  // row-major, scaled by denominator lcm
    Int scale;                 // lcm of all denominators
    long rows = 0, cols = 0;
};

IntegerForm to_integer_form(const RationalMatrix& M) {
    IntegerForm f;
    f.rows = M.rows();
    f.cols = M.cols();
    f.scale = 1;
    for (long i = 0; i < M.rows(); ++i)
        for (long j = 0; j < M.cols(); ++j)
            mpz_lcm(f.scale.get_mpz_t(), f.scale.get_mpz_t(), M.at(i, j).get_den().get_mpz_t());
    f.entries.resize(static_cast<size_t>(M.rows() * M.cols()));
    for (long i = 0; i < M.rows(); ++i)
        for (long j = 0; j < M.cols(); ++j) {
            Int v = M.at(i, j).get_num() * (f.scale / M.at(i, j).get_den());
            f.entries[static_cast<size_t>(i * M.cols() + j)] = v;
        }
    return f;
}

uint64_t mod_reduce(const Int& v, uint64_t p) {
    unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<uint64_t>(r);
}

// Gaussian elimination of [A | B] over Z/p. Returns false if A singular mod p.
bool solve_mod_p(const IntegerForm& A, const IntegerForm& B, uint64_t p, std::vector<uint64_t>& X) {
    const long n = A.rows;
    const long w = B.cols;
    std::vector<std::vector<uint64_t>> M(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        auto& row = M[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(n + w));
        for (long j = 0; j < n; ++j) row[static_cast<size_t>(j)] = mod_reduce(A.entries[static_cast<size_t>(i * n + j)], p);
        for (long j = 0; j < w; ++j) row[static_cast<size_t>(n + j)] = mod_reduce(B.entries[static_cast<size_t>(i * w + j)], p);
    }
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != c) std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(c)]);
        auto& prow = M[static_cast<size_t>(c)];
        uint64_t inv = invmod_u64(prow[static_cast<size_t>(c)], p);
        for (long r = c + 1; r < n; ++r) {
            auto& row = M[static_cast<size_t>(r)];
            uint64_t head = row[static_cast<size_t>(c)];
            if (head == 0) continue;
            uint64_t f = p - mulmod_u64(head, inv, p);  // row += f * prow cancels column c
            row[static_cast<size_t>(c)] = 0;
            for (long j = c + 1; j < n + w; ++j) {
                uint64_t v = prow[static_cast<size_t>(j)];
                if (v) row[static_cast<size_t>(j)] = (row[static_cast<size_t>(j)] + mulmod_u64(f, v, p)) % p;
            }
        }
    }
    X.assign(static_cast<size_t>(n * w), 0);
    for (long i = n - 1; i >= 0; --i) {
        const auto& row = M[static_cast<size_t>(i)];
        uint64_t inv = invmod_u64(row[static_cast<size_t>(i)], p);
        for (long j = 0; j < w; ++j) {
            uint64_t s = row[static_cast<size_t>(n + j)];
            for (long t = i + 1; t < n; ++t) {
                uint64_t v = row[static_cast<size_t>(t)];
                if (v) {
                    uint64_t sub = mulmod_u64(v, X[static_cast<size_t>(t * w + j)], p);
                    s = (s + p - sub) % p;
                }
            }
            X[static_cast<size_t>(i * w + j)] = mulmod_u64(s, inv, p);
        }
    }
    return true;
}

// x = value mod new_prime merged into (crt, modulus); updates crt in place.
void crt_merge(Int& crt, const Int& modulus, uint64_t residue, uint64_t p) {
    // delta = (residue - crt) * modulus^{-1} mod p
    uint64_t crt_mod_p = mod_reduce(crt, p);
    uint64_t mod_mod_p = mod_reduce(modulus, p);
    uint64_t delta = (residue + p - crt_mod_p) % p;
    delta = mulmod_u64(delta, invmod_u64(mod_mod_p, p), p);
    crt += modulus * Int(static_cast<unsigned long>(delta));
}

// Rational reconstruction of v mod N with |num|, den <= sqrt(N/2).
std::optional<Rat> rational_reconstruct(const Int& v, const Int& N) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(N / 2).get_mpz_t());
    Int r0 = N, r1 = v % N;
    if (r1 < 0) r1 += N;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int qout = r0 / r1;
        Int r2 = r0 - qout * r1;
        Int t2 = t0 - qout * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1 && g != -1) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

// Exact check A_int * (Xhat / L) == B scaled appropriately, done column-wise
// over the integers: A_int * Xhat_col == L_col * B_int_col.
bool verify_solution(const IntegerForm& A, const IntegerForm& B, const RationalMatrix& Z) {
    const long n = A.rows;
    const long w = B.cols;
    std::vector<char> col_ok(static_cast<size_t>(w), 0);
    parallel_for(w, [&](long j) {
        Int L = 1;
        for (long i = 0; i < n; ++i)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), Z.at(i, j).get_den().get_mpz_t());
        std::vector<Int> zcol(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) zcol[static_cast<size_t>(i)] = Z.at(i, j).get_num() * (L / Z.at(i, j).get_den());
        bool ok = true;
        Int acc;
        for (long i = 0; i < n && ok; ++i) {
            acc = 0;
            const Int* arow = &A.entries[static_cast<size_t>(i * n)];
            for (long t = 0; t < n; ++t) {
                if (mpz_sgn(arow[t].get_mpz_t()) != 0) mpz_addmul(acc.get_mpz_t(), arow[t].get_mpz_t(), zcol[static_cast<size_t>(t)].get_mpz_t());
            }
            if (acc != L * B.entries[static_cast<size_t>(i * w + j)]) ok = false;
        }
        col_ok[static_cast<size_t>(j)] = ok ? 1 : 0;
    });
    for (char ok : col_ok)
        if (!ok) return false;
    return true;
}

}  // namespace

RationalMatrix solve_multimodular(const RationalMatrix& A, const RationalMatrix& B) {
    const long n = A.rows();
    if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
    const long w = B.cols();
    IntegerForm Ai = to_integer_form(A);
    IntegerForm Bi = to_integer_form(B);

    std::vector<Int> crt(static_cast<size_t>(n * w), Int(0));
    Int modulus = 1;
    int prime_idx = 0;
    int singular_strikes = 0;
    constexpr int kBatch = 2;
    constexpr int kMaxPrimes = 200;

    while (prime_idx < kMaxPrimes) {
        std::vector<uint64_t> batch_primes;
        std::vector<std::vector<uint64_t>> batch_sol;
        while (static_cast<int>(batch_primes.size()) < kBatch && prime_idx < kMaxPrimes) {
            uint64_t p = nth_solver_prime(prime_idx++);
            batch_primes.push_back(p);
            batch_sol.emplace_back();
        }
        std::vector<char> ok(batch_primes.size(), 0);
        parallel_for(static_cast<long>(batch_primes.size()), [&](long b) {
            ok[static_cast<size_t>(b)] =
                solve_mod_p(Ai, Bi, batch_primes[static_cast<size_t>(b)], batch_sol[static_cast<size_t>(b)]) ? 1 : 0;
        });
        for (size_t b = 0; b < batch_primes.size(); ++b) {
            if (!ok[b]) {
                if (++singular_strikes >= 3) throw SingularSystem();
                continue;
            }
            uint64_t p = batch_primes[b];
            if (modulus == 1) {
                for (size_t t = 0; t < crt.size(); ++t) crt[t] = Int(static_cast<unsigned long>(batch_sol[b][t]));
                modulus = Int(static_cast<unsigned long>(p));
            } else {
                const auto& sol = batch_sol[b];
                parallel_for(n, [&](long i) {
                    for (long j = 0; j < w; ++j) {
                        size_t t = static_cast<size_t>(i * w + j);
                        crt_merge(crt[t], modulus, sol[t], p);
                    }
                });
                modulus *= Int(static_cast<unsigned long>(p));
            }
        }
        if (modulus == 1) continue;

        // attempt reconstruction; on success verify exactly and return
        bool all_ok = true;
        RationalMatrix Z(n, w);
        std::vector<char> row_ok(static_cast<size_t>(n), 1);
        parallel_for(n, [&](long i) {
            for (long j = 0; j < w; ++j) {
                auto r = rational_reconstruct(crt[static_cast<size_t>(i * w + j)], modulus);
                if (!r) {
                    row_ok[static_cast<size_t>(i)] = 0;
                    return;
                }
                Z.at(i, j) = *r;
            }
        });
        for (char okr : row_ok)
            if (!okr) all_ok = false;
        if (!all_ok) continue;
        if (!verify_solution(Ai, Bi, Z)) continue;
        // A X = B with X = Z * (scaleA / scaleB)
        Rat factor(Ai.scale, Bi.scale);
        factor.canonicalize();
        if (factor == 1) return Z;
        RationalMatrix X(n, w);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < w; ++j) X.at(i, j) = Z.at(i, j) * factor;
        return X;
    }
    throw std::runtime_error("solve_multimodular: no convergence (input may be singular)");
}

RationalMatrix solve_linear(const RationalMatrix& A, const RationalMatrix& B, SolveEngine engine) {
    switch (engine) {
        case SolveEngine::ExactGauss:
            return solve_gauss_exact(A, B);
        case SolveEngine::Multimodular:
            return solve_multimodular(A, B);
        case SolveEngine::Auto:
        default:
            return A.rows() <= kExactGaussCutoff ? solve_gauss_exact(A, B) : solve_multimodular(A, B);
    }
}

namespace {

// Row echelon over Z/p; returns rank and pivot column list.
long echelon_mod_p(const IntegerForm& A, uint64_t p, std::vector<std::vector<uint64_t>>& M,
                   std::vector<long>& pivot_cols) {
    const long n = A.rows;
    const long c = A.cols;
    M.assign(static_cast<size_t>(n), {});
    for (long i = 0; i < n; ++i) {
        M[static_cast<size_t>(i)].resize(static_cast<size_t>(c));
        for (long j = 0; j < c; ++j)
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod_reduce(A.entries[static_cast<size_t>(i * c + j)], p);
    }
    pivot_cols.clear();
    long row = 0;
    for (long col = 0; col < c && row < n; ++col) {
        long piv = -1;
        for (long r = row; r < n; ++r)
            if (M[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(row)]);
        auto& prow = M[static_cast<size_t>(row)];
        uint64_t inv = invmod_u64(prow[static_cast<size_t>(col)], p);
        for (long j = col; j < c; ++j) prow[static_cast<size_t>(j)] = mulmod_u64(prow[static_cast<size_t>(j)], inv, p);
        for (long r = 0; r < n; ++r) {
            if (r == row) continue;
            auto& rr = M[static_cast<size_t>(r)];
            uint64_t head = rr[static_cast<size_t>(col)];
            if (head == 0) continue;
            uint64_t f = p - head;
            for (long j = col; j < c; ++j) {
                uint64_t v = prow[static_cast<size_t>(j)];
                if (v) rr[static_cast<size_t>(j)] = (rr[static_cast<size_t>(j)] + mulmod_u64(f, v, p)) % p;
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return row;
}

}  // namespace

bool product_equals(const RationalMatrix& A, const RationalMatrix& X, const RationalMatrix& B) {
    if (A.cols() != X.rows() || A.rows() != B.rows() || X.cols() != B.cols()) return false;
    const long n = A.rows();
    const long inner = A.cols();
    const long w = X.cols();
    IntegerForm Ai = to_integer_form(A);
    std::vector<char> col_ok(static_cast<size_t>(w), 0);
    parallel_for(w, [&](long j) {
        Int L = 1;
        for (long i = 0; i < inner; ++i)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), X.at(i, j).get_den().get_mpz_t());
        for (long i = 0; i < n; ++i)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), B.at(i, j).get_den().get_mpz_t());
        std::vector<Int> xcol(static_cast<size_t>(inner));
        for (long i = 0; i < inner; ++i)
            xcol[static_cast<size_t>(i)] = X.at(i, j).get_num() * (L / X.at(i, j).get_den());
        bool ok = true;
        Int acc, rhs;
        for (long i = 0; i < n && ok; ++i) {
            acc = 0;
            const Int* arow = &Ai.entries[static_cast<size_t>(i * inner)];
            for (long t = 0; t < inner; ++t)
                if (mpz_sgn(arow[t].get_mpz_t()) != 0)
                    mpz_addmul(acc.get_mpz_t(), arow[t].get_mpz_t(), xcol[static_cast<size_t>(t)].get_mpz_t());
            rhs = B.at(i, j).get_num() * (L / B.at(i, j).get_den()) * Ai.scale;
            if (acc != rhs) ok = false;
        }
        col_ok[static_cast<size_t>(j)] = ok ? 1 : 0;
    });
    for (char ok : col_ok)
        if (!ok) return false;
    return true;
}

int kernel_dimension(const RationalMatrix& A) {
    const long n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("kernel_dimension: square matrix required");
    if (n == 0) return 0;
    IntegerForm Ai = to_integer_form(A);

    long best_rank = -1;
    std::vector<long> pivots;
    std::vector<std::vector<uint64_t>> echelon;
    uint64_t used_prime = 0;
    // a second prime guards against an unlucky first one
    for (int t = 0; t < 2; ++t) {
        std::vector<std::vector<uint64_t>> M;
        std::vector<long> pc;
        uint64_t p = nth_solver_prime(t);
        long r = echelon_mod_p(Ai, p, M, pc);
        if (r > best_rank) {
            best_rank = r;
            pivots = pc;
            echelon = std::move(M);
            used_prime = p;
        }
    }
    if (best_rank == n) return 0;
    long d = n - best_rank;

    // kernel vectors from the echelon structure, reconstructed over Q from a
    // growing modulus, then verified exactly; verified vectors certify the
    // kernel dimension from above (rank bound) and below (explicit vectors).
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<long> free_cols;
    for (long c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    Int modulus(static_cast<unsigned long>(used_prime));
    std::vector<std::vector<Int>> crt(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    auto fill_from_echelon = [&](const std::vector<std::vector<uint64_t>>& M, uint64_t p, bool merge) {
        for (size_t v = 0; v < free_cols.size(); ++v) {
            long fc = free_cols[v];
            std::vector<uint64_t> vec(static_cast<size_t>(n), 0);
            vec[static_cast<size_t>(fc)] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) {
                uint64_t val = M[r][static_cast<size_t>(fc)];
                vec[static_cast<size_t>(pivots[r])] = val == 0 ? 0 : p - val;
            }
            for (long i = 0; i < n; ++i) {
                if (merge)
                    crt_merge(crt[v][static_cast<size_t>(i)], modulus, vec[static_cast<size_t>(i)], p);
                else
                    crt[v][static_cast<size_t>(i)] = Int(static_cast<unsigned long>(vec[static_cast<size_t>(i)]));
            }
        }
    };
    fill_from_echelon(echelon, used_prime, false);

    int next_prime = 2;
    for (int round = 0; round < 48; ++round) {
        // try reconstruction + exact verification
        bool ok = true;
        std::vector<std::vector<Rat>> basis(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(n)));
        for (long v = 0; v < d && ok; ++v)
            for (long i = 0; i < n && ok; ++i) {
                auto r = rational_reconstruct(crt[static_cast<size_t>(v)][static_cast<size_t>(i)], modulus);
                if (!r)
                    ok = false;
                else
                    basis[static_cast<size_t>(v)][static_cast<size_t>(i)] = *r;
            }
        if (ok) {
            for (long v = 0; v < d && ok; ++v) {
                for (long i = 0; i < n && ok; ++i) {
                    Rat acc(0);
                    for (long j = 0; j < n; ++j)
                        if (A.at(i, j) != 0) acc += A.at(i, j) * basis[static_cast<size_t>(v)][static_cast<size_t>(j)];
                    if (acc != 0) ok = false;
                }
            }
            if (ok) return static_cast<int>(d);
        }
        // extend the modulus with another prime agreeing on the pivot set
        while (true) {
            uint64_t p = nth_solver_prime(next_prime++);
            std::vector<std::vector<uint64_t>> M;
            std::vector<long> pc;
            long r = echelon_mod_p(Ai, p, M, pc);
            if (r > best_rank) {
                // previous primes were unlucky: restart from this one
                best_rank = r;
                if (best_rank == n) return 0;
                d = n - best_rank;
                pivots = pc;
                is_pivot.assign(static_cast<size_t>(n), 0);
                for (long c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
                free_cols.clear();
                for (long c = 0; c < n; ++c)
                    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
                crt.assign(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(n), Int(0)));
                modulus = Int(static_cast<unsigned long>(p));
                fill_from_echelon(M, p, false);
                break;
            }
            if (r == best_rank && pc == pivots) {
                fill_from_echelon(M, p, true);
                modulus *= Int(static_cast<unsigned long>(p));
                break;
            }
            // smaller rank: unlucky prime, skip it
        }
    }
    throw std::runtime_error("kernel_dimension: no convergence");
}

}  // namespace tate
