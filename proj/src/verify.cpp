#include "tate/verify.hpp"

#include <map>
#include <random>

#include "tate/analytic.hpp"
#include "tate/cmatrix_fixtures.hpp"
#include "tate/green.hpp"
#include "tate/laplacian.hpp"
#include "tate/shell_sums.hpp"

namespace tate {

namespace {

constexpr long kSuiteDimLimit = 600;

std::string pair_witness(const Coset& x, const Coset& y, const Params& params) {
    return "(" + coset_to_string(x, params) + ", " + coset_to_string(y, params) + ")";
}

// deterministic unit sample: all units mod p^k when few, else evenly spaced
std::vector<long> unit_sample(const Params& params, long cap) {
    long pk = 1;
    for (long t = 0; t < params.k; ++t) pk *= params.p;
    std::vector<long> units;
    for (long u = 1; u < pk; ++u)
        if (u % params.p != 0) units.push_back(u);
    if (static_cast<long>(units.size()) <= cap) return units;
    std::vector<long> out;
    double step = static_cast<double>(units.size()) / static_cast<double>(cap);
    for (long t = 0; t < cap; ++t) out.push_back(units[static_cast<size_t>(t * step)]);
    return out;
}

std::vector<long> index_sample(long n, long cap) {
    std::vector<long> out;
    if (n <= cap) {
        for (long i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    double step = static_cast<double>(n) / static_cast<double>(cap);
    for (long t = 0; t < cap; ++t) out.push_back(static_cast<long>(t * step));
    return out;
}

uint64_t params_seed(const Params& params) {
    return 0x9e3779b97f4a7c15ULL ^ (static_cast<uint64_t>(params.p) << 40) ^
           (static_cast<uint64_t>(params.f) << 32) ^ (static_cast<uint64_t>(params.m) << 16) ^
           static_cast<uint64_t>(params.k);
}

}  // namespace

Report crosscheck_green(const Params& params, const Rat& tol) {
    const auto cosets = enumerate_cosets(params);
    bool any = false;
    for (size_t i = 0; i < cosets.size() && !any; ++i)
        for (size_t j = 0; j < cosets.size() && !any; ++j)
            if (i != j && pair_is_resolved(cosets[i], cosets[j], params)) any = true;
    if (!any) {
        Report r;
        r.grid.push_back(params.to_string());
        r.skip("oracle-analytic-difference-containment", params.to_string(),
               "no resolved pairs at this level");
        return r;
    }
    return crosscheck_green(solve_green(params), tol);
}

Report crosscheck_green(const GreenTable& g, const Rat& tol) {
    const Params& params = g.params;
    Report r;
    const std::string ps = params.to_string();
    r.grid.push_back(ps);
    const auto cosets = enumerate_cosets(params);
    const long n = static_cast<long>(cosets.size());

    long ref_i = -1, ref_j = -1;
    for (long i = 0; i < n && ref_i < 0; ++i)
        for (long j = 0; j < n; ++j)
            if (i != j && pair_is_resolved(cosets[static_cast<size_t>(i)], cosets[static_cast<size_t>(j)], params)) {
                ref_i = i;
                ref_j = j;
                break;
            }
    if (ref_i < 0) {
        r.skip("oracle-analytic-difference-containment", ps, "no resolved pairs at this level");
        return r;
    }

    const AnalyticParams ap = make_analytic_params(params);
    const RationalMatrix C = c_matrix(params);
    const Rat half_tol = tol / 2;

    // B depends only on (valuation, difference valuation); cache it
    std::map<std::pair<int, int>, BoundedValue> bcache;
    auto b_of = [&](const Coset& x, const Coset& y) {
        int l = valuation_of_difference(x, y);
        if (x.s != y.s) return BoundedValue::exact(Rat(0));
        auto key = std::make_pair(x.s, l);
        auto it = bcache.find(key);
        if (it == bcache.end()) it = bcache.emplace(key, b_value(x.s, y.s, l, ap, half_tol)).first;
        return it->second;
    };
    auto enclosure_of = [&](const Coset& x, const Coset& y) { return b_of(x, y) + C.at(x.s, y.s); };

    const BoundedValue ref_val = enclosure_of(cosets[static_cast<size_t>(ref_i)], cosets[static_cast<size_t>(ref_j)]);
    const Rat ref_oracle = g.matrix.at(ref_i, ref_j);

    long tested = 0;
    bool ok = true;
    std::string witness;
    for (long i = 0; i < n && ok; ++i) {
        for (long j = 0; j < n && ok; ++j) {
            if (i == j) continue;
            const Coset& x = cosets[static_cast<size_t>(i)];
            const Coset& y = cosets[static_cast<size_t>(j)];
            if (!pair_is_resolved(x, y, params)) continue;
            ++tested;
            BoundedValue diff = enclosure_of(x, y) - ref_val;
            Rat oracle_diff = g.matrix.at(i, j) - ref_oracle;
            if (!diff.contains(oracle_diff) || diff.radius > tol) {
                ok = false;
                witness = pair_witness(x, y, params) + " oracle_diff=" + rat_str(oracle_diff) +
                          " center=" + rat_str(diff.center) + " radius=" + rat_str(diff.radius);
            }
        }
    }
    r.check(ok, "oracle-analytic-difference-containment", ps, witness);
    r.check(tested > 0, "oracle-analytic-pairs-nonempty", ps, "resolved pair scan found none");
    return r;
}

namespace {

void domain_checks(Report& r, const Params& params, const std::vector<Coset>& cosets) {
    const std::string ps = params.to_string();
    const long n = static_cast<long>(cosets.size());
    const long q = params.q;

    r.check(n == params.coset_count(), "coset-count", ps,
            "enumerated " + std::to_string(n) + " expected " + std::to_string(params.coset_count()));

    {
        bool ok = true;
        std::string w;
        auto ids = index_sample(n, 24);
        for (long a : ids) {
            for (long b : ids) {
                if (a == b) continue;
                const Coset& x = cosets[static_cast<size_t>(a)];
                const Coset& y = cosets[static_cast<size_t>(b)];
                int vxy = valuation_of_difference(x, y);
                if (vxy != valuation_of_difference(y, x)) {
                    ok = false;
                    w = "asymmetry at " + pair_witness(x, y, params);
                    break;
                }
                for (long c : ids) {
                    if (c == a || c == b) continue;
                    const Coset& z = cosets[static_cast<size_t>(c)];
                    int vxz = valuation_of_difference(x, z);
                    int vyz = valuation_of_difference(y, z);
                    if (vxz < std::min(vxy, vyz)) {
                        ok = false;
                        w = "ultrametric violated at indices " + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c);
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        r.check(ok, "valuation-symmetry-ultrametric", ps, w);
    }

    {
        bool ok = true;
        std::string w;
        std::vector<Rat> per_s(static_cast<size_t>(params.m), Rat(0));
        Rat total_mult(0);
        for (const Coset& c : cosets) {
            per_s[static_cast<size_t>(c.s)] += additive_measure(c, params);
            total_mult += multiplicative_measure(c, params);
        }
        for (long s = 0; s < params.m; ++s) {
            Rat expect = Rat(q - 1) * rat_pow(q, -s - 1);
            if (per_s[static_cast<size_t>(s)] != expect) {
                ok = false;
                w = "additive sum at s=" + std::to_string(s) + " is " + rat_str(per_s[static_cast<size_t>(s)]);
            }
        }
        r.check(ok, "additive-measure-sums", ps, w);
        r.check(total_mult == domain_volume(params), "multiplicative-measure-total", ps,
                "total " + rat_str(total_mult));
    }

    {
        bool ok = true;
        std::string w;
        for (long rr = 0; rr < params.m && ok; ++rr) {
            Rat acc = rat_pow(q, -rr - params.k);  // residual ball
            for (long i = rr; i < rr + params.k; ++i) acc += shell_measure(rr, i, params);
            Rat expect = Rat(q - 1) * rat_pow(q, -rr - 1);
            if (acc != expect) {
                ok = false;
                w = "telescoped " + rat_str(acc) + " at r=" + std::to_string(rr);
            }
        }
        r.check(ok, "shell-measure-telescoping", ps, w);
    }

    if (params.f != 1) {
        r.skip("unit-multiply-bijection", ps, "unsupported for extensions");
        r.skip("reflect-involution", ps, "unsupported for extensions");
        return;
    }

    {
        bool ok = true;
        std::string w;
        auto units = unit_sample(params, 16);
        auto pair_ids = index_sample(n, 20);
        for (long u : units) {
            std::vector<char> seen(static_cast<size_t>(n), 0);
            for (long i = 0; i < n; ++i) {
                Coset img = unit_multiply(cosets[static_cast<size_t>(i)], u, params);
                if (img.s != cosets[static_cast<size_t>(i)].s) {
                    ok = false;
                    w = "u=" + std::to_string(u) + " changes valuation";
                    break;
                }
                long idx = coset_index(img, params);
                if (seen[static_cast<size_t>(idx)]) {
                    ok = false;
                    w = "u=" + std::to_string(u) + " not injective";
                    break;
                }
                seen[static_cast<size_t>(idx)] = 1;
            }
            for (long a : pair_ids) {
                if (!ok) break;
                for (long b : pair_ids) {
                    if (a == b) continue;
                    const Coset& x = cosets[static_cast<size_t>(a)];
                    const Coset& y = cosets[static_cast<size_t>(b)];
                    if (valuation_of_difference(unit_multiply(x, u, params), unit_multiply(y, u, params)) !=
                        valuation_of_difference(x, y)) {
                        ok = false;
                        w = "u=" + std::to_string(u) + " moves v(x-y) at " + pair_witness(x, y, params);
                        break;
                    }
                }
            }
            if (!ok) break;
        }
        r.check(ok, "unit-multiply-bijection", ps, w);
    }

    {
        bool ok = true;
        std::string w;
        for (const Coset& c : cosets) {
            Coset img = reflect(c, params);
            if (img.s != params.m - 1 - c.s) {
                ok = false;
                w = "valuation image wrong at " + coset_to_string(c, params);
                break;
            }
            if (reflect(img, params) != c) {
                ok = false;
                w = "not an involution at " + coset_to_string(c, params);
                break;
            }
        }
        r.check(ok, "reflect-involution", ps, w);
    }
}

// permutation action on indices for f = 1 symmetries
std::vector<long> permutation_of(const std::vector<Coset>& cosets, const Params& params,
                                 const std::function<Coset(const Coset&)>& fn) {
    std::vector<long> perm(cosets.size());
    for (size_t i = 0; i < cosets.size(); ++i) perm[i] = coset_index(fn(cosets[i]), params);
    return perm;
}

bool commutes_with_permutation(const RationalMatrix& M, const std::vector<long>& perm) {
    const long n = M.rows();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (M.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) != M.at(i, j)) return false;
    return true;
}

void operator_checks(Report& r, const Params& params, const std::vector<Coset>& cosets,
                     const RationalMatrix& D, double spectral_tol) {
    const std::string ps = params.to_string();
    const long n = static_cast<long>(cosets.size());

    r.check(D.is_symmetric(), "operator-symmetric", ps, "entrywise comparison failed");
    {
        bool ok = true;
        std::string w;
        for (long i = 0; i < n; ++i)
            if (D.row_sum(i) != 0) {
                ok = false;
                w = "row " + std::to_string(i) + " sums to " + rat_str(D.row_sum(i));
                break;
            }
        r.check(ok, "operator-row-sums-zero", ps, w);
    }

    if (params.f == 1) {
        bool ok = true;
        std::string w;
        for (long u : unit_sample(params, 12)) {
            auto perm = permutation_of(cosets, params, [&](const Coset& c) { return unit_multiply(c, u, params); });
            if (!commutes_with_permutation(D, perm)) {
                ok = false;
                w = "unit u=" + std::to_string(u);
                break;
            }
        }
        r.check(ok, "operator-commutes-unit-permutations", ps, w);
        auto perm = permutation_of(cosets, params, [&](const Coset& c) { return reflect(c, params); });
        r.check(commutes_with_permutation(D, perm), "operator-commutes-reflection", ps, "");
    } else {
        r.skip("operator-commutes-unit-permutations", ps, "unsupported for extensions");
        r.skip("operator-commutes-reflection", ps, "unsupported for extensions");
    }

    {
        std::mt19937_64 rng(params_seed(params));
        std::uniform_int_distribution<long> num(-999, 999);
        std::uniform_int_distribution<long> den(1, 99);
        bool ok = true;
        std::string w;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            SampledFunction f(static_cast<size_t>(n));
            for (long i = 0; i < n; ++i) {
                Rat v(num(rng), den(rng));
                v.canonicalize();
                f[static_cast<size_t>(i)] = v;
            }
            SampledFunction Df = tate::apply(D, f);
            Rat quad(0);
            for (long i = 0; i < n; ++i) quad += Df[static_cast<size_t>(i)] * f[static_cast<size_t>(i)];
            quad *= multiplicative_measure(cosets[0], params);
            if (quad > 0) {
                ok = false;
                w = "trial " + std::to_string(trial) + " quadratic form " + rat_str(quad);
            }
        }
        r.check(ok, "operator-negative-semidefinite-quadratic", ps, w);
    }

    {
        // constant functions are annihilated
        SampledFunction ones(static_cast<size_t>(n), Rat(1));
        SampledFunction img = tate::apply(D, ones);
        bool ok = true;
        for (const Rat& v : img)
            if (v != 0) ok = false;
        r.check(ok, "operator-annihilates-constants", ps, "");
    }

    const Params fine = params.refined();
    if (fine.coset_count() <= kSuiteDimLimit) {
        RationalMatrix Dfine = build_operator_matrix(fine);
        const long q = params.q;
        std::mt19937_64 rng(params_seed(params) ^ 0x5bull);
        std::uniform_int_distribution<long> num(-99, 99);
        bool ok = true;
        std::string w;
        for (int trial = 0; trial < 3 && ok; ++trial) {
            SampledFunction f(static_cast<size_t>(n));
            for (long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = Rat(num(rng));
            SampledFunction lifted(static_cast<size_t>(fine.coset_count()));
            for (long i = 0; i < n; ++i)
                for (long d = 0; d < q; ++d) lifted[static_cast<size_t>(q * i + d)] = f[static_cast<size_t>(i)];
            SampledFunction coarse_img = tate::apply(D, f);
            SampledFunction fine_img = tate::apply(Dfine, lifted);
            for (long i = 0; i < n && ok; ++i)
                for (long d = 0; d < q; ++d)
                    if (fine_img[static_cast<size_t>(q * i + d)] != coarse_img[static_cast<size_t>(i)]) {
                        ok = false;
                        w = "fiber " + std::to_string(i) + " lift " + std::to_string(d);
                        break;
                    }
        }
        r.check(ok, "operator-preserves-locally-constant", ps, w);
    } else {
        r.skip("operator-preserves-locally-constant", ps, "level k+1 exceeds the size budget");
    }

    {
        RationalMatrix cmat = RationalMatrix::constant(fine.coset_count(), fine.coset_count(), Rat(7, 3));
        RationalMatrix avg = fiber_average(cmat, params);
        bool ok = avg.rows() == n;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n; ++j)
                if (avg.at(i, j) != Rat(7, 3)) {
                    ok = false;
                    break;
                }
        r.check(ok, "fiber-average-constant", ps, "");
    }

    {
        Spectrum s = spectrum(D, spectral_tol);
        bool sign_ok = true;
        for (double ev : s.eigenvalues)
            if (ev > spectral_tol) sign_ok = false;
        r.check(sign_ok, "spectrum-nonpositive", ps,
                sign_ok ? "" : "max eigenvalue " + std::to_string(s.eigenvalues.back()));
        r.check(s.kernel_dim == 1, "kernel-dimension-one", ps,
                "kernel dim " + std::to_string(s.kernel_dim));
    }
}

void oracle_checks(Report& r, const Params& params, const std::vector<Coset>& cosets,
                   const RationalMatrix& D) {
    const std::string ps = params.to_string();
    const long n = static_cast<long>(cosets.size());
    GreenTable g = solve_green(params);

    r.check(g.matrix.is_symmetric(), "green-symmetric", ps, "");
    r.check(g.matrix.max_entry() == 0, "green-max-zero", ps, "max " + rat_str(g.matrix.max_entry()));
    r.check(green_equation_holds(D, g), "green-equation-exact", ps, "nonzero residual");

    {
        // rhs columns integrate to zero against mu-x
        RationalMatrix rhs = green_rhs(params);
        Rat mu = multiplicative_measure(cosets[0], params);
        bool ok = true;
        for (long j = 0; j < n && ok; ++j) {
            Rat acc(0);
            for (long i = 0; i < n; ++i) acc += rhs.at(i, j);
            if (acc * mu != 0) ok = false;
        }
        r.check(ok, "green-rhs-zero-mean", ps, "");
    }

    const Params fine = params.refined();
    if (fine.coset_count() <= kSuiteDimLimit) {
        GreenTable gfine = solve_green(fine);
        RationalMatrix avg = fiber_average(gfine.matrix, params);
        Rat delta = avg.at(0, 0) - g.matrix.at(0, 0);
        bool ok = true;
        std::string w;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n; ++j)
                if (avg.at(i, j) - g.matrix.at(i, j) != delta) {
                    ok = false;
                    w = "offset differs at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        r.check(ok, "green-fiber-consistency", ps, w);

        if (n >= 2) {
            bool st_ok = true;
            std::string w2;
            long tested = 0;
            Rat ref = g.matrix.at(0, 1);
            for (long i = 0; i < n && tested < 4; ++i)
                for (long j = 0; j < n && tested < 4; ++j) {
                    if (i == j) continue;
                    const Coset& x = cosets[static_cast<size_t>(i)];
                    const Coset& y = cosets[static_cast<size_t>(j)];
                    if (!pair_is_resolved(x, y, params)) continue;
                    ++tested;
                    Rat direct = g.matrix.at(i, j) - ref;
                    Rat stab = stabilized_value(x, y, params, params.k + 2);
                    if (stab != direct) {
                        st_ok = false;
                        w2 = pair_witness(x, y, params);
                    }
                }
            if (tested == 0)
                r.skip("green-stabilization-threshold", ps, "no resolved pairs at this level");
            else
                r.check(st_ok, "green-stabilization-threshold", ps, w2);
        } else {
            r.skip("green-stabilization-threshold", ps, "fewer than two cosets");
        }
    } else {
        r.skip("green-fiber-consistency", ps, "level k+1 exceeds the size budget");
        r.skip("green-stabilization-threshold", ps, "level k+1 exceeds the size budget");
    }

    if (params.f == 1) {
        bool ok = true;
        std::string w;
        for (long u : unit_sample(params, 12)) {
            auto perm = permutation_of(cosets, params, [&](const Coset& c) { return unit_multiply(c, u, params); });
            if (!commutes_with_permutation(g.matrix, perm)) {
                ok = false;
                w = "unit u=" + std::to_string(u);
                break;
            }
        }
        r.check(ok, "green-unit-invariance", ps, w);
        auto perm = permutation_of(cosets, params, [&](const Coset& c) { return reflect(c, params); });
        r.check(commutes_with_permutation(g.matrix, perm), "green-reflection-invariance", ps, "");
    } else {
        r.skip("green-unit-invariance", ps, "unsupported for extensions");
        r.skip("green-reflection-invariance", ps, "unsupported for extensions");
    }

    {
        // leading-digit dependence: if v(x - x') >= v(x - y) + (m - s_y) then
        // x and x' see the same Green value against y
        bool ok = true;
        std::string w;
        auto ids = index_sample(n, 40);
        for (long a : ids) {
            const Coset& y = cosets[static_cast<size_t>(a)];
            for (long b : ids) {
                if (b == a) continue;
                const Coset& x = cosets[static_cast<size_t>(b)];
                for (long c : ids) {
                    if (c == a || c == b) continue;
                    const Coset& x2 = cosets[static_cast<size_t>(c)];
                    if (x.s != x2.s) continue;
                    int l = valuation_of_difference(x, y);
                    if (valuation_of_difference(x2, y) != l) continue;
                    if (valuation_of_difference(x, x2) < l + (params.m - y.s)) continue;
                    if (g.matrix.at(b, a) != g.matrix.at(c, a)) {
                        ok = false;
                        w = "y=" + coset_to_string(y, params) + " x=" + coset_to_string(x, params) +
                            " x'=" + coset_to_string(x2, params);
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        r.check(ok, "green-digit-dependence", ps, w);
    }
}

void analytic_checks(Report& r, const Params& params, const Rat& shell_tol) {
    const std::string ps = params.to_string();
    const AnalyticParams ap = make_analytic_params(params);
    const long m = params.m;
    const long q = params.q;

    {
        bool ok = true;
        for (long rr = 0; rr < m; ++rr) {
            if (ap.U(rr) != ap.U(m - 1 - rr)) ok = false;
            for (long nn = 1; nn <= 8; ++nn)
                if (lambda_n(nn, rr, ap) != lambda_n(nn, m - 1 - rr, ap)) ok = false;
        }
        r.check(ok, "lambda-symmetry", ps, "");
    }

    {
        // nested, shrinking enclosures as the tolerance tightens
        bool ok = true;
        std::string w;
        for (long rr = 0; rr < m && ok; ++rr) {
            for (long dl = 1; dl <= 3 && ok; ++dl) {
                BoundedValue prev = b_value(rr, rr, rr + dl, ap, Rat(1, 100));
                for (int step = 0; step < 4; ++step) {
                    Rat tol = prev.radius / 1000;
                    BoundedValue next = b_value(rr, rr, rr + dl, ap, tol);
                    if (!(next.radius < prev.radius) || !next.within(prev)) {
                        ok = false;
                        w = "r=" + std::to_string(rr) + " l-r=" + std::to_string(dl);
                        break;
                    }
                    prev = next;
                }
            }
        }
        r.check(ok, "b-enclosure-nesting", ps, w);
    }

    {
        bool ok = true;
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
                if (i != j) {
                    BoundedValue v = b_value(i, j, std::min(i, j), ap, Rat(1, 1000));
                    if (v.center != 0 || v.radius != 0) ok = false;
                }
            }
        for (long rr = 0; rr < m; ++rr) {
            BoundedValue v = b_value(rr, rr, rr, ap, Rat(1, 1000));
            if (v.center != 0 || v.radius != 0) ok = false;
        }
        r.check(ok, "b-zero-cases", ps, "");
    }

    const RationalMatrix C = c_matrix(params);
    {
        bool ok = true;
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
                if (C.at(i, j) != C.at(j, i)) ok = false;
                if (C.at(i, j) != C.at(m - 1 - i, m - 1 - j)) ok = false;
            }
        r.check(ok, "c-matrix-bisymmetric", ps, "");
    }
    {
        bool ok = true;
        for (long i = 0; i < m && ok; ++i)
            for (long j = 0; j < m && ok; ++j)
                for (long t = 0; t < m; ++t)
                    if (C.at(i, j) + C.at(j, t) + C.at(t, i) != C.at(j, i) + C.at(t, j) + C.at(i, t)) {
                        ok = false;
                        break;
                    }
        r.check(ok, "c-matrix-four-point", ps, "");
    }
    if (m >= 2) {
        r.check(c_matrix_via_linear_system(params) == C, "c-matrix-routes-agree", ps,
                "recurrence and linear system disagree");
    } else {
        r.skip("c-matrix-routes-agree", ps, "degenerate at m=1");
    }
    {
        bool ok = true;
        Rat expect = Rat(q, q - 1);
        for (long j = 0; j < m; ++j) {
            Rat acc(0);
            for (long i = 0; i < m; ++i) acc -= db_closed_form(i, j, ap);
            if (acc != expect) ok = false;
        }
        r.check(ok, "db-row-sum-identity", ps, "");
    }

    {
        bool ok = true;
        std::string w;
        for (long i = 0; i < m && ok; ++i)
            for (long j = 0; j < m && ok; ++j) {
                std::vector<long> ells;
                if (i == j)
                    for (long dl = 0; dl <= 4; ++dl) ells.push_back(i + dl);
                else
                    ells.push_back(std::min(i, j));
                for (long l : ells) {
                    ShellSumSpec spec;
                    spec.i = i;
                    spec.j = j;
                    spec.l = l;
                    spec.depth = 8;
                    spec.kind = ShellKind::Log;
                    BoundedValue encl = shell_sum_reference(spec, ap);
                    while (encl.radius > shell_tol) {
                        spec.depth *= 2;
                        encl = shell_sum_reference(spec, ap);
                    }
                    if (!encl.contains(d_log_closed(i, j, l, ap))) {
                        ok = false;
                        w = "log case i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " l=" + std::to_string(l);
                        break;
                    }
                    for (long nn = 1; nn <= 6; ++nn) {
                        spec.kind = ShellKind::Power;
                        spec.n = nn;
                        spec.depth = 8;
                        encl = shell_sum_reference(spec, ap);
                        while (encl.radius > shell_tol) {
                            spec.depth *= 2;
                            encl = shell_sum_reference(spec, ap);
                        }
                        if (!encl.contains(d_power_closed(nn, i, j, l, ap))) {
                            ok = false;
                            w = "power n=" + std::to_string(nn) + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " l=" + std::to_string(l);
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        r.check(ok, "shell-sums-contain-closed-forms", ps, w);
    }

    {
        bool contains_ok = true, overlap_ok = true;
        std::string wc, wo;
        for (long rr = 0; rr < m; ++rr) {
            std::vector<BoundedValue> encls;
            for (long dl = 0; dl <= 3; ++dl) {
                long terms = 8;
                BoundedValue e = db_series_enclosure(rr, rr + dl, terms, ap);
                while (e.radius > shell_tol) {
                    terms *= 2;
                    e = db_series_enclosure(rr, rr + dl, terms, ap);
                }
                encls.push_back(e);
            }
            for (size_t a = 0; a < encls.size(); ++a) {
                if (contains_ok && !encls[a].contains(db_closed_form(rr, rr, ap))) {
                    contains_ok = false;
                    wc = "closed form escapes enclosure at r=" + std::to_string(rr);
                }
                for (size_t b = a + 1; b < encls.size() && overlap_ok; ++b)
                    if (!encls[a].overlaps(encls[b])) {
                        overlap_ok = false;
                        wo = "enclosures at different l do not overlap, r=" + std::to_string(rr);
                    }
            }
        }
        r.check(contains_ok, "db-series-contains-closed-form", ps, wc);
        r.check(overlap_ok, "db-series-l-independence", ps, wo);
    }
}

}  // namespace

Report run_invariant_suite(const Params& params, double spectral_tol, const Rat& shell_tol) {
    Report r;
    r.grid.push_back(params.to_string());
    const auto cosets = enumerate_cosets(params);
    domain_checks(r, params, cosets);
    if (params.coset_count() <= kSuiteDimLimit) {
        RationalMatrix D = build_operator_matrix(params);
        operator_checks(r, params, cosets, D, spectral_tol);
        oracle_checks(r, params, cosets, D);
    } else {
        r.skip("operator-and-oracle-suite", params.to_string(), "level exceeds the size budget");
    }
    analytic_checks(r, params, shell_tol);
    return r;
}

Report golden_c_matrix_check(long p, long m) {
    Report r;
    const std::string ps = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
    r.grid.push_back(ps);
    if (!fixture_c_matrix_available(m)) {
        r.skip("golden-c-fixture", ps, "no stored matrix for this m");
        return r;
    }
    r.check(fixture_is_bisymmetric(p, m), "golden-c-fixture-bisymmetry", ps,
            "transcription audit failed");
    RationalMatrix expect = fixture_c_matrix(p, m);
    RationalMatrix got = c_matrix(p, m);
    bool ok = true;
    std::string w;
    for (long i = 0; i < m && ok; ++i)
        for (long j = 0; j < m; ++j)
            if (expect.at(i, j) != got.at(i, j)) {
                ok = false;
                w = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") computed " +
                    rat_str(got.at(i, j)) + " stored " + rat_str(expect.at(i, j));
                break;
            }
    r.check(ok, "golden-c-fixture", ps, w);
    return r;
}

}  // namespace tate
