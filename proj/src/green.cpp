#include "tate/green.hpp"

#include "tate/laplacian.hpp"
#include "tate/parallel.hpp"

namespace tate {

Rat domain_volume(const Params& params) {
    return Rat(params.m) * (Rat(1) - rat_pow(params.q, -1));
}

RationalMatrix green_rhs(const Params& params) {
    const long n = params.coset_count();
    const Rat scale = rat_pow(params.q, params.k);
    const Rat mean = Rat(1) / domain_volume(params);
    RationalMatrix B(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) B.at(i, j) = (i == j ? scale : Rat(0)) - mean;
    return B;
}

GreenTable solve_green(const Params& params, SolveEngine engine) {
    const long n = params.coset_count();
    RationalMatrix D = build_operator_matrix(params);
    // The kernel of D is the constants; subtracting the all-ones rank-one
    // block pins the zero-mean solution of every column at once.
    RationalMatrix A(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) A.at(i, j) = D.at(i, j) - 1;
    RationalMatrix B = green_rhs(params);
    RationalMatrix X = solve_linear(A, B, engine);
    for (long j = 0; j < n; ++j) {
        Rat colsum(0);
        for (long i = 0; i < n; ++i) colsum += X.at(i, j);
        if (colsum != 0) throw std::logic_error("solve_green: zero-mean constraint violated");
    }
    if (!X.is_symmetric()) {
        // per-column constant adjustment; with a symmetric operator and
        // symmetric right-hand side this path is not expected to run
        std::vector<Rat> c(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) c[static_cast<size_t>(j)] = X.at(j, 0) - X.at(0, j);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) X.at(i, j) += c[static_cast<size_t>(j)];
        if (!X.is_symmetric()) throw std::logic_error("solve_green: symmetrization failed");
    }
    GreenTable out{params, X.shifted(-X.max_entry()), Normalization::MaxZero, {0, 0}};
    return out;
}

GreenTable normalize(const GreenTable& table, Normalization mode, std::pair<long, long> anchor) {
    GreenTable out = table;
    if (mode == Normalization::MaxZero) {
        out.matrix = table.matrix.shifted(-table.matrix.max_entry());
        out.normalization = Normalization::MaxZero;
        out.anchor = {0, 0};
        return out;
    }
    if (anchor.first < 0 || anchor.first >= table.matrix.rows() || anchor.second < 0 ||
        anchor.second >= table.matrix.cols())
        throw std::invalid_argument("normalize: anchor pair out of range");
    out.matrix = table.matrix.shifted(-table.matrix.at(anchor.first, anchor.second));
    out.normalization = Normalization::Anchored;
    out.anchor = anchor;
    return out;
}

bool green_equation_holds(const RationalMatrix& D, const GreenTable& table) {
    return product_equals(D, table.matrix, green_rhs(table.params));
}

bool pair_is_resolved(const Coset& x, const Coset& y, const Params& params) {
    if (x == y) return false;
    int l = valuation_of_difference(x, y);
    int r = std::min(x.s, y.s);
    return params.k >= (l - r) + params.m;
}

std::vector<std::pair<Coset, Coset>> resolved_pairs(const Params& params) {
    const auto cosets = enumerate_cosets(params);
    std::vector<std::pair<Coset, Coset>> out;
    for (const Coset& x : cosets)
        for (const Coset& y : cosets)
            if (x != y && pair_is_resolved(x, y, params)) out.emplace_back(x, y);
    return out;
}

void for_each_resolved_pair(const Params& params, const std::function<void(long, long)>& fn) {
    const auto cosets = enumerate_cosets(params);
    const long n = static_cast<long>(cosets.size());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (i != j && pair_is_resolved(cosets[static_cast<size_t>(i)], cosets[static_cast<size_t>(j)], params))
                fn(i, j);
}

namespace {

// index of the zero-padded lift of base-level index i after `steps` refinements
long lifted_index(long i, long q, long steps) {
    for (long t = 0; t < steps; ++t) i *= q;
    return i;
}

}  // namespace

Rat stabilized_value(const Coset& x, const Coset& y, const Params& params, long k_max) {
    if (x == y) throw std::invalid_argument("stabilized_value: x == y");
    const long n0 = params.coset_count();
    if (n0 < 2) throw std::invalid_argument("stabilized_value: no reference pair at this level");
    const long ix = coset_index(x, params);
    const long iy = coset_index(y, params);
    // reference pair: first two cosets of the base level, lifted consistently
    bool have_prev = false;
    Rat prev;
    for (long k = params.k; k <= k_max; ++k) {
        Params pk = Params::make(params.p, params.m, k, params.f, params.e);
        GreenTable g = solve_green(pk);
        long steps = k - params.k;
        long a = lifted_index(ix, params.q, steps);
        long b = lifted_index(iy, params.q, steps);
        long r0 = lifted_index(0, params.q, steps);
        long r1 = lifted_index(1, params.q, steps);
        Rat diff = g.matrix.at(a, b) - g.matrix.at(r0, r1);
        if (have_prev && diff == prev) return diff;
        prev = diff;
        have_prev = true;
    }
    throw NotStabilized();
}

}  // namespace tate
