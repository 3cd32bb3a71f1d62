#include "tate/analytic.hpp"

#include "tate/linsolve.hpp"

namespace tate {

AnalyticParams make_analytic_params(long q, long m) {
    AnalyticParams ap;
    ap.q = q;
    ap.m = m;
    ap.lambda0 = Rat(q * (q - 1), q + 1);
    ap.lambda0.canonicalize();
    ap.u.resize(static_cast<size_t>(m));
    ap.biglam.resize(static_cast<size_t>(m));
    for (long r = 0; r < m; ++r) {
        ap.u[static_cast<size_t>(r)] = rat_pow(q, -r) + rat_pow(q, -m + r + 1);
        ap.biglam[static_cast<size_t>(r)] = Rat(1) + rat_pow(q, -1) - rat_pow(q, -r - 1) - rat_pow(q, r - m);
    }
    return ap;
}

AnalyticParams make_analytic_params(const Params& params) {
    return make_analytic_params(params.q, params.m);
}

Rat lambda_n(long n, long r, const AnalyticParams& ap) {
    if (n < 1) throw std::invalid_argument("lambda_n: n >= 1 required");
    const long q = ap.q;
    Rat un(1);
    for (long t = 0; t < n; ++t) un *= ap.U(r);
    Rat num = rat_pow(q, n + 1) - 1;
    Rat den = Rat(q - 1) * rat_pow(q + 1, n) * (rat_pow(q, n) - 1);
    return un * num / den * ap.lambda0;
}

namespace {

Rat b_tail_radius(const AnalyticParams& ap, long r, long terms) {
    // lambda_n <= lambda0 (q+1)/(q-1) rho^n with rho = U(r)/(q+1), |d^n - 1| <= 1
    const Rat rho = ap.U(r) / Rat(ap.q + 1);
    Rat rho_pow(1);
    for (long t = 0; t <= terms; ++t) rho_pow *= rho;
    return Rat(2) * ap.lambda0 * Rat(ap.q + 1, ap.q - 1) * rho_pow / (Rat(1) - rho);
}

}  // namespace

BoundedValue b_value(long i, long j, long l, const AnalyticParams& ap, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("b_value: tol must be positive");
    if (i != j) return BoundedValue::exact(Rat(0));
    const long r = i;
    if (l < r) throw std::invalid_argument("b_value: l < valuation");
    if (l == r) return BoundedValue::exact(Rat(0));

    long terms = 4;
    while (b_tail_radius(ap, r, terms) > tol) ++terms;

    const Rat d = rat_pow(ap.q, r - l);
    Rat sum = -ap.lambda0 * Rat(l - r);
    Rat dn(1);
    for (long n = 1; n <= terms; ++n) {
        dn *= d;
        sum += lambda_n(n, r, ap) * (dn - 1);
    }
    return BoundedValue(sum, b_tail_radius(ap, r, terms));
}

RationalMatrix c_matrix(long q, long m) {
    RationalMatrix C(m, m);
    if (m == 1) return C;  // C_{q,1} = 0
    const AnalyticParams ap = make_analytic_params(q, m);
    std::vector<Rat> col(static_cast<size_t>(m));
    col[static_cast<size_t>(m - 1)] = 0;
    col[static_cast<size_t>(m - 2)] = col[static_cast<size_t>(m - 1)] - Rat(q) / (Rat(m) * ap.Lambda(m - 2));
    for (long i = m - 3; i >= 0; --i) {
        const Rat& li = ap.Lambda(i);
        const Rat& li2 = ap.Lambda(i + 2);
        col[static_cast<size_t>(i)] = (li + li2) / li * col[static_cast<size_t>(i + 1)] -
                                      li2 / li * col[static_cast<size_t>(i + 2)] -
                                      Rat(q - 1) / (Rat(m) * li);
    }
    const Rat& cm0 = col[static_cast<size_t>(m - 1)];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            if (i >= j)
                C.at(i, j) = col[static_cast<size_t>(i)] + col[static_cast<size_t>(m - 1 - j)] - cm0;
            else
                C.at(i, j) = col[static_cast<size_t>(m - 1 - i)] + col[static_cast<size_t>(j)] - cm0;
        }
    return C;
}

RationalMatrix c_matrix(const Params& params) { return c_matrix(params.q, params.m); }

RationalMatrix c_matrix_via_linear_system(long q, long m) {
    if (m < 2) throw std::invalid_argument("degenerate");
    const Rat unit_frac = Rat(1) - rat_pow(q, -1);  // 1 - 1/q
    RationalMatrix P(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) P.at(i, j) = unit_frac * rat_pow(q, -std::abs(i - j));
    std::vector<Rat> lam(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) lam[static_cast<size_t>(i)] = P.row_sum(i);
    // A = P - diag(lam); kernel is the constants, so A - 11^T is regular and
    // yields the zero-column-mean particular solution
    RationalMatrix A1(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            A1.at(i, j) = P.at(i, j) - (i == j ? lam[static_cast<size_t>(i)] : Rat(0)) - 1;
    RationalMatrix rhs(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            rhs.at(i, j) = (P.at(i, j) / lam[static_cast<size_t>(j)] - Rat(1, m)) / unit_frac;
    RationalMatrix C0 = solve_linear(A1, rhs, SolveEngine::ExactGauss);
    // adding 1 w^T stays a solution; choose w to symmetrize, then anchor
    std::vector<Rat> w(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) w[static_cast<size_t>(i)] = C0.at(i, 0) - C0.at(0, i);
    RationalMatrix C(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) C.at(i, j) = C0.at(i, j) + w[static_cast<size_t>(j)];
    if (!C.is_symmetric()) throw std::logic_error("c_matrix_via_linear_system: symmetrization failed");
    return C.shifted(-C.at(m - 1, 0));
}

RationalMatrix c_matrix_via_linear_system(const Params& params) {
    return c_matrix_via_linear_system(params.q, params.m);
}

BoundedValue analytic_green(const Coset& x, const Coset& y, const Params& params, const Rat& tol) {
    const AnalyticParams ap = make_analytic_params(params);
    const RationalMatrix C = c_matrix(params);
    long l = valuation_of_difference(x, y);
    return b_value(x.s, y.s, l, ap, tol) + C.at(x.s, y.s);
}

Rat db_closed_form(long i, long j, const AnalyticParams& ap) {
    const long q = ap.q;
    Rat den = Rat(q + 1) - rat_pow(q, -j) - rat_pow(q, j + 1 - ap.m);
    return -rat_pow(q, 1 - std::abs(i - j)) / den;
}

Rat db_closed_form(long i, long j, const Params& params) {
    return db_closed_form(i, j, make_analytic_params(params));
}

}  // namespace tate
