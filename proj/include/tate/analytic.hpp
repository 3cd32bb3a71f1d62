#pragma once

#include <vector>

#include "tate/bounded.hpp"
#include "tate/coset.hpp"
#include "tate/matrix.hpp"
#include "tate/params.hpp"

namespace tate {

// Scalar data entering every series coefficient, precomputed exactly:
//   lambda0 = q(q-1)/(q+1)
//   U(r)    = q^-r + q^(-m+r+1),          symmetric under r -> m-1-r
//   Lambda_i = 1 + 1/q - q^(-i-1) - q^(-m+i) = 1 + 1/q - U(i)/q
struct AnalyticParams {
    long q = 2;
    long m = 1;
    Rat lambda0;
    std::vector<Rat> u;       // U(r), r in [0, m)
    std::vector<Rat> biglam;  // Lambda_i, i in [0, m)

    const Rat& U(long r) const { return u[static_cast<size_t>(r)]; }
    const Rat& Lambda(long i) const { return biglam[static_cast<size_t>(i)]; }
};

AnalyticParams make_analytic_params(const Params& params);
AnalyticParams make_analytic_params(long q, long m);

// lambda_n(r) = U(r)^n (q^(n+1)-1) / ((q-1)(q+1)^n (q^n-1)) * lambda0, n >= 1.
Rat lambda_n(long n, long r, const AnalyticParams& ap);

// The B part at valuations (i, j) with v(x-y) = l. Exactly 0 off equal
// valuations and at l = r; otherwise the partial sum
//   -lambda0 (l-r) + sum_n lambda_n(r) (d^n - 1),  d = q^(r-l),
// with tail radius 2 lambda0 (q+1)/(q-1) rho^(N+1)/(1-rho), rho = U(r)/(q+1),
// where N is chosen so the radius is at most tol.
BoundedValue b_value(long i, long j, long l, const AnalyticParams& ap, const Rat& tol);

// The m x m C matrix by the downward recurrence, anchored at c_{m-1,0} = 0.
RationalMatrix c_matrix(const Params& params);
RationalMatrix c_matrix(long q, long m);

// The same matrix from the KMS-structured linear system
// (P - Lambda) C = 1/(1 - 1/q) (P Lambda^-1 - 11^T / m), symmetrized and
// anchored. Throws std::invalid_argument("degenerate") for m = 1.
RationalMatrix c_matrix_via_linear_system(const Params& params);
RationalMatrix c_matrix_via_linear_system(long q, long m);

// G(x, y) = B + C as an enclosure; the radius comes from the B tail only.
BoundedValue analytic_green(const Coset& x, const Coset& y, const Params& params, const Rat& tol);

// Closed form of (D B)_{ij} = -q^(1-|i-j|) / (q+1 - q^-j - q^(j+1-m)).
Rat db_closed_form(long i, long j, const AnalyticParams& ap);
Rat db_closed_form(long i, long j, const Params& params);

}  // namespace tate
