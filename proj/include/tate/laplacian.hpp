#pragma once

#include <vector>

#include "tate/coset.hpp"
#include "tate/matrix.hpp"
#include "tate/params.hpp"

namespace tate {

// Matrix of the flat Laplacian on level-k locally constant functions, in the
// canonical coset order. Off-diagonal entry (x, z) is |x| mu+(z) / |z-x|^2;
// the integrand vanishes inside the coset of x, so the diagonal is minus the
// off-diagonal row sum. Exactly symmetric.
RationalMatrix build_operator_matrix(const Params& params);

// Exact matrix-vector product. Throws on dimension mismatch.
SampledFunction apply(const RationalMatrix& matrix, const SampledFunction& f);

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending, double precision
    int kernel_dim = 0;               // exact rational kernel dimension
};

// Float eigenvalues plus the exact kernel dimension. Requires a symmetric
// input (exact comparison); throws std::invalid_argument otherwise.
Spectrum spectrum(const RationalMatrix& matrix, double tol);

// Averages a level-(k+1) table over the q x q lifts of each level-k coset
// pair. coarse is the level-k Params; table dimension must match level k+1.
RationalMatrix fiber_average(const RationalMatrix& table, const Params& coarse);

}  // namespace tate
