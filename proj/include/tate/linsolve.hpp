#pragma once

#include <stdexcept>

#include "tate/matrix.hpp"

namespace tate {

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("linear system singular beyond expected kernel") {}
};

enum class SolveEngine {
    Auto,          // exact elimination for small systems, multimodular above
    ExactGauss,    // rational Gaussian elimination, pivot by float magnitude
    Multimodular,  // prime-field eliminations + CRT + rational reconstruction,
                   // exactly verified against the input system before returning
};

// Solves A X = B for square nonsingular A, exactly. Throws SingularSystem.
RationalMatrix solve_linear(const RationalMatrix& A, const RationalMatrix& B,
                            SolveEngine engine = SolveEngine::Auto);

RationalMatrix solve_gauss_exact(const RationalMatrix& A, const RationalMatrix& B);
RationalMatrix solve_multimodular(const RationalMatrix& A, const RationalMatrix& B);

// Exact kernel dimension of a square rational matrix. Modular rank gives the
// lower bound on rank; candidate kernel vectors are reconstructed and then
// verified exactly over the rationals, which closes the gap.
int kernel_dimension(const RationalMatrix& A);

// Exact check that A * X == B over the rationals, evaluated column-wise over
// the integers after clearing denominators.
bool product_equals(const RationalMatrix& A, const RationalMatrix& X, const RationalMatrix& B);

}  // namespace tate
