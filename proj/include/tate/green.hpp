#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tate/coset.hpp"
#include "tate/linsolve.hpp"
#include "tate/matrix.hpp"
#include "tate/params.hpp"

namespace tate {

enum class Normalization { MaxZero, Anchored };

// Symmetric Green table on the level-k quotient, in canonical coset order.
struct GreenTable {
    Params params;
    RationalMatrix matrix;
    Normalization normalization = Normalization::MaxZero;
    std::pair<long, long> anchor = {0, 0};  // meaningful under Anchored
};

// mu-x volume m(1 - 1/q) of the fundamental domain.
Rat domain_volume(const Params& params);

// Right-hand sides of the Green equation, one column per coset:
// q^k on the diagonal minus 1/V everywhere.
RationalMatrix green_rhs(const Params& params);

// Solves D g = delta_y - 1/V for every y under the zero-mean constraint,
// asserts exact symmetry, and shifts the maximum entry to 0.
GreenTable solve_green(const Params& params, SolveEngine engine = SolveEngine::Auto);

GreenTable normalize(const GreenTable& table, Normalization mode,
                     std::pair<long, long> anchor = {0, 0});

// Exact check of D * G == green_rhs over the rationals.
bool green_equation_holds(const RationalMatrix& D, const GreenTable& table);

// Ordered pairs (x, y), x != y, whose Green value is final at this level:
// k >= (l - r) + m with r = min valuation and l = v(x - y).
std::vector<std::pair<Coset, Coset>> resolved_pairs(const Params& params);
bool pair_is_resolved(const Coset& x, const Coset& y, const Params& params);

// Streams resolved ordered index pairs without materializing them.
void for_each_resolved_pair(const Params& params,
                            const std::function<void(long, long)>& fn);

struct NotStabilized : std::runtime_error {
    NotStabilized() : std::runtime_error("not stabilized") {}
};

// Difference-normalized limit value: runs levels params.k, params.k+1, ...
// with x, y and a fixed reference pair lifted by zero padding, and returns
// G_k(x,y) - G_k(ref) once two consecutive levels agree exactly.
Rat stabilized_value(const Coset& x, const Coset& y, const Params& params, long k_max);

}  // namespace tate
