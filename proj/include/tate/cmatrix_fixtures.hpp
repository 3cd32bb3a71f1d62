#pragma once

#include "tate/matrix.hpp"

namespace tate {

// Golden m x m C matrices for m in [2, 7], stored as rational expressions in
// p and evaluated exactly at the given prime. Every stored matrix is
// bisymmetric; fixture_is_bisymmetric audits the transcription itself.
bool fixture_c_matrix_available(long m);
RationalMatrix fixture_c_matrix(long p, long m);
bool fixture_is_bisymmetric(long p, long m);

}  // namespace tate
