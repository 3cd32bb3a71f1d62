#pragma once

#include "tate/green.hpp"
#include "tate/params.hpp"
#include "tate/rational.hpp"
#include "tate/report.hpp"

namespace tate {

// Difference-based comparison of the rational oracle against the analytic
// enclosure on every resolved ordered pair, relative to the first resolved
// pair. Skipped when the level resolves no pairs.
Report crosscheck_green(const Params& params, const Rat& tol);
Report crosscheck_green(const GreenTable& table, const Rat& tol);

// Every module invariant at the given instance; exact checks use rational
// equality, spectral checks use spectral_tol, shell enclosures shrink to
// shell_tol.
Report run_invariant_suite(const Params& params, double spectral_tol = 1e-9,
                           const Rat& shell_tol = Rat(1, 10000000000L));

// Entrywise comparison of the recurrence C matrix against the transcribed
// golden expressions evaluated at p. m must lie in [2, 7].
Report golden_c_matrix_check(long p, long m);

}  // namespace tate
