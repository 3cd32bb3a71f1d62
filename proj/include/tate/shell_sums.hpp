#pragma once

#include <json.hpp>

#include "tate/analytic.hpp"
#include "tate/bounded.hpp"

namespace tate {

enum class ShellKind { Log, Power };

// One integral of the shell decomposition: D applied to log d(x,y) or to
// d(x,y)^n, at valuations (i, j) and (when i == j) difference valuation l,
// summed over shells down to the stated depth.
struct ShellSumSpec {
    ShellKind kind = ShellKind::Log;
    long n = 1;  // power; ignored for Log
    long i = 0;
    long j = 0;
    long l = 0;  // v(x - y); meaningful only when i == j
    long depth = 40;
};

// Closed form of D log d(x, y):
//   i != j:  -q^-|i-j| / (q-1)
//   i == j:  -1/(q-1) - U(r)/q * (l - r)
Rat d_log_closed(long i, long j, long l, const AnalyticParams& ap);

// Closed form of D d(x, y)^n for n >= 1 (three-term equal-valuation form).
Rat d_power_closed(long n, long i, long j, long l, const AnalyticParams& ap);

// The same quantity summed directly over shells with shell_measure weights
// plus an exact geometric tail bound. Uses no closed-form algebra.
BoundedValue shell_sum_reference(const ShellSumSpec& spec, const AnalyticParams& ap);

// Partial sum of lambda0 * D log d + sum_{n<=terms} lambda_n * D d^n at equal
// valuations, with a rigorous tail radius. The exact value is independent of
// l and equals db_closed_form(r, r).
BoundedValue db_series_enclosure(long r, long l, long terms, const AnalyticParams& ap);

// One entry per verified case over the (i, j, l, n) grid:
// {"case": ..., "closed_form": "num/den",
//  "enclosure": {"center": ..., "radius": ...}, "pass": bool}
// Shell depths grow until every radius is at most tol.
nlohmann::ordered_json shell_sum_report(const AnalyticParams& ap, long max_l_gap, long max_power,
                                        const Rat& tol);

}  // namespace tate
