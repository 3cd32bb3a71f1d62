#include "tate/shell_sums.hpp"

#include <stdexcept>

namespace tate {

Rat d_log_closed(long i, long j, long l, const AnalyticParams& ap) {
    const long q = ap.q;
    if (i != j) return -rat_pow(q, -std::abs(i - j)) / Rat(q - 1);
    if (l < i) throw std::invalid_argument("d_log_closed: l < valuation");
    return -Rat(1, q - 1) - ap.U(i) / Rat(q) * Rat(l - i);
}

Rat d_power_closed(long n, long i, long j, long l, const AnalyticParams& ap) {
    if (n < 1) throw std::invalid_argument("d_power_closed: n >= 1 required");
    const long q = ap.q;
    if (i != j) return -(rat_pow(q, n) - 1) / (rat_pow(q, n + 1) - 1) * rat_pow(q, -std::abs(i - j));
    if (l < i) throw std::invalid_argument("d_power_closed: l < valuation");
    const long r = i;
    if (n == 1) {
        return -Rat(1, q + 1) - ap.U(r) / Rat(q) * (Rat(1) - rat_pow(q, r - l)) +
               Rat(q - 1, q) * Rat(l - r);
    }
    Rat term1 = (rat_pow(q, n - 1) - rat_pow(q, -1)) / (rat_pow(q, n - 1) - 1);
    Rat term2 = ap.U(r) / Rat(q) * (Rat(1) - rat_pow(q, -n * (l - r)));
    Rat coeff3 = Rat(q + 1) * (rat_pow(q, n) - 1) * (rat_pow(q, n) - 1) /
                 (Rat(q) * (rat_pow(q, n - 1) - 1) * (rat_pow(q, n + 1) - 1));
    return term1 - term2 - coeff3 * rat_pow(q, (1 - n) * (l - r));
}

namespace {

// integrand value at a point with v(z) = base and v(z - y) = t
Rat shell_integrand(ShellKind kind, long n, long q, long base, long t) {
    if (kind == ShellKind::Log) return Rat(base - t);
    return rat_pow(q, n * (base - t));
}

Rat shell_mu(long q, long r, long i) {
    if (i == r) return Rat(q - 2) * rat_pow(q, -(r + 1));
    return Rat(q - 1) * rat_pow(q, -(i + 1));
}

}  // namespace

BoundedValue shell_sum_reference(const ShellSumSpec& spec, const AnalyticParams& ap) {
    const long q = ap.q;
    const long m = ap.m;
    const long N = spec.depth;
    if (N < 1) throw std::invalid_argument("shell_sum_reference: depth >= 1 required");

    if (spec.i != spec.j) {
        // integrand lives on the annulus of y only; split it into the shells
        // around y and bound the rest by a geometric series
        const Rat W = rat_pow(q, 2 * std::min(spec.i, spec.j) - spec.i);
        const Rat fx = spec.kind == ShellKind::Log ? Rat(0) : Rat(1);
        Rat sum(0);
        for (long t = spec.j; t <= spec.j + N; ++t)
            sum += (shell_integrand(spec.kind, spec.n, q, spec.j, t) - fx) * W * shell_mu(q, spec.j, t);
        const long T = spec.j + N + 1;
        Rat tail;
        if (spec.kind == ShellKind::Log) {
            Rat first = Rat(T - spec.j) * W * Rat(q - 1) * rat_pow(q, -(T + 1));
            Rat ratio = Rat(N + 2, (N + 1) * q);
            tail = first / (Rat(1) - ratio);
        } else {
            tail = W * rat_pow(q, -T);
        }
        return BoundedValue(sum, tail);
    }

    const long r = spec.i;
    const long l = spec.l;
    if (l < r) throw std::invalid_argument("shell_sum_reference: l < valuation");
    const Rat fx = spec.kind == ShellKind::Log ? Rat(r - l) : rat_pow(q, spec.n * (r - l));
    Rat sum(0);
    // annuli with valuation different from r contribute whole-annulus terms
    for (long s = 0; s < m; ++s) {
        if (s == r) continue;
        Rat fz = spec.kind == ShellKind::Log ? Rat(0) : Rat(1);
        sum += (fz - fx) * rat_pow(q, 2 * std::min(r, s) - r) * Rat(q - 1) * rat_pow(q, -(s + 1));
    }
    // shells around x strictly inside the distance to y
    for (long t = r; t < l; ++t)
        sum += (shell_integrand(spec.kind, spec.n, q, r, t) - fx) * rat_pow(q, 2 * t - r) * shell_mu(q, r, t);
    // the t = l shell, refined by shells around y; past depth N a tail bound
    for (long t = l + 1; t <= l + N; ++t)
        sum += (shell_integrand(spec.kind, spec.n, q, r, t) - fx) * rat_pow(q, 2 * l - r) *
               Rat(q - 1) * rat_pow(q, -(t + 1));
    const long T = l + N + 1;
    Rat tail;
    if (spec.kind == ShellKind::Log) {
        Rat first = Rat(T - l) * rat_pow(q, 2 * l - r) * Rat(q - 1) * rat_pow(q, -(T + 1));
        Rat ratio = Rat(N + 2, (N + 1) * q);
        tail = first / (Rat(1) - ratio);
    } else {
        tail = rat_pow(q, spec.n * (r - l)) * rat_pow(q, 2 * l - r) * rat_pow(q, -T);
    }
    return BoundedValue(sum, tail);
}

nlohmann::ordered_json shell_sum_report(const AnalyticParams& ap, long max_l_gap, long max_power,
                                        const Rat& tol) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    auto push = [&](const std::string& name, const Rat& closed, const BoundedValue& encl) {
        nlohmann::ordered_json e;
        e["case"] = name;
        e["closed_form"] = rat_str(closed);
        e["enclosure"] = {{"center", rat_str(encl.center)}, {"radius", rat_str(encl.radius)}};
        e["pass"] = encl.contains(closed);
        out.push_back(std::move(e));
    };
    auto refined = [&](ShellSumSpec spec) {
        BoundedValue e = shell_sum_reference(spec, ap);
        while (e.radius > tol) {
            spec.depth *= 2;
            e = shell_sum_reference(spec, ap);
        }
        return e;
    };
    for (long i = 0; i < ap.m; ++i)
        for (long j = 0; j < ap.m; ++j) {
            std::vector<long> ells;
            if (i == j)
                for (long dl = 0; dl <= max_l_gap; ++dl) ells.push_back(i + dl);
            else
                ells.push_back(std::min(i, j));
            for (long l : ells) {
                std::string where = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                    ",l=" + std::to_string(l);
                ShellSumSpec spec{ShellKind::Log, 1, i, j, l, 8};
                push("log," + where, d_log_closed(i, j, l, ap), refined(spec));
                for (long n = 1; n <= max_power; ++n) {
                    spec.kind = ShellKind::Power;
                    spec.n = n;
                    spec.depth = 8;
                    push("pow^" + std::to_string(n) + "," + where, d_power_closed(n, i, j, l, ap),
                         refined(spec));
                }
            }
        }
    return out;
}

BoundedValue db_series_enclosure(long r, long l, long terms, const AnalyticParams& ap) {
    if (terms < 2) throw std::invalid_argument("db_series_enclosure: terms >= 2 required");
    const long q = ap.q;
    Rat sum = ap.lambda0 * d_log_closed(r, r, l, ap);
    for (long n = 1; n <= terms; ++n) sum += lambda_n(n, r, ap) * d_power_closed(n, r, r, l, ap);
    // |D d^n| for n >= 2 is bounded by its n = 2 value pieces, each decreasing
    Rat bound = (Rat(q) - rat_pow(q, -1)) / Rat(q - 1) + ap.U(r) / Rat(q) +
                Rat(q + 1) * (rat_pow(q, 2) - 1) * (rat_pow(q, 2) - 1) /
                    (Rat(q) * Rat(q - 1) * (rat_pow(q, 3) - 1));
    const Rat rho = ap.U(r) / Rat(q + 1);
    Rat rho_pow(1);
    for (long t = 0; t <= terms; ++t) rho_pow *= rho;
    Rat tail = ap.lambda0 * Rat(q + 1, q - 1) * bound * rho_pow / (Rat(1) - rho);
    return BoundedValue(sum, tail);
}

}  // namespace tate
