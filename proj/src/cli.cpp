#include "tate/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tate/analytic.hpp"
#include "tate/cmatrix_fixtures.hpp"
#include "tate/green.hpp"
#include "tate/io.hpp"
#include "tate/laplacian.hpp"
#include "tate/parallel.hpp"
#include "tate/shell_sums.hpp"
#include "tate/verify.hpp"

namespace tate {

namespace {

struct CommonOpts {
    long p = 0;
    long f = 1;
    long e = 1;
    long m = 0;
    long k = 1;
    std::string tol = "1/10^12";
    std::string format = "json";
    std::string normalize = "max-zero";
    std::vector<long> anchor{0, 0};
    std::string out = "-";
    int threads = 0;
};

void add_field_flags(CLI::App* cmd, CommonOpts& o, bool with_level) {
    cmd->add_option("--p", o.p, "prime p")->required();
    cmd->add_option("--f", o.f, "residue degree f (effective base q = p^f)");
    cmd->add_option("--e", o.e, "ramification index (recorded, unused in formulas)");
    cmd->add_option("--m", o.m, "torus exponent m")->required();
    if (with_level) cmd->add_option("--k", o.k, "level k")->required();
    cmd->add_option("--tol", o.tol, "rational tolerance, e.g. 1/10^12");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path, '-' for stdout");
    cmd->add_option("--threads", o.threads, "worker count hint, 0 = auto");
}

int emit(const std::string& text, const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.out == "-" || o.out.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        err << "cannot open output path: " << o.out << "\n";
        return 2;
    }
    file << text;
    return 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Green's function of the flat Laplacian on the Tate curve: "
                 "exact finite-quotient oracle and analytic series, cross-verified"};
    app.require_subcommand(1);

    CommonOpts o;
    auto* green_cmd = app.add_subcommand("green", "solve the Green table at level k");
    add_field_flags(green_cmd, o, true);
    green_cmd->add_option("--normalize", o.normalize, "max-zero or anchored")
        ->check(CLI::IsMember({"max-zero", "anchored"}));
    green_cmd->add_option("--anchor", o.anchor, "row,col index pair for anchored normalization")
        ->expected(2);

    auto* cmatrix_cmd = app.add_subcommand("cmatrix", "the m x m C matrix");
    add_field_flags(cmatrix_cmd, o, false);

    auto* operator_cmd = app.add_subcommand("operator", "the level-k operator matrix");
    add_field_flags(operator_cmd, o, true);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and exact kernel dimension");
    add_field_flags(spectrum_cmd, o, true);

    auto* bvalue_cmd = app.add_subcommand("bvalue", "B-series enclosure at valuations (i, j), l = v(x-y)");
    add_field_flags(bvalue_cmd, o, false);
    long bi = 0, bj = 0, bl = 0;
    bvalue_cmd->add_option("--i", bi, "valuation of x")->required();
    bvalue_cmd->add_option("--j", bj, "valuation of y")->required();
    bvalue_cmd->add_option("--l", bl, "valuation of x - y")->required();

    auto* verify_cmd = app.add_subcommand("verify", "invariants, fixtures and oracle-analytic crosscheck");
    add_field_flags(verify_cmd, o, true);
    std::string shell_report_path;
    verify_cmd->add_option("--shell-report", shell_report_path,
                           "also write the per-case shell-sum report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    set_thread_hint(o.threads);
    try {
        const Rat tol = parse_rat(o.tol);
        if (tol <= 0) {
            err << "tolerance must be positive\n";
            return 2;
        }
        if (green_cmd->parsed()) {
            Params params = Params::make(o.p, o.m, o.k, o.f, o.e);
            GreenTable g = solve_green(params);
            if (o.normalize == "anchored")
                g = normalize(g, Normalization::Anchored, {o.anchor[0], o.anchor[1]});
            return emit(o.format == "csv" ? green_csv(g) : dump(green_json(g)), o, out, err);
        }
        if (cmatrix_cmd->parsed()) {
            Params params = Params::make(o.p, o.m, 1, o.f, o.e);
            RationalMatrix C = c_matrix(params);
            std::vector<std::string> order;
            for (long i = 0; i < params.m; ++i) order.push_back(std::to_string(i));
            Json j = matrix_json(C, params_json(params), order);
            return emit(o.format == "csv" ? matrix_csv(C, order) : dump(j), o, out, err);
        }
        if (operator_cmd->parsed()) {
            Params params = Params::make(o.p, o.m, o.k, o.f, o.e);
            RationalMatrix D = build_operator_matrix(params);
            auto order = coset_order_labels(params);
            Json j = matrix_json(D, params_json(params), order);
            return emit(o.format == "csv" ? matrix_csv(D, order) : dump(j), o, out, err);
        }
        if (spectrum_cmd->parsed()) {
            Params params = Params::make(o.p, o.m, o.k, o.f, o.e);
            Spectrum s = spectrum(build_operator_matrix(params), rat_double(tol));
            return emit(dump(spectrum_json(s, params)), o, out, err);
        }
        if (bvalue_cmd->parsed()) {
            Params params = Params::make(o.p, o.m, 1, o.f, o.e);
            AnalyticParams ap = make_analytic_params(params);
            if (bi < 0 || bi >= params.m || bj < 0 || bj >= params.m) {
                err << "valuations must lie in [0, m)\n";
                return 2;
            }
            BoundedValue v = b_value(bi, bj, bl, ap, tol);
            return emit(dump(bounded_json(v)), o, out, err);
        }
        // verify
        Params params = Params::make(o.p, o.m, o.k, o.f, o.e);
        Report report = run_invariant_suite(params);
        report.merge(crosscheck_green(params, tol));
        if (params.f == 1 && fixture_c_matrix_available(params.m))
            report.merge(golden_c_matrix_check(params.p, params.m));
        if (!shell_report_path.empty()) {
            Json cases = shell_sum_report(make_analytic_params(params), 4, 6, rat_pow(10, -10));
            std::ofstream file(shell_report_path, std::ios::binary);
            if (!file) {
                err << "cannot open output path: " << shell_report_path << "\n";
                return 2;
            }
            file << cases.dump(2) << "\n";
        }
        int rc = emit(dump(report.to_json()), o, out, err);
        if (rc != 0) return rc;
        return report.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tate
