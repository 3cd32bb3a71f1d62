#include "tate/laplacian.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "tate/linsolve.hpp"
#include "tate/parallel.hpp"

namespace tate {

RationalMatrix build_operator_matrix(const Params& params) {
    const auto cosets = enumerate_cosets(params);
    const long n = static_cast<long>(cosets.size());
    const long q = params.q;
    RationalMatrix D(n, n);
    parallel_for(n, [&](long i) {
        const Coset& x = cosets[static_cast<size_t>(i)];
        Rat diag(0);
        for (long j = 0; j < n; ++j) {
            if (j == i) continue;
            const Coset& z = cosets[static_cast<size_t>(j)];
            int v = valuation_of_difference(x, z);
            // |x| mu+(z) / |z-x|^2 = q^(2v - x.s - z.s - k)
            Rat entry = rat_pow(q, 2L * v - x.s - z.s - params.k);
            D.at(i, j) = entry;
            diag += entry;
        }
        D.at(i, i) = -diag;
    });
    return D;
}

SampledFunction apply(const RationalMatrix& matrix, const SampledFunction& f) {
    if (matrix.cols() != static_cast<long>(f.size()))
        throw std::invalid_argument("apply: dimension mismatch");
    SampledFunction out(static_cast<size_t>(matrix.rows()));
    parallel_for(matrix.rows(), [&](long i) {
        Rat s(0);
        for (long j = 0; j < matrix.cols(); ++j)
            if (matrix.at(i, j) != 0) s += matrix.at(i, j) * f[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    });
    return out;
}

Spectrum spectrum(const RationalMatrix& matrix, double /*tol*/) {
    if (!matrix.is_symmetric()) throw std::invalid_argument("spectrum: matrix not symmetric");
    const long n = matrix.rows();
    Eigen::MatrixXd M(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) M(i, j) = rat_double(matrix.at(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
    Spectrum out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) out.eigenvalues[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    out.kernel_dim = kernel_dimension(matrix);
    return out;
}

RationalMatrix fiber_average(const RationalMatrix& table, const Params& coarse) {
    const Params fine = coarse.refined();
    const long n = coarse.coset_count();
    const long q = coarse.q;
    if (table.rows() != fine.coset_count() || table.cols() != fine.coset_count())
        throw std::invalid_argument("fiber_average: table is not at level k+1");
    // canonical order maps the lifts of coset index i to indices q*i + d
    RationalMatrix out(n, n);
    const Rat inv_q2 = rat_pow(q, -2);
    parallel_for(n, [&](long i) {
        for (long j = 0; j < n; ++j) {
            Rat s(0);
            for (long a = 0; a < q; ++a)
                for (long b = 0; b < q; ++b) s += table.at(q * i + a, q * j + b);
            out.at(i, j) = s * inv_q2;
        }
    });
    return out;
}

}  // namespace tate
