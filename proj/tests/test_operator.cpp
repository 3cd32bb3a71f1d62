#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tate/green.hpp"
#include "tate/laplacian.hpp"

using namespace tate;

TEST_CASE("operator matrix on the two-coset instances") {
    RationalMatrix d31 = build_operator_matrix(Params::make(3, 1, 1));
    REQUIRE(d31.rows() == 2);
    CHECK(d31.at(0, 0) == Rat(-1, 3));
    CHECK(d31.at(0, 1) == Rat(1, 3));
    CHECK(d31.at(1, 0) == Rat(1, 3));
    CHECK(d31.at(1, 1) == Rat(-1, 3));

    RationalMatrix d212 = build_operator_matrix(Params::make(2, 1, 2));
    REQUIRE(d212.rows() == 2);
    CHECK(d212.at(0, 0) == Rat(-1));
    CHECK(d212.at(0, 1) == Rat(1));
    CHECK(d212.at(1, 1) == Rat(-1));
}

TEST_CASE("operator symmetry and zero row sums across a small grid") {
    for (Params params : {Params::make(2, 1, 3), Params::make(2, 2, 2), Params::make(3, 2, 2),
                          Params::make(2, 2, 2, 2), Params::make(5, 1, 1), Params::make(3, 1, 1, 2)}) {
        RationalMatrix D = build_operator_matrix(params);
        CHECK(D.is_symmetric());
        for (long i = 0; i < D.rows(); ++i) CHECK(D.row_sum(i) == 0);
    }
}

TEST_CASE("apply") {
    RationalMatrix D = build_operator_matrix(Params::make(3, 1, 1));
    SampledFunction ones{Rat(5), Rat(5)};
    for (const Rat& v : tate::apply(D, ones)) CHECK(v == 0);
    SampledFunction e0{Rat(1), Rat(0)};
    SampledFunction img = tate::apply(D, e0);
    CHECK(img[0] == Rat(-1, 3));
    CHECK(img[1] == Rat(1, 3));
    SampledFunction bad{Rat(1)};
    CHECK_THROWS_AS(tate::apply(D, bad), std::invalid_argument);
}

TEST_CASE("spectrum of the 3-adic level-1 operator") {
    RationalMatrix D = build_operator_matrix(Params::make(3, 1, 1));
    Spectrum s = spectrum(D, 1e-9);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.kernel_dim == 1);

    RationalMatrix asym(2, 2);
    asym.at(0, 1) = 1;
    CHECK_THROWS_AS(spectrum(asym, 1e-9), std::invalid_argument);
}

TEST_CASE("kernel dimension is one on a varied grid") {
    for (Params params : {Params::make(2, 2, 3), Params::make(3, 2, 2), Params::make(2, 1, 4),
                          Params::make(2, 3, 2, 2), Params::make(3, 1, 2, 2)}) {
        Spectrum s = spectrum(build_operator_matrix(params), 1e-9);
        CHECK(s.kernel_dim == 1);
        for (double ev : s.eigenvalues) CHECK(ev <= 1e-9);
    }
}

TEST_CASE("fiber average of a constant matrix is the constant") {
    Params coarse = Params::make(2, 2, 2);
    Params fine = coarse.refined();
    RationalMatrix table = RationalMatrix::constant(fine.coset_count(), fine.coset_count(), Rat(7, 5));
    RationalMatrix avg = fiber_average(table, coarse);
    REQUIRE(avg.rows() == coarse.coset_count());
    for (long i = 0; i < avg.rows(); ++i)
        for (long j = 0; j < avg.cols(); ++j) CHECK(avg.at(i, j) == Rat(7, 5));
    CHECK_THROWS_AS(fiber_average(table, fine), std::invalid_argument);
}

TEST_CASE("each averaged entry is the mean of the q^2 lifted entries") {
    Params coarse = Params::make(2, 1, 2);
    Params fine = coarse.refined();
    const long nf = fine.coset_count();
    RationalMatrix table(nf, nf);
    std::mt19937_64 rng(99);
    for (long i = 0; i < nf; ++i)
        for (long j = 0; j < nf; ++j) {
            Rat v(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
            v.canonicalize();
            table.at(i, j) = v;
        }
    RationalMatrix avg = fiber_average(table, coarse);
    for (long i = 0; i < avg.rows(); ++i)
        for (long j = 0; j < avg.cols(); ++j) {
            Rat s(0);
            for (long a = 0; a < 2; ++a)
                for (long b = 0; b < 2; ++b) s += table.at(2 * i + a, 2 * j + b);
            CHECK(avg.at(i, j) == s / 4);
        }
}

TEST_CASE("operator commutes with unit and reflection permutations") {
    Params params = Params::make(3, 2, 2);
    auto cosets = enumerate_cosets(params);
    RationalMatrix D = build_operator_matrix(params);
    const long n = D.rows();
    auto check_perm = [&](auto&& fn) {
        std::vector<long> perm(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = coset_index(fn(cosets[static_cast<size_t>(i)]), params);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                CHECK(D.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) == D.at(i, j));
    };
    for (long u = 1; u < 9; ++u) {
        if (u % params.p == 0) continue;
        check_perm([&](const Coset& c) { return unit_multiply(c, u, params); });
    }
    check_perm([&](const Coset& c) { return reflect(c, params); });
}

TEST_CASE("locally constant functions are preserved across levels") {
    Params coarse = Params::make(3, 2, 1);
    Params fine = coarse.refined();
    RationalMatrix Dc = build_operator_matrix(coarse);
    RationalMatrix Df = build_operator_matrix(fine);
    const long n = coarse.coset_count();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        SampledFunction f(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) f[static_cast<size_t>(i)] = Rat(static_cast<long>(rng() % 19) - 9);
        SampledFunction lifted(static_cast<size_t>(fine.coset_count()));
        for (long i = 0; i < n; ++i)
            for (long d = 0; d < coarse.q; ++d)
                lifted[static_cast<size_t>(coarse.q * i + d)] = f[static_cast<size_t>(i)];
        SampledFunction want = tate::apply(Dc, f);
        SampledFunction got = tate::apply(Df, lifted);
        for (long i = 0; i < n; ++i)
            for (long d = 0; d < coarse.q; ++d)
                CHECK(got[static_cast<size_t>(coarse.q * i + d)] == want[static_cast<size_t>(i)]);
    }
}
