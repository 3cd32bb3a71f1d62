#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tate/green.hpp"
#include "tate/laplacian.hpp"
#include "tate/linsolve.hpp"

using namespace tate;

namespace {

RationalMatrix random_matrix(long n, long w, std::mt19937_64& rng) {
    RationalMatrix M(n, w);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < w; ++j) {
            Rat v(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
            v.canonicalize();
            M.at(i, j) = v;
        }
    return M;
}

}  // namespace

TEST_CASE("exact elimination solves a known system") {
    RationalMatrix A(2, 2), B(2, 1);
    A.at(0, 0) = Rat(2);
    A.at(0, 1) = Rat(1);
    A.at(1, 0) = Rat(1);
    A.at(1, 1) = Rat(3);
    B.at(0, 0) = Rat(5);
    B.at(1, 0) = Rat(10);
    RationalMatrix X = solve_gauss_exact(A, B);
    CHECK(X.at(0, 0) == Rat(1));
    CHECK(X.at(1, 0) == Rat(3));
}

TEST_CASE("both engines agree on random nonsingular systems") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        long n = 3 + static_cast<long>(rng() % 10);
        RationalMatrix A = random_matrix(n, n, rng);
        for (long i = 0; i < n; ++i) A.at(i, i) += Rat(100);  // diagonally dominant
        RationalMatrix B = random_matrix(n, 2, rng);
        RationalMatrix X1 = solve_gauss_exact(A, B);
        RationalMatrix X2 = solve_multimodular(A, B);
        CHECK(X1 == X2);
        CHECK(product_equals(A, X1, B));
    }
}

TEST_CASE("singular systems are reported") {
    RationalMatrix A(2, 2), B(2, 1);
    A.at(0, 0) = Rat(1);
    A.at(0, 1) = Rat(2);
    A.at(1, 0) = Rat(2);
    A.at(1, 1) = Rat(4);
    B.at(0, 0) = Rat(1);
    B.at(1, 0) = Rat(2);
    CHECK_THROWS_AS(solve_gauss_exact(A, B), SingularSystem);
    CHECK_THROWS_AS(solve_multimodular(A, B), SingularSystem);
}

TEST_CASE("product_equals distinguishes correct and corrupted products") {
    std::mt19937_64 rng(11);
    RationalMatrix A = random_matrix(5, 5, rng);
    RationalMatrix X = random_matrix(5, 3, rng);
    RationalMatrix B = A * X;
    CHECK(product_equals(A, X, B));
    B.at(2, 1) += Rat(1, 1000000000L);
    CHECK(!product_equals(A, X, B));
}

TEST_CASE("kernel dimension on constructed matrices") {
    // identity: trivial kernel
    CHECK(kernel_dimension(RationalMatrix::identity(5)) == 0);
    // all ones: rank 1, kernel n-1
    CHECK(kernel_dimension(RationalMatrix::constant(4, 4, Rat(1))) == 3);
    // rank-2 block
    RationalMatrix M(5, 5);
    std::mt19937_64 rng(3);
    for (long j = 0; j < 5; ++j) {
        Rat a(static_cast<long>(rng() % 9) + 1), b(static_cast<long>(rng() % 9) + 1);
        M.at(0, j) = a;
        M.at(1, j) = b;
        M.at(2, j) = a + b;
        M.at(3, j) = a - b;
        M.at(4, j) = 2 * a + 3 * b;
    }
    CHECK(kernel_dimension(M.transposed() * M) == 3);
}

TEST_CASE("multimodular reconstruction survives huge solution entries") {
    // Hilbert systems have inverses with astronomically large integer
    // entries, forcing the modulus past many primes before reconstruction
    const long n = 40;
    RationalMatrix H(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) H.at(i, j) = Rat(1, i + j + 1);
    RationalMatrix B = RationalMatrix::identity(n);
    RationalMatrix X1 = solve_multimodular(H, B);
    CHECK(product_equals(H, X1, B));
    CHECK(X1 == solve_gauss_exact(H, B));
    CHECK(kernel_dimension(H) == 0);
}

TEST_CASE("multimodular path matches exact elimination on a Green system") {
    Params params = Params::make(3, 2, 2);
    RationalMatrix D = build_operator_matrix(params);
    const long n = D.rows();
    RationalMatrix A(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) A.at(i, j) = D.at(i, j) - 1;
    RationalMatrix B = green_rhs(params);
    CHECK(solve_gauss_exact(A, B) == solve_multimodular(A, B));
}
