#include "tate/cmatrix_fixtures.hpp"

#include <stdexcept>
#include <vector>

namespace tate {

namespace {

using Poly = std::vector<long>;  // coefficients, constant term first

// entry value = -num_scalar * p^p_power * prod(num) / (den_scalar * prod(den))
struct Expr {
    long num_scalar = 1;
    int p_power = 0;
    std::vector<Poly> num;
    long den_scalar = 1;
    std::vector<Poly> den;
};

struct FixtureTable {
    long m;
    std::vector<Expr> exprs;
    std::vector<int> layout;  // m*m ids; -1 marks a zero entry
};

// shared polynomial factors
const Poly kPm1{-1, 1};                       // p - 1
const Poly kPp1{1, 1};                        // p + 1
const Poly kPp2{2, 1};                        // p + 2
const Poly kS111{1, 1, 1};                    // p^2 + p + 1
const Poly kSq1{1, 0, 1};                     // p^2 + 1
const Poly kQ{1, -1, 1};                      // p^2 - p + 1
const Poly kR{1, 0, 1, 1};                    // p^3 + p^2 + 1
const Poly kM5a{2, 2, 1};                     // p^2 + 2p + 2
const Poly kM5b{1, 1, 2, 1};                  // p^3 + 2p^2 + p + 1
const Poly kM5c{1, 1, 1, 1, 1};               // p^4 + p^3 + p^2 + p + 1
const Poly kM7a{2, 2, 2, 1};                  // p^3 + 2p^2 + 2p + 2
const Poly kM7b{1, 1, 2, 2, 1};               // p^4 + 2p^3 + 2p^2 + p + 1
const Poly kM7c{1, 1, 1, 1, 2, 1};            // p^5 + 2p^4 + p^3 + p^2 + p + 1
const Poly kM7d{1, 1, 1, 1, 1, 1, 1};         // p^6 + ... + 1

const FixtureTable& table_for(long m);

FixtureTable make_m2() {
    FixtureTable t;
    t.m = 2;
    t.exprs = {
        {1, 3, {}, 2, {kPm1, kPp1}},  // E0: p^3 / (2 (p-1)(p+1))
    };
    t.layout = {0, -1,
                -1, 0};
    return t;
}

FixtureTable make_m3() {
    FixtureTable t;
    t.m = 3;
    t.exprs = {
        {1, 4, {kPp1}, 1, {kPm1, kPp2, kS111}},  // E0: corners
        {1, 3, {}, 3, {kPm1, kPp2}},             // E1
        {2, 3, {}, 3, {kPm1, kPp2}},             // E2: center
    };
    t.layout = {0, 1, -1,
                1, 2, 1,
                -1, 1, 0};
    return t;
}

FixtureTable make_m4() {
    FixtureTable t;
    t.m = 4;
    t.exprs = {
        {1, 5, {{1, 2, 3}}, 2, {kSq1, kPm1, kPp1, kPp1, kPp1}},  // E0
        {1, 4, {{1, 3}}, 4, {kPm1, kPp1, kPp1, kPp1}},           // E1
        {1, 4, {}, 4, {kPm1, kPp1, kPp1}},                       // E2
        {1, 4, {{1, 2}}, 2, {kPm1, kPp1, kPp1, kPp1}},           // E3
        {1, 4, {}, 2, {kPm1, kPp1, kPp1}},                       // E4
    };
    t.layout = {0, 1, 2, -1,
                1, 3, 4, 2,
                2, 4, 3, 1,
                -1, 2, 1, 0};
    return t;
}

FixtureTable make_m5() {
    FixtureTable t;
    t.m = 5;
    t.exprs = {
        {1, 6, {kPp1, {1, 1, 3, 3, 2}}, 1, {kPm1, kM5a, kM5b, kM5c}},  // E0
        {1, 5, {{1, 2}, {2, 3}}, 5, {kPm1, kM5a, kM5b}},               // E1
        {1, 5, {{4, 9, 7}}, 5, {kPm1, kM5a, kM5b}},                    // E2
        {1, 4, {kPp1, {1, 1, 3}}, 5, {kPm1, kM5a, kM5b}},              // E3
        {1, 4, {{1, 2}, {1, 2, 2}}, 5, {kPm1, kM5a, kM5b}},            // E4
        {1, 5, {}, 5, {kPm1, kM5b}},                                   // E5
        {2, 5, {}, 5, {kPm1, kM5b}},                                   // E6
        {2, 4, {kPp1, {1, 1, 3}}, 5, {kPm1, kM5a, kM5b}},              // E7
    };
    t.layout = {0, 1, 3, 5, -1,
                1, 2, 4, 6, 5,
                3, 4, 7, 4, 3,
                5, 6, 4, 2, 1,
                -1, 5, 3, 1, 0};
    return t;
}

FixtureTable make_m6() {
    FixtureTable t;
    t.m = 6;
    t.exprs = {
        {1, 7, {{1, 1, 2, 4, 2, 5}}, 2, {kPm1, kPp1, kS111, kS111, kQ, kR}},  // E0
        {1, 6, {{1, 2}, {1, 3, 3, 5}}, 6, {kPm1, kPp1, kS111, kS111, kR}},    // E1
        {1, 6, {{2, 7, 12, 13, 11}}, 6, {kPm1, kPp1, kS111, kS111, kR}},      // E2
        {1, 5, {{1, 2, 6, 5, 7, 6}}, 6, {kPm1, kPp1, kS111, kS111, kR}},      // E3
        {1, 5, {{1, 2, 6, 2, 7}}, 6, {kPm1, kS111, kS111, kR}},               // E4
        {1, 5, {{1, 1, 1, 3}}, 6, {kPm1, kPp1, kS111, kR}},                   // E5
        {1, 5, {{1, 2}, {1, 0, 2}}, 6, {kPm1, kPp1, kS111, kR}},              // E6
        {1, 6, {}, 6, {kPm1, kPp1, kR}},                                      // E7
        {1, 6, {}, 3, {kPm1, kPp1, kR}},                                      // E8
        {1, 5, {{2, 4, 9, 10, 11, 9}}, 6, {kPm1, kPp1, kS111, kS111, kR}},    // E9
        {1, 5, {{1, 1, 1, 3}}, 3, {kPm1, kPp1, kS111, kR}},                   // E10
    };
    t.layout = {0, 1, 3, 5, 7, -1,
                1, 2, 4, 6, 8, 7,
                3, 4, 9, 10, 6, 5,
                5, 6, 10, 9, 4, 3,
                7, 8, 6, 4, 2, 1,
                -1, 7, 5, 3, 1, 0};
    return t;
}

FixtureTable make_m7() {
    FixtureTable t;
    t.m = 7;
    t.exprs = {
        {1, 8, {kPp1, {1, 2, 5, 8, 14, 18, 22, 24, 23, 17, 10, 3}}, 1,
         {kPm1, kM7a, kM7b, kM7c, kM7d}},  // E0
        {1, 7, {{2, 11, 22, 39, 53, 57, 46, 15}}, 7, {kPm1, kM7a, kM7b, kM7c}},           // E1
        {1, 6, {kPp1, {2, 4, 13, 14, 18, 16, 21, 10}}, 7, {kPm1, kM7a, kM7b, kM7c}},      // E2
        {1, 5, {{1, 3, 7, 14, 21, 25, 26, 25, 19, 6}}, 7, {kPm1, kM7a, kM7b, kM7c}},      // E3
        {1, 6, {kPp1, {1, 1, 1, 1, 3}}, 7, {kPm1, kM7b, kM7c}},                           // E4
        {1, 7, {}, 7, {kPm1, kM7c}},                                                      // E5
        {1, 7, {{4, 15, 30, 50, 64, 65, 50, 16}}, 7, {kPm1, kM7a, kM7b, kM7c}},           // E6
        {1, 6, {{2, 8, 21, 35, 43, 45, 45, 35, 11}}, 7, {kPm1, kM7a, kM7b, kM7c}},        // E7
        {1, 5, {{1, 3, 9, 18, 29, 36, 37, 33, 23, 7}}, 7, {kPm1, kM7a, kM7b, kM7c}},      // E8
        {1, 6, {{1, 2}, {1, 1, 1, 2, 2}}, 7, {kPm1, kM7b, kM7c}},                         // E9
        {2, 7, {}, 7, {kPm1, kM7c}},                                                      // E10
        {1, 6, {kPp1, {4, 8, 19, 21, 29, 25, 28, 13}}, 7, {kPm1, kM7a, kM7b, kM7c}},      // E11
        {1, 5, {{1, 5, 13, 24, 34, 43, 46, 41, 29, 9}}, 7, {kPm1, kM7a, kM7b, kM7c}},     // E12
        {2, 6, {kPp1, {1, 1, 1, 1, 3}}, 7, {kPm1, kM7b, kM7c}},                           // E13
        {2, 5, {{1, 3, 7, 14, 21, 25, 26, 25, 19, 6}}, 7, {kPm1, kM7a, kM7b, kM7c}},      // E14
    };
    t.layout = {0, 1, 2, 3, 4, 5, -1,
                1, 6, 7, 8, 9, 10, 5,
                2, 7, 11, 12, 13, 9, 4,
                3, 8, 12, 14, 12, 8, 3,
                4, 9, 13, 12, 11, 7, 2,
                5, 10, 9, 8, 7, 6, 1,
                -1, 5, 4, 3, 2, 1, 0};
    return t;
}

const FixtureTable& table_for(long m) {
    static const FixtureTable t2 = make_m2();
    static const FixtureTable t3 = make_m3();
    static const FixtureTable t4 = make_m4();
    static const FixtureTable t5 = make_m5();
    static const FixtureTable t6 = make_m6();
    static const FixtureTable t7 = make_m7();
    switch (m) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
        case 7: return t7;
        default: throw std::invalid_argument("fixture_c_matrix: m outside [2, 7]");
    }
}

Int eval_poly(const Poly& poly, long p) {
    Int acc(0);
    for (size_t t = poly.size(); t-- > 0;) acc = acc * p + poly[t];
    return acc;
}

Rat eval_expr(const Expr& e, long p) {
    Int num(e.num_scalar);
    for (int t = 0; t < e.p_power; ++t) num *= p;
    for (const Poly& f : e.num) num *= eval_poly(f, p);
    Int den(e.den_scalar);
    for (const Poly& f : e.den) den *= eval_poly(f, p);
    Rat out(-num, den);
    out.canonicalize();
    return out;
}

}  // namespace

bool fixture_c_matrix_available(long m) { return m >= 2 && m <= 7; }

RationalMatrix fixture_c_matrix(long p, long m) {
    const FixtureTable& t = table_for(m);
    RationalMatrix C(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            int id = t.layout[static_cast<size_t>(i * m + j)];
            C.at(i, j) = id < 0 ? Rat(0) : eval_expr(t.exprs[static_cast<size_t>(id)], p);
        }
    return C;
}

bool fixture_is_bisymmetric(long p, long m) {
    RationalMatrix C = fixture_c_matrix(p, m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            if (C.at(i, j) != C.at(j, i)) return false;
            if (C.at(i, j) != C.at(m - 1 - i, m - 1 - j)) return false;
        }
    return true;
}

}  // namespace tate
