#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tate/coset.hpp"

using namespace tate;

TEST_CASE("params validation and derived values") {
    Params p = Params::make(3, 2, 4, 1, 1);
    CHECK(p.q == 3);
    CHECK(p.coset_count() == 2 * 2 * 27);
    CHECK(Params::make(2, 1, 1, 3).q == 8);
    CHECK_THROWS_AS(Params::make(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Params::make(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Params::make(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Params::make(2, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("coset enumeration matches the stated instances") {
    auto c1 = enumerate_cosets(Params::make(2, 1, 1));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == Coset{0, {1}});

    auto c2 = enumerate_cosets(Params::make(3, 1, 1));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == Coset{0, {1}});
    CHECK(c2[1] == Coset{0, {2}});

    auto c3 = enumerate_cosets(Params::make(2, 2, 2));
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == Coset{0, {1, 0}});
    CHECK(c3[1] == Coset{0, {1, 1}});
    CHECK(c3[2] == Coset{1, {1, 0}});
    CHECK(c3[3] == Coset{1, {1, 1}});
}

TEST_CASE("enumeration is sorted, unique, counted, and indexable") {
    std::mt19937_64 rng(20240517);
    const long ps[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 12; ++trial) {
        long p = ps[rng() % 4];
        long f = 1 + static_cast<long>(rng() % 2);
        long m = 1 + static_cast<long>(rng() % 3);
        long k = 1 + static_cast<long>(rng() % 3);
        if (p >= 5 && f == 2) f = 1;
        Params params = Params::make(p, m, k, f);
        if (params.coset_count() > 2000) continue;
        auto cosets = enumerate_cosets(params);
        CHECK(static_cast<long>(cosets.size()) == params.coset_count());
        std::set<Coset> uniq(cosets.begin(), cosets.end());
        CHECK(uniq.size() == cosets.size());
        for (size_t i = 0; i + 1 < cosets.size(); ++i) CHECK(cosets[i] < cosets[i + 1]);
        for (size_t i = 0; i < cosets.size(); ++i)
            CHECK(coset_index(cosets[i], params) == static_cast<long>(i));
    }
}

TEST_CASE("valuation of a difference") {
    Params q2 = Params::make(2, 2, 2);
    CHECK(valuation_of_difference(Coset{0, {1, 0}}, Coset{1, {1, 0}}) == 0);
    CHECK(valuation_of_difference(Coset{0, {1, 0}}, Coset{0, {1, 1}}) == 1);
    CHECK(valuation_of_difference(Coset{0, {1}}, Coset{0, {2}}) == 0);
    CHECK_THROWS_AS(valuation_of_difference(Coset{0, {1, 0}}, Coset{0, {1, 0}}), UnresolvedValuation);
    (void)q2;
}

TEST_CASE("measures") {
    Params p32 = Params::make(3, 2, 2);  // q=3, m=2, k=2
    CHECK(additive_measure(Coset{1, {1, 0}}, p32) == Rat(1, 27));
    CHECK(multiplicative_measure(Coset{0, {1, 0}}, Params::make(3, 1, 1)) == Rat(1, 3));
    CHECK(multiplicative_measure(Coset{0, {1, 0}}, Params::make(2, 1, 2)) == Rat(1, 4));

    // sums over the enumeration
    for (Params params : {Params::make(2, 2, 2), Params::make(3, 2, 2), Params::make(2, 3, 3, 2)}) {
        std::vector<Rat> per_s(static_cast<size_t>(params.m), Rat(0));
        Rat mult_total(0);
        for (const Coset& c : enumerate_cosets(params)) {
            per_s[static_cast<size_t>(c.s)] += additive_measure(c, params);
            mult_total += multiplicative_measure(c, params);
        }
        for (long s = 0; s < params.m; ++s)
            CHECK(per_s[static_cast<size_t>(s)] == Rat(params.q - 1) * rat_pow(params.q, -s - 1));
        CHECK(mult_total == Rat(params.m) * (Rat(1) - rat_pow(params.q, -1)));
    }
    // m=2, q=2 total additive measure 3/4
    Rat total(0);
    Params p22 = Params::make(2, 2, 1);
    for (const Coset& c : enumerate_cosets(p22)) total += additive_measure(c, p22);
    CHECK(total == Rat(3, 4));
}

TEST_CASE("shell measures, including the empty q=2 shell") {
    CHECK(shell_measure(0, 0, Params::make(2, 1, 1)) == 0);
    CHECK(shell_measure(0, 0, Params::make(3, 1, 1)) == Rat(1, 3));
    CHECK(shell_measure(1, 3, Params::make(2, 2, 3)) == Rat(1, 16));
    CHECK_THROWS_AS(shell_measure(1, 0, Params::make(2, 2, 3)), std::invalid_argument);

    // cross-check (r=0, i=0, q=3) against the level-1 enumeration: the shell
    // around y = (0,[1]) at i=0 is the unit cosets at distance with v = 0
    Params p3 = Params::make(3, 1, 1);
    Coset y{0, {1}};
    Rat acc(0);
    for (const Coset& z : enumerate_cosets(p3))
        if (z != y && valuation_of_difference(z, y) == 0) acc += additive_measure(z, p3);
    CHECK(acc == shell_measure(0, 0, p3));
}

TEST_CASE("shell telescoping against coset enumeration at k >= 3") {
    Params params = Params::make(2, 2, 3);
    Coset y{1, {1, 0, 1}};
    for (long i = 1; i <= 3; ++i) {
        Rat acc(0);
        for (const Coset& z : enumerate_cosets(params)) {
            if (z == y || z.s != y.s) continue;
            if (valuation_of_difference(z, y) == i) acc += additive_measure(z, params);
        }
        CHECK(acc == shell_measure(1, i, params));
    }
}

TEST_CASE("unit multiplication") {
    Params p2 = Params::make(2, 1, 2);
    CHECK(unit_multiply(Coset{0, {1, 0}}, 3, p2) == Coset{0, {1, 1}});
    Params p3 = Params::make(3, 1, 1);
    CHECK(unit_multiply(Coset{0, {2}}, 2, p3) == Coset{0, {1}});
    for (const Coset& c : enumerate_cosets(Params::make(3, 2, 2)))
        CHECK(unit_multiply(c, 1, Params::make(3, 2, 2)) == c);
    CHECK_THROWS_AS(unit_multiply(Coset{0, {1}}, 2, Params::make(2, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(unit_multiply(Coset{0, {1}}, 3, Params::make(2, 1, 1, 2)), std::invalid_argument);
}

TEST_CASE("unit multiplication is a valuation-preserving bijection") {
    Params params = Params::make(3, 2, 2);
    auto cosets = enumerate_cosets(params);
    for (long u : {2, 4, 5, 7, 8}) {
        std::set<Coset> image;
        for (const Coset& c : cosets) {
            Coset img = unit_multiply(c, u, params);
            CHECK(img.s == c.s);
            image.insert(img);
        }
        CHECK(image.size() == cosets.size());
        for (const Coset& a : cosets)
            for (const Coset& b : cosets) {
                if (a == b) continue;
                CHECK(valuation_of_difference(unit_multiply(a, u, params), unit_multiply(b, u, params)) ==
                      valuation_of_difference(a, b));
            }
    }
}

TEST_CASE("reflection") {
    CHECK(reflect(Coset{0, {2}}, Params::make(3, 1, 1)) == Coset{0, {2}});
    CHECK(reflect(Coset{0, {1}}, Params::make(2, 2, 1)) == Coset{1, {1}});
    for (Params params : {Params::make(2, 2, 3), Params::make(3, 3, 2), Params::make(5, 2, 2)}) {
        for (const Coset& c : enumerate_cosets(params)) {
            Coset img = reflect(c, params);
            CHECK(img.s == params.m - 1 - c.s);
            CHECK(reflect(img, params) == c);
        }
    }
    CHECK_THROWS_AS(reflect(Coset{0, {1}}, Params::make(2, 1, 1, 2)), std::invalid_argument);
}

TEST_CASE("coset string form") {
    CHECK(coset_to_string(Coset{0, {1, 0, 1}}, Params::make(2, 1, 3)) == "0:101");
    CHECK(coset_to_string(Coset{2, {3, 12, 0}}, Params::make(13, 3, 3)) == "2:3.12.0");
}

TEST_CASE("rational parsing and rendering round-trips") {
    CHECK(rat_str(Rat(-9, 2)) == "-9/2");
    CHECK(rat_str(Rat(0)) == "0/1");
    CHECK(parse_rat("1/10^12") == rat_pow(10, -12));
    CHECK(parse_rat("-3/6") == Rat(-1, 2));
    CHECK(parse_rat("2^10") == Rat(1024));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Rat x(static_cast<long>(rng() % 20001) - 10000, 1 + static_cast<long>(rng() % 999));
        x.canonicalize();
        CHECK(parse_rat(rat_str(x)) == x);
    }
}
