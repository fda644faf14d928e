#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "markov_mmp/hjcf.hpp"
#include "oracle.hpp"

using namespace mm;
using oracle::seq;

TEST_CASE("expand") {
    CHECK(expand(11, 3) == seq({4, 3}));
    CHECK(expand(2, 1) == seq({2}));
    CHECK(expand(476, 361) == oracle::lib(oracle::expand(476, 361)));
    CHECK(expand(476, 361) == seq({2, 2, 2, 9, 2, 2, 2, 2, 4}));
}

TEST_CASE("evaluate") {
    CHECK(*evaluate(seq({2, 1, 2})) == 0);
    CHECK(*evaluate(seq({4, 3})) == Rat(11, 3));
    auto v = oracle::value(seq({2, 2, 2, 7}));
    CHECK(*evaluate(seq({2, 2, 2, 7})) == Rat(oracle::lib(numerator(*v)), oracle::lib(denominator(*v))));
    CHECK(*evaluate(seq({2, 2, 2, 7})) == Rat(25, 19));
    CHECK_FALSE(evaluate(seq({1, 1, 1})).has_value());
}

TEST_CASE("dual and inverse") {
    CHECK(dual({25, 19}) == oracle::lib(oracle::expand(25, 6)));
    CHECK(dual({25, 19}) == seq({5, 2, 2, 2, 2, 2}));
    CHECK(dual({5, 4}) == seq({5}));
    CHECK(dual({2, 1}) == seq({2}));
    CHECK(inverse_den({29, 22}) == oracle::lib(oracle::inverse(22, 29)));
    CHECK(inverse_den({29, 22}) == 4);
    CHECK(inverse_den({5, 2}) == 3);
    CHECK(inverse_den({2, 1}) == 1);
}

TEST_CASE("blow up and down") {
    CHECK(blow_down(seq({2, 1, 3, 1}), 2) == seq({1, 2, 1}));
    CHECK(blow_down(seq({6, 2, 2, 1}), 4) == seq({6, 2, 1}));
    CHECK(blow_up(seq({1, 1}), 2) == seq({2, 1, 2}));
}

TEST_CASE("zero continued fractions") {
    CHECK(is_zero_cf(seq({1, 1})));
    CHECK(is_zero_cf(seq({3, 1, 2, 2})));
    CHECK_FALSE(is_zero_cf(seq({2, 2})));

    auto two = enumerate_zero_cf(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].cf == seq({1, 1}));
    auto three = enumerate_zero_cf(3);
    REQUIRE(three.size() == 2);
    std::vector<Seq> got{three[0].cf, three[1].cf};
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Seq>{seq({1, 2, 1}), seq({2, 1, 2})});
    CHECK(enumerate_zero_cf(4).size() == 5);

    for (int s = 2; s <= 9; ++s) {
        auto all = enumerate_zero_cf(s);
        CHECK(oracle::BI(all.size()) == oracle::catalan(s - 1));
        for (const auto& z : all) {
            auto v = oracle::value(z.cf);
            CHECK((v && *v == 0));
        }
    }
}

TEST_CASE("blows_down_to") {
    Seq s = seq({4, 1, 2, 2, 2, 10, 2, 2, 2, 2, 2, 5, 1, 2, 2, 2, 7});
    CHECK(blows_down_to(s, seq({0, 10, 0})));
    CHECK(blows_down_to(s, seq({0, 8, 0})));
    CHECK(blows_down_to(seq({1, 1}), seq({0})));
    CHECK_FALSE(blows_down_to(seq({2, 2}), seq({0})));
}

TEST_CASE("matrix_of") {
    CHECK(matrix_of(seq({2})) == Mat2{2, -1, 1, 0});
    CHECK(matrix_of(seq({3, 2})) == Mat2{5, -3, 2, -1});
    CHECK(matrix_of(seq({4, 3})) == Mat2{11, -4, 3, -1});
}

TEST_CASE("random fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dm(2, 1000000);
    for (int k = 0; k < 400; ++k) {
        long m = dm(rng);
        long q = std::uniform_int_distribution<long>(1, m - 1)(rng);
        if (oracle::gcd(m, q) != 1) continue;
        Seq e = expand(m, q);
        CHECK(e == oracle::lib(oracle::expand(m, q)));
        CHECK(*evaluate(e) == Rat(m, q));

        Seq d = expand(m, m - q);
        Seq joined = e;
        joined.push_back(1);
        Seq rd = reversed(d);
        joined.insert(joined.end(), rd.begin(), rd.end());
        CHECK(is_zero_cf(joined));

        CHECK(reversed(e) == expand(m, inverse_den({m, q})));

        Seq glued = e;
        glued.back() += d.back();
        glued.insert(glued.end(), rd.begin() + 1, rd.end());
        Int M = Int(m) * m;
        CHECK(glued == expand(M, Int(m) * q - 1));

        Seq other = d;
        other.push_back(2);
        Seq re = reversed(e);
        other.insert(other.end(), re.begin(), re.end());
        CHECK(other == expand(M, Int(m) * (m - q) + 1));

        std::size_t pos = std::uniform_int_distribution<std::size_t>(1, e.size() + 1)(rng);
        CHECK(blow_down(blow_up(e, pos), pos) == e);

        Mat2 mat = matrix_of(e);
        CHECK(mat.a == m);
        CHECK(mat.c == q);
        CHECK(mat.a * mat.d - mat.b * mat.c == 1);
    }
}

TEST_CASE("concatenation of matrices") {
    Seq x = seq({3, 2, 5}), y = seq({2, 2, 4});
    Seq xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    CHECK(matrix_of(xy) == matrix_of(x) * matrix_of(y));
}
