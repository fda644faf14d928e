#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "markov_mmp/markov.hpp"
#include "markov_mmp/wahl.hpp"
#include "oracle.hpp"

using namespace mm;
using oracle::big;

TEST_CASE("is_markov") {
    CHECK(is_markov(1, 5, 13));
    CHECK_FALSE(is_markov(3, 4, 5));
    CHECK(is_markov(5, 29, 433));
}

TEST_CASE("mutate") {
    CHECK(mutate({1, 2, 5}, 0) == Triple{2, 5, 29});
    for (int p = 0; p < 3; ++p) CHECK(mutate({1, 1, 1}, p) == Triple{1, 1, 2});
    CHECK(mutate({2, 5, 29}, 2) == Triple{1, 2, 5});
    for (const auto& t : enumerate_triples(100000))
        for (int p = 0; p < 3; ++p) {
            Triple u = mutate(t, p);
            CHECK(is_markov(u));
            bool back = false;
            for (int q = 0; q < 3; ++q) back |= mutate(u, q) == t;
            CHECK(back);
        }
}

TEST_CASE("weights") {
    auto w = weights({2, 5, 29});
    CHECK(w.wa == 1);
    CHECK(w.wb == 4);
    CHECK(w.wc == 22);
    CHECK(big(w.wc) == oracle::tweight(2, 5, 29));
    auto v = weights({1, 2, 5});
    CHECK(v.wc == 1);
    CHECK(v.rc == 2);
    auto u = weights({1, 5, 13});
    CHECK((u.rc == 5 || u.rc == 8));
    CHECK(normalized(u.rc, 13) == 5);
}

TEST_CASE("weights on all triples up to 10^6") {
    auto ts = enumerate_triples(1000000);
    for (const auto& t : ts) {
        if (t.c == 1) continue;
        auto w = weights(t);
        CHECK(weight_identities_hold(t, w));
        if (t.c <= 1000) CHECK(big(w.wc) == oracle::tweight(big(t.a), big(t.b), big(t.c)));
    }
}

TEST_CASE("branches") {
    auto fib = branch({1, 1, 1}, 1, 4);
    CHECK(fib == std::vector<Triple>{{1, 2, 5}, {1, 5, 13}, {1, 13, 34}, {1, 34, 89}});
    auto pell = branch({1, 1, 2}, 1, 3);
    CHECK(pell == std::vector<Triple>{{2, 5, 29}, {2, 29, 169}, {2, 169, 985}});
    auto b = branch({1, 2, 5}, 1, 1);
    CHECK(b[0] == Triple{5, 13, 194});

    // odd-indexed Fibonacci and Pell numbers
    std::vector<oracle::BI> F{0, 1}, P{0, 1};
    for (int k = 2; k < 50; ++k) {
        F.push_back(F[k - 1] + F[k - 2]);
        P.push_back(2 * P[k - 1] + P[k - 2]);
    }
    auto fl = branch({1, 1, 1}, 1, 20);
    auto pl = branch({1, 1, 2}, 1, 20);
    for (int k = 0; k < 20; ++k) {
        CHECK(big(fl[k].b) == F[2 * k + 3]);
        CHECK(big(pl[k].b) == P[2 * k + 3]);
        CHECK(is_markov(make_triple(fl[k].a, fl[k].b, fl[k].c)));
        CHECK(is_markov(make_triple(pl[k].a, pl[k].b, pl[k].c)));
    }
}

TEST_CASE("nu and descend") {
    CHECK(nu({5, 29, 433}) == 2);
    CHECK(nu({1, 5, 13}) == 0);
    CHECK(nu({Int("1686049"), Int("981277621"), Int("4963446454828093")}) == 3);
    CHECK(descend({2, 29, 169}).a == 1);
}

TEST_CASE("enumeration and uniqueness") {
    auto ts = enumerate_triples(100);
    CHECK(ts == std::vector<Triple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {2, 5, 29}, {1, 13, 34}, {1, 34, 89}});
    auto u2 = uniqueness_scan(2);
    CHECK(u2 == std::map<Int, int>{{1, 1}, {2, 1}});
    for (const auto& [c, n] : uniqueness_scan(10000)) CHECK(n == 1);

    auto brute = oracle::markov_triples(1000);
    auto tree = enumerate_triples(1000);
    REQUIRE(brute.size() == tree.size());
    std::set<std::string> a, b;
    for (const auto& t : brute) a.insert(t.a.str() + "," + t.b.str() + "," + t.c.str());
    for (const auto& t : tree) b.insert(str(t.a) + "," + str(t.b) + "," + str(t.c));
    CHECK(a == b);
}

TEST_CASE("markovrc") {
    CHECK(check_markovrc({2, 5, 29}));
    CHECK(check_markovrc({5, 29, 433}));
    for (const auto& t : enumerate_triples(1000000))
        if (t.a > 1) CHECK(check_markovrc(t));

    // Wahl-2 data that does not come from a triple
    Frac f = markovrc_concat(2, 1, 13, 5);
    Seq x = expand(2, 1), four{Int(4)}, y = expand(13, 5);
    auto v = oracle::value(concat({&x, &four, &y}));
    CHECK(big(f.delta) == numerator(*v));
    CHECK_FALSE(is_markov(make_triple(2, 13, f.delta)));
}

TEST_CASE("mutation rules for r") {
    for (const auto& t : enumerate_triples(100000)) {
        if (t.a < 2) continue;
        auto w = weights(t);
        Triple s1{t.a, t.c, 3 * t.a * t.c - t.b};
        Triple s2{t.b, t.c, 3 * t.b * t.c - t.a};
        CHECK(mod(weights(s1).rc - (3 * t.a * w.rc - w.rb), s1.c) == 0);
        CHECK(mod(s2.c - weights(s2).rc - (3 * t.b * w.rc - w.ra), s2.c) == 0);
    }
}

TEST_CASE("cohn words") {
    // A = [2, 4], B = [2, 3] for a = 2
    Seq ab = cohn_word(2, 1, "");
    CHECK(ab == oracle::seq({2, 4, 2, 3}));
    CHECK(*evaluate(ab) == Rat(29, 17));

    // A^k B walks the branch (2, m_k, m_{k+1})
    auto pell = branch({1, 1, 2}, 1, 10);
    std::string path;
    for (int k = 1; k < 10; ++k) {
        auto v = oracle::value(cohn_word(2, 1, path));
        CHECK(numerator(*v) == big(pell[k - 1].c));
        path += "L";
    }

    // The concatenation AB^2 is not the mutation (5, 29, 433); the chain of
    // that mutation is [c/r_c, 4, b/r_b] = [A, B, 4, B].
    auto abb = oracle::value(cohn_word(2, 1, "R"));
    CHECK(numerator(*abb) == 109);
    Seq b = oracle::seq({2, 3}), four{Int(4)};
    Seq right = concat({&ab, &four, &b});
    CHECK(*evaluate(right) == Rat(433, 254));
    CHECK(right == expand(433, 254));
    CHECK((254 * 254 + 1) % 433 == 0);
}

TEST_CASE("weight limits") {
    CHECK(weight_limit_check({1, 2, 5}, 20, Rat(Int(1), Int("1000000000000"))));
    CHECK(weight_limit_check({2, 5, 29}, 20, Rat(Int(1), Int("1000000000000"))));
    CHECK(weight_limit_check({1, 2, 5}, 1, Rat(1)));
}

TEST_CASE("presolution remark") {
    CHECK(verify_presolution_remark({2, 5, 29}));
    CHECK(verify_presolution_remark({5, 29, 433}));
    CHECK_THROWS(verify_presolution_remark({1, 2, 5}));
}
