#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "markov_mmp/conjecture.hpp"
#include "markov_mmp/scan.hpp"
#include "oracle.hpp"

using namespace mm;
using oracle::BI;
using oracle::seq;
using oracle::Vec;

namespace {

std::set<Int> keys(const std::map<Int, Witness>& m) {
    std::set<Int> out;
    for (const auto& [q, w] : m) out.insert(q);
    return out;
}

std::optional<oracle::BQ> val(const Vec& v) { return oracle::value(v); }

bool is_wahl2(const Vec& v) {
    auto x = val(v);
    if (!x || *x <= 1) return false;
    BI p = numerator(*x), r = denominator(*x);
    return (r * r + 1) % p == 0;
}

bool is_wahl(const Vec& v) {
    auto x = val(v);
    if (!x || *x <= 1) return false;
    BI p = numerator(*x), q = denominator(*x);
    BI n = boost::multiprecision::sqrt(p);
    return n >= 2 && n * n == p && (q + 1) % n == 0 && oracle::gcd(n, (q + 1) / n) == 1;
}

bool is_dual_wahl(const Vec& v) {
    auto x = val(v);
    if (!x || *x <= 1) return false;
    BI p = numerator(*x), q = denominator(*x);
    BI n = boost::multiprecision::sqrt(p);
    if (n < 2 || n * n != p || (q - 1) % n != 0) return false;
    BI a = n - (q - 1) / n;
    return a > 0 && a < n && oracle::gcd(n, a) == 1;
}

template <class Part>
bool splits(const Vec& e, Part part, int full, int step, bool allow_empty) {
    for (std::size_t k = 0; k < e.size(); ++k) {
        Vec l(e.begin(), e.begin() + k), r(e.begin() + k + 1, e.end());
        int empty = l.empty() + r.empty();
        if (empty && !allow_empty) continue;
        if (e[k] != full - step * empty) continue;
        if ((l.empty() || part(l)) && (r.empty() || part(r))) return true;
    }
    return false;
}

std::set<Int> brute_IV(long m) {
    std::set<Int> out;
    for (long q = 1; q < m; ++q)
        if (oracle::gcd(m, q) == 1 && (q * q + 1) % m == 0 && splits(oracle::expand(m, q), is_wahl2, 4, 1, true)) out.insert(q);
    return out;
}

std::set<Int> brute_V(long m) {
    std::set<Int> out;
    for (long q = 1; q < m; ++q)
        if (oracle::gcd(m, q) == 1 && splits(oracle::expand(BI(m) * m, BI(m) * q - 1), is_dual_wahl, 10, 3, true)) out.insert(q);
    return out;
}

std::set<Int> brute_VI(long m) {
    std::set<Int> out;
    for (long q = 1; q < m; ++q) {
        if (oracle::gcd(m, q) != 1) continue;
        BI qi = oracle::inverse(q, m);
        Vec e{5};
        for (const auto& x : oracle::expand(m, q)) e.push_back(x);
        e.push_back(2);
        for (const auto& x : oracle::expand(m, m - qi)) e.push_back(x);
        e.push_back(5);
        if (splits(e, is_wahl, 2, 0, false)) out.insert(q);
    }
    return out;
}

}  // namespace

TEST_CASE("IV") {
    CHECK(keys(check_IV(29)) == std::set<Int>{12, 17});
    CHECK(keys(check_IV(13)) == std::set<Int>{5, 8});
    CHECK(check_IV(7).empty());
    auto w = check_IV(29).at(12);
    CHECK(w.middle == 4);
}

TEST_CASE("V") {
    auto two = check_V(2);
    CHECK(keys(two) == std::set<Int>{1});
    CHECK(two.at(1).middle == 4);
    CHECK(keys(check_V(5)) == std::set<Int>{1, 4});
    CHECK(expand(25, 4) == seq({7, 2, 2, 2}));
    auto v = check_V(29);
    CHECK(keys(v) == std::set<Int>{7, 22});
    CHECK(expand(841, 637) == seq({2, 2, 2, 10, 2, 2, 2, 2, 2, 5}));
    const auto& x = v.at(22);
    CHECK(x.middle == 10);
    CHECK(x.n0 * x.n0 + x.n1 * x.n1 + 29 * 29 == 3 * x.n0 * x.n1 * 29);
}

TEST_CASE("VI") {
    auto v = check_VI(29);
    REQUIRE(v.count(22));
    CHECK(v.at(22).n0 == 21);
    CHECK(v.at(22).a0 == 5);
    CHECK(v.at(22).n1 == 9);
    CHECK(v.at(22).a1 == 7);
    CHECK(v.at(22).middle == 2);
    CHECK(keys(v) == std::set<Int>{7, 22});
    CHECK(v.at(7).n0 == 9);
    CHECK(v.at(7).n1 == 21);
    CHECK(keys(check_VI(2)) == std::set<Int>{1});
    CHECK(check_VI(2).at(1).n0 == 3);
    CHECK(check_VI(6).empty());
}

TEST_CASE("brute splits agree for m <= 90") {
    for (long m = 2; m <= 90; ++m) {
        INFO("m = " << m);
        CHECK(keys(check_IV(m)) == brute_IV(m));
        CHECK(keys(check_V(m)) == brute_V(m));
        CHECK(keys(check_VI(m)) == brute_VI(m));
    }
}

TEST_CASE("0,10,0 witness") {
    auto w = witness_0_10_0(29, 22);
    REQUIRE(w.has_value());
    CHECK(w->a == 2);
    CHECK(w->wa == 1);
    CHECK(w->b == 5);
    CHECK(w->wb == 4);
    CHECK(w->i < w->j);
    CHECK_FALSE(witness_0_10_0(5, 1).has_value());
    CHECK_FALSE(witness_0_10_0(4, 1).has_value());

    for (const auto& t : enumerate_triples(100000)) {
        if (t.a < 2) continue;
        auto tw = weights(t);
        for (const Int& q : {tw.wc, Int(t.c - tw.wc)}) {
            auto z = witness_0_10_0(t.c, q);
            REQUIRE(z.has_value());
            CHECK(is_markov(z->a, z->b, t.c));
        }
    }
}

TEST_CASE("mutation identities") {
    CHECK(mutation_identity_check({1, 2, 5}, 2));
    auto [lhs, rhs] = mutation_identity_sides({1, 2, 5}, 2);
    CHECK(lhs == seq({2, 2, 2, 10, 2, 2, 2, 2, 2, 5}));
    CHECK(lhs == rhs);
    CHECK(mutation_identity_check({1, 2, 5}, 1));
    CHECK(mutation_identity_check({2, 5, 29}, 2));
    for (const auto& t : enumerate_triples(1000000))
        if (t.b > 1)
            for (int side : {1, 2}) CHECK(mutation_identity_check(t, side));
}

TEST_CASE("weight classes") {
    CHECK(weight_class(22, 29) == 7);
    CHECK(weight_class(7, 29) == 7);
    CHECK(classes(check_IV(29), Decomp::IV, 29) == std::set<Int>{7});
    CHECK(classes(check_V(29), Decomp::V, 29) == std::set<Int>{7});
}

TEST_CASE("consistency scans") {
    auto r = consistency_scan(100);
    CHECK(r.violations.empty());
    std::set<Int> hit;
    for (const auto& row : r.rows) {
        CHECK(row.consistent());
        if (!row.v.empty()) hit.insert(row.m);
    }
    CHECK(hit == std::set<Int>{2, 5, 13, 29, 34, 89});

    auto s = consistency_scan(433);
    CHECK(s.violations.empty());
    std::set<Int> big;
    for (const auto& row : s.rows)
        if (!row.v.empty()) big.insert(row.m);
    for (int m : {169, 194, 233, 433}) CHECK(big.count(m));

    // V classes against the tree
    std::map<Int, std::set<Int>> tree;
    for (const auto& t : enumerate_triples(433))
        if (t.c > 1) {
            auto w = weights(t);
            tree[t.c].insert(weight_class(w.wc, t.c));
        }
    for (const auto& row : s.rows) CHECK(row.v == tree[row.m]);

    CHECK(consistency_scan(2).violations.empty());

    auto par = consistency_scan(433, CheckAll, 3);
    REQUIRE(par.rows.size() == s.rows.size());
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        CHECK(par.rows[k].m == s.rows[k].m);
        CHECK(par.rows[k].vi == s.rows[k].vi);
    }
    CHECK(scan_json(par) == scan_json(s));
}

TEST_CASE("parallel tree and flip scans") {
    auto serial = enumerate_tree(Int("1000000000"), 1);
    auto par = enumerate_tree(Int("1000000000"), 3);
    CHECK(serial == par);
    CHECK(serial == enumerate_triples(Int("1000000000")));
    auto a = flip_scan(serial, 100000, 1);
    auto b = flip_scan(serial, 100000, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].flips == b[k].flips);
        CHECK(a[k].flips <= 6 * a[k].nu + 3);
    }
}
