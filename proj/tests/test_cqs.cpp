#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "markov_mmp/cqs.hpp"
#include "markov_mmp/markov.hpp"
#include "oracle.hpp"

using namespace mm;
using oracle::big;
using oracle::BI;
using oracle::BQ;
using oracle::seq;

static Rat ratio(const Int& a, const Int& b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

namespace {

// n^2/(na-1) read off a value, smooth for an empty part.
std::optional<WahlSing> wahl_of(const oracle::Vec& part) {
    if (part.empty()) return smooth_point();
    auto v = oracle::value(part);
    if (!v) return std::nullopt;
    BI p = numerator(*v), q = denominator(*v);
    BI n = boost::multiprecision::sqrt(p);
    if (n < 2 || n * n != p || (q + 1) % n != 0) return std::nullopt;
    BI a = (q + 1) / n;
    if (a <= 0 || a >= n || oracle::gcd(n, a) != 1) return std::nullopt;
    return WahlSing{oracle::lib(n), oracle::lib(a)};
}

// Every split of expand(D, O) as [Wahl, c, Wahl] with delta > 0.
std::vector<PRes> brute_pres(long D, long O) {
    oracle::Vec e = oracle::expand(D, O);
    std::vector<PRes> out;
    for (std::size_t k = 0; k < e.size(); ++k) {
        auto w0 = wahl_of(oracle::Vec(e.begin(), e.begin() + k));
        auto w1 = wahl_of(oracle::Vec(e.begin() + k + 1, e.end()));
        if (!w0 || !w1) continue;
        // delta with the smooth point as (1,0) on the left, (1,1) on the right
        BI n0 = big(w0->n), a0 = big(w0->a), n1 = big(w1->n), a1 = w1->smooth() ? BI(1) : big(w1->a);
        BI d = (e[k] - 1) * n0 * n1 + n1 * a0 - n0 * a1;
        if (d <= 0) continue;
        PRes p;
        p.w0 = *w0;
        p.c = oracle::lib(e[k]);
        p.w1 = *w1;
        p.delta = oracle::lib(d);
        out.push_back(p);
    }
    return out;
}

// P-resolutions with middle index 1 never show up in the HJ expansion, so
// collect them by evaluating [W0, 1, W1] for all small pairs.
std::map<std::pair<long, long>, std::vector<PRes>> middle_one(long max_D) {
    std::map<std::pair<long, long>, std::vector<PRes>> out;
    std::vector<std::pair<long, long>> ws;
    for (long n = 2; n * n <= max_D; ++n)
        for (long a = 1; a < n; ++a)
            if (oracle::gcd(n, a) == 1) ws.push_back({n, a});
    for (auto [n0, a0] : ws)
        for (auto [n1, a1] : ws) {
            if (n1 * a0 - n0 * a1 <= 0) continue;
            oracle::Vec e = oracle::expand(n0 * n0, n0 * a0 - 1);
            e.push_back(1);
            oracle::Vec r = oracle::expand(n1 * n1, n1 * a1 - 1);
            e.insert(e.end(), r.begin(), r.end());
            auto v = oracle::value(e);
            if (!v || *v <= 1 || numerator(*v) > max_D) continue;
            PRes p;
            p.w0 = {n0, a0};
            p.c = 1;
            p.w1 = {n1, a1};
            p.delta = n1 * a0 - n0 * a1;
            out[{long(numerator(*v)), long(denominator(*v))}].push_back(p);
        }
    return out;
}

}  // namespace

TEST_CASE("extremal P-resolutions of the listed c.q.s.") {
    auto a = find_extremal_presolutions({11, 3});
    REQUIRE(a.size() == 1);
    CHECK(a[0].w0 == WahlSing{2, 1});
    CHECK(a[0].c == 3);
    CHECK(a[0].w1.smooth());
    CHECK(a[0].delta == 3);

    auto b = find_extremal_presolutions({21, 16});
    REQUIRE(b.size() == 1);
    CHECK(b[0].w0.smooth());
    CHECK(b[0].c == 2);
    CHECK(b[0].w1 == WahlSing{4, 3});
    CHECK(b[0].delta == 1);
    CHECK(dual({21, 16}) == seq({5, 2, 2, 2, 2}));

    auto c = find_extremal_presolutions({72, 17});
    REQUIRE(c.size() == 1);
    CHECK(c[0].w0 == WahlSing{3, 1});
    CHECK(c[0].c == 2);
    CHECK(c[0].w1 == WahlSing{3, 2});
    CHECK(c[0].delta == 6);
    CHECK(expand(72, 17) == seq({5, 2, 2, 2, 5}));

    auto d = find_extremal_presolutions({16965, 4001});
    REQUIRE(d.size() == 1);
    CHECK(d[0].w0 == WahlSing{21, 5});
    CHECK(d[0].w1 == WahlSing{9, 7});
    CHECK(d[0].delta == 87);
    CHECK(pres_delta({21, 5}, 2, {9, 7}) == 189 + 45 - 147);

    CHECK_FALSE(is_wormhole({11, 3}));
    CHECK_FALSE(is_wormhole({72, 17}));
    // [1,2,1] is a zero CF, so 1/4(1,1) has the P-resolution []-4-[]
    CHECK_FALSE(is_wormhole({4, 1}));
    auto e = find_extremal_presolutions({4, 1});
    REQUIRE(e.size() == 1);
    CHECK(e[0].w0.smooth());
    CHECK(e[0].c == 4);
    CHECK(e[0].w1.smooth());
    CHECK(e[0].delta == 2);
}

TEST_CASE("finder agrees with brute splitting") {
    int wormholes = 0;
    auto ones = middle_one(300);
    for (long D = 2; D <= 300; ++D)
        for (long O = 1; O < D; ++O) {
            if (oracle::gcd(D, O) != 1) continue;
            auto lib = find_extremal_presolutions({D, O});
            auto ref = brute_pres(D, O);
            if (auto it = ones.find({D, O}); it != ones.end()) ref.insert(ref.end(), it->second.begin(), it->second.end());
            INFO(D << "/" << O);
            REQUIRE(lib.size() == ref.size());
            for (const auto& p : ref) {
                auto it = std::find(lib.begin(), lib.end(), p);
                REQUIRE(it != lib.end());
                CHECK(it->delta == p.delta);
            }
            for (const auto& p : lib) {
                CHECK(p.delta > 0);
                CHECK(*evaluate(pres_chain(p.w0, p.c, p.w1)) == ratio(D, O));
                Seq s = dual({D, O});
                s[p.i - 1] -= 1;
                s[p.j - 1] -= 1;
                CHECK(is_zero_cf(s));
            }
            CHECK(lib.size() <= 2);
            if (lib.size() == 2) {
                ++wormholes;
                CHECK(lib[0].delta == lib[1].delta);
                CHECK(is_wormhole({D, O}));
            }
        }
    MESSAGE("wormholes with Delta <= 300: " << wormholes);
}

TEST_CASE("Markov c.q.s.") {
    CHECK(markov_cqs(2, 1) == Frac{476, 361});
    Frac f5 = markov_cqs(5, 1);
    CHECK(f5.delta == 123725);
    CHECK(f5.delta == 25 * 4949);
    CHECK(f5.delta == Int(2572) * 2572 + 169 * 169 - 15 * 2572 * 169);
    // (c - 1)^2 in place of (c^2 - 1)^2 would give c^2 (c^2 D - 1) = 508 at c = 2
    CHECK(Int(4) * (4 * (9 * 4 - 4) - 1) == 508);
    CHECK(markov_cqs(2, 1).delta != 508);

    CHECK(markov_cqs_reduced(29, 22) == Frac{16965, 4001});
    CHECK(expand(16965, 4001) == seq({5, 2, 2, 2, 8, 2, 2, 2, 2, 2, 2, 2, 5, 5}));
    CHECK(markov_cqs_reduced(2, 1) == Frac{72, 17});
    CHECK(expand(72, 17) == seq({5, 2, 2, 2, 5}));
    CHECK(markov_cqs_reduced(5, 1) == Frac{495, 104});
    CHECK(expand(495, 104) == seq({5, 5, 2, 2, 2, 2, 2, 5}));
}

TEST_CASE("reduced Markov c.q.s. over the tree") {
    for (const auto& t : enumerate_triples(100000)) {
        if (t.a < 2) continue;
        auto w = weights(t);
        for (const Int& wc : {w.wc, Int(t.c - w.wc)}) {
            Frac f = markov_cqs_reduced(t.c, wc);
            Int inv = inverse_den(f);
            CHECK(f.omega + inv == 9 * t.c * t.c - 2);
        }
        Frac f = markov_cqs_reduced(t.c, w.wc);
        Int n0 = 5 * t.b - w.wb, n1 = 4 * t.a + w.wa;
        CHECK(f.delta == n0 * n0 + n1 * n1 + 3 * t.c * n0 * n1);

        auto ps = find_extremal_presolutions(f);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].delta == 3 * t.c);
        CHECK(ps[0].c == 2);
        CHECK(ps[0].w0.a == t.b);
        CHECK(ps[0].w1.a == 2 * t.a + 3 * w.ra);

        auto big_ps = find_extremal_presolutions(markov_cqs(t.c, w.wc));
        REQUIRE(!big_ps.empty());
        CHECK(big_ps[0].delta == 3 * t.c);
    }
}

TEST_CASE("triangle erasing") {
    for (auto [c, w] : {std::pair<long, long>{2, 1}, {5, 1}, {29, 22}, {13, 2}}) {
        Frac big_f = markov_cqs(c, w);
        auto ps = find_extremal_presolutions(big_f);
        REQUIRE(!ps.empty());
        MarkedCF m{dual(big_f), ps[0].i, ps[0].j};
        CHECK(marked_delta(m) == 3 * c);
        MarkedCF r = reduce_fully(m);
        CHECK(marked_delta(r) == 3 * c);
        Frac small = markov_cqs_reduced(c, w);
        CHECK(r.seq == dual(small));
        CHECK_THROWS(reduce_marked_cf(r));
    }
    MarkedCF m{dual(markov_cqs(2, 1)), 0, 0};
    auto ps = find_extremal_presolutions(markov_cqs(2, 1));
    m.i = ps[0].i;
    m.j = ps[0].j;
    REQUIRE(zero_vertex_degree(m) == 1);
    MarkedCF once = reduce_marked_cf(m);
    CHECK(once.seq.size() + 1 == m.seq.size());
    CHECK(marked_delta(once) == 6);
}

TEST_CASE("Dedekind sums") {
    auto r = dedekind_check(2, 1);
    CHECK(r.ok());
    CHECK(r.reciprocity == Rat(53, 36));
    CHECK(r.reciprocity == 1 + ratio(34, 72));
    auto s = dedekind_check(29, 22);
    CHECK(s.ok());
    CHECK(s.reciprocity == 1 + ratio(7567, 16965));

    for (auto [c, w] : {std::pair<long, long>{2, 1}, {5, 1}, {5, 4}, {13, 2}, {29, 22}}) {
        Frac f = markov_cqs_reduced(c, w);
        BQ ref = oracle::dedekind12(big(f.omega), big(f.delta));
        Rat lib = dedekind12(f.omega, f.delta);
        CHECK(big(lib.get_num()) == numerator(ref));
        CHECK(big(lib.get_den()) == denominator(ref));
    }

    // minimum of the closed form over w, taken at w = c / 2
    for (long c : {2, 5, 13, 29, 34, 89}) {
        Rat w(c, 2), C(c);
        Rat v = (29 * C * C + C * w - w * w - 11) / (20 * C * C + C * w - w * w - 9);
        CHECK(v == ratio(117 * c * c - 44, 81 * c * c - 36));
    }
}
