#include "markov_mmp/conjecture.hpp"

#include <json.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "markov_mmp/cqs.hpp"

namespace mm {

namespace {

using i64 = std::int64_t;

// Integer helpers shared by the machine-word and the GMP scan paths.
bool square_root(i64 x, i64* r) {
    if (x < 0) return false;
    i64 s = static_cast<i64>(std::sqrt(static_cast<long double>(x)));
    while (s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    *r = s;
    return s * s == x;
}
bool square_root(const Int& x, Int* r) { return is_square(x, r); }

i64 gcd_of(i64 a, i64 b) {
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
Int gcd_of(const Int& a, const Int& b) { return gcd(a, b); }

i64 inverse_of(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 g = m, x = 0, y = a % m, u = 1;
    while (y) {
        i64 t = g / y;
        g -= t * y;
        std::swap(g, y);
        x -= t * u;
        std::swap(x, u);
    }
    if (g != 1) throw std::domain_error("not invertible");
    return x < 0 ? x + m : x;
}
Int inverse_of(const Int& a, const Int& m) { return inv_mod(a, m); }

Int to_int(i64 x) { return Int(static_cast<long>(x)); }
Int to_int(const Int& x) { return x; }

template <class N>
struct Entry {
    N e;
    N psum;    // entry sum of the prefix
    N pn, pd;  // value of the prefix before this entry
    N sn, sd;  // value of the suffix after it
};

// Single pass of ceiling Euclid recording prefix convergents and remainders.
template <class N>
std::vector<Entry<N>> walk(N m, N q) {
    std::vector<Entry<N>> out;
    N p0 = 1, p1 = 0, d0 = 0, d1 = -1;  // [] = 1/0
    N sum = 0;
    while (q > 0) {
        N e = (m + q - 1) / q;
        N r = e * q - m;
        out.push_back({e, sum, p0, d0, q, r});
        sum += e;
        N np = e * p0 - p1, nd = e * d0 - d1;
        p1 = p0;
        p0 = np;
        d1 = d0;
        d0 = nd;
        m = q;
        q = r;
    }
    return out;
}

// n^2 / (n t + s) with 0 < t < n coprime: s = +1 dual Wahl, s = -1 Wahl.
// Accepts the empty value 1/0 as the smooth point when allowed.
template <class N>
bool wahl_value(const N& num, const N& den, int s, bool allow_empty, N* n, N* a) {
    if (num == 1 && den == 0) {
        *n = 1;
        *a = 0;
        return allow_empty;
    }
    N r;
    if (!square_root(num, &r) || r < 2) return false;
    N t = den - s;
    if (t % r != 0) return false;
    t /= r;
    if (t <= 0 || t >= r || gcd_of(t, r) != 1) return false;
    *n = r;
    *a = s > 0 ? N(r - t) : t;
    return true;
}

template <class N>
void scan_IV(const N& m, std::map<Int, Witness>& out) {
    for (N q = 1; q < m; ++q) {
        if ((q * q + 1) % m != 0) continue;
        auto w = walk<N>(m, q);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const auto& x = w[k];
            bool le = x.pn == 1 && x.pd == 0, re = x.sn == 1 && x.sd == 0;
            if (x.e != 4 - int(le) - int(re)) continue;
            if (!le && (x.pd * x.pd + 1) % x.pn != 0) continue;
            if (!re && (x.sd * x.sd + 1) % x.sn != 0) continue;
            Witness h{Decomp::IV, to_int(m), to_int(q), to_int(x.pn), to_int(x.pd), to_int(x.sn), to_int(x.sd), to_int(x.e), k + 1};
            out.emplace(h.q, h);
        }
    }
}

template <class N>
void scan_V(const N& m, std::map<Int, Witness>& out) {
    for (N q = 1; q < m; ++q) {
        if (gcd_of(q, m) != 1) continue;
        // Ceiling Euclid on m^2 / (mq - 1); the remainder is the suffix value.
        N M = m * m, Q = m * q - 1;
        N p0 = 1, p1 = 0, d0 = 0, d1 = -1, sum = 0;
        for (long l = 0; Q > 0; ++l) {
            N e = (M + Q - 1) / Q;
            N r = e * Q - M;
            // dual Wahl prefixes have entry sum 3 l - 3
            if ((e == 10 || e == 7 || e == 4) && (l == 0 || sum == 3 * l - 3)) {
                N n0, a0, n1, a1;
                if (wahl_value<N>(p0, d0, 1, true, &n0, &a0) && wahl_value<N>(Q, r, 1, true, &n1, &a1) &&
                    e == 10 - 3 * (int(n0 == 1) + int(n1 == 1))) {
                    Witness h{Decomp::V, to_int(m), to_int(q), to_int(n0), to_int(a0), to_int(n1), to_int(a1), to_int(e),
                              static_cast<std::size_t>(l) + 1};
                    out.emplace(h.q, h);
                }
            }
            sum += e;
            N np = e * p0 - p1, nd = e * d0 - d1;
            p1 = p0;
            p0 = np;
            d1 = d0;
            d0 = nd;
            M = Q;
            Q = r;
        }
    }
}

template <class N>
void append_expansion(std::vector<N>& s, N m, N q) {
    while (q > 0) {
        N e = (m + q - 1) / q;
        s.push_back(e);
        N r = e * q - m;
        m = q;
        q = r;
    }
}

template <class N>
std::pair<N, N> suffix_value(const std::vector<N>& s, std::size_t from) {
    N n0 = 1, n1 = 0;
    for (std::size_t k = s.size(); k-- > from;) {
        N t = s[k] * n0 - n1;
        n1 = n0;
        n0 = t;
    }
    return {n0, n1};
}

template <class N>
void scan_VI(const N& m, std::map<Int, Witness>& out) {
    std::vector<N> s;
    for (N q = 1; q < m; ++q) {
        if (gcd_of(q, m) != 1) continue;
        N qi = inverse_of(q, m);
        s.assign(1, N(5));
        append_expansion<N>(s, m, q);
        s.push_back(2);
        append_expansion<N>(s, m, m - qi);
        s.push_back(5);
        N p0 = 1, p1 = 0, d0 = 0, d1 = -1, sum = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const long l = static_cast<long>(k);
            // Wahl prefixes have entry sum 3 l + 1
            if (s[k] == 2 && sum == 3 * l + 1) {
                N n0, a0, n1, a1;
                auto [sn, sd] = suffix_value<N>(s, k + 1);
                if (wahl_value<N>(p0, d0, -1, false, &n0, &a0) && wahl_value<N>(sn, sd, -1, false, &n1, &a1)) {
                    Witness h{Decomp::VI, to_int(m), to_int(q), to_int(n0), to_int(a0), to_int(n1), to_int(a1), 2, k + 1};
                    out.emplace(h.q, h);
                }
            }
            sum += s[k];
            N np = s[k] * p0 - p1, nd = s[k] * d0 - d1;
            p1 = p0;
            p0 = np;
            d1 = d0;
            d0 = nd;
        }
    }
}

// Machine words are exact while 2 m^2 stays below 2^63.
constexpr long kWordLimit = 1000000000L;

template <class F, class G>
std::map<Int, Witness> dispatch(const Int& m, F fast, G slow) {
    std::map<Int, Witness> out;
    if (m < 2) return out;
    if (m <= kWordLimit)
        fast(static_cast<i64>(m.get_si()), out);
    else
        slow(m, out);
    return out;
}

}  // namespace

std::map<Int, Witness> check_IV(const Int& m) {
    return dispatch(m, scan_IV<i64>, scan_IV<Int>);
}
std::map<Int, Witness> check_V(const Int& m) {
    return dispatch(m, scan_V<i64>, scan_V<Int>);
}
std::map<Int, Witness> check_VI(const Int& m) {
    return dispatch(m, scan_VI<i64>, scan_VI<Int>);
}

Int weight_class(const Int& w, const Int& m) {
    Int r = mod(w, m);
    return std::min(r, Int(m - r));
}

std::set<Int> classes(const std::map<Int, Witness>& hits, Decomp kind, const Int& m) {
    std::set<Int> out;
    for (const auto& [q, h] : hits) out.insert(weight_class(kind == Decomp::IV ? Int(3 * q) : q, m));
    return out;
}

std::optional<ZeroTenZero> witness_0_10_0(const Int& m, const Int& q) {
    if (m < 2 || q <= 0 || q >= m || gcd(m, q) != 1) return std::nullopt;
    Seq e = expand(m * m, m * q - 1);
    const std::size_t beta = e.size();
    Seq pad{2, 2, 2};
    pad.insert(pad.end(), e.begin(), e.end());
    pad.insert(pad.end(), {2, 2, 2});
    pad[3] += 1;
    pad[beta + 2] += 1;
    for (auto [p, r] : zero_marks(pad)) {
        if (p < 4 || r > beta + 3) continue;
        std::size_t i = p - 3, j = r - 3;
        if (i < 2 || j + 1 > beta) continue;  // a = 1 or b = 1: no {0,10,0} shape
        Seq left(e.begin(), e.begin() + (i - 1));
        Seq right(e.begin() + j, e.end());
        auto [a, wa] = num_den(left);
        auto [b, bw] = num_den(reversed(right));
        if (!is_markov(a, b, m)) continue;
        return ZeroTenZero{i, j, a, wa, b, b - bw};
    }
    return std::nullopt;
}

std::pair<Seq, Seq> mutation_identity_sides(const Triple& t, int side) {
    if (t.b < 2) throw std::invalid_argument("mutation display needs b > 1");
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    const Int &a = t.a, &b = t.b, &c = t.c;
    TripleWeights w = weights(t);
    Triple u = side == 1 ? make_triple(a, c, 3 * a * c - b) : make_triple(b, c, 3 * b * c - a);
    Int cp = u.c, wcp = weights(u).wc;
    Seq lhs = expand(cp * cp, cp * wcp - 1);
    auto E = [](const Int& n, const Int& x) { return n > 1 ? expand(n * n, x) : Seq{}; };
    auto plus_last = [](Seq s) { s.back() += 1; return s; };
    auto plus_first = [](Seq s) { s.front() += 1; return s; };
    Seq rhs;
    auto add = [&rhs](const Seq& s) { rhs.insert(rhs.end(), s.begin(), s.end()); };
    if (a > 1 && side == 1) {
        add(E(a, a * w.wa + 1));
        rhs.push_back(10);
        add(plus_last(E(b, b * w.wb - 1)));
        add(Seq(7, Int(2)));
        add(plus_first(E(a, a * w.wa - 1)));
    } else if (a > 1) {
        add(E(b, b * (b - w.wb) + 1));
        rhs.push_back(10);
        add(plus_last(E(a, a * (a - w.wa) - 1)));
        add(Seq(7, Int(2)));
        add(plus_first(E(b, b * (b - w.wb) - 1)));
    } else if (side == 1) {
        rhs.push_back(7);
        add(plus_last(E(b, b * w.wb - 1)));
        add(Seq(5, Int(2)));
    } else {
        add(E(b, b * (b - w.wb) + 1));
        rhs.push_back(10);
        add(Seq(5, Int(2)));
        add(plus_first(E(b, b * (b - w.wb) - 1)));
    }
    return {lhs, rhs};
}

bool mutation_identity_check(const Triple& t, int side) {
    auto [l, r] = mutation_identity_sides(t, side);
    return l == r;
}

bool ScanRow::consistent() const {
    if ((checks & CheckIV) && iv != tree) return false;
    if ((checks & CheckV) && v != tree) return false;
    if ((checks & CheckVI) && vi != tree) return false;
    return tree.size() <= 2;
}

namespace {

Int seq_sum(const Seq& s) {
    Int t = 0;
    for (const auto& x : s) t += x;
    return t;
}

// Exact re-verification of each hit; returns violation messages.
std::vector<std::string> audit(const Int& m, const std::map<Int, Witness>& v, const std::map<Int, Witness>& vi) {
    std::vector<std::string> bad;
    auto tag = [&](const Witness& h) { return "m=" + m.get_str() + " q=" + h.q.get_str() + ": "; };
    for (const auto& [q, h] : v) {
        Seq e = expand(m * m, m * q - 1);
        if (seq_sum(e) != 3 * Int(e.size()) + 1) bad.push_back(tag(h) + "V witness breaks the Wahl sum rule");
        Seq left(e.begin(), e.begin() + (h.split - 1)), right(e.begin() + h.split, e.end());
        for (const Seq* part : {&left, &right})
            if (!part->empty() && !recognize_dual_wahl(*part)) bad.push_back(tag(h) + "V part fails dual Wahl recognition");
        if (h.middle == 10 && h.n0 * h.n0 + h.n1 * h.n1 + m * m != 3 * h.n0 * h.n1 * m)
            bad.push_back(tag(h) + "V witness is not a Markov triple");
    }
    for (const auto& [q, h] : vi) {
        Int d = pres_delta({h.n0, h.a0}, 2, {h.n1, h.a1});
        if (d != 3 * m) bad.push_back(tag(h) + "VI witness has delta " + d.get_str());
    }
    return bad;
}

ScanRow scan_one(const Int& m, int checks, const std::set<Int>& tree, std::vector<std::string>& bad) {
    ScanRow row;
    row.m = m;
    row.checks = checks;
    row.tree = tree;
    std::map<Int, Witness> v, vi;
    if (checks & CheckIV) row.iv = classes(check_IV(m), Decomp::IV, m);
    if (checks & CheckV) {
        v = check_V(m);
        row.v = classes(v, Decomp::V, m);
    }
    if (checks & CheckVI) {
        vi = check_VI(m);
        row.vi = classes(vi, Decomp::VI, m);
    }
    bad = audit(m, v, vi);
    auto cmp = [&](const char* name, const std::set<Int>& s) {
        if (s != tree) bad.push_back("m=" + m.get_str() + ": " + name + " classes differ from the tree");
    };
    if (checks & CheckIV) cmp("IV", row.iv);
    if (checks & CheckV) cmp("V", row.v);
    if (checks & CheckVI) cmp("VI", row.vi);
    if (tree.size() > 2) bad.push_back("m=" + m.get_str() + ": more than two weight classes");
    return row;
}

}  // namespace

ScanReport consistency_scan(const Int& max_m, int checks, int jobs) {
    if (max_m > kWordLimit) throw std::invalid_argument("scan bound too large");
    ScanReport rep;
    rep.max_m = max_m;
    std::map<Int, std::set<Int>> tree;
    for (const auto& t : enumerate_triples(max_m))
        if (t.c > 1) tree[t.c].insert(weight_class(weights(t).wc, t.c));
    const long M = max_m.get_si();
    const long n = M >= 2 ? M - 1 : 0;
    std::vector<ScanRow> rows(n);
    std::vector<std::vector<std::string>> bad(n);
    auto tree_of = [&](long m) {
        auto it = tree.find(Int(m));
        return it == tree.end() ? std::set<Int>{} : it->second;
    };
    if (jobs <= 1) {
        for (long k = 0; k < n; ++k) rows[k] = scan_one(Int(k + 2), checks, tree_of(k + 2), bad[k]);
    } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (long k = 0; k < n; ++k) rows[k] = scan_one(Int(k + 2), checks, tree_of(k + 2), bad[k]);
    }
    for (long k = 0; k < n; ++k) {
        rep.violations.insert(rep.violations.end(), bad[k].begin(), bad[k].end());
        const auto& r = rows[k];
        if (!r.iv.empty() || !r.v.empty() || !r.vi.empty() || !r.tree.empty()) rep.rows.push_back(r);
    }
    rep.checked = static_cast<int>(n);
    return rep;
}

std::string scan_json(const ScanReport& r) {
    using nlohmann::json;
    auto arr = [](const std::set<Int>& s) {
        json a = json::array();
        for (const auto& x : s) a.push_back(x.get_str());
        return a;
    };
    json j;
    j["max_m"] = r.max_m.get_str();
    j["checked"] = r.checked;
    j["rows"] = json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"m", row.m.get_str()}, {"iv", arr(row.iv)}, {"v", arr(row.v)}, {"vi", arr(row.vi)},
                             {"tree", arr(row.tree)}, {"consistent", row.consistent()}});
    j["violations"] = r.violations;
    return j.dump(2);
}

}  // namespace mm
