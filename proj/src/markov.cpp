#include "markov_mmp/markov.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mm {

std::string Triple::str() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

Triple make_triple(Int x, Int y, Int z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

bool is_markov(const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || b <= 0 || c <= 0) return false;
    return a * a + b * b + c * c == 3 * a * b * c;
}

Triple mutate(const Triple& t, int pos) {
    switch (pos) {
        case 0: return make_triple(3 * t.b * t.c - t.a, t.b, t.c);
        case 1: return make_triple(t.a, 3 * t.a * t.c - t.b, t.c);
        case 2: return make_triple(t.a, t.b, 3 * t.a * t.b - t.c);
    }
    throw std::out_of_range("mutation position");
}

namespace {

// z-weight x^-1 y (mod z), times k; 0 when z = 1.
Int wt(const Int& x, const Int& y, const Int& z, int k) {
    if (z == 1) return 0;
    return mod(k * inv_mod(x, z) * y, z);
}

}  // namespace

TripleWeights weights(const Triple& t) {
    const auto& [a, b, c] = t;
    return {wt(b, c, a, 1), wt(c, a, b, 1), wt(a, b, c, 1),
            wt(b, c, a, 3), wt(c, a, b, 3), wt(a, b, c, 3)};
}

bool weight_identities_hold(const Triple& t, const TripleWeights& w) {
    const auto& [a, b, c] = t;
    auto one = [](const Int& x, const Int& r, const Int& wx) {
        if (x == 1) return r == 0 && wx == 0;
        if (x == 2) return r == 1 && wx == 1;
        return x + wx == 3 * r && mod(r * r + 1, x) == 0;
    };
    if (!one(a, w.ra, w.wa) || !one(b, w.rb, w.wb) || !one(c, w.rc, w.wc)) return false;
    if (a == b) return true;  // (1,1,1) and (1,1,2)
    return w.rc * a - w.ra * c == b && c * w.rb - b * w.rc == a && a * w.rb - b * w.ra == 3 * a * b - c;
}

std::vector<Triple> branch(const Triple& t, int side, int count) {
    Int L, prev, m0;
    if (t == Triple{1, 1, 1}) {
        L = 1, prev = 1, m0 = 2;
    } else if (t == Triple{1, 1, 2}) {
        L = 2, prev = 1, m0 = 5;
    } else if (side == 1) {
        L = t.c, prev = t.a, m0 = 3 * t.a * t.c - t.b;
    } else if (side == 2) {
        L = t.c, prev = t.b, m0 = 3 * t.b * t.c - t.a;
    } else {
        throw std::invalid_argument("branch side must be 1 or 2");
    }
    std::vector<Triple> out;
    Int x = m0, y = 3 * L * m0 - prev;
    for (int k = 0; k < count; ++k) {
        out.push_back({L, x, y});
        Int z = 3 * L * y - x;
        x = y;
        y = z;
    }
    return out;
}

BranchPos branch_position(const Triple& t) {
    BranchPos p;
    p.label = t.a;
    std::vector<Int> down{t.c, t.b};
    Int prev;
    for (;;) {
        prev = 3 * t.a * down.back() - down[down.size() - 2];
        if (prev <= t.a) break;
        down.push_back(prev);
    }
    down.push_back(prev);
    std::reverse(down.begin(), down.end());
    p.m = std::move(down);
    p.k = static_cast<int>(p.m.size()) - 3;
    p.seed = {t.a, p.m[1], p.m[2]};
    return p;
}

Triple descend(const Triple& t) {
    BranchPos p = branch_position(t);
    return make_triple(p.m[0], p.label, p.m[1]);
}

int nu(const Triple& t) {
    int k = 0;
    Triple cur = t;
    while (cur.a > 1) {
        cur = descend(cur);
        ++k;
    }
    return k;
}

std::vector<Triple> enumerate_triples(const Int& max_c) {
    std::set<Triple> seen;
    std::deque<Triple> todo;
    if (max_c >= 1) {
        seen.insert({1, 1, 1});
        todo.push_back({1, 1, 1});
    }
    while (!todo.empty()) {
        Triple t = todo.front();
        todo.pop_front();
        for (int pos = 0; pos < 3; ++pos) {
            Triple u = mutate(t, pos);
            if (u.c <= max_c && seen.insert(u).second) todo.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

std::map<Int, int> uniqueness_scan(const Int& max_c) {
    std::map<Int, int> out;
    for (const auto& t : enumerate_triples(max_c)) ++out[t.c];
    return out;
}

Frac markovrc_concat(const Int& a, const Int& ra, const Int& b, const Int& rb) {
    Seq s = expand(a, ra);
    s.push_back(4);
    Seq tail = expand(b, rb);
    s.insert(s.end(), tail.begin(), tail.end());
    auto [m, q] = num_den(s);
    return {m, q};
}

bool check_markovrc(const Triple& t) {
    if (!is_markov(t)) return false;
    if (t.b == 1) return true;  // (1,1,1), (1,1,2): no side chains
    TripleWeights w = weights(t);
    Seq lhs = expand(t.c, w.rc);
    if (t.a == 1) {
        Seq rhs = expand(t.b, w.rb);
        rhs.insert(rhs.begin(), Int(3));
        return lhs == rhs;
    }
    Seq sa = expand(t.a, w.ra), sb = expand(t.b, w.rb);
    Seq four{4}, one{1};
    if (lhs != concat({&sa, &four, &sb})) return false;
    return is_zero_cf(concat({&sb, &one, &lhs, &one, &sa}));
}

Seq cohn_word(const Int& a, const Int& ra, const std::string& path) {
    Seq base = expand(a, ra);
    Seq x = base, y = base;
    x.push_back(4);
    y.push_back(3);
    for (char ch : path) {
        if (ch == 'L' || ch == 'l')
            y = concat({&x, &y});
        else if (ch == 'R' || ch == 'r')
            x = concat({&x, &y});
        else
            throw std::invalid_argument("path letters must be L or R");
    }
    return concat({&x, &y});
}

namespace {

struct Interval {
    Rat lo, hi;
};

Interval abs_interval(const Interval& v) {
    if (v.lo >= 0) return v;
    if (v.hi <= 0) return {-v.hi, -v.lo};
    return {0, std::max(Rat(-v.lo), v.hi)};
}

}  // namespace

bool weight_limit_check(const Triple& seed, int k_max, const Rat& tol) {
    const Int& a = seed.a;
    TripleWeights w = weights(seed);
    std::vector<Int> m{seed.b, seed.c}, r{w.rb, w.rc};
    while (static_cast<int>(m.size()) <= k_max) {
        std::size_t n = m.size();
        m.push_back(3 * a * m[n - 1] - m[n - 2]);
        r.push_back(3 * a * r[n - 1] - r[n - 2]);
    }
    // sqrt(9a^2 - 4) within 10^-P, P about twice the digits of the largest m.
    std::size_t P = 2 * mpz_sizeinbase(m.back().get_mpz_t(), 10) + 20;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, P);
    Int s = isqrt((9 * a * a - 4) * scale * scale);
    Rat slo(s, scale), shi(s + 1, scale);
    auto limit = [&](const Rat& sq) {
        Rat phi = (Rat(3 * a) + sq) / 2;
        return Rat((phi * r[1] - r[0]) / (phi * m[1] - m[0]));
    };
    Rat l1 = limit(slo), l2 = limit(shi);
    Interval L{std::min(l1, l2), std::max(l1, l2)};
    Interval prev{0, 0};
    for (int k = 0; k <= k_max; ++k) {
        Rat x(r[k], m[k]);
        x.canonicalize();
        Interval d = abs_interval({x - L.hi, x - L.lo});
        if (k > 0 && !(d.hi < prev.lo)) return false;
        prev = d;
    }
    return prev.hi < tol;
}

bool verify_presolution_remark(const Triple& t) {
    if (t.a <= 1) throw std::invalid_argument("needs a > 1");
    TripleWeights w = weights(t);
    if (t.c != 3 * t.a * t.b + t.b * w.ra - t.a * w.rb) return false;
    Seq sa = expand(t.a, t.a - w.ra), sc = expand(t.c, t.c - w.rc), sb = expand(t.b, t.b - w.rb);
    Seq one{1};
    return is_zero_cf(concat({&sa, &one, &sc, &one, &sb}));
}

}  // namespace mm
