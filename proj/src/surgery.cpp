#include <algorithm>
#include <stdexcept>

#include "markov_mmp/mmp.hpp"
#include "markov_mmp/mori.hpp"

namespace mm {

State initial_state(const Triple& t) {
    if (!is_markov(t)) throw std::invalid_argument("not a Markov triple");
    if (t.c == 1) throw std::invalid_argument("(1,1,1) is the smooth plane");
    TripleWeights w = weights(t);
    if (t.b == 1) return {curve_item(0), sing_item(2, 1), curve_item(0)};
    if (t.a == 1) return {curve_item(0), sing_item(t.c, w.wc), curve_item(1), sing_item(t.b, w.wb)};
    return {sing_item(t.a, w.wa), curve_item(1), sing_item(t.c, w.wc), curve_item(1), sing_item(t.b, w.wb)};
}

namespace {

struct Segment {
    WahlSing left{1, 0}, right{1, 1};
    std::size_t lo, hi;  // items [lo, hi) are replaced
};

Segment segment_at(const State& s, std::size_t i) {
    Segment g;
    g.lo = i;
    g.hi = i + 1;
    if (i > 0 && !s[i - 1].curve) {
        g.left = s[i - 1].sing;
        g.lo = i - 1;
    }
    if (i + 1 < s.size() && !s[i + 1].curve) {
        g.right = s[i + 1].sing;
        g.hi = i + 2;
    }
    return g;
}

struct Contraction {
    Frac f;
    int left = 0, right = 0;
};

Contraction contract(const State& s, std::size_t i) {
    Segment g = segment_at(s, i);
    Seq seq = chain(g.left);
    seq.push_back(s[i].c);
    Seq r = chain(g.right.smooth() ? smooth_point() : g.right);
    seq.insert(seq.end(), r.begin(), r.end());
    Cascade cas = blow_down_all(std::move(seq));
    if (cas.rest.empty()) throw std::logic_error("curve contracts to a smooth point");
    auto [m, q] = num_den(cas.rest);
    return {{m, mod(q, m)}, cas.left, cas.right};
}

// Self-intersection and K-degree of the curve at i on the singular surface.
bool flipping_curve(const State& s, std::size_t i) {
    Segment g = segment_at(s, i);
    const Int &nL = g.left.n, &aL = g.left.a, &nR = g.right.n, &aR = g.right.a;
    Rat sq = Rat(-s[i].c) + Rat(nL * (nL - aL) - 1, nL * nL) + Rat(nR * aR - 1, nR * nR);
    Rat kg = Rat(s[i].c - 2) + (nL > 1 ? Rat(aL, nL) : Rat(0)) + Rat(nR - aR, nR);
    return sq < 0 && kg < 0;
}

State splice(const State& s, std::size_t lo, std::size_t hi, const PRes& p, int left, int right) {
    State st = s;
    for (auto& it : st)
        if (it.curve) it.mark = Mark::None;
    if (left) {
        if (lo == 0 || !st[lo - 1].curve) throw std::logic_error("cascade without a neighbouring curve");
        st[lo - 1].c -= left;
    }
    if (right) {
        if (hi >= st.size() || !st[hi].curve) throw std::logic_error("cascade without a neighbouring curve");
        st[hi].c -= right;
    }
    State mid;
    if (!p.w0.smooth()) mid.push_back(sing_item(p.w0.n, p.w0.a));
    mid.push_back(curve_item(p.c, Mark::Plus));
    if (!p.w1.smooth()) mid.push_back(sing_item(p.w1.n, p.w1.a));
    State out(st.begin(), st.begin() + lo);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), st.begin() + hi, st.end());
    return out;
}

State mark_next(State st) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (!st[i].curve) continue;
        if (st[i].mark == Mark::Minus) st[i].mark = Mark::None;
        if (flipping_curve(st, i)) cand.push_back(i);
    }
    if (cand.size() > 1) throw std::logic_error("more than one flipping curve");
    if (!cand.empty()) st[cand[0]].mark = Mark::Minus;
    return st;
}

// The pair of Wahl indices a flip must produce, read off the Mori recursion.
std::pair<Int, Int> expected_pair(const Int& nL, const Int& nR, const Int& d) {
    Int small = std::min(nL, nR), big = std::max(nL, nR);
    for (;;) {
        Int prev = d * small - big;
        if (prev <= 0) return {std::min(small, Int(-prev)), std::max(small, Int(-prev))};
        big = small;
        small = prev;
    }
}

std::string describe(const PRes& p) {
    auto s = [](const WahlSing& w) { return "[" + w.n.get_str() + "," + w.a.get_str() + "]"; };
    return s(p.w0) + "-" + p.c.get_str() + "-" + s(p.w1);
}

}  // namespace

Frac contract_at(const State& s, std::size_t i) { return contract(s, i).f; }

long minus_index(const State& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].curve && s[i].mark == Mark::Minus) return static_cast<long>(i);
    return -1;
}

State seed_first_flip(const State& s, const Triple& t, FlipRecord* rec, std::vector<std::string>* notes) {
    TripleWeights w = weights(t);
    auto it = std::find_if(s.begin(), s.end(), [&](const Item& x) { return !x.curve && x.sing.n == t.c; });
    if (it == s.end()) throw std::logic_error("initial state lacks the largest singularity");
    std::size_t idx = it - s.begin();
    Seq e = chain(it->sing);
    std::size_t pos = t.a == 1 ? 0 : expand(t.a * t.a, t.a * w.wa + 1).size();
    e[pos] -= 1;
    Cascade cas = blow_down_all(e);
    if (cas.left || cas.right || cas.rest.empty()) throw std::logic_error("seed blow-down leaves the chain");
    auto [m, q] = num_den(cas.rest);
    Frac f{m, mod(q, m)};
    auto ps = find_extremal_presolutions(f);
    std::vector<PRes> pick;
    for (const auto& p : ps)
        if (ps.size() == 1 || train_hits(p.w0.n, p.w1.n, p.delta, t.c)) pick.push_back(p);
    if (pick.size() != 1) throw std::logic_error("seed flip: no unique extremal P-resolution");
    if (ps.size() > 1 && notes) notes->push_back("flip 1: wormhole " + f.delta.get_str() + "/" + f.omega.get_str() + ", chose " + describe(pick[0]));
    if (rec) *rec = {1, pick[0].delta, f, pick[0]};
    return mark_next(splice(s, idx, idx + 1, pick[0], 0, 0));
}

State step_surgery(const State& s, FlipRecord* rec, std::vector<std::string>* notes) {
    long i = minus_index(s);
    if (i < 0) throw std::invalid_argument("terminal state: no flipping curve");
    Segment g = segment_at(s, i);
    Contraction con = contract(s, i);
    auto ps = find_extremal_presolutions(con.f);
    if (ps.empty()) throw std::logic_error("flipping curve without extremal P-resolution");
    std::vector<PRes> pick;
    if (ps.size() == 1) {
        pick = ps;
    } else {
        auto want = expected_pair(g.left.n, g.right.n, ps[0].delta);
        for (const auto& p : ps)
            if (std::minmax(p.w0.n, p.w1.n) == std::minmax(want.first, want.second)) pick.push_back(p);
        if (pick.size() != 1) throw std::logic_error("ambiguous wormhole resolution");
        if (notes) notes->push_back("wormhole " + con.f.delta.get_str() + "/" + con.f.omega.get_str() + ", chose " + describe(pick[0]));
    }
    if (rec) *rec = {0, pick[0].delta, con.f, pick[0]};
    return mark_next(splice(s, g.lo, g.hi, pick[0], con.left, con.right));
}

Trace run_surgery(const Triple& t) {
    Trace tr;
    tr.triple = t;
    tr.nu = nu(t);
    tr.states.push_back(initial_state(t));
    FlipRecord rec;
    tr.states.push_back(seed_first_flip(tr.states[0], t, &rec, &tr.notes));
    tr.flips.push_back(rec);
    while (minus_index(tr.states.back()) >= 0) {
        if (tr.flips.size() > 1000) throw std::logic_error("surgery does not terminate");
        tr.states.push_back(step_surgery(tr.states.back(), &rec, &tr.notes));
        rec.step = static_cast<int>(tr.flips.size()) + 1;
        tr.flips.push_back(rec);
    }
    const State& last = tr.states.back();
    for (const auto& it : last)
        if (it.curve && it.mark == Mark::Plus) tr.final_m = static_cast<int>(it.c.get_si());
    return tr;
}

int final_hirzebruch(const Triple& t) {
    if (t.b == 1) return 3;
    if (t.a == 1) return 5;
    return 7;
}

}  // namespace mm
