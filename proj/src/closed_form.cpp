// Closed-form flip tables per branch family, stitched across branch changes.

#include <stdexcept>

#include "markov_mmp/mmp.hpp"

namespace mm {

namespace {

struct Gap : std::logic_error {
    using std::logic_error::logic_error;
};

using Step = std::pair<Int, State>;

struct CF {
    State init;
    std::vector<Step> fl;
};

State S(const Int& n, const Int& a) {
    if (n == 1) return {};
    if (n < 1) throw Gap("nonpositive index " + n.get_str());
    return {sing_item(n, a)};
}
State S(const std::pair<Int, Int>& x) { return S(x.first, x.second); }
State C(const Int& k, Mark m = Mark::None) { return {curve_item(k, m)}; }
constexpr Mark P = Mark::Plus, N = Mark::Minus;

State mk(std::initializer_list<State> parts) {
    State out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

State rev(const State& s) {
    State out(s.rbegin(), s.rend());
    for (auto& it : out)
        if (!it.curve && !it.sing.smooth()) it.sing.a = it.sing.n - it.sing.a;
    return out;
}

Int w3(const Int& x, const Int& y, const Int& z) { return z > 1 ? mod(3 * inv_mod(x, z) * y, z) : Int(0); }

Int exact_div(const Int& num, const Int& den) {
    if (num % den != 0) throw Gap("non-integral table entry");
    return num / den;
}

struct Ctx {
    std::vector<std::string>* notes;
};

CF trace(const Triple& T, Ctx& cx);

std::vector<Step> stitch(const std::vector<Step>& own, std::size_t n, const CF& other, std::size_t m, bool reverse, const Triple& T, Ctx& cx) {
    std::vector<Step> out(own.begin(), own.begin() + n);
    if (other.fl.size() < m) throw Gap("stitch target too short");
    State junction = other.fl[m - 1].second;
    if (reverse) junction = rev(junction);
    if (junction != out.back().second) {
        cx.notes->push_back("unlisted combination at " + T.str() + ", flip " + std::to_string(n) + ": using the state of the descendant trace");
        out.back().second = junction;
    }
    for (std::size_t k = m; k < other.fl.size(); ++k)
        out.push_back({other.fl[k].first, reverse ? rev(other.fl[k].second) : other.fl[k].second});
    return out;
}

std::vector<Step> zip(std::initializer_list<Int> d, std::initializer_list<State> f) {
    std::vector<Step> out;
    auto x = d.begin();
    for (auto y = f.begin(); y != f.end() && x != d.end(); ++x, ++y) out.push_back({*x, *y});
    return out;
}

CF pell(const Triple& T, const BranchPos& bp) {
    if (T == Triple{2, 5, 29}) {
        CF r;
        r.init = mk({S(2, 1), C(1), S(29, 22), C(1), S(5, 4)});
        r.fl = {{1, mk({S(2, 1), C(1), S(25, 19), C(1, P), S(4, 3), C(1, N), S(5, 4)})},
                {1, mk({S(2, 1), C(1), S(25, 19), C(1, N), C(2, P), S(4, 3)})},
                {6, mk({S(2, 1), C(1, N), C(2, P), S(19, 13), C(1), S(4, 3)})},
                {1, mk({C(3, P), C(1, N), S(19, 13), C(1), S(4, 3)})},
                {13, mk({C(0), S(6, 1), C(4, P), C(1, N), S(4, 3)})},
                {3, mk({C(0), S(6, 1), C(1, N), C(5, P)})},
                {5, mk({C(0), C(7, P), C(0)})}};
        return r;
    }
    TripleWeights w = weights(T);
    const Int &b = T.b, &c = T.c;
    auto m_ = [&](int j) { return bp.m[j + 1]; };
    Int x = m_(bp.k - 1), y = bp.k >= 1 ? m_(bp.k - 2) : Int(0);
    CF r;
    r.init = mk({S(2, 1), C(1), S(c, w.wc), C(1), S(b, w.wb)});
    r.fl.push_back({x, mk({S(2, 1), C(1), S(c - 4 * x, w.wc - 3 * x), C(1, P), S(4, 3), C(1, N), S(b, w.wb)})});
    r.fl.push_back({y, mk({S(2, 1), C(1), S(c - 4 * x, w.wc - 3 * x), C(1, N), S(b - 4 * y, w.wb - 3 * y), C(1, P), S(4, 3)})});
    CF base = pell({2, 5, 29}, bp);
    r.fl.insert(r.fl.end(), base.fl.begin() + 2, base.fl.end());
    return r;
}

// Branches of (1, b, c) through (b, c, 3bc - 1).
CF sec73_side2(const Triple& G, const Int& d1, const Int& d2, State init, State f1, State f2) {
    TripleWeights gw = weights(G);
    const Int &b = G.b, &c = G.c, &wb = gw.wb, &wc = gw.wc;
    Int p = c * wc + 1;
    Int X = (3 * c - b) * c * c - b, XW = (3 * c - b) * p - wb;
    State f3 = mk({S(c, wc), C(1, N), S(b * b, b * wb - 1), C(1, P), S(X, XW), C(1), S(c * c, p)});
    State f4 = mk({S(c - wc, wc), C(2, P), C(1, N), S(X, XW), C(1), S(c * c, p)});
    Int Y = (3 * c - b) * (c * (c - wc) - 1) - (b - wb);
    State f5 = mk({S(c - wc, wc), C(1), S(Y, XW), C(2, P), C(1, N), S(c * c, p)});
    State f6 = mk({S(c - wc, wc), C(1), S(Y, XW), C(1, N), S(c * (c - wc) - 1, p), C(2, P)});
    State f7 = G == Triple{1, 2, 5} ? mk({S(4, 1), C(1, N), C(4, P), S(6, 5), C(0)})
                                    : mk({S(c - wc, wc), C(1, N), S(b - wb, wb), C(3, P), S(6, 5), C(0)});
    State f8 = mk({C(5, P), C(1, N), S(6, 5), C(0)});
    State f9 = mk({C(0), C(7, P), C(0)});
    return {init, zip({d1, d2, 3 * c, 3 * b - c, (3 * c - b) * p - wb, p, 3 * c - b, 3, 5}, {f1, f2, f3, f4, f5, f6, f7, f8, f9})};
}

// Branches of (1, b, c) through (1, c, 3c - b).
CF sec73_side1(const Triple& T, const Triple& G) {
    const Int &L = T.a, &m0 = T.b, &m1 = T.c;
    TripleWeights gw = weights(G), w = weights(T);
    const Int &b = G.b, &c = G.c, &wc = gw.wc, &w0 = w.wb, &w1 = w.wc;
    Int q = c * (c - wc) + 1;
    CF r;
    r.init = mk({S(c, c - wc), C(1), S(m1, w1), C(1), S(m0, w0)});
    State f1 = mk({S(c, c - wc), C(1), S(m1 - c * c, w1 - q), C(1, P), S(c * c, q), C(1, N), S(m0, w0)});
    State f2 = mk({S(c, c - wc), C(1), S(m1 - c * c, w1 - q), C(1, N), C(2, P), S(m0 - b, w0 - b)});
    Int Z = m0 * w0 - 1;
    State f3 = mk({S(c, c - wc), C(1, N), C(2, P), S(Z, 2 * Z - m0 * m0), C(1), S(m0 - b, w0 - b)});
    State f4 = mk({C(2, P), S(c - wc, c - 2 * wc), C(1, N), S(Z, 2 * Z - m0 * m0), C(1), S(m0 - b, w0 - b)});
    State f5 = mk({C(0), S(6, 1), C(3, P), S(c - wc, c - 2 * wc), C(1, N), S(m0 - b, w0 - b)});
    State f6 = mk({C(0), S(6, 1), C(1, N), C(5, P)});
    State f7 = mk({C(0), C(7, P), C(0)});
    r.fl = zip({1, b, m1 - w1 - c * wc + 1, wc, 3 * m0 - L, 3, 5}, {f1, f2, f3, f4, f5, f6, f7});
    return r;
}

CF sec74_side2(const Triple& T, const Triple& G, Ctx& cx) {
    const Int &m0 = T.b, &m1 = T.c;
    const Int &a = G.a, &b = G.b, &c = G.c;
    TripleWeights gw = weights(G), w = weights(T);
    const Int &wa = gw.wa, &wb = gw.wb, &wc = gw.wc, &w0 = w.wb, &w1 = w.wc;
    Int p = c * wc + 1, u = 3 * a * b - c;
    Int v = 3 * a * u - b;
    Int wu = w3(a, b, u), wv = w3(u, a, v);
    Int e = 3 * c - a * b, h = 3 * b - a * u, q = a * wa + 1;
    CF r;
    r.init = mk({S(c, wc), C(1), S(m1, w1), C(1), S(m0, w0)});
    State f1 = mk({S(c, wc), C(1), S(m1 - b * c * c, w1 - b * p), C(1, P), S(c * c, p), C(1, N), S(m0, w0)});
    std::pair<Int, Int> Y{m0 - a * b * b, w0 - a * (b * wb - 1)};
    State f2 = mk({S(c, wc), C(1), S(m1 - b * c * c, w1 - b * p), C(1, N), S(b * b, b * wb - 1), C(1, P), S(Y)});
    std::pair<Int, Int> X{Y.first * e - b, Y.second * e - wb};
    State f3 = mk({S(c, wc), C(1, N), S(b * b, b * wb - 1), C(1, P), S(X), C(1), S(Y)});
    std::pair<Int, Int> A{c - u * a * a, wc - u * q};
    State f4 = mk({S(A), C(1, P), S(a * a, q), C(1, N), S(X), C(1), S(Y)});
    Int Bn = h * (A.first * e - 3 * a * a) + v;
    Int d5 = e * (u * h + a) - v;
    Int Ba = exact_div(d5 + Bn * q, a * a);
    if (v > 1 && Ba != h * (A.second * e - 3 * a * wa) + v + wv)
        cx.notes->push_back("flip 5 of " + T.str() + ": a-value taken from delta");
    State f5 = mk({S(A), C(1), S(Bn, Ba), C(1, P), S(a * a, q), C(1, N), S(Y)});
    std::pair<Int, Int> D{h * A.first - a, A.second * h - wa};
    State f6 = mk({S(A), C(1), S(Bn, Ba), C(1, N), S(D), C(1, P), S(a * a, q)});
    std::vector<Int> dl{b, a, a * e + b, u, d5, u * h + a, e, v};
    CF down = trace(mutate(T, 2), cx);
    if (u == 1 && a == 2) {
        f5 = mk({S(25, 19), C(1), S(24870, 18941), C(1, P), S(4, 3), C(1, N), S(383, 291)});
        f6 = mk({S(25, 19), C(1), S(24870, 18941), C(1, N), S(323, 246), C(1, P), S(4, 3)});
        State f7 = mk({S(25, 19), C(1, N), C(2, P), S(246, 169), C(1), S(4, 3)});
        auto own = zip({b, a, a * e + b, u, 1154, 15, 77}, {f1, f2, f3, f4, f5, f6, f7});
        r.fl = stitch(own, 7, down, 5, true, T, cx);
        return r;
    }
    if (u < a && v == 1) {
        Int M = (3 * a - u) * (a * a * (3 * b - u * a) - 3 * u * u) + 1;
        Int t = u * (u - wu) - 1;
        Int Q7 = exact_div(M * t - e, u * u);
        State f7 = mk({S(A), C(1, N), S(u * u, t), C(1, P), S(M, Q7), C(1), S(b - u * u, wb - t)});
        auto own = zip({dl[0], dl[1], dl[2], dl[3], dl[4], dl[5], dl[6]}, {f1, f2, f3, f4, f5, f6, f7});
        r.fl = stitch(own, 7, down, 5, true, T, cx);
        return r;
    }
    if (u < a) {
        State f7 = mk({S(A), C(1), S(D), C(1, P), S(v * a * a - b, v * q - wb), C(1, N), S(a * a, q)});
        State f8 = u > 1 ? mk({S(A), C(1), S(D), C(1, N), S(u * u, u * (u - wu) - 1), C(1, P),
                               S(b - v * u * u, (b - wb) - v * (u * (u - wu) - 1))})
                         : mk({S(A), C(1), S(D), C(1, N), C(2, P), S(b - v, b - 2 * v)});
        auto own = zip({dl[0], dl[1], dl[2], dl[3], dl[4], dl[5], dl[6], dl[7]}, {f1, f2, f3, f4, f5, f6, f7, f8});
        r.fl = stitch(own, 8, down, 4, true, T, cx);
        return r;
    }
    Int M = D.first - e * (b - v * a * a), Q = D.second - e * (wb - v * q);
    State f7 = v == 1 ? mk({S(A), C(1, N), S(b - v * a * a, wb - v * q), C(1, P), S(M, Q), C(1), S(a * a, q)})
                      : mk({S(A), C(1), S(b - v * a * a, wb - v * q), C(1, P), S(M, Q), C(1, N), S(a * a, q)});
    auto own = zip({dl[0], dl[1], dl[2], dl[3], dl[4], dl[5], dl[6]}, {f1, f2, f3, f4, f5, f6, f7});
    r.fl = stitch(own, 7, down, 5, true, T, cx);
    return r;
}

CF sec74_side1(const Triple& T, const Triple& G, Ctx& cx) {
    const Int &m0 = T.b, &m1 = T.c;
    const Int &a = G.a, &b = G.b, &c = G.c;
    TripleWeights gw = weights(G), w = weights(T);
    const Int &wa = gw.wa, &wc = gw.wc, &w0 = w.wb, &w1 = w.wc;
    Int q = c * (c - wc) + 1, r0 = a * (a - wa) - 1, u = 3 * a * b - c;
    Triple s = branch_position(G).seed;
    const Int &p0 = s.b, &p1 = s.c;
    Int e = 3 * a * p0 - p1;
    Int f = 3 * a * e - p0;
    Int we = w3(p0, a, e);
    TripleWeights sw = weights(s);
    const Int &wp0 = sw.wb, &wp1 = sw.wc;
    Int g = 3 * c - a * b;
    CF r;
    r.init = mk({S(c, c - wc), C(1), S(m1, w1), C(1), S(m0, w0)});
    State f1 = mk({S(c, c - wc), C(1), S(m1 - a * c * c, w1 - a * q), C(1, P), S(c * c, q), C(1, N), S(m0, w0)});
    std::pair<Int, Int> Y{m0 - b * a * a, w0 - b * r0};
    State f2 = mk({S(c, c - wc), C(1), S(m1 - a * c * c, w1 - a * q), C(1, N), S(a * a, r0), C(1, P), S(Y)});
    std::pair<Int, Int> X{Y.first * g - a, Y.second * g - (a - wa)};
    State f3 = mk({S(c, c - wc), C(1, N), S(a * a, r0), C(1, P), S(X), C(1), S(Y)});
    std::pair<Int, Int> A{c - u * a * a, (c - wc) - u * r0};
    State f4 = mk({S(a * a, r0), C(1, P), S(A), C(1, N), S(X), C(1), S(Y)});
    Int h = 3 * m0 - a * c;
    Int M = X.first - h * A.first, Q = X.second - h * A.second;
    State f5 = mk({S(a * a, r0), C(1), S(M, Q), C(1, P), S(A), C(1, N), S(Y)});
    std::vector<Int> dl{a, b, b * g + a, u, h, 3 * a, 3 * a * (3 * p0 - e * a) - (3 * e - f * a), f};
    Triple Tm = make_triple(p0, p1, 3 * p0 * p1 - a);
    if ((a == 2 && e == 1) || f == 1) {
        State f6 = a == 2 && e == 1
                       ? mk({S(4, 1), C(1), S(246, 77), C(1, N), S(19, 6), C(2, P)})
                       : mk({S(a * a, r0), C(1), S(M, Q), C(1, N), S((3 * a - e) * a * a - e, (3 * a - e) * r0 - we), C(1, P), S(e * e, e * we + 1)});
        auto own = zip({dl[0], dl[1], dl[2], dl[3], dl[4], dl[5]}, {f1, f2, f3, f4, f5, f6});
        r.fl = stitch(own, 6, trace(Tm, cx), 6, false, T, cx);
        return r;
    }
    std::pair<Int, Int> F6{f * a * a - p0, f * r0 - (p0 - wp0)}, Pp{p1 - e * a * a, (p1 - wp1) - e * r0};
    State f6 = mk({S(a * a, r0), C(1), S(M, Q), C(1, N), S(F6), C(1, P), S(Pp)});
    std::pair<Int, Int> X7{Pp.first * (3 * p0 - e * a) - a, Pp.second * (3 * p0 - a * e) - (a - wa)};
    State f7 = mk({S(a * a, r0), C(1, N), S(F6), C(1, P), S(X7), C(1), S(Pp)});
    State f8 = e > 1 ? mk({S(p0 - f * e * e, (p0 - wp0) - f * (e * we + 1)), C(1, P), S(e * e, e * we + 1), C(1, N), S(X7), C(1), S(Pp)})
                     : mk({S(p0 - f, p0 - wp0), C(2, P), C(1, N), S(X7), C(1), S(Pp)});
    auto own = zip({dl[0], dl[1], dl[2], dl[3], dl[4], dl[5], dl[6], dl[7]}, {f1, f2, f3, f4, f5, f6, f7, f8});
    r.fl = stitch(own, 8, trace(Tm, cx), 4, false, T, cx);
    return r;
}

// Generator of the branch and which side the branch leaves it from.
struct Family {
    BranchPos bp;
    Triple G;
    int side;
};

Family family(const Triple& T) {
    Family fm;
    fm.bp = branch_position(T);
    const Int& L = T.a;
    const Int& mm1 = fm.bp.m[0];
    Int other = 3 * mm1 * L - fm.bp.m[1];
    fm.G = make_triple(mm1, other, L);
    fm.side = mm1 == fm.G.b ? 2 : 1;
    return fm;
}

CF trace(const Triple& T, Ctx& cx) {
    const Int &a = T.a, &b = T.b, &c = T.c;
    TripleWeights w = weights(T);
    if (T == Triple{1, 1, 2}) return {mk({C(0), S(2, 1), C(0)}), {{1, mk({C(0), C(3, P), C(0)})}}};
    if (a == 1) {
        Int k1 = c, k0 = b, km1 = 3 * k0 - k1;
        Int km2 = km1 == 1 && k0 == 2 ? Int(1) : Int(3 * km1 - k0);
        CF r;
        r.init = mk({C(0), S(k1, km1), C(1), S(k0, km2)});
        State f1 = mk({C(0), S(k1 - km1, km1), C(2, P), C(1, N), S(k0, km2)});
        State f2 = k0 == 2 ? mk({C(0), S(k1 - km1, km1), C(1, N), C(3, P)})
                           : mk({C(0), S(k1 - km1, km1), C(1, N), S(k0 - km2, km2), C(2, P)});
        r.fl = {{km1, f1}, {km2, f2}, {3, mk({C(0), C(5, P), C(0)})}};
        return r;
    }
    Family fm = family(T);
    const BranchPos& bp = fm.bp;
    const int k = bp.k;
    auto m_ = [&](int j) -> Int {
        if (j >= -1) return bp.m[j + 1];
        return 3 * a * bp.m[0] - bp.m[1];
    };
    if (a == 2) return pell(T, bp);
    const Triple& G = fm.G;
    TripleWeights gw = weights(G);
    if (fm.side == 2 ? w.wa != gw.wc : w.wa != mod(G.c - gw.wc, G.c)) throw Gap("weight orientation");
    if (k >= 1) {
        Triple seed{a, m_(0), m_(1)};
        CF sc = trace(seed, cx);
        TripleWeights kw = weights(seed);
        const Int &W0 = kw.wb, &W1 = kw.wc;
        const Int& cc = G.c;
        Int wcx = fm.side == 2 ? gw.wc : G.c - gw.wc;
        Int p = cc * wcx + 1;
        Int x = m_(k - 1), y = m_(k - 2);
        CF r;
        r.init = mk({S(cc, wcx), C(1), S(c, w.wc), C(1), S(b, w.wb)});
        State f1 = mk({S(cc, wcx), C(1), S(c - cc * cc * x, w.wc - x * p), C(1, P), S(cc * cc, p), C(1, N), S(b, w.wb)});
        State f2 = mk({S(cc, wcx), C(1), S(c - cc * cc * x, w.wc - x * p), C(1, N), S(b - cc * cc * y, w.wb - y * p), C(1, P), S(cc * cc, p)});
        const Int &m0 = m_(0), &m1 = m_(1);
        if (fm.side == 2 && G.a == 1) return sec73_side2(G, x, y, r.init, f1, f2);
        const Int& gx = fm.side == 2 ? G.b : G.a;
        const Int& gy = fm.side == 2 ? G.a : G.b;
        State f3 = mk({S(cc, wcx), C(1), S(m1 - gx * cc * cc, W1 - gx * p), C(1, P), S(gy * cc * cc - m0, gy * p - W0), C(1, N), S(cc * cc, p)});
        if (sc.fl.size() < 2 || sc.fl[1].first != gy) throw Gap("branch seed trace does not continue the table");
        r.fl = {{x, f1}, {y, f2}, {3 * cc, f3}, sc.fl[1]};
        r.fl.insert(r.fl.end(), sc.fl.begin() + 2, sc.fl.end());
        return r;
    }
    if (fm.side == 2 && G.a == 1) {
        const Int& mm1 = m_(-1);
        const Int mm2 = m_(-2);
        Int p = a * gw.wc + 1;
        State init = mk({S(a, w.wa), C(1), S(c, w.wc), C(1), S(b, w.wb)});
        State f1 = mk({S(a, gw.wc), C(1), S(c - a * a * mm1, w.wc - mm1 * p), C(1, P), S(a * a, p), C(1, N), S(b, w.wb)});
        State f2 = mk({S(a, gw.wc), C(1), S(c - a * a * mm1, w.wc - mm1 * p), C(1, N), S(b - a * a * mm2, w.wb - mm2 * p), C(1, P), S(a * a, p)});
        return sec73_side2(G, mm1, mm2, init, f1, f2);
    }
    if (fm.side == 2) return sec74_side2(T, G, cx);
    if (G.a == 1) return sec73_side1(T, G);
    return sec74_side1(T, G, cx);
}

}  // namespace

Trace run_closed_form(const Triple& t) {
    if (!is_markov(t)) throw std::invalid_argument("not a Markov triple");
    if (t.c == 1) throw std::invalid_argument("(1,1,1) is the smooth plane");
    Trace tr;
    tr.triple = t;
    tr.nu = nu(t);
    Ctx cx{&tr.notes};
    CF cf;
    try {
        cf = trace(t, cx);
    } catch (const Gap& g) {
        // Outside the tabulated families: report it and fall back to surgery.
        Trace s = run_surgery(t);
        s.notes.insert(s.notes.begin(), std::string("closed form unavailable (") + g.what() + "), surgery trace used");
        return s;
    }
    tr.states.push_back(cf.init);
    for (std::size_t k = 0; k < cf.fl.size(); ++k) {
        FlipRecord rec;
        rec.step = static_cast<int>(k) + 1;
        rec.delta = cf.fl[k].first;
        const State& prev = tr.states.back();
        if (k == 0) {
            FlipRecord seed;
            seed_first_flip(initial_state(t), t, &seed);
            rec.cqs = seed.cqs;
        } else if (long i = minus_index(prev); i >= 0) {
            rec.cqs = contract_at(prev, i);
        }
        tr.flips.push_back(rec);
        tr.states.push_back(cf.fl[k].second);
    }
    for (const auto& it : tr.states.back())
        if (it.curve && it.mark == Mark::Plus) tr.final_m = static_cast<int>(it.c.get_si());
    return tr;
}

namespace {

int predict(const Triple& T) {
    if (T == Triple{1, 1, 2}) return 1;
    if (T.a == 1) return 3;
    if (T.a == 2) return 7;
    Family fm = family(T);
    const Triple& G = fm.G;
    if (fm.side == 2 && G.a == 1) return 9;
    if (fm.bp.k >= 1) return predict(fm.bp.seed) + 2;
    if (G.a == 1) return 7;
    const Int &a = G.a, &b = G.b, &c = G.c;
    if (fm.side == 2) {
        Int u = 3 * a * b - c;
        int tail = predict(mutate(T, 2));
        if (!(u == 1 && a == 2) && u < a && 3 * a * u - b != 1) return 8 + tail - 4;
        return 7 + tail - 5;
    }
    Triple s = branch_position(G).seed;
    Int e = 3 * a * s.b - s.c;
    Int f = 3 * a * e - s.b;
    int tail = predict(make_triple(s.b, s.c, 3 * s.b * s.c - a));
    if ((a == 2 && e == 1) || f == 1) return 6 + tail - 6;
    return 8 + tail - 4;
}

}  // namespace

bool same_states(const Trace& x, const Trace& y) {
    if (x.states != y.states || x.flips.size() != y.flips.size()) return false;
    for (std::size_t k = 0; k < x.flips.size(); ++k)
        if (x.flips[k].delta != y.flips[k].delta) return false;
    return true;
}

bool crosscheck(const Triple& t) { return same_states(run_surgery(t), run_closed_form(t)); }

int flip_count(const Triple& t) { return static_cast<int>(run_surgery(t).flips.size()); }

Frac flip3_cqs(const Triple& member) {
    Trace tr = run_surgery(member);
    if (tr.flips.size() < 3) throw std::invalid_argument("fewer than three flips");
    return tr.flips[2].cqs;
}

int predict_flip_count(const Triple& t) {
    if (!is_markov(t) || t.c == 1) throw std::invalid_argument("not a Markov triple with an MMP");
    return predict(t);
}

}  // namespace mm
