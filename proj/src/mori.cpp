#include "markov_mmp/mori.hpp"

#include <stdexcept>

namespace mm {

namespace {

// A smooth end reads a = 0 on the left and a = 1 on the right.
Int left_a(const K2A& k) { return k.s0.smooth() ? Int(0) : k.s0.a; }
Int right_a(const K2A& k) { return k.s1.smooth() ? Int(1) : k.s1.a; }

Int k2a_delta(const K2A& k) { return k.s0.n * right_a(k) - k.s1.n * left_a(k); }
Int k2a_Delta(const K2A& k, const Int& d) {
    return k.s0.n * k.s0.n + k.s1.n * k.s1.n - d * k.s0.n * k.s1.n;
}

Frac frac_of(const Seq& s) {
    auto [m, q] = num_den(s);
    if (m <= 0) throw std::invalid_argument("sequence does not contract to a c.q.s.");
    return {m, mod(q, m)};
}

// Descends the recursion from (big, small): 0 -> divisorial, negative -> flip.
Kind descend_kind(Int big, Int small, const Int& delta) {
    if (delta == 1) return Kind::Flip;
    for (;;) {
        if (small == 0) return Kind::Divisorial;
        if (small < 0) return Kind::Flip;
        Int prev = delta * small - big;
        if (prev >= small) throw std::invalid_argument("recursion does not descend");
        big = small;
        small = prev;
    }
}

bool same_class(const Frac& f, const Int& d, const Int& q) {
    if (d != f.delta) return false;
    Int r = mod(q, d);
    if (r == f.omega) return true;
    return gcd(f.omega, f.delta) == 1 && r == inv_mod(f.omega, f.delta);
}

}  // namespace

K2A normalize(const K2A& k) {
    for (int flips = 0; flips < 4; ++flips) {
        K2A t = k;
        if ((flips & 1) && !t.s0.smooth()) t.s0.a = t.s0.n - t.s0.a;
        if ((flips & 2) && !t.s1.smooth()) t.s1.a = t.s1.n - t.s1.a;
        Int d = k2a_delta(t);
        if (d > 0 && k2a_Delta(t, d) > 0) return t;
    }
    throw std::invalid_argument("no orientation gives a positive delta");
}

K2AData k2a_invariants(const K2A& k0) {
    K2A k = normalize(k0);
    K2AData r;
    r.delta = k2a_delta(k);
    r.Delta = k2a_Delta(k, r.delta);
    r.Omega = mod((k.s0.n - r.delta * k.s1.n) * left_a(k) + k.s1.n * right_a(k) - 1, r.Delta);
    return r;
}

Frac k2a_contraction(const K2A& k) {
    Seq s = chain(k.s0);
    s.push_back(1);
    Seq t = chain(k.s1);
    s.insert(s.end(), t.begin(), t.end());
    return frac_of(s);
}

Frac k1a_to_cqs(const K1A& k) {
    Seq s = wahl_chain(k.s);
    if (k.mark < 1 || k.mark > s.size()) throw std::out_of_range("mark");
    s[k.mark - 1] -= 1;
    if (!evaluate(s)) throw std::invalid_argument("decremented chain is not admissible");
    return frac_of(s);
}

Int k1a_delta(const K1A& k) {
    Seq s = wahl_chain(k.s);
    if (k.mark < 1 || k.mark > s.size()) throw std::out_of_range("mark");
    Seq left(s.begin(), s.begin() + (k.mark - 1)), right(s.begin() + k.mark, s.end());
    Int t = num_den(left).first + num_den(right).first;
    if (t % k.s.n != 0) throw std::invalid_argument("mark does not give an integral delta");
    return t / k.s.n;
}

Kind classify(const K2A& k0) {
    K2A k = normalize(k0);
    Int d = k2a_delta(k);
    Int big = k.s0.n, small = k.s1.n;
    if (big < small) std::swap(big, small);
    return descend_kind(big, small, d);
}

namespace {

// Smaller root of x^2 - delta*n*x + n^2 - Delta.
Int lower_neighbor(const K1A& k, const Int& d, const Int& Delta) {
    const Int& n = k.s.n;
    Int disc = d * d * n * n - 4 * (n * n - Delta), root;
    if (!is_square(disc, &root)) throw std::invalid_argument("k1A without integral neighbours");
    Int t = d * n - root;
    if (t % 2 != 0) throw std::invalid_argument("k1A without integral neighbours");
    return t / 2;
}

}  // namespace

Kind classify(const K1A& k) {
    Int d = k1a_delta(k);
    Frac f = k1a_to_cqs(k);
    if (d == 1) return Kind::Flip;
    return descend_kind(k.s.n, lower_neighbor(k, d, f.delta), d);
}

PRes flip(const K2A& k0) {
    K2A k = normalize(k0);
    if (classify(k) != Kind::Flip) throw std::invalid_argument("divisorial neighbourhood");
    const Int d = k2a_delta(k);
    bool rev = k.s0.n < k.s1.n;
    K2A t = rev ? K2A{reverse(k.s1), reverse(k.s0)} : k;
    if (t.s1.smooth()) t.s1.a = 1;
    if (t.s0.smooth()) t.s0.a = 0;
    while (d * t.s1.n - t.s0.n > 0) {
        WahlSing prev{d * t.s1.n - t.s0.n, d * t.s1.a - t.s0.a};
        t = {t.s1, prev};
    }
    WahlSing w0 = t.s1.n == 1 ? smooth_point() : WahlSing{t.s1.n, mod(t.s1.a, t.s1.n)};
    Int n1 = t.s0.n - d * t.s1.n;
    WahlSing w1 = n1 == 1 ? smooth_point() : WahlSing{n1, mod(t.s0.a - d * t.s1.a, n1)};
    Int nn = w0.n * w1.n;
    Int a0 = w0.smooth() ? Int(0) : w0.a;
    Int a1 = w1.smooth() ? Int(1) : w1.a;
    Int num = d - w1.n * a0 + w0.n * a1;
    if (num % nn != 0) throw std::logic_error("flip: no integral middle curve");
    PRes p;
    p.c = 1 + num / nn;
    p.delta = d;
    if (rev) {
        p.w0 = reverse(w1);
        p.w1 = reverse(w0);
    } else {
        p.w0 = w0;
        p.w1 = w1;
    }
    Frac f = k2a_contraction(k);
    p.Delta = f.delta;
    p.Omega = f.omega;
    Cascade cas = blow_down_all(pres_chain(p.w0, p.c, p.w1));
    if (cas.left || cas.right || cas.rest != expand(f)) throw std::logic_error("flip: P-resolution does not contract to the neighbourhood");
    return p;
}

bool train_hits(const Int& x, const Int& y, const Int& delta, const Int& n) {
    for (int o = 0; o < 2; ++o) {
        const Int& p = o ? y : x;
        const Int& q = o ? x : y;
        Int u = p, v = q + delta * p;
        while (v <= n) {
            if (v == n) return true;
            Int w = delta * v - u;
            u = v;
            v = w;
        }
    }
    return false;
}

PRes flip(const K1A& k) {
    if (classify(k) != Kind::Flip) throw std::invalid_argument("divisorial neighbourhood");
    Frac f = k1a_to_cqs(k);
    Int d = k1a_delta(k);
    for (const auto& p : find_extremal_presolutions(f))
        if (p.delta == d && train_hits(p.w0.n, p.w1.n, d, k.s.n)) return p;
    throw std::logic_error("flip: no extremal P-resolution carries this k1A");
}

namespace {

WahlSing target_from(const Int& d, const Frac& f) {
    if (f.delta != d * d) throw std::logic_error("divisorial contraction with Delta != delta^2");
    for (const Int& o : {f.omega, inv_mod(f.omega, f.delta)}) {
        if ((o + 1) % d != 0) continue;
        Int a = (o + 1) / d;
        if (a > 0 && a < d && gcd(a, d) == 1) return {d, a};
    }
    if (d == 1) return smooth_point();
    throw std::logic_error("divisorial contraction is not of Wahl type");
}

}  // namespace

WahlSing divisorial_target(const K2A& k) {
    if (classify(k) != Kind::Divisorial) throw std::invalid_argument("flipping neighbourhood");
    K2AData x = k2a_invariants(k);
    return target_from(x.delta, {x.Delta, x.Omega});
}

WahlSing divisorial_target(const K1A& k) {
    if (classify(k) != Kind::Divisorial) throw std::invalid_argument("flipping neighbourhood");
    return target_from(k1a_delta(k), k1a_to_cqs(k));
}

std::vector<K2A> mori_sequence(const K2A& initial, int count) {
    const K2A& k = initial;
    Int d = k2a_delta(k);
    if (d <= 0 || d * k.s1.n - k.s0.n > 0) throw std::invalid_argument("not an initial k2A");
    std::vector<K2A> out;
    Int n0 = k.s1.n, a0 = right_a(k), n1 = k.s0.n, a1 = left_a(k);
    while (static_cast<int>(out.size()) < count && n1 > 0) {
        auto sing = [](const Int& n, const Int& a) { return n == 1 ? smooth_point() : WahlSing{n, mod(a, n)}; };
        out.push_back({sing(n1, a1), sing(n0, a0)});
        Int n2 = d * n1 - n0, a2 = d * a1 - a0;
        n0 = n1;
        a0 = a1;
        n1 = n2;
        a1 = a2;
    }
    return out;
}

std::optional<std::size_t> find_mark(const Seq& ch, const Frac& f) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < ch.size(); ++k) {
        Seq s = ch;
        s[k] -= 1;
        auto [m, q] = num_den(s);
        if (!same_class(f, m, q) || !evaluate(s)) continue;
        if (hit) return std::nullopt;
        hit = k + 1;
    }
    return hit;
}

namespace {

MoriTrain run_train(const Frac& f, const Int& d, Int n0, Int a0, Int n1, Int a1, int count) {
    MoriTrain tr;
    tr.cqs = f;
    tr.delta = d;
    WahlSing first = n0 == 1 ? smooth_point() : WahlSing{n0, mod(a0, n0)};
    tr.wagons.push_back({chain(first), first, 0});
    while (static_cast<int>(tr.wagons.size()) < count) {
        WahlSing w{n1, mod(a1, n1)};
        Seq ch = chain(w);
        auto mk = find_mark(ch, f);
        if (!mk) throw std::logic_error("wagon without a mark");
        tr.wagons.push_back({ch, w, *mk});
        Int n2 = d * n1 - n0, a2 = d * a1 - a0;
        n0 = n1;
        a0 = a1;
        n1 = n2;
        a1 = a2;
    }
    return tr;
}

}  // namespace

MoriTrain mori_train(const PRes& p, int side, int count) {
    const WahlSing& x = side == 0 ? p.w0 : p.w1;
    const WahlSing& y = side == 0 ? p.w1 : p.w0;
    const Int& d = p.delta;
    Int n0 = x.n, a0 = x.smooth() ? Int(0) : x.a;
    Int n1 = y.n + d * n0;
    Int t = d + n1 * a0;
    if (t % n0 != 0) {
        a0 = n0 - a0;
        t = d + n1 * a0;
        if (t % n0 != 0) throw std::logic_error("train: no integral a(1)");
    }
    return run_train({p.Delta, p.Omega}, d, n0, a0, n1, t / n0, count);
}

MoriTrain mori_train(const WahlSing& seed, int count) {
    const Int& d = seed.n;
    if (d < 2) throw std::invalid_argument("divisorial seed must be singular");
    Frac f{d * d, d * seed.a - 1};
    return run_train(f, d, d, seed.a, d * d, 1 + d * seed.a, count);
}

}  // namespace mm
