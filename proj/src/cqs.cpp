#include "markov_mmp/cqs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

Int pres_delta(const WahlSing& w0, const Int& c, const WahlSing& w1) {
    Int a0 = w0.smooth() ? Int(0) : w0.a;
    Int a1 = w1.smooth() ? Int(1) : w1.a;
    return (c - 1) * w0.n * w1.n + w1.n * a0 - w0.n * a1;
}

Seq pres_chain(const WahlSing& w0, const Int& c, const WahlSing& w1) {
    Seq s = chain(w0);
    s.push_back(c);
    Seq t = chain(w1);
    s.insert(s.end(), t.begin(), t.end());
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> zero_marks(const Seq& B) {
    const std::size_t s = B.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (s < 2) return out;
    std::vector<Mat2> pre(s + 1), suf(s + 2);
    pre[0] = {1, 0, 0, 1};
    for (std::size_t k = 1; k <= s; ++k) pre[k] = pre[k - 1] * Mat2{B[k - 1], -1, 1, 0};
    suf[s + 1] = {1, 0, 0, 1};
    for (std::size_t k = s; k >= 1; --k) suf[k] = Mat2{B[k - 1], -1, 1, 0} * suf[k + 1];
    const Mat2& M = pre[s];
    // u_i = top-left of pre_i^-1 M
    std::vector<Int> u(s + 1);
    for (std::size_t i = 1; i <= s; ++i) u[i] = pre[i].d * M.a - pre[i].b * M.c;
    Int tl, y00;
    for (std::size_t i = 1; i <= s; ++i) {
        const Int& x00 = pre[i - 1].a;
        for (std::size_t j = i + 1; j <= s; ++j) {
            const Int& z00 = suf[j + 1].a;
            y00 = pre[i].d * pre[j - 1].a - pre[i].b * pre[j - 1].c;
            tl = M.a - x00 * u[i] - pre[j - 1].a * z00 + x00 * y00 * z00;
            if (tl != 0) continue;
            Seq t = B;
            t[i - 1] -= 1;
            t[j - 1] -= 1;
            if (is_zero_cf(t)) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

bool realizes(const WahlSing& w0, const Int& c, const WahlSing& w1, const Seq& E) {
    Cascade r = blow_down_all(pres_chain(w0, c, w1));
    return r.left == 0 && r.right == 0 && r.rest == E;
}

std::optional<PRes> build(const Frac& f, const WahlSing& w0, const WahlSing& w1, const Seq& E) {
    Int nn = w0.n * w1.n;
    Int rest = f.delta - w0.n * w0.n - w1.n * w1.n;
    if (rest % nn != 0) return std::nullopt;
    Int dl = rest / nn;
    Int a0 = w0.smooth() ? Int(0) : w0.a;
    Int a1 = w1.smooth() ? Int(1) : w1.a;
    Int t = dl - w1.n * a0 + w0.n * a1;
    if (t % nn != 0) return std::nullopt;
    Int c = 1 + t / nn;
    if (c < 1 || dl <= 0) return std::nullopt;
    if (!realizes(w0, c, w1, E)) return std::nullopt;
    PRes p;
    p.w0 = w0;
    p.c = c;
    p.w1 = w1;
    p.delta = dl;
    p.Delta = f.delta;
    p.Omega = f.omega;
    return p;
}

std::vector<Int> a_candidates(const Int& n, const Int& d) {
    if (n == 1) return {0};
    std::vector<Int> v{mod(n - d, n), mod(d, n)};
    if (gcd(d, n) == 1) {
        Int iv = inv_mod(d, n);
        v.push_back(iv);
        v.push_back(n - iv);
    }
    return v;
}

}  // namespace

std::vector<PRes> find_extremal_presolutions(const Frac& f) {
    if (!valid_frac(f)) throw std::invalid_argument("not a valid fraction");
    Seq E = expand(f), B = dual(f);
    std::vector<PRes> out;
    for (auto [i, j] : zero_marks(B)) {
        Seq P(B.begin(), B.begin() + (i - 1)), Q(B.begin() + j, B.end());
        auto [n0, d0] = num_den(P);
        auto [n1, d1] = num_den(Q);
        WahlSing w0 = n0 == 1 ? smooth_point() : WahlSing{n0, n0 - d0};
        WahlSing w1 = n1 == 1 ? smooth_point() : WahlSing{n1, inv_mod(d1, n1)};
        auto p = build(f, w0, w1, E);
        if (!p) {
            // Not expected; keep a brute-force fallback over the orientations.
            for (const Int& x : a_candidates(n0, d0)) {
                for (const Int& y : a_candidates(n1, d1)) {
                    p = build(f, n0 == 1 ? smooth_point() : WahlSing{n0, x}, n1 == 1 ? smooth_point() : WahlSing{n1, y}, E);
                    if (p) break;
                }
                if (p) break;
            }
        }
        if (!p) continue;
        p->i = i;
        p->j = j;
        if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
    return out;
}

bool is_wormhole(const Frac& f) { return find_extremal_presolutions(f).size() == 2; }

Frac markov_cqs(const Int& c, const Int& zeta) {
    Int q = 8 * c * c * c * c - 2 * c * c - 1;
    Int D = c * c * q;
    return {D, mod(c * c + (c * zeta + 1) * q, D)};
}

Frac markov_cqs_reduced(const Int& c, const Int& w) {
    return {(4 * c + w) * (5 * c - w) - 9, c * (4 * c + w) - 1};
}

Int zero_vertex_degree(const MarkedCF& m) {
    Int s = 0;
    for (const auto& e : m.seq) s += e;
    return 3 * Int(m.seq.size()) - 1 - s;
}

namespace {

// Cyclic polygon view: deg[0] is the zero vertex, deg[k] = seq[k-1] minus marks.
struct Polygon {
    std::vector<Int> deg;
    std::vector<bool> mark;
};

Polygon to_polygon(const MarkedCF& m) {
    Polygon p;
    p.deg.push_back(zero_vertex_degree(m));
    p.mark.push_back(false);
    for (std::size_t k = 0; k < m.seq.size(); ++k) {
        bool mk = k + 1 == m.i || k + 1 == m.j;
        p.deg.push_back(m.seq[k] - (mk ? 1 : 0));
        p.mark.push_back(mk);
    }
    return p;
}

// Reads the polygon with vertex z as the zero vertex.
MarkedCF from_polygon(const Polygon& p, std::size_t z) {
    MarkedCF m;
    const std::size_t n = p.deg.size();
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t v = (z + k) % n;
        m.seq.push_back(p.deg[v] + (p.mark[v] ? 1 : 0));
        if (p.mark[v]) (m.i == 0 ? m.i : m.j) = k;
    }
    return m;
}

}  // namespace

MarkedCF reduce_marked_cf(const MarkedCF& m) {
    if (zero_vertex_degree(m) != 1) throw std::invalid_argument("zero vertex is not an ear");
    Polygon p = to_polygon(m);
    const std::size_t n = p.deg.size();
    p.deg[1] -= 1;
    p.deg[n - 1] -= 1;
    p.deg.erase(p.deg.begin());
    p.mark.erase(p.mark.begin());
    // Next zero vertex: a neighbor of the erased one that became an ear.
    std::size_t last = p.deg.size() - 1, z = last;
    if (!(p.deg[last] == 1 && !p.mark[last]) && p.deg[0] == 1 && !p.mark[0]) z = 0;
    return from_polygon(p, z);
}

MarkedCF reduce_fully(const MarkedCF& m0) {
    MarkedCF m = m0;
    while (zero_vertex_degree(m) == 1 && m.seq.size() > 2) m = reduce_marked_cf(m);
    // Among readings of the form [2,2,2, ..., 2,2,2] take the one whose zero
    // vertex has the fewest triangles.
    Polygon p = to_polygon(m);
    const std::size_t n = p.deg.size();
    MarkedCF best = m;
    bool found = false;
    for (std::size_t z = 0; z < n && n > 6; ++z) {
        if (p.mark[z]) continue;
        MarkedCF r = from_polygon(p, z);
        const Seq& s = r.seq;
        bool ok = true;
        for (std::size_t k = 0; k < 3; ++k) ok = ok && s[k] == 2 && s[s.size() - 1 - k] == 2;
        if (ok && (!found || p.deg[z] < zero_vertex_degree(best))) {
            best = r;
            found = true;
        }
    }
    return best;
}

Int marked_delta(const MarkedCF& m) {
    auto [D, den] = num_den(m.seq);
    Frac f{D, D - den};
    for (const auto& p : find_extremal_presolutions(f))
        if (p.i == m.i && p.j == m.j) return p.delta;
    throw std::invalid_argument("marks do not encode an extremal P-resolution");
}

Rat dedekind12(const Int& q0, const Int& p0) {
    // 12 s(h,k) = -3 + (h^2 + k^2 + 1)/(hk) - 12 s(k,h)
    Rat acc = 0;
    int sign = 1;
    Int h = mod(q0, p0), k = p0;
    while (h != 0) {
        Rat term(h * h + k * k + 1, h * k);
        term.canonicalize();
        acc += sign * (term - 3);
        Int nh = mod(k, h);
        k = h;
        h = nh;
        sign = -sign;
    }
    return acc;
}

DedekindReport dedekind_check(const Int& c, const Int& w) {
    Frac f = markov_cqs_reduced(c, w);
    DedekindReport r;
    r.reciprocity = dedekind12(f.omega, f.delta);
    r.via_inverse = 1 + Rat(9 * c * c - 2, f.delta);
    r.via_inverse.canonicalize();
    Int num = 29 * c * c + c * w - w * w - 11, den = 20 * c * c + c * w - w * w - 9;
    r.closed_form = Rat(num, den);
    r.closed_form.canonicalize();
    return r;
}

}  // namespace mm
