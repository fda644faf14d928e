#include "markov_mmp/hjcf.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mm {

bool valid_frac(const Frac& f) {
    return f.delta > 0 && f.omega > 0 && f.omega < f.delta && gcd(f.delta, f.omega) == 1;
}

Seq expand(const Int& m0, const Int& q0) {
    Seq out;
    Int m = m0, q = q0, e;
    while (q > 0) {
        mpz_cdiv_q(e.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
        out.push_back(e);
        Int nq = e * q - m;
        m = q;
        q = nq;
    }
    return out;
}

namespace {

// Right-to-left fold keeping the tail value as p/q with q > 0.
// Returns false on an inadmissible tail.
bool fold(const Seq& s, Int& p, Int& q) {
    if (s.empty()) return false;
    p = s.back();
    q = 1;
    for (std::size_t k = s.size() - 1; k-- > 0;) {
        if (p <= 0) return false;
        Int np = s[k] * p - q;
        q = p;
        p = np;
    }
    return true;
}

}  // namespace

std::optional<Rat> evaluate(const Seq& s) {
    Int p, q;
    if (!fold(s, p, q)) return std::nullopt;
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Seq dual(const Frac& f) { return expand(f.delta, f.delta - f.omega); }

Int inverse_den(const Frac& f) { return inv_mod(f.omega, f.delta); }

Seq blow_up(const Seq& s, std::size_t pos) {
    if (pos < 1 || pos > s.size() + 1) throw std::out_of_range("blow_up position");
    Seq out = s;
    std::size_t i = pos - 1;
    out.insert(out.begin() + i, Int(1));
    if (i > 0) out[i - 1] += 1;
    if (i + 1 < out.size()) out[i + 1] += 1;
    return out;
}

Seq blow_down(const Seq& s, std::size_t pos) {
    if (pos < 1 || pos > s.size()) throw std::out_of_range("blow_down position");
    std::size_t i = pos - 1;
    if (s[i] != 1) throw std::invalid_argument("blow_down on an entry different from 1");
    Seq out = s;
    if (i > 0) out[i - 1] -= 1;
    if (i + 1 < out.size()) out[i + 1] -= 1;
    out.erase(out.begin() + i);
    return out;
}

bool is_zero_cf(const Seq& s) {
    Int p, q;
    return fold(s, p, q) && p == 0;
}

std::vector<ZeroCF> enumerate_zero_cf(int s) {
    if (s < 2) return {};
    const int nv = s + 1;
    using Deg = std::vector<int>;
    std::map<std::pair<int, int>, std::vector<Deg>> memo;
    std::function<const std::vector<Deg>&(int, int)> tri = [&](int i, int j) -> const std::vector<Deg>& {
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Deg> res;
        if (j - i < 2) {
            res.push_back(Deg(nv, 0));
        } else {
            for (int k = i + 1; k < j; ++k) {
                const auto& left = tri(i, k);
                const auto& right = tri(k, j);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        Deg d(nv);
                        for (int v = 0; v < nv; ++v) d[v] = l[v] + r[v];
                        ++d[i];
                        ++d[k];
                        ++d[j];
                        res.push_back(std::move(d));
                    }
            }
        }
        return memo[key] = std::move(res);
    };
    std::vector<ZeroCF> out;
    for (const auto& d : tri(0, s)) {
        ZeroCF z;
        z.degrees = d;
        for (int v = 1; v <= s; ++v) z.cf.push_back(d[v]);
        out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(), [](const ZeroCF& x, const ZeroCF& y) { return x.cf < y.cf; });
    return out;
}

bool blows_down_to(const Seq& s, const Seq& target) {
    if (s == target) return true;
    std::set<Seq> seen{s};
    std::deque<Seq> todo{s};
    while (!todo.empty()) {
        Seq cur = std::move(todo.front());
        todo.pop_front();
        if (cur.size() <= target.size()) continue;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != 1) continue;
            Seq nxt = blow_down(cur, i + 1);
            if (nxt == target) return true;
            if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
        }
    }
    return false;
}

Mat2 matrix_of(const Seq& s) {
    Mat2 m{1, 0, 0, 1};
    for (const auto& e : s) m = m * Mat2{e, -1, 1, 0};
    return m;
}

std::pair<Int, Int> num_den(const Seq& s) {
    Mat2 m = matrix_of(s);
    return {m.a, m.c};
}

Cascade blow_down_all(Seq s) {
    Cascade r;
    for (;;) {
        auto it = std::find(s.begin(), s.end(), Int(1));
        if (it == s.end()) break;
        std::size_t i = it - s.begin();
        if (s.size() == 1) {
            s.clear();
            ++r.left;
            ++r.right;
            break;
        }
        if (i == 0) {
            s[1] -= 1;
            ++r.left;
        } else if (i + 1 == s.size()) {
            s[i - 1] -= 1;
            ++r.right;
        } else {
            s[i - 1] -= 1;
            s[i + 1] -= 1;
        }
        s.erase(s.begin() + i);
    }
    r.rest = std::move(s);
    return r;
}

Seq reversed(Seq s) {
    std::reverse(s.begin(), s.end());
    return s;
}

Seq concat(std::initializer_list<const Seq*> parts) {
    Seq out;
    for (const Seq* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace mm
