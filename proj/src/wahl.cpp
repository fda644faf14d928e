#include "markov_mmp/wahl.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

namespace {

bool reduced(const Seq& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](const Int& e) { return e >= 2; });
}

}  // namespace

Seq chain(const WahlSing& w) {
    if (w.smooth()) return {};
    return expand(w.n * w.n, w.n * w.a - 1);
}

Seq wahl_chain(const WahlSing& w) {
    if (w.n < 2) throw std::invalid_argument("smooth point has no Wahl chain");
    return chain(w);
}

std::optional<WahlSing> recognize_wahl(const Seq& s) {
    if (!reduced(s)) return std::nullopt;
    auto [m, q] = num_den(s);
    Int n;
    if (!is_square(m, &n) || n < 2) return std::nullopt;
    Int t = q + 1;
    if (t % n != 0) return std::nullopt;
    Int a = t / n;
    if (a <= 0 || a >= n || gcd(a, n) != 1) return std::nullopt;
    return WahlSing{n, a};
}

Seq dual_wahl_chain(const WahlSing& w) {
    if (w.n < 2) throw std::invalid_argument("smooth point has no dual Wahl chain");
    return expand(w.n * w.n, w.n * (w.n - w.a) + 1);
}

std::optional<std::pair<WahlSing, std::size_t>> recognize_dual_wahl(const Seq& s) {
    if (!reduced(s)) return std::nullopt;
    std::size_t pos = 0, hits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Seq t = s;
        t[i] -= 1;
        if (is_zero_cf(t)) {
            ++hits;
            pos = i + 1;
        }
    }
    if (hits != 1) return std::nullopt;
    auto [m, q] = num_den(s);
    Int n;
    if (!is_square(m, &n) || n < 2) return std::nullopt;
    Int t = q - 1;
    if (t % n != 0) return std::nullopt;
    Int a = n - t / n;
    if (a <= 0 || a >= n || gcd(a, n) != 1) return std::nullopt;
    return std::make_pair(WahlSing{n, a}, pos);
}

bool valid_wahl2(const Wahl2& t) {
    return t.r > 0 && t.r < t.m && t.r * t.r + 1 == t.f * t.m;
}

Seq wahl2_chain(const Wahl2& t) {
    if (!valid_wahl2(t)) throw std::invalid_argument("not a Wahl-2 triple");
    return expand(t.m, t.r);
}

std::pair<Wahl2, Wahl2> wahl2_children(const Wahl2& t) {
    if (!valid_wahl2(t)) throw std::invalid_argument("not a Wahl-2 triple");
    return {Wahl2{t.m + 2 * t.r + t.f, t.r + t.f, t.f},
            Wahl2{4 * t.m - 4 * t.r + t.f, 2 * t.m - t.r, t.m}};
}

std::pair<Seq, Seq> wahl_children(const Seq& s) {
    bool known = recognize_wahl(s).has_value() || recognize_dual_wahl(s).has_value();
    if (!known && reduced(s)) {
        auto [m, r] = num_den(s);
        known = mod(r * r + 1, m) == 0;
    }
    if (!known) throw std::invalid_argument("not a Wahl, dual Wahl or Wahl-2 chain");
    Seq x = s, y = s;
    x.front() += 1;
    x.push_back(2);
    y.back() += 1;
    y.insert(y.begin(), Int(2));
    return {x, y};
}

std::vector<std::vector<WahlNode>> wahl_tree(int depth) {
    auto node = [](const Seq& s) {
        WahlSing w = *recognize_wahl(s);
        return WahlNode{s, w, Rat(w.a, w.n), Rat(w.n - w.a, w.n)};
    };
    std::vector<std::vector<WahlNode>> levels;
    levels.push_back({node(Seq{4})});
    for (int d = 1; d <= depth; ++d) {
        std::vector<WahlNode> next;
        for (const auto& p : levels.back()) {
            auto [x, y] = wahl_children(p.chain);
            next.push_back(node(x));
            next.push_back(node(y));
        }
        levels.push_back(std::move(next));
    }
    for (auto& lv : levels)
        for (auto& nd : lv) {
            nd.left.canonicalize();
            nd.right.canonicalize();
        }
    return levels;
}

}  // namespace mm
