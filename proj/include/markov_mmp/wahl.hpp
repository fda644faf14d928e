#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hjcf.hpp"

namespace mm {

// (n, a) names 1/n^2 (1, na-1). (1, 0) is the smooth point.
struct WahlSing {
    Int n = 1, a = 0;
    bool smooth() const { return n == 1; }
    bool operator==(const WahlSing&) const = default;
};

inline WahlSing smooth_point() { return {1, 0}; }

// Same singularity read from the other end.
inline WahlSing reverse(const WahlSing& w) { return w.smooth() ? w : WahlSing{w.n, w.n - w.a}; }

struct Wahl2 {
    Int m, r, f;
    bool operator==(const Wahl2&) const = default;
};

// Empty for the smooth point (used when splicing).
Seq chain(const WahlSing& w);
Seq wahl_chain(const WahlSing& w);  // rejects the smooth point
std::optional<WahlSing> recognize_wahl(const Seq& s);

// [e1+1, ..., er, 2] first, then [2, e1, ..., er+1].
std::pair<Seq, Seq> wahl_children(const Seq& s);

Seq dual_wahl_chain(const WahlSing& w);
std::optional<std::pair<WahlSing, std::size_t>> recognize_dual_wahl(const Seq& s);

bool valid_wahl2(const Wahl2& t);
Seq wahl2_chain(const Wahl2& t);
std::pair<Wahl2, Wahl2> wahl2_children(const Wahl2& t);

struct WahlNode {
    Seq chain;
    WahlSing sing;
    Rat left, right;  // Farey pair (a/n, (n-a)/n)
};
// levels[d] holds the 2^d nodes at depth d, children in rule order.
std::vector<std::vector<WahlNode>> wahl_tree(int depth);

}  // namespace mm
