#pragma once

#include <map>
#include <string>
#include <vector>

#include "hjcf.hpp"

namespace mm {

struct Triple {
    Int a, b, c;  // sorted a <= b <= c
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple& o) const {
        if (auto x = cmp(c, o.c); x != 0) return x <=> 0;
        if (auto x = cmp(b, o.b); x != 0) return x <=> 0;
        return cmp(a, o.a) <=> 0;
    }
    std::string str() const;
};

Triple make_triple(Int x, Int y, Int z);  // sorts
bool is_markov(const Int& a, const Int& b, const Int& c);
inline bool is_markov(const Triple& t) { return is_markov(t.a, t.b, t.c); }

// pos 0, 1, 2 picks a, b, c of the sorted triple.
Triple mutate(const Triple& t, int pos);

// Values for the sorted triple: r_c = a^-1 b, w_c = 3 a^-1 b (mod c),
// r_a = b^-1 c, r_b = c^-1 a and likewise for w. Coordinates equal to 1 get 0.
struct TripleWeights {
    Int ra, rb, rc, wa, wb, wc;
};
TripleWeights weights(const Triple& t);
// min(r, x - r): the orientation where r/x < 1/2.
inline Int normalized(const Int& r, const Int& x) { return 2 * r < x ? r : x - r; }
// Checks x + w_x = 3 r_x, r_x^2 = -1 and the three linear identities.
bool weight_identities_hold(const Triple& t, const TripleWeights& w);

// side 1: (a, c, 3ac-b), side 2: (b, c, 3bc-a). For (1,1,1) the Fibonacci
// branch, for (1,1,2) the Pell branch (side ignored).
std::vector<Triple> branch(const Triple& t, int side, int count);

// Position of t on its branch: t = (L, m_k, m_{k+1}); seed is the k = 0 member.
struct BranchPos {
    Int label;
    int k = 0;
    std::vector<Int> m;  // m_{-1}, m_0, ..., m_{k+1}
    Triple seed;
};
BranchPos branch_position(const Triple& t);

Triple descend(const Triple& t);
int nu(const Triple& t);

std::vector<Triple> enumerate_triples(const Int& max_c);
std::map<Int, int> uniqueness_scan(const Int& max_c);

bool check_markovrc(const Triple& t);
// [chain(a, ra), 4, chain(b, rb)] read as c / rc.
Frac markovrc_concat(const Int& a, const Int& ra, const Int& b, const Int& rb);

// Cohn words over A = [chain(a, ra), 4], B = [chain(a, ra), 3]. A path letter
// 'L' maps (X, Y) to (X, XY), 'R' to (XY, Y); the word is XY.
Seq cohn_word(const Int& a, const Int& ra, const std::string& path);

// Weight limit along a branch with fixed smallest coordinate. tol is exact.
bool weight_limit_check(const Triple& seed, int k_max, const Rat& tol);

bool verify_presolution_remark(const Triple& t);

}  // namespace mm
