#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cqs.hpp"

namespace mm {

// Two Wahl singularities joined by a (-1)-curve, read left to right.
struct K2A {
    WahlSing s0, s1;
};

// One Wahl singularity whose chain meets the (-1)-curve at entry `mark` (1-based).
struct K1A {
    WahlSing s;
    std::size_t mark = 0;
};

struct K2AData {
    Int delta, Delta, Omega;
};

enum class Kind { Flip, Divisorial };

// Replaces a-values by n - a where needed so that delta and Delta are positive.
K2A normalize(const K2A& k);
K2AData k2a_invariants(const K2A& k);
// Value of [chain0, 1, chain1] after blow-downs.
Frac k2a_contraction(const K2A& k);

Frac k1a_to_cqs(const K1A& k);
Int k1a_delta(const K1A& k);

Kind classify(const K2A& k);
Kind classify(const K1A& k);

// The P-resolution the flip produces, in the reading order of the input.
PRes flip(const K2A& k);
PRes flip(const K1A& k);

WahlSing divisorial_target(const K2A& k);
WahlSing divisorial_target(const K1A& k);

// Starting at an initial k2A (delta*n1 - n0 <= 0) emits
// ((n(i+1), a(i+1)), (n(i), a(i))) for i = 0, 1, ... while n stays positive.
std::vector<K2A> mori_sequence(const K2A& initial, int count);

struct Wagon {
    Seq chain;
    WahlSing sing;
    std::size_t mark = 0;  // 0 on the first wagon
};
struct MoriTrain {
    Frac cqs;
    Int delta;
    std::vector<Wagon> wagons;
};

// side 0 follows w0 of the P-resolution, side 1 follows w1.
MoriTrain mori_train(const PRes& p, int side, int count = 8);
// Divisorial train of the Wahl singularity (delta, a).
MoriTrain mori_train(const WahlSing& seed, int count = 8);

// Mark where decrementing gives the c.q.s. (up to Omega <-> Omega^-1).
std::optional<std::size_t> find_mark(const Seq& chain, const Frac& f);

// Whether n occurs as n(i), i >= 1, in a train of the pair (x, y).
bool train_hits(const Int& x, const Int& y, const Int& delta, const Int& n);

}  // namespace mm
