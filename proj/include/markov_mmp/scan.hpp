#pragma once

#include <vector>

#include "markov.hpp"

namespace mm {

// Level-by-level walk of the Markov tree below max_c, sorted like
// enumerate_triples. jobs <= 1 expands each level serially.
std::vector<Triple> enumerate_tree(const Int& max_c, int jobs = 1);

struct FlipRow {
    Triple t;
    int nu = 0;
    int flips = 0;
    int predicted = 0;
    bool engines_agree = false;  // only filled when cross-checked
};

// Flip counts for every triple (c > 1); cross-checks engines for c <= check_c.
std::vector<FlipRow> flip_scan(const std::vector<Triple>& triples, const Int& check_c, int jobs = 1);

// MARKOV_MMP_JOBS when set, else `fallback`.
int jobs_from_env(int fallback);

}  // namespace mm
