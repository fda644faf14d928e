#pragma once

#include <string>
#include <vector>

#include "cqs.hpp"
#include "markov.hpp"

namespace mm {

enum class Mark { None, Plus, Minus };

struct Item {
    bool curve = false;
    WahlSing sing;  // when !curve
    Int c;          // when curve
    Mark mark = Mark::None;
    bool operator==(const Item& o) const {
        return curve == o.curve && (curve ? (c == o.c && mark == o.mark) : sing == o.sing);
    }
};
using State = std::vector<Item>;

inline Item sing_item(const Int& n, const Int& a) { return {false, {n, n == 1 ? Int(0) : mod(a, n)}, 0, Mark::None}; }
inline Item curve_item(const Int& c, Mark m = Mark::None) { return {true, {}, c, m}; }

struct FlipRecord {
    int step = 0;
    Int delta;
    Frac cqs;
    PRes pres;
};

struct Trace {
    Triple triple;
    std::vector<State> states;  // states[0] initial, states[k] after flip k
    std::vector<FlipRecord> flips;
    int nu = 0;
    int final_m = 0;
    std::vector<std::string> notes;  // wormhole choices, unlisted cases
};

State initial_state(const Triple& t);
// Contracted c.q.s. of the curve at index i (its neighbourhood read left to right).
Frac contract_at(const State& s, std::size_t i);
// Index of the curve carrying Mark::Minus, or -1.
long minus_index(const State& s);

State seed_first_flip(const State& s, const Triple& t, FlipRecord* rec = nullptr, std::vector<std::string>* notes = nullptr);
State step_surgery(const State& s, FlipRecord* rec = nullptr, std::vector<std::string>* notes = nullptr);

Trace run_surgery(const Triple& t);
Trace run_closed_form(const Triple& t);

bool same_states(const Trace& x, const Trace& y);
bool crosscheck(const Triple& t);
int flip_count(const Triple& t);
int predict_flip_count(const Triple& t);
int final_hirzebruch(const Triple& t);

// c.q.s. contracted at the third flip of the branch member (k >= 1).
Frac flip3_cqs(const Triple& member);

enum class Render { Pairs, Chains };
std::string render_state(const State& s, Render mode);
std::string render_trace(const Trace& tr, Render mode);
std::string trace_json(const Trace& tr);
// Parses trace_json output back into a Trace (states and deltas only).
Trace trace_from_json(const std::string& text);

}  // namespace mm
