#pragma once

#include <optional>
#include <vector>

#include "hjcf.hpp"
#include "wahl.hpp"

namespace mm {

struct PRes {
    WahlSing w0;
    Int c;
    WahlSing w1;
    Int delta, Delta, Omega;
    std::size_t i = 0, j = 0;  // 1-based marks in the dual
    bool operator==(const PRes& o) const { return w0 == o.w0 && c == o.c && w1 == o.w1; }
};

// delta of [chain(w0), c, chain(w1)]; the smooth point reads (1,0) on the
// left and (1,1) on the right.
Int pres_delta(const WahlSing& w0, const Int& c, const WahlSing& w1);
// [chain(w0), c, chain(w1)]
Seq pres_chain(const WahlSing& w0, const Int& c, const WahlSing& w1);

std::vector<PRes> find_extremal_presolutions(const Frac& f);
bool is_wormhole(const Frac& f);

// Every mark pair (i < j, 1-based) of s whose double decrement is a zero CF.
std::vector<std::pair<std::size_t, std::size_t>> zero_marks(const Seq& s);

Frac markov_cqs(const Int& c, const Int& zeta);
Frac markov_cqs_reduced(const Int& c, const Int& w);

struct MarkedCF {
    Seq seq;
    std::size_t i = 0, j = 0;  // 1-based
    bool operator==(const MarkedCF&) const = default;
};
// v_0 = 3s - 1 - sum(seq): triangles at the zero vertex.
Int zero_vertex_degree(const MarkedCF& m);
// Erases the triangle at the zero vertex (needs v_0 = 1).
MarkedCF reduce_marked_cf(const MarkedCF& m);
// Repeats the erasure until v_0 != 1, then turns the polygon so the string
// reads [2,2,2, ..., 2,2,2] when such a reading exists.
MarkedCF reduce_fully(const MarkedCF& m);
// delta of the extremal P-resolution encoded by a marked dual.
Int marked_delta(const MarkedCF& m);

// 12 s(q, p) by reciprocity.
Rat dedekind12(const Int& q, const Int& p);
struct DedekindReport {
    Rat reciprocity, via_inverse, closed_form;
    bool ok() const { return reciprocity == via_inverse && reciprocity == closed_form; }
};
DedekindReport dedekind_check(const Int& c, const Int& w);

}  // namespace mm
