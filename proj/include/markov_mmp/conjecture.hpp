#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "markov.hpp"
#include "wahl.hpp"

namespace mm {

enum class Decomp { IV, V, VI };

// One decomposition hit for (m, q). For IV the parts are m0/q0 and m1/q1;
// for V and VI the recovered Wahl singularities (n_i, a_i), smooth = (1, 0).
// `middle` is 4, alpha or 2, at 1-based position `split`.
struct Witness {
    Decomp kind = Decomp::V;
    Int m, q;
    Int n0 = 1, a0 = 0, n1 = 1, a1 = 0;
    Int middle;
    std::size_t split = 0;
};

std::map<Int, Witness> check_IV(const Int& m);
std::map<Int, Witness> check_V(const Int& m);
std::map<Int, Witness> check_VI(const Int& m);

// Weight class {q, m - q} stored as min(q, m - q). IV hits r map to w = 3r mod m.
Int weight_class(const Int& w, const Int& m);
std::set<Int> classes(const std::map<Int, Witness>& hits, Decomp kind, const Int& m);

struct ZeroTenZero {
    std::size_t i = 0, j = 0;  // 1-based, i < j
    Int a, wa, b, wb;
};
std::optional<ZeroTenZero> witness_0_10_0(const Int& m, const Int& q);

// side 1: (a, c, 3ac - b), side 2: (b, c, 3bc - a); needs b > 1.
bool mutation_identity_check(const Triple& t, int side);
// Both sides of the displayed concatenation, for reporting.
std::pair<Seq, Seq> mutation_identity_sides(const Triple& t, int side);

enum CheckMask { CheckIV = 1, CheckV = 2, CheckVI = 4, CheckAll = 7 };

struct ScanRow {
    Int m;
    int checks = CheckAll;
    std::set<Int> iv, v, vi, tree;
    bool consistent() const;
};
struct ScanReport {
    Int max_m;
    std::vector<ScanRow> rows;  // only m with some hit or tree class
    std::vector<std::string> violations;
    int checked = 0;
};

// jobs <= 1 runs the serial reference loop, otherwise an OpenMP loop over m.
ScanReport consistency_scan(const Int& max_m, int checks = CheckAll, int jobs = 1);
std::string scan_json(const ScanReport& r);

}  // namespace mm
