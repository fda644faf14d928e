#include "markov_mmp/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "markov_mmp/mmp.hpp"

namespace mm {

namespace {

// Children that grow c: every triple past (1,2,5) has two, (1,1,2) has one.
void children(const Triple& t, const Int& max_c, std::vector<Triple>& out) {
    if (t.c == 1) {
        if (max_c >= 2) out.push_back({1, 1, 2});
        return;
    }
    if (t.b == 1) {
        if (max_c >= 5) out.push_back({1, 2, 5});
        return;
    }
    Triple x = make_triple(t.a, t.c, 3 * t.a * t.c - t.b);
    Triple y = make_triple(t.b, t.c, 3 * t.b * t.c - t.a);
    if (x.c <= max_c) out.push_back(x);
    if (y.c <= max_c) out.push_back(y);
}

}  // namespace

std::vector<Triple> enumerate_tree(const Int& max_c, int jobs) {
    std::vector<Triple> all;
    if (max_c < 1) return all;
    std::vector<Triple> level{{1, 1, 1}};
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        std::vector<std::vector<Triple>> parts(level.size());
        const long n = static_cast<long>(level.size());
        if (jobs <= 1) {
            for (long k = 0; k < n; ++k) children(level[k], max_c, parts[k]);
        } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
            for (long k = 0; k < n; ++k) children(level[k], max_c, parts[k]);
        }
        std::vector<Triple> next;
        for (auto& p : parts) next.insert(next.end(), p.begin(), p.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<FlipRow> flip_scan(const std::vector<Triple>& triples, const Int& check_c, int jobs) {
    std::vector<Triple> work;
    for (const auto& t : triples)
        if (t.c > 1) work.push_back(t);
    std::vector<FlipRow> rows(work.size());
    auto one = [&](std::size_t k) {
        const Triple& t = work[k];
        FlipRow r;
        r.t = t;
        r.nu = nu(t);
        try {
            Trace s = run_surgery(t);
            r.flips = static_cast<int>(s.flips.size());
            r.predicted = predict_flip_count(t);
            r.engines_agree = t.c <= check_c && same_states(s, run_closed_form(t));
        } catch (const std::exception&) {
            r.flips = -1;  // reported by the caller as a failure
        }
        rows[k] = r;
    };
    const long n = static_cast<long>(work.size());
    if (jobs <= 1) {
        for (long k = 0; k < n; ++k) one(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (long k = 0; k < n; ++k) one(k);
    }
    return rows;
}

int jobs_from_env(int fallback) {
    if (const char* s = std::getenv("MARKOV_MMP_JOBS")) {
        try {
            int j = std::stoi(s);
            if (j > 0) return j;
        } catch (...) {
        }
    }
    return fallback;
}

}  // namespace mm
