// markov-mmp: command line front end.
// Exit codes: 0 ok, 1 verification failure, 2 usage error or bad input.
#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <queue>
#include <set>

#include "markov_mmp/conjecture.hpp"
#include "markov_mmp/mmp.hpp"
#include "markov_mmp/mori.hpp"
#include "markov_mmp/scan.hpp"

using namespace mm;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string show(const Seq& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s[k].get_str();
    return out + "]";
}

std::string show(const WahlSing& w) {
    return w.smooth() ? "[]" : "[" + w.n.get_str() + "," + w.a.get_str() + "]";
}

std::string show(const PRes& p) {
    return show(p.w0) + "-" + p.c.get_str() + "-" + show(p.w1) + " delta=" + p.delta.get_str();
}

Frac read_frac(const std::string& d, const std::string& o) {
    Frac f{parse_int(d), parse_int(o)};
    if (!valid_frac(f)) throw UsageError("need 0 < omega < delta with gcd 1");
    return f;
}

Triple read_triple(const std::vector<std::string>& v) {
    if (v.size() != 3) throw UsageError("expected three integers");
    Int a = parse_int(v[0]), b = parse_int(v[1]), c = parse_int(v[2]);
    if (a < 1 || b < 1 || c < 1 || !is_markov(a, b, c)) throw UsageError("not a Markov triple");
    return make_triple(a, b, c);
}

// Triple with largest coordinate c, if c is a Markov number.
std::optional<Triple> triple_of(const Int& c) {
    for (const auto& t : enumerate_triples(c))
        if (t.c == c) return t;
    return std::nullopt;
}

int cmd_hj(const std::vector<std::string>& args, bool eval) {
    if (eval) {
        Seq s;
        for (const auto& a : args) s.push_back(parse_int(a));
        auto v = evaluate(s);
        if (!v) throw UsageError("sequence does not evaluate");
        std::cout << v->get_str() << "\n";
        return 0;
    }
    if (args.size() != 2) throw UsageError("hj M Q");
    Frac f = read_frac(args[0], args[1]);
    std::cout << "expansion: " << show(expand(f)) << "\n";
    std::cout << "dual: " << show(dual(f)) << "\n";
    std::cout << "inverse: " << f.delta.get_str() << "/" << inverse_den(f).get_str() << "\n";
    return 0;
}

int cmd_wahl(const std::vector<std::string>& args, bool recog) {
    if (recog) {
        Seq s;
        for (const auto& a : args) s.push_back(parse_int(a));
        if (auto w = recognize_wahl(s)) {
            std::cout << "wahl " << show(*w) << "\n";
            return 0;
        }
        if (auto d = recognize_dual_wahl(s)) {
            std::cout << "dual wahl " << show(d->first) << " at " << d->second << "\n";
            return 0;
        }
        std::cout << "not a Wahl or dual Wahl chain\n";
        return 1;
    }
    if (args.size() != 2) throw UsageError("wahl N A");
    Int n = parse_int(args[0]), a = parse_int(args[1]);
    if (n < 2 || a < 1 || a >= n || gcd(n, a) != 1) throw UsageError("need 0 < a < n coprime");
    std::cout << "chain: " << show(wahl_chain({n, a})) << "\n";
    std::cout << "dual: " << show(dual_wahl_chain({n, a})) << "\n";
    return 0;
}

int cmd_weights(const std::vector<std::string>& args) {
    Triple t = read_triple(args);
    auto w = weights(t);
    std::cout << "triple " << t.str() << "\n";
    std::cout << "r: " << w.ra << " " << w.rb << " " << w.rc << "\n";
    std::cout << "w: " << w.wa << " " << w.wb << " " << w.wc << "\n";
    std::cout << "nu " << nu(t) << "\n";
    return weight_identities_hold(t, w) ? 0 : 1;
}

int cmd_trace(const std::vector<std::string>& args, const std::string& engine, const std::string& render, const std::string& format) {
    Triple t = read_triple(args);
    if (t.c == 1) throw UsageError("(1,1,1) has no singular points");
    Trace tr = engine == "surgery" ? run_surgery(t) : run_closed_form(t);
    int rc = 0;
    if (engine == "both" && !same_states(tr, run_surgery(t))) {
        std::cerr << "engines disagree on " << t.str() << "\n";
        rc = 1;
    }
    for (const auto& n : tr.notes) std::cerr << "note: " << n << "\n";
    if (format == "json")
        std::cout << trace_json(tr) << "\n";
    else
        std::cout << render_trace(tr, render == "chains" ? Render::Chains : Render::Pairs);
    if (static_cast<int>(tr.flips.size()) > 6 * tr.nu + 3) rc = 1;
    return rc;
}

void print_train(const MoriTrain& tr) {
    std::cout << "cqs 1/" << tr.cqs.delta << "(1," << tr.cqs.omega << ") delta=" << tr.delta << "\n";
    for (const auto& w : tr.wagons) {
        std::cout << "  " << show(w.chain) << " " << show(w.sing);
        if (w.mark) std::cout << " mark " << w.mark;
        std::cout << "\n";
    }
}

int cmd_train(const std::string& d, const std::string& o, const std::vector<std::string>& wahl, int wagons) {
    if (!wahl.empty()) {
        if (wahl.size() != 2) throw UsageError("--wahl n a");
        Int n = parse_int(wahl[0]), a = parse_int(wahl[1]);
        if (n < 2 || a < 1 || a >= n || gcd(n, a) != 1) throw UsageError("need 0 < a < n coprime");
        print_train(mori_train(WahlSing{n, a}, wagons));
        return 0;
    }
    if (d.empty() || o.empty()) throw UsageError("train needs --delta and --omega, or --wahl");
    auto ps = find_extremal_presolutions(read_frac(d, o));
    if (ps.empty()) {
        std::cout << "no extremal P-resolution\n";
        return 0;
    }
    for (const auto& p : ps) {
        std::cout << show(p) << "\n";
        for (int side : {0, 1}) {
            std::cout << (side ? "right" : "left") << " train\n";
            print_train(mori_train(p, side, wagons));
        }
    }
    return 0;
}

int cmd_pres(const std::string& d, const std::string& o) {
    Frac f = read_frac(d, o);
    auto ps = find_extremal_presolutions(f);
    std::cout << "expansion " << show(expand(f)) << "\n";
    for (const auto& p : ps) std::cout << show(p) << " chain " << show(pres_chain(p.w0, p.c, p.w1)) << "\n";
    if (ps.empty()) std::cout << "no extremal P-resolution\n";
    if (ps.size() > 1) std::cout << "wormhole\n";
    return 0;
}

int cmd_markov_cqs(const std::string& cs, const std::string& zs, bool reduced) {
    Int c = parse_int(cs);
    if (c < 2) throw UsageError("need a Markov number c >= 2");
    auto t = triple_of(c);
    if (!t) throw UsageError(c.get_str() + " is not a Markov number");
    Int z = zs.empty() ? weights(*t).wc : parse_int(zs);
    Frac f = reduced ? markov_cqs_reduced(c, z) : markov_cqs(c, z);
    std::cout << "1/" << f.delta << "(1," << f.omega << ")\n";
    std::cout << "expansion " << show(expand(f)) << "\n";
    for (const auto& p : find_extremal_presolutions(f)) std::cout << show(p) << "\n";
    return 0;
}

void emit_tree(const std::vector<Triple>& nodes, const std::set<std::pair<std::size_t, std::size_t>>& edges, const std::string& emit) {
    auto label = [](const Triple& t) { return "(" + t.a.get_str() + "," + t.b.get_str() + "," + t.c.get_str() + ")"; };
    if (emit == "text") {
        for (const auto& t : nodes) std::cout << label(t) << "\n";
        return;
    }
    if (emit == "dot") {
        std::cout << "graph markov {\n";
        for (std::size_t k = 0; k < nodes.size(); ++k) std::cout << "  n" << k << " [label=\"" << label(nodes[k]) << "\"];\n";
        for (auto [x, y] : edges) std::cout << "  n" << x << " -- n" << y << ";\n";
        std::cout << "}\n";
        return;
    }
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& t : nodes) j["nodes"].push_back({t.a.get_str(), t.b.get_str(), t.c.get_str()});
    j["edges"] = nlohmann::json::array();
    for (auto [x, y] : edges) j["edges"].push_back({x, y});
    std::cout << j.dump(2) << "\n";
}

int cmd_tree(const std::string& max_c, int depth, const std::string& emit) {
    std::map<Triple, int> level{{Triple{1, 1, 1}, 0}};
    std::queue<Triple> todo;
    todo.push({1, 1, 1});
    Int cap = max_c.empty() ? Int(0) : parse_int(max_c);
    if (max_c.empty() && depth < 0) throw UsageError("tree needs --max-c or --depth");
    while (!todo.empty()) {
        Triple t = todo.front();
        todo.pop();
        int d = level[t];
        if (depth >= 0 && d >= depth) continue;
        for (int pos = 0; pos < 3; ++pos) {
            Triple u = mutate(t, pos);
            if (!max_c.empty() && u.c > cap) continue;
            if (level.emplace(u, d + 1).second) todo.push(u);
        }
    }
    std::vector<Triple> nodes;
    for (const auto& [t, d] : level) nodes.push_back(t);
    std::map<Triple, std::size_t> index;
    for (std::size_t k = 0; k < nodes.size(); ++k) index[nodes[k]] = k;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (int pos = 0; pos < 3; ++pos) {
            auto it = index.find(mutate(nodes[k], pos));
            if (it != index.end() && it->second != k) edges.insert({std::min(k, it->second), std::max(k, it->second)});
        }
    emit_tree(nodes, edges, emit);
    return 0;
}

int cmd_uniqueness(const std::string& max_c) {
    auto counts = uniqueness_scan(parse_int(max_c));
    int bad = 0;
    for (const auto& [c, n] : counts)
        if (n > 1) {
            std::cout << c << " is the largest entry of " << n << " triples\n";
            ++bad;
        }
    std::cout << counts.size() << " Markov numbers up to " << max_c << ", " << bad << " repeated\n";
    return bad ? 1 : 0;
}

int cmd_conjecture(const std::string& max_m, const std::string& check, int jobs, const std::string& out) {
    static const std::map<std::string, int> masks{{"iv", CheckIV}, {"v", CheckV}, {"vi", CheckVI}, {"all", CheckAll}};
    auto rep = consistency_scan(parse_int(max_m), masks.at(check), jobs_from_env(jobs));
    int inconsistent = 0;
    for (const auto& row : rep.rows) inconsistent += !row.consistent();
    for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
    std::cout << "checked m <= " << max_m << ": " << rep.rows.size() << " rows, " << inconsistent << " inconsistent, " << rep.violations.size()
              << " violations\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        f << scan_json(rep) << "\n";
    }
    return inconsistent || !rep.violations.empty() ? 1 : 0;
}

int cmd_verify(const char* argv0, const std::string& path) {
    std::filesystem::path exe = path.empty() ? std::filesystem::path(argv0).parent_path() / "acceptance" : std::filesystem::path(path);
    if (!std::filesystem::exists(exe)) throw UsageError("acceptance binary not found at " + exe.string());
    std::cout.flush();
    pid_t pid = fork();
    if (pid == 0) {
        execl(exe.c_str(), exe.c_str(), static_cast<char*>(nullptr));
        _exit(2);
    }
    int status = 0;
    waitpid(pid, &status, 0);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov triples, Wahl chains and explicit MMP traces"};
    app.require_subcommand(1);

    std::vector<std::string> pos;
    bool flag = false, reduced = false;
    std::string engine = "closed", render = "pairs", format = "text";
    std::string delta, omega, c, zeta, max_c, emit = "text", max_m, check = "all", out, acc;
    std::vector<std::string> wahl_args;
    int wagons = 4, depth = -1, jobs = 1;

    auto* hj = app.add_subcommand("hj", "HJ expansion of M/Q, or evaluate with --eval");
    hj->add_option("args", pos)->required();
    hj->add_flag("--eval", flag, "evaluate the given sequence");

    auto* wa = app.add_subcommand("wahl", "Wahl and dual Wahl chains of (n, a)");
    wa->add_option("args", pos)->required();
    wa->add_flag("--recognize", flag, "recognize a chain given as entries");

    auto* we = app.add_subcommand("weights", "weights of a Markov triple");
    we->add_option("triple", pos)->required()->expected(3);

    auto* tr = app.add_subcommand("trace", "explicit MMP of a Markov triple");
    tr->add_option("triple", pos)->required()->expected(3);
    tr->add_option("--engine", engine)->check(CLI::IsMember({"closed", "surgery", "both"}));
    tr->add_option("--render", render)->check(CLI::IsMember({"pairs", "chains"}));
    tr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* tn = app.add_subcommand("train", "Mori trains");
    tn->add_option("--delta", delta);
    tn->add_option("--omega", omega);
    tn->add_option("--wagons", wagons)->check(CLI::Range(1, 1000));
    tn->add_option("--wahl", wahl_args)->expected(2);

    auto* pr = app.add_subcommand("pres", "extremal P-resolutions of 1/D(1,O)");
    pr->add_option("--delta", delta)->required();
    pr->add_option("--omega", omega)->required();

    auto* mc = app.add_subcommand("markov-cqs", "the c.q.s. attached to a Markov number");
    mc->add_option("--c", c)->required();
    mc->add_option("--zeta", zeta, "weight, default w_c of the triple");
    mc->add_flag("--reduced", reduced);

    auto* te = app.add_subcommand("tree", "Markov tree export");
    te->add_option("--max-c", max_c);
    te->add_option("--depth", depth);
    te->add_option("--emit", emit)->check(CLI::IsMember({"dot", "json", "text"}));

    auto* un = app.add_subcommand("uniqueness", "largest-entry uniqueness up to a bound");
    un->add_option("--max-c", max_c)->required();

    auto* cj = app.add_subcommand("conjecture", "consistency scan of the IV/V/VI decompositions");
    cj->add_option("--max-m", max_m)->required();
    cj->add_option("--check", check)->check(CLI::IsMember({"iv", "v", "vi", "all"}));
    cj->add_option("--jobs", jobs)->check(CLI::Range(1, 1024));
    cj->add_option("--out", out);

    auto* ve = app.add_subcommand("verify", "run the acceptance suite");
    ve->add_option("--acceptance", acc, "path to the acceptance binary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*hj) return cmd_hj(pos, flag);
        if (*wa) return cmd_wahl(pos, flag);
        if (*we) return cmd_weights(pos);
        if (*tr) return cmd_trace(pos, engine, render, format);
        if (*tn) return cmd_train(delta, omega, wahl_args, wagons);
        if (*pr) return cmd_pres(delta, omega);
        if (*mc) return cmd_markov_cqs(c, zeta, reduced);
        if (*te) return cmd_tree(max_c, depth, emit);
        if (*un) return cmd_uniqueness(max_c);
        if (*cj) return cmd_conjecture(max_m, check, jobs, out);
        if (*ve) return cmd_verify(argv[0], acc);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
