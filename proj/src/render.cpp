#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "markov_mmp/mmp.hpp"

namespace mm {

namespace {

std::string item_text(const Item& it, Render mode) {
    if (it.curve) {
        std::string s = "(" + it.c.get_str() + ")";
        if (it.mark == Mark::Plus) s += "+";
        if (it.mark == Mark::Minus) s += "-";
        return s;
    }
    if (mode == Render::Pairs) return "[" + it.sing.n.get_str() + "," + it.sing.a.get_str() + "]";
    std::string s = "[";
    Seq ch = chain(it.sing);
    for (std::size_t k = 0; k < ch.size(); ++k) s += (k ? ", " : "") + ch[k].get_str();
    return s + "]";
}

const char* mark_name(Mark m) {
    switch (m) {
        case Mark::Plus: return "plus";
        case Mark::Minus: return "minus";
        default: return "none";
    }
}

Mark mark_from(const std::string& s) {
    if (s == "plus") return Mark::Plus;
    if (s == "minus") return Mark::Minus;
    if (s == "none") return Mark::None;
    throw std::invalid_argument("bad mark " + s);
}

nlohmann::json state_json(const State& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& it : s) {
        if (it.curve)
            a.push_back({{"curve", it.c.get_si()}, {"mark", mark_name(it.mark)}});
        else
            a.push_back({{"sing", {it.sing.n.get_str(), it.sing.a.get_str()}}});
    }
    return a;
}

State state_from(const nlohmann::json& a) {
    State s;
    for (const auto& x : a) {
        if (x.contains("curve")) {
            const auto& c = x.at("curve");
            Int v = c.is_string() ? parse_int(c.get<std::string>()) : Int(c.get<long>());
            s.push_back(curve_item(v, mark_from(x.value("mark", "none"))));
        } else {
            const auto& p = x.at("sing");
            s.push_back(sing_item(parse_int(p.at(0).get<std::string>()), parse_int(p.at(1).get<std::string>())));
        }
    }
    return s;
}

}  // namespace

std::string render_state(const State& s, Render mode) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += "-";
        out += item_text(s[k], mode);
    }
    return out;
}

std::string render_trace(const Trace& tr, Render mode) {
    std::ostringstream os;
    if (!tr.states.empty()) os << render_state(tr.states[0], mode) << "\n";
    for (std::size_t k = 0; k < tr.flips.size(); ++k) {
        os << "Flip " << k + 1 << ": delta=" << tr.flips[k].delta.get_str() << "\n";
        if (k + 1 < tr.states.size()) os << render_state(tr.states[k + 1], mode) << "\n";
    }
    return os.str();
}

std::string trace_json(const Trace& tr) {
    nlohmann::json j;
    j["triple"] = {tr.triple.a.get_str(), tr.triple.b.get_str(), tr.triple.c.get_str()};
    j["nu"] = tr.nu;
    j["final_hirzebruch"] = tr.final_m;
    j["initial"] = tr.states.empty() ? nlohmann::json::array() : state_json(tr.states[0]);
    j["flips"] = nlohmann::json::array();
    for (std::size_t k = 0; k < tr.flips.size(); ++k) {
        const auto& f = tr.flips[k];
        nlohmann::json x;
        x["step"] = k + 1;
        x["delta"] = f.delta.get_str();
        x["cqs"] = {{"Delta", f.cqs.delta.get_str()}, {"Omega", f.cqs.omega.get_str()}};
        x["state"] = k + 1 < tr.states.size() ? state_json(tr.states[k + 1]) : nlohmann::json::array();
        j["flips"].push_back(x);
    }
    if (!tr.notes.empty()) j["notes"] = tr.notes;
    return j.dump(2);
}

Trace trace_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Trace tr;
    const auto& t = j.at("triple");
    tr.triple = make_triple(parse_int(t.at(0).get<std::string>()), parse_int(t.at(1).get<std::string>()),
                            parse_int(t.at(2).get<std::string>()));
    tr.nu = j.value("nu", 0);
    tr.final_m = j.value("final_hirzebruch", 0);
    tr.states.push_back(j.contains("initial") ? state_from(j.at("initial")) : State{});
    for (const auto& x : j.at("flips")) {
        FlipRecord f;
        f.step = x.value("step", 0);
        f.delta = parse_int(x.at("delta").get<std::string>());
        if (x.contains("cqs"))
            f.cqs = {parse_int(x["cqs"].at("Delta").get<std::string>()), parse_int(x["cqs"].at("Omega").get<std::string>())};
        tr.flips.push_back(f);
        tr.states.push_back(state_from(x.at("state")));
    }
    if (j.contains("notes")) tr.notes = j["notes"].get<std::vector<std::string>>();
    return tr;
}

}  // namespace mm
