#include "quiverkit/report.hpp"

#include <json.hpp>

namespace quiverkit {

using ordered_json = nlohmann::ordered_json;

namespace {

// Property order is alphabetical and fixed; serialization and text output
// share it.
constexpr const char* kProps[] = {
    "artinian",          "finite_dim",        "noetherian_left",
    "noetherian_right",  "prime",             "primitive",
    "semiartinian_left", "semiartinian_right", "semiprime",
    "simple",
};

bool get_flag(const ClassificationReport& r, const std::string& name) {
    if (name == "artinian") return r.artinian;
    if (name == "finite_dim") return r.finite_dim;
    if (name == "noetherian_left") return r.noetherian_left;
    if (name == "noetherian_right") return r.noetherian_right;
    if (name == "prime") return r.prime;
    if (name == "primitive") return r.primitive;
    if (name == "semiartinian_left") return r.semiartinian_left;
    if (name == "semiartinian_right") return r.semiartinian_right;
    if (name == "semiprime") return r.semiprime;
    return r.simple;
}

void set_flag(ClassificationReport& r, const std::string& name, bool v) {
    if (name == "artinian") r.artinian = v;
    else if (name == "finite_dim") r.finite_dim = v;
    else if (name == "noetherian_left") r.noetherian_left = v;
    else if (name == "noetherian_right") r.noetherian_right = v;
    else if (name == "prime") r.prime = v;
    else if (name == "primitive") r.primitive = v;
    else if (name == "semiartinian_left") r.semiartinian_left = v;
    else if (name == "semiartinian_right") r.semiartinian_right = v;
    else if (name == "semiprime") r.semiprime = v;
    else if (name == "simple") r.simple = v;
    else throw ParseError("unknown report property '" + name + "'");
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["kind"] = w.kind;
    j["groups"] = ordered_json::array();
    for (const auto& grp : w.groups) j["groups"].push_back(grp);
    return j;
}

Witness witness_from(const ordered_json& j) {
    Witness w;
    w.kind = j.at("kind").get<std::string>();
    for (const auto& grp : j.at("groups"))
        w.groups.push_back(grp.get<std::vector<std::string>>());
    return w;
}

std::string group_text(const std::vector<std::vector<std::string>>& groups) {
    std::string s = "[";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += " | ";
        for (std::size_t k = 0; k < groups[i].size(); ++k) {
            if (k) s += " ";
            s += groups[i][k];
        }
    }
    return s + "]";
}

} // namespace

std::string report_json(const ClassificationReport& r) {
    ordered_json j;
    for (const char* p : kProps) j[p] = get_flag(r, p);
    ordered_json w;
    for (const auto& [name, wit] : r.witnesses) w[name] = witness_json(wit);
    j["witnesses"] = std::move(w);
    return j.dump(2) + "\n";
}

ClassificationReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad report json: ") + e.what());
    }
    ClassificationReport r;
    try {
        for (const char* p : kProps) set_flag(r, p, j.at(p).get<bool>());
        for (const auto& [name, wit] : j.at("witnesses").items())
            r.witnesses[name] = witness_from(wit);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report json: ") + e.what());
    }
    return r;
}

std::string report_text(const ClassificationReport& r) {
    std::string s;
    for (const char* p : kProps)
        s += std::string(p) + ": " + (get_flag(r, p) ? "true" : "false") + "\n";
    for (const auto& [name, wit] : r.witnesses)
        s += "witness " + name + ": " + wit.kind + " " + group_text(wit.groups) + "\n";
    return s;
}

std::string decomposition_text(const Graph& g, const Decomposition& d) {
    std::string s = "decomposition:";
    if (d.components.empty()) return s + " (empty)\n";
    bool first = true;
    for (const auto& c : d.components) {
        s += first ? " " : "; ";
        first = false;
        switch (c.kind) {
            case ComponentKind::SimpleVertex: s += "SimpleVertex"; break;
            case ComponentKind::Cycle:
                s += "Cycle(" + std::to_string(c.cycle_length) + ")";
                break;
            case ComponentKind::Primitive: s += "Primitive"; break;
        }
        s += " {";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) s += " ";
            s += g.vertex_id(c.vertices[i]);
        }
        s += "}";
    }
    return s + "\n";
}

std::string noether_text(const NoetherInvariant& inv, Side side) {
    std::string s = "noether invariant (";
    s += side == Side::Left ? "left" : "right";
    s += "): n0=" + std::to_string(inv.n0) + ", cycles={";
    for (std::size_t i = 0; i < inv.cycle_lengths.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(inv.cycle_lengths[i]);
    }
    return s + "}\n";
}

} // namespace quiverkit
