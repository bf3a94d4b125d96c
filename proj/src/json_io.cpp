#include "oddminor/json_io.hpp"

#include "oddminor/errors.hpp"

namespace oddminor {

using nlohmann::json;

json pattern_to_json(const Pattern& p) {
    switch (p.kind) {
        case PatternKind::Clique: return {{"kind", "clique"}, {"size", p.left}};
        case PatternKind::Bipartite:
            return {{"kind", "bipartite"}, {"left", p.left}, {"right", p.right}};
        case PatternKind::BipartitePlusClique:
            return {{"kind", "bipartite_plus_clique"}, {"left", p.left}, {"right", p.right}};
    }
    return {};
}

Pattern pattern_from_json(const json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "clique") return Pattern::clique(j.at("size").get<int>());
        if (kind == "bipartite")
            return Pattern::bipartite(j.at("left").get<int>(), j.at("right").get<int>());
        if (kind == "bipartite_plus_clique")
            return Pattern::bipartite_plus_clique(j.at("left").get<int>(),
                                                  j.at("right").get<int>());
        throw parse_error("certificate: unknown pattern kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate: bad pattern: ") + e.what());
    }
}

json model_to_json(const OddModel& m, const ConstructionTrace* trace) {
    json sets = json::array();
    for (const BranchSet& b : m.branch_sets) {
        json edges = json::array();
        for (auto [u, v] : b.tree_edges) edges.push_back(json::array({u, v}));
        sets.push_back({{"side", b.side == Side::Left ? "left" : "right"},
                        {"vertices", b.vertices},
                        {"tree_edges", edges}});
    }
    json colors = json::object();
    for (auto [v, c] : m.colors) colors[std::to_string(v)] = c;
    json out = {{"pattern", pattern_to_json(m.pattern)},
                {"branch_sets", sets},
                {"colors", colors}};
    if (trace) {
        json t = json::array();
        for (const TraceStep& s : *trace) t.push_back({{"rule", s.rule}, {"detail", s.detail}});
        out["trace"] = t;
    }
    return out;
}

OddModel model_from_json(const json& j) {
    OddModel m;
    try {
        m.pattern = pattern_from_json(j.at("pattern"));
        for (const json& bj : j.at("branch_sets")) {
            BranchSet b;
            std::string side = bj.at("side").get<std::string>();
            if (side == "left")
                b.side = Side::Left;
            else if (side == "right")
                b.side = Side::Right;
            else
                throw parse_error("certificate: side must be left or right");
            b.vertices = bj.at("vertices").get<std::vector<int>>();
            for (const json& ej : bj.at("tree_edges")) {
                if (!ej.is_array() || ej.size() != 2)
                    throw parse_error("certificate: tree edge must be a pair");
                b.tree_edges.emplace_back(ej[0].get<int>(), ej[1].get<int>());
            }
            m.branch_sets.push_back(std::move(b));
        }
        for (auto& [k, v] : j.at("colors").items()) m.colors[std::stoi(k)] = v.get<int>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate: schema mismatch: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw parse_error("certificate: color keys must be vertex indices");
    }
    return m;
}

json violations_to_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const Violation& v : vs)
        out.push_back({{"kind", violation_kind_name(v.kind)}, {"detail", v.detail}});
    return out;
}

}  // namespace oddminor
