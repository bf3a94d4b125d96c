// Deliberately naive odd-model checker used to audit the real verifier.
// Written straight from the definition with its own data walk: adjacency
// matrix, set<int> branch sets, explicit spanning-tree DFS.  Shares no code
// with verify_odd_model.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oddminor/graph.hpp"
#include "oddminor/model.hpp"

namespace naive {

// Violated aspects of the definition, by the same kind names the real
// verifier uses.  Structural nonsense (out-of-range vertex, side counts not
// matching the pattern) comes back as "schema".
inline std::set<std::string> check(const oddminor::Graph& g, const oddminor::OddModel& m,
                                   bool require_special) {
    using oddminor::PatternKind;
    using oddminor::Side;
    std::set<std::string> bad;

    const int n = g.n();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) adj[u][v] = true;

    int lefts = 0, rights = 0;
    std::vector<std::set<int>> sets;
    for (const auto& bs : m.branch_sets) {
        (bs.side == Side::Left ? lefts : rights)++;
        std::set<int> s(bs.vertices.begin(), bs.vertices.end());
        if (s.empty() || s.size() != bs.vertices.size()) return {"schema"};
        for (int v : s)
            if (v < 0 || v >= n) return {"schema"};
        for (auto [u, v] : bs.tree_edges)
            if (u < 0 || u >= n || v < 0 || v >= n) return {"schema"};
        sets.push_back(std::move(s));
    }
    if (m.pattern.kind == PatternKind::Clique) {
        if (lefts + rights != m.pattern.left) return {"schema"};
    } else if (lefts != m.pattern.left || rights != m.pattern.right) {
        return {"schema"};
    }
    for (auto [v, c] : m.colors)
        if (v < 0 || v >= n || (c != 1 && c != 2)) return {"schema"};

    // disjointness
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            for (int v : sets[i])
                if (sets[j].count(v)) bad.insert("overlap");

    // every used vertex colored
    auto color = [&](int v) {
        auto it = m.colors.find(v);
        return it == m.colors.end() ? 0 : it->second;
    };
    for (const auto& s : sets)
        for (int v : s)
            if (color(v) == 0) bad.insert("uncolored-vertex");

    // each listed edge set is a spanning tree of its branch set using host
    // edges, and every tree edge is bichromatic
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto& bs = m.branch_sets[i];
        const auto& s = sets[i];
        bool tree_ok = bs.tree_edges.size() + 1 == s.size();
        for (auto [u, v] : bs.tree_edges) {
            if (!s.count(u) || !s.count(v) || u == v || !adj[u][v]) tree_ok = false;
            if (color(u) != 0 && color(v) != 0 && color(u) == color(v))
                bad.insert("tree-edge-monochromatic");
        }
        if (tree_ok && s.size() > 1) {
            // reachability over the listed edges only
            std::set<int> seen{*s.begin()};
            bool grew = true;
            while (grew) {
                grew = false;
                for (auto [u, v] : bs.tree_edges) {
                    if (seen.count(u) && !seen.count(v)) seen.insert(v), grew = true;
                    if (seen.count(v) && !seen.count(u)) seen.insert(u), grew = true;
                }
            }
            if (seen.size() != s.size()) tree_ok = false;
        }
        if (!tree_ok) bad.insert("not-tree");
    }

    // every pattern edge needs a monochromatic host edge between its sets
    auto is_pattern_edge = [&](size_t i, size_t j) {
        if (m.pattern.kind == PatternKind::Clique) return true;
        bool cross = m.branch_sets[i].side != m.branch_sets[j].side;
        if (m.pattern.kind == PatternKind::Bipartite) return cross;
        return cross || (m.branch_sets[i].side == Side::Left &&
                         m.branch_sets[j].side == Side::Left);
    };
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            if (!is_pattern_edge(i, j)) continue;
            bool found = false;
            for (int u : sets[i])
                for (int v : sets[j])
                    if (adj[u][v] && color(u) != 0 && color(u) == color(v)) found = true;
            if (!found) bad.insert("missing-mono-cross-edge");
        }

    if (require_special) {
        std::set<int> singleton_colors;
        for (const auto& s : sets)
            if (s.size() == 1) singleton_colors.insert(color(*s.begin()));
        singleton_colors.erase(0);
        if (singleton_colors.size() > 1) bad.insert("not-special");
    }
    return bad;
}

}  // namespace naive
