#include "oddminor/model.hpp"

#include <algorithm>

#include "oddminor/errors.hpp"

namespace oddminor {

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::NotTree: return "not-tree";
        case ViolationKind::TreeEdgeMonochromatic: return "tree-edge-monochromatic";
        case ViolationKind::MissingMonoCrossEdge: return "missing-mono-cross-edge";
        case ViolationKind::UncoloredVertex: return "uncolored-vertex";
        case ViolationKind::NotSpecial: return "not-special";
    }
    return "?";
}

std::vector<std::pair<int, int>> pattern_edges(const OddModel& m) {
    std::vector<std::pair<int, int>> out;
    int k = int(m.branch_sets.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Side si = m.branch_sets[i].side, sj = m.branch_sets[j].side;
            bool edge;
            switch (m.pattern.kind) {
                case PatternKind::Clique: edge = true; break;
                case PatternKind::Bipartite: edge = si != sj; break;
                case PatternKind::BipartitePlusClique:
                    edge = si != sj || (si == Side::Left && sj == Side::Left);
                    break;
            }
            if (edge) out.emplace_back(i, j);
        }
    return out;
}

namespace {

void check_schema(const Graph& g, const OddModel& m) {
    int left = 0, right = 0;
    for (const BranchSet& b : m.branch_sets) {
        (b.side == Side::Left ? left : right)++;
        if (b.vertices.empty()) throw parse_error("certificate: empty branch set");
        for (int v : b.vertices)
            if (v < 0 || v >= g.n())
                throw parse_error("certificate: vertex " + std::to_string(v) +
                                  " out of range for a " + std::to_string(g.n()) +
                                  "-vertex graph");
        for (auto [u, v] : b.tree_edges)
            if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
                throw parse_error("certificate: tree edge endpoint out of range");
    }
    for (auto [v, c] : m.colors) {
        if (v < 0 || v >= g.n())
            throw parse_error("certificate: colored vertex " + std::to_string(v) +
                              " out of range");
        if (c != 1 && c != 2) throw parse_error("certificate: color must be 1 or 2");
    }
    switch (m.pattern.kind) {
        case PatternKind::Clique:
            if (m.pattern.left < 1 || m.pattern.right != 0)
                throw parse_error("certificate: bad clique pattern");
            if (int(m.branch_sets.size()) != m.pattern.left)
                throw parse_error("certificate: clique pattern size != branch set count");
            break;
        case PatternKind::Bipartite:
        case PatternKind::BipartitePlusClique:
            if (m.pattern.left < 0 || m.pattern.right < 0)
                throw parse_error("certificate: negative pattern side");
            if (left != m.pattern.left || right != m.pattern.right)
                throw parse_error("certificate: side tags do not match the pattern (" +
                                  std::to_string(left) + "/" + std::to_string(right) + " vs " +
                                  std::to_string(m.pattern.left) + "/" +
                                  std::to_string(m.pattern.right) + ")");
            break;
    }
}

std::string set_name(int i) { return "branch set " + std::to_string(i); }

}  // namespace

std::vector<Violation> verify_odd_model(const Graph& g, const OddModel& m, bool require_special) {
    check_schema(g, m);
    std::vector<Violation> out;

    auto color = [&](int v) -> int {
        auto it = m.colors.find(v);
        return it == m.colors.end() ? 0 : it->second;
    };

    // overlap + coloring
    VertexSet seen(g.n());
    for (size_t i = 0; i < m.branch_sets.size(); ++i) {
        for (int v : m.branch_sets[i].vertices) {
            if (seen.test(v))
                out.push_back({ViolationKind::Overlap,
                               "vertex " + std::to_string(v) + " appears in two branch sets"});
            seen.set(v);
            if (color(v) == 0)
                out.push_back({ViolationKind::UncoloredVertex,
                               "vertex " + std::to_string(v) + " of " + set_name(int(i)) +
                                   " has no color"});
        }
    }

    // each branch set spans a tree via host edges
    for (size_t i = 0; i < m.branch_sets.size(); ++i) {
        const BranchSet& b = m.branch_sets[i];
        VertexSet members(g.n());
        for (int v : b.vertices) members.set(v);
        bool tree_ok = int(b.tree_edges.size()) == int(b.vertices.size()) - 1;
        for (auto [u, v] : b.tree_edges) {
            if (!members.test(u) || !members.test(v) || !g.has_edge(u, v)) tree_ok = false;
        }
        if (tree_ok && !b.vertices.empty()) {
            // connectivity over the listed edges
            std::vector<int> parent(g.n(), -1);
            auto find = [&](int v) {
                while (parent[v] >= 0) v = parent[v];
                return v;
            };
            for (auto [u, v] : b.tree_edges) {
                int ru = find(u), rv = find(v);
                if (ru == rv) {
                    tree_ok = false;  // cycle
                    break;
                }
                parent[ru] = rv;
            }
            if (tree_ok) {
                int root = find(b.vertices[0]);
                for (int v : b.vertices)
                    if (find(v) != root) tree_ok = false;
            }
        }
        if (!tree_ok)
            out.push_back({ViolationKind::NotTree,
                           set_name(int(i)) + " edge list is not a spanning tree of the set"});
        for (auto [u, v] : b.tree_edges)
            if (color(u) != 0 && color(u) == color(v))
                out.push_back({ViolationKind::TreeEdgeMonochromatic,
                               "tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " in " + set_name(int(i)) + " is monochromatic"});
    }

    // monochromatic cross edge for every pattern edge
    for (auto [i, j] : pattern_edges(m)) {
        bool found = false;
        for (int u : m.branch_sets[i].vertices) {
            for (int v : m.branch_sets[j].vertices)
                if (g.has_edge(u, v) && color(u) != 0 && color(u) == color(v)) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found)
            out.push_back({ViolationKind::MissingMonoCrossEdge,
                           "no monochromatic host edge between " + set_name(i) + " and " +
                               set_name(j)});
    }

    if (require_special) {
        int want = 0;
        for (const BranchSet& b : m.branch_sets)
            if (b.vertices.size() == 1) {
                int c = color(b.vertices[0]);
                if (c == 0) continue;  // reported as uncolored already
                if (want == 0) want = c;
                if (c != want) {
                    out.push_back({ViolationKind::NotSpecial,
                                   "singleton branch sets carry both colors"});
                    break;
                }
            }
    }
    return out;
}

OddModel normalize_colors(OddModel m) {
    int want = 0;
    for (const BranchSet& b : m.branch_sets)
        if (b.vertices.size() == 1) {
            auto it = m.colors.find(b.vertices[0]);
            int c = it == m.colors.end() ? 0 : it->second;
            if (want == 0) want = c;
            if (c != want) throw precondition_error("normalize_colors: model is not special");
        }
    if (want == 2)
        for (auto& [v, c] : m.colors) c = 3 - c;
    return m;
}

OddModel clique_model_to_bipartite(OddModel m, int l) {
    if (m.pattern.kind != PatternKind::Clique)
        throw precondition_error("clique_model_to_bipartite: pattern is not a clique");
    int k = m.pattern.left;
    if (l < 0 || l > k) throw precondition_error("clique_model_to_bipartite: l out of range");
    for (int i = 0; i < k; ++i) m.branch_sets[i].side = i < l ? Side::Left : Side::Right;
    m.pattern = Pattern::bipartite_plus_clique(l, k - l);
    return m;
}

OddModel transpose_bipartite(OddModel m) {
    if (m.pattern.kind != PatternKind::Bipartite)
        throw precondition_error("transpose_bipartite: pattern has a clique side");
    for (BranchSet& b : m.branch_sets)
        b.side = b.side == Side::Left ? Side::Right : Side::Left;
    m.pattern = Pattern::bipartite(m.pattern.right, m.pattern.left);
    return m;
}

OddModel weaken_pattern(OddModel m) {
    if (m.pattern.kind != PatternKind::BipartitePlusClique)
        throw precondition_error("weaken_pattern: pattern is not K^l-shaped");
    m.pattern.kind = PatternKind::Bipartite;
    return m;
}

}  // namespace oddminor
