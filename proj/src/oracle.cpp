#include "oddminor/oracle.hpp"

#include <algorithm>
#include <random>

#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

struct BruteSearch {
    const Graph& g;
    Pattern pattern;
    bool require_special;
    int n;
    std::vector<uint32_t> adj;        // adjacency masks
    std::vector<uint32_t> subsets;    // connected subsets, ascending mask order
    std::vector<uint32_t> nbr;        // union of neighbors over subset
    std::vector<int> left_picks, right_picks;  // indices into subsets
    std::optional<OddModel> found;

    BruteSearch(const Graph& g, const Pattern& p, bool special)
        : g(g), pattern(p), require_special(special), n(g.n()), adj(g.n(), 0) {
        for (int v = 0; v < n; ++v)
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                adj[v] |= uint32_t(1) << u;
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask)
            if (connected(mask)) {
                subsets.push_back(mask);
                uint32_t nb = 0;
                for (uint32_t m = mask; m; m &= m - 1) nb |= adj[__builtin_ctz(m)];
                nbr.push_back(nb & ~mask);
            }
    }

    bool connected(uint32_t mask) const {
        uint32_t comp = mask & (~mask + 1);  // lowest bit
        for (;;) {
            uint32_t grow = comp;
            for (uint32_t m = comp; m; m &= m - 1) grow |= adj[__builtin_ctz(m)] & mask;
            if (grow == comp) break;
            comp = grow;
        }
        return comp == mask;
    }

    bool needs_edge(int i, int j) const {
        bool li = i < pattern.left, lj = j < pattern.left;
        switch (pattern.kind) {
            case PatternKind::Clique: return true;
            case PatternKind::Bipartite: return li != lj;
            case PatternKind::BipartitePlusClique: return li != lj || (li && lj);
        }
        return true;
    }

    // picks are concatenated left then right
    int pick_at(int i) const {
        return i < int(left_picks.size()) ? left_picks[i]
                                          : right_picks[i - left_picks.size()];
    }

    void choose(int left_need, int right_need, uint32_t used) {
        if (found) return;
        if (left_need == 0 && right_need == 0) {
            try_colorings();
            return;
        }
        bool for_left = left_need > 0;
        std::vector<int>& picks = for_left ? left_picks : right_picks;
        size_t from = picks.empty() ? 0 : picks.back() + 1;
        int placed_before = int(left_picks.size() + right_picks.size());
        for (size_t s = from; s < subsets.size() && !found; ++s) {
            uint32_t mask = subsets[s];
            if (mask & used) continue;
            // adjacency feasibility against already placed sets
            int idx_new = for_left ? int(left_picks.size())
                                   : pattern.left + int(right_picks.size());
            bool ok = true;
            for (int i = 0; i < placed_before && ok; ++i) {
                int which = i < int(left_picks.size()) ? i : pattern.left + (i - int(left_picks.size()));
                if (needs_edge(std::min(which, idx_new), std::max(which, idx_new)) &&
                    !(nbr[pick_at(i)] & mask))
                    ok = false;
            }
            if (!ok) continue;
            picks.push_back(int(s));
            choose(left_need - (for_left ? 1 : 0), right_need - (for_left ? 0 : 1), used | mask);
            picks.pop_back();
        }
    }

    void try_colorings() {
        int total = pattern.size();
        std::vector<uint32_t> sets(total);
        for (int i = 0; i < total; ++i) sets[i] = subsets[pick_at(i)];
        uint32_t used = 0;
        for (uint32_t s : sets) used |= s;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((used >> v) & 1) verts.push_back(v);
        int u = int(verts.size());

        for (uint32_t bits = 0; bits < (uint32_t(1) << (u - 1)); ++bits) {
            // verts[0] pinned to color 1 (global swap symmetry)
            uint32_t color2 = 0;
            for (int i = 1; i < u; ++i)
                if ((bits >> (i - 1)) & 1) color2 |= uint32_t(1) << verts[i];

            if (require_special) {
                int want = 0;
                bool ok = true;
                for (uint32_t s : sets)
                    if (__builtin_popcount(s) == 1) {
                        int c = (color2 & s) ? 2 : 1;
                        if (want == 0) want = c;
                        if (c != want) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) continue;
            }

            // every branch set spans via bichromatic edges
            bool ok = true;
            for (uint32_t s : sets) {
                uint32_t comp = s & (~s + 1);
                for (;;) {
                    uint32_t grow = comp;
                    for (uint32_t m = comp; m; m &= m - 1) {
                        int v = __builtin_ctz(m);
                        uint32_t other = ((color2 >> v) & 1) ? ~color2 : color2;
                        grow |= adj[v] & s & other;
                    }
                    if (grow == comp) break;
                    comp = grow;
                }
                if (comp != s) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            // monochromatic cross edge for each pattern edge
            for (int i = 0; i < pattern.size() && ok; ++i)
                for (int j = i + 1; j < pattern.size() && ok; ++j) {
                    if (!needs_edge(i, j)) continue;
                    bool mono = false;
                    for (uint32_t m = sets[i]; m && !mono; m &= m - 1) {
                        int v = __builtin_ctz(m);
                        uint32_t same = ((color2 >> v) & 1) ? color2 : ~color2;
                        if (adj[v] & sets[j] & same) mono = true;
                    }
                    if (!mono) ok = false;
                }
            if (!ok) continue;

            build_model(sets, color2);
            return;
        }
    }

    void build_model(const std::vector<uint32_t>& sets, uint32_t color2) {
        OddModel m;
        m.pattern = pattern;
        for (int i = 0; i < pattern.size(); ++i) {
            BranchSet b;
            b.side = i < pattern.left ? Side::Left : Side::Right;
            if (pattern.kind == PatternKind::Clique) b.side = Side::Left;
            uint32_t s = sets[i];
            for (uint32_t mm = s; mm; mm &= mm - 1) b.vertices.push_back(__builtin_ctz(mm));
            // BFS spanning tree over bichromatic edges
            uint32_t seen = s & (~s + 1);
            std::vector<int> queue{__builtin_ctz(s)};
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                uint32_t other = ((color2 >> v) & 1) ? ~color2 : color2;
                uint32_t next = adj[v] & s & other & ~seen;
                for (uint32_t mm = next; mm; mm &= mm - 1) {
                    int w = __builtin_ctz(mm);
                    b.tree_edges.emplace_back(v, w);
                    seen |= uint32_t(1) << w;
                    queue.push_back(w);
                }
            }
            for (int v : b.vertices) m.colors[v] = ((color2 >> v) & 1) ? 2 : 1;
            m.branch_sets.push_back(std::move(b));
        }
        found = std::move(m);
    }
};

}  // namespace

std::optional<OddModel> brute_force_odd_model(const Graph& g, const Pattern& p,
                                              bool require_special) {
    check_size_guard(g.n(), 9, "brute_force_odd_model");
    if (p.size() > g.n() || p.size() < 1)
        throw precondition_error("brute_force_odd_model: pattern size must be in 1..n");
    if (p.kind == PatternKind::Clique && p.left < 1)
        throw precondition_error("brute_force_odd_model: empty clique pattern");
    BruteSearch search(g, p, require_special);
    if (p.kind == PatternKind::Clique)
        search.choose(p.left, 0, 0);
    else
        search.choose(p.left, p.right, 0);
    if (search.found) {
        auto violations = verify_odd_model(g, *search.found, require_special);
        if (!violations.empty())
            throw contradiction_error("brute_force_odd_model: internal model failed verification",
                                      encode_graph6(g));
    }
    return search.found;
}

namespace {

void enumerate_rec(int n, const std::vector<std::pair<int, int>>& pairs, size_t idx,
                   std::vector<uint32_t>& cadj, const std::function<void(const Graph&)>& yield) {
    if (idx == pairs.size()) {
        Graph g(n);
        for (auto [u, v] : pairs)
            if (!((cadj[u] >> v) & 1)) g.add_edge(u, v);
        yield(g);
        return;
    }
    auto [u, v] = pairs[idx];
    enumerate_rec(n, pairs, idx + 1, cadj, yield);  // non-edge in the complement
    if (!(cadj[u] & cadj[v])) {                     // no triangle closed
        cadj[u] |= uint32_t(1) << v;
        cadj[v] |= uint32_t(1) << u;
        enumerate_rec(n, pairs, idx + 1, cadj, yield);
        cadj[u] &= ~(uint32_t(1) << v);
        cadj[v] &= ~(uint32_t(1) << u);
    }
}

}  // namespace

void enumerate_alpha2_graphs(int n, const std::function<void(const Graph&)>& yield) {
    check_size_guard(n, 8, "enumerate_alpha2_graphs");
    if (n < 1) throw precondition_error("enumerate_alpha2_graphs: n must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<uint32_t> cadj(n, 0);
    enumerate_rec(n, pairs, 0, cadj, yield);
}

Graph random_alpha2_graph(int n, uint64_t seed) {
    if (n < 1) throw precondition_error("random_alpha2_graph: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    // maximal triangle-free graph by insertion with rejection
    std::vector<VertexSet> cadj(n, VertexSet(n));
    for (auto [u, v] : pairs)
        if (!cadj[u].intersects(cadj[v])) {
            cadj[u].set(v);
            cadj[v].set(u);
        }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!cadj[u].test(v)) g.add_edge(u, v);
    return g;
}

}  // namespace oddminor
