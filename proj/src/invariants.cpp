#include "oddminor/invariants.hpp"

#include <algorithm>
#include <queue>

#include "oddminor/errors.hpp"

namespace oddminor {

bool independence_at_most_two(const Graph& g) {
    // alpha <= 2  <=>  complement triangle-free
    int n = g.n();
    std::vector<VertexSet> nadj(n, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        nadj[v] = VertexSet::full(n) - g.neighbors(v);
        nadj[v].reset(v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = nadj[u].next(u); v >= 0; v = nadj[u].next(v))
            if (nadj[u].intersects(nadj[v])) return false;
    return true;
}

namespace {

// Tomita-style max clique bound/expand over an explicit candidate set.
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    VertexSet best_set;
    bool track_set;

    explicit CliqueSearch(const Graph& g, bool track) : g(g), best_set(g.n()), track_set(track) {}

    void expand(VertexSet cand, VertexSet cur, int sz) {
        if (cand.empty()) {
            if (sz > best) {
                best = sz;
                if (track_set) best_set = cur;
            }
            return;
        }
        // greedy coloring bound; vertices emitted in ascending color
        std::vector<int> order, bound;
        {
            VertexSet uncol = cand;
            int color = 0;
            while (!uncol.empty()) {
                ++color;
                VertexSet cls = uncol;
                while (!cls.empty()) {
                    int v = cls.first();
                    cls.reset(v);
                    cls -= g.neighbors(v);
                    uncol.reset(v);
                    order.push_back(v);
                    bound.push_back(color);
                }
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (sz + bound[i] <= best) return;
            int v = order[i];
            cand.reset(v);
            VertexSet cur2 = cur;
            if (track_set) cur2.set(v);
            expand(cand & g.neighbors(v), cur2, sz + 1);
        }
    }
};

int max_clique_size_within(const Graph& g, const VertexSet& cand) {
    CliqueSearch s(g, false);
    s.expand(cand, VertexSet(g.n()), 0);
    return s.best;
}

}  // namespace

int max_clique_size(const Graph& g) {
    check_size_guard(g.n(), 64, "max_clique");
    return max_clique_size_within(g, VertexSet::full(g.n()));
}

VertexSet max_clique(const Graph& g) {
    check_size_guard(g.n(), 64, "max_clique");
    int target = max_clique_size(g);
    // lexicographically smallest witness: fix smallest feasible vertex, repeat
    VertexSet chosen(g.n());
    VertexSet cand = VertexSet::full(g.n());
    int need = target;
    while (need > 0) {
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            VertexSet rest = cand & g.neighbors(v);
            // clique continues with vertices > v to stay lexicographic
            for (int w = rest.first(); w >= 0 && w < v; w = rest.next(w)) rest.reset(w);
            if (1 + max_clique_size_within(g, rest) >= need) {
                chosen.set(v);
                cand = rest;
                --need;
                break;
            }
        }
    }
    return chosen;
}

int independence_number(const Graph& g) {
    check_size_guard(g.n(), 64, "independence_number");
    if (g.n() == 0) return 0;
    return max_clique_size(complement(g));
}

namespace detail {

std::vector<int> max_matching(const Graph& g) {
    // blossom contraction, O(V^3)
    int n = g.n();
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = g.neighbors(v).first(); to >= 0; to = g.neighbors(v).next(to)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v)
        if (match[v] == -1) {
            int u = find_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    return match;
}

namespace {

struct KColoring {
    const Graph& g;
    int k;
    std::vector<int> colors;
    bool ok = false;

    KColoring(const Graph& g, int k) : g(g), k(k), colors(g.n(), -1) {}

    bool solve(int colored, int max_used) {
        if (colored == g.n()) return true;
        // DSATUR: most saturated, then highest degree, then smallest index
        int pick = -1, psat = -1, pdeg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (colors[v] != -1) continue;
            uint64_t mask = 0;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (colors[u] != -1) mask |= uint64_t(1) << colors[u];
            int sat = __builtin_popcountll(mask);
            int deg = g.degree(v);
            if (sat > psat || (sat == psat && deg > pdeg)) {
                pick = v;
                psat = sat;
                pdeg = deg;
            }
        }
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            bool free = true;
            for (int u = g.neighbors(pick).first(); u >= 0; u = g.neighbors(pick).next(u))
                if (colors[u] == c) {
                    free = false;
                    break;
                }
            if (!free) continue;
            colors[pick] = c;
            if (solve(colored + 1, std::max(max_used, c + 1))) return true;
            colors[pick] = -1;
        }
        return false;
    }
};

}  // namespace

ColoringResult chi_branch_and_bound(const Graph& g) {
    int n = g.n();
    if (n == 0) return {0, {}};
    int lb = max_clique_size(g);
    // greedy upper bound in degree order
    std::vector<int> order(n), greedy(n, -1);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int ub = 0;
    for (int v : order) {
        uint64_t mask = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (greedy[u] != -1) mask |= uint64_t(1) << greedy[u];
        int c = 0;
        while ((mask >> c) & 1) ++c;
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }
    for (int k = lb; k < ub; ++k) {
        KColoring kc(g, k);
        if (kc.solve(0, 0)) return {k, kc.colors};
    }
    return {ub, greedy};
}

}  // namespace detail

ColoringResult chromatic_number(const Graph& g) {
    check_size_guard(g.n(), 40, "chromatic_number");
    int n = g.n();
    if (n == 0) return {0, {}};
    if (!independence_at_most_two(g)) return detail::chi_branch_and_bound(g);
    // alpha <= 2: color classes have at most 2 vertices, so an optimal
    // coloring is exactly a maximum matching of the complement.
    std::vector<int> mate = detail::max_matching(complement(g));
    ColoringResult r;
    r.colors.assign(n, -1);
    int c = 0;
    for (int v = 0; v < n; ++v) {
        if (r.colors[v] != -1) continue;
        r.colors[v] = c;
        if (mate[v] != -1) r.colors[mate[v]] = c;
        ++c;
    }
    r.chi = c;
    return r;
}

namespace {

// Unit-vertex-capacity max flow between nonadjacent s,t, capped at `cap`.
// Nodes 2v (in) / 2v+1 (out).
struct VertexFlow {
    int n;
    std::vector<std::vector<int>> head;  // adjacency into edge array
    std::vector<int> to, capv;

    explicit VertexFlow(const Graph& g) : n(g.n()), head(2 * g.n()) {
        const int INF = 1 << 28;
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add(2 * u + 1, 2 * v, INF);
            add(2 * v + 1, 2 * u, INF);
        }
    }
    void add(int a, int b, int c) {
        head[a].push_back(int(to.size()));
        to.push_back(b);
        capv.push_back(c);
        head[b].push_back(int(to.size()));
        to.push_back(a);
        capv.push_back(0);
    }
    int run(int s, int t, int cap) {
        // s,t are original vertex ids; route s_out -> t_in
        int S = 2 * s + 1, T = 2 * t;
        int flow = 0;
        std::vector<int> pre(2 * n);
        while (flow < cap) {
            std::fill(pre.begin(), pre.end(), -1);
            std::queue<int> q;
            q.push(S);
            pre[S] = -2;
            while (!q.empty() && pre[T] == -1) {
                int v = q.front();
                q.pop();
                for (int e : head[v])
                    if (capv[e] > 0 && pre[to[e]] == -1) {
                        pre[to[e]] = e;
                        q.push(to[e]);
                    }
            }
            if (pre[T] == -1) break;
            for (int v = T; v != S; v = to[pre[v] ^ 1]) {
                capv[pre[v]] -= 1;
                capv[pre[v] ^ 1] += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return std::max(0, n - 1);
    if (connected_components(g).size() > 1) return 0;
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            VertexFlow f(g);
            best = std::min(best, f.run(s, t, best));
        }
    return best;
}

CutCertificate minimum_vertex_cut(const Graph& g) {
    int n = g.n();
    if (!independence_at_most_two(g))
        throw precondition_error("minimum_vertex_cut: alpha(G) > 2");
    if (g.is_complete())
        throw precondition_error("minimum_vertex_cut: complete graph has no vertex cut");

    int k = vertex_connectivity(g);
    VertexSet cut(n);
    if (k > 0) {
        // lexicographically least minimum cut, grown greedily: vertex v joins
        // the cut iff some minimum cut extends the current prefix plus v.
        int taken = 0;
        for (int v = 0; v < n && taken < k; ++v) {
            VertexSet trial = cut;
            trial.set(v);
            InducedSubgraph h = induced_subgraph(g, VertexSet::full(n) - trial);
            bool feasible;
            if (taken + 1 == k) {
                feasible = connected_components(h.graph).size() >= 2;
            } else {
                feasible = !h.graph.is_complete() &&
                           vertex_connectivity(h.graph) <= k - taken - 1;
            }
            if (feasible) {
                cut = trial;
                ++taken;
            }
        }
        if (taken != k)
            throw contradiction_error("minimum_vertex_cut: greedy cut construction failed",
                                      encode_graph6(g));
    }

    auto comps = components_within(g, VertexSet::full(n) - cut);
    if (comps.size() != 2)
        throw contradiction_error("minimum_vertex_cut: G\\X has " +
                                      std::to_string(comps.size()) + " components, expected 2",
                                  encode_graph6(g));
    for (const auto& c : comps) {
        InducedSubgraph h = induced_subgraph(g, c);
        if (!h.graph.is_complete())
            throw contradiction_error("minimum_vertex_cut: component is not a clique",
                                      encode_graph6(g));
    }

    VertexSet l0 = comps[0], r0 = comps[1];
    VertexSet only_l(n), only_r(n), both(n);
    cut.for_each([&](int x) {
        bool cl = (g.neighbors(x) & l0).count() == l0.count();
        bool cr = (g.neighbors(x) & r0).count() == r0.count();
        if (cl && cr)
            both.set(x);
        else if (cl)
            only_l.set(x);
        else if (cr)
            only_r.set(x);
        else
            throw contradiction_error(
                "minimum_vertex_cut: cut vertex complete to neither component", encode_graph6(g));
    });
    // both-complete vertices go with the heavier side, then sides are
    // swapped if needed so |left|+|cut_left| >= |right|+|cut_right|
    CutCertificate cert;
    cert.cut = cut;
    bool both_to_l = l0.count() + only_l.count() >= r0.count() + only_r.count();
    VertexSet xl = both_to_l ? (only_l | both) : only_l;
    VertexSet xr = both_to_l ? only_r : (only_r | both);
    if (l0.count() + xl.count() >= r0.count() + xr.count()) {
        cert.left = l0;
        cert.right = r0;
        cert.cut_left = xl;
        cert.cut_right = xr;
    } else {
        cert.left = r0;
        cert.right = l0;
        cert.cut_left = xr;
        cert.cut_right = xl;
    }
    return cert;
}

}  // namespace oddminor
