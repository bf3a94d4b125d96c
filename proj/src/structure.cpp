#include "oddminor/structure.hpp"

#include <algorithm>

#include "oddminor/errors.hpp"

namespace oddminor {

bool is_induced_p3(const Graph& g, const P3& p) {
    if (p.end_a == p.mid || p.mid == p.end_b || p.end_a == p.end_b) return false;
    return g.has_edge(p.end_a, p.mid) && g.has_edge(p.mid, p.end_b) &&
           !g.has_edge(p.end_a, p.end_b);
}

MatchingOrViolator saturating_matching(const Graph& g, const VertexSet& a, const VertexSet& r) {
    if (a.intersects(r)) throw precondition_error("saturating_matching: sides intersect");
    int n = g.n();
    std::vector<int> mate_of_r(n, -1);  // r vertex -> matched a vertex

    // Kuhn augmenting path from a0; `seen_r` records R vertices reached.
    std::vector<char> seen(n);
    auto augment = [&](auto&& self, int av) -> bool {
        VertexSet nb = g.neighbors(av) & r;
        for (int rv = nb.first(); rv >= 0; rv = nb.next(rv)) {
            if (seen[rv]) continue;
            seen[rv] = 1;
            if (mate_of_r[rv] == -1 || self(self, mate_of_r[rv])) {
                mate_of_r[rv] = av;
                return true;
            }
        }
        return false;
    };

    for (int av = a.first(); av >= 0; av = a.next(av)) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(augment, av)) {
            // Hall violator: av plus every A vertex whose mate was reached.
            MatchingOrViolator out;
            out.violator = VertexSet(n);
            out.violator.set(av);
            for (int rv = 0; rv < n; ++rv)
                if (seen[rv] && mate_of_r[rv] != -1) out.violator.set(mate_of_r[rv]);
            return out;
        }
    }
    MatchingOrViolator out;
    out.saturated = true;
    for (int rv = 0; rv < n; ++rv)
        if (mate_of_r[rv] != -1) out.matching.emplace_back(mate_of_r[rv], rv);
    std::sort(out.matching.begin(), out.matching.end());
    return out;
}

namespace {

std::vector<P3> p3_candidates(const Graph& g, const VertexSet& forbidden) {
    std::vector<P3> out;
    int n = g.n();
    VertexSet allowed = VertexSet::full(n) - forbidden;
    for (int mid = allowed.first(); mid >= 0; mid = allowed.next(mid)) {
        VertexSet nb = g.neighbors(mid) & allowed;
        for (int a = nb.first(); a >= 0; a = nb.next(a))
            for (int b = nb.next(a); b >= 0; b = nb.next(b))
                if (!g.has_edge(a, b)) out.push_back({a, mid, b});
    }
    return out;
}

bool pack_rec(const std::vector<P3>& cand, size_t from, int need, VertexSet& used,
              std::vector<P3>& acc) {
    if (need == 0) return true;
    for (size_t i = from; i < cand.size(); ++i) {
        if (cand.size() - i < size_t(need)) break;
        const P3& p = cand[i];
        if (used.test(p.end_a) || used.test(p.mid) || used.test(p.end_b)) continue;
        used.set(p.end_a);
        used.set(p.mid);
        used.set(p.end_b);
        acc.push_back(p);
        if (pack_rec(cand, i + 1, need - 1, used, acc)) return true;
        acc.pop_back();
        used.reset(p.end_a);
        used.reset(p.mid);
        used.reset(p.end_b);
    }
    return false;
}

}  // namespace

std::optional<P3Packing> find_p3_packing(const Graph& g, int k, const VertexSet& forbidden) {
    if (k < 0) throw precondition_error("find_p3_packing: negative k");
    P3Packing packing;
    if (k == 0) return packing;
    if (3 * k > g.n() - forbidden.count()) return std::nullopt;
    auto cand = p3_candidates(g, forbidden);
    VertexSet used(g.n());
    if (pack_rec(cand, 0, k, used, packing.paths)) return packing;
    return std::nullopt;
}

int free_closed_neighborhood_size(const Graph& g, int v, const P3Packing& packing) {
    VertexSet closed = g.neighbors(v);
    closed.set(v);
    return (closed - packing.vertices(g.n())).count();
}

P3Packing improve_packing_near_vertex(const Graph& g, int v, P3Packing packing) {
    int n = g.n();
    VertexSet closed_nb = g.neighbors(v);
    closed_nb.set(v);
    VertexSet mv = VertexSet::full(n) - closed_nb;  // M(v)

    for (int iter = 0; iter <= n; ++iter) {
        VertexSet pv = packing.vertices(n);
        if (pv.test(v)) throw precondition_error("improve_packing_near_vertex: v in packing");
        VertexSet b = VertexSet::full(n) - pv;
        b.reset(v);
        VertexSet x_set = b & mv;
        if (x_set.count() <= 1) return packing;

        // Find a packed path lying entirely inside N(v); Claim-4 pigeonhole
        // says one exists while |X| >= 2.
        int pi = -1;
        for (size_t i = 0; i < packing.paths.size(); ++i) {
            const P3& p = packing.paths[i];
            if (g.neighbors(v).test(p.end_a) && g.neighbors(v).test(p.mid) &&
                g.neighbors(v).test(p.end_b)) {
                pi = int(i);
                break;
            }
        }
        if (pi == -1)
            throw contradiction_error(
                "improve_packing_near_vertex: |X| >= 2 but no packed path inside N(v)",
                encode_graph6(g));

        int x = x_set.first();
        P3 p = packing.paths[pi];
        int a1 = p.end_a, a2 = p.mid, a3 = p.end_b;
        // x is adjacent to an end (alpha = 2 forbids {a1, a3, x} independent)
        if (!g.has_edge(a1, x)) std::swap(a1, a3);
        if (!g.has_edge(a1, x))
            throw contradiction_error(
                "improve_packing_near_vertex: x nonadjacent to both path ends (alpha > 2?)",
                encode_graph6(g));
        P3 repl;
        if (g.has_edge(a3, x))
            repl = {std::min(a3, a1), x, std::max(a3, a1)};  // a3-x-a1
        else if (!g.has_edge(a2, x))
            repl = {std::min(a2, x), a1, std::max(a2, x)};  // a2-a1-x
        else
            repl = {std::min(a3, x), a2, std::max(a3, x)};  // a3-a2-x
        if (!is_induced_p3(g, repl))
            throw contradiction_error("improve_packing_near_vertex: exchange produced a non-P3",
                                      encode_graph6(g));
        int before = free_closed_neighborhood_size(g, v, packing);
        packing.paths[pi] = repl;
        if (free_closed_neighborhood_size(g, v, packing) <= before)
            throw contradiction_error(
                "improve_packing_near_vertex: exchange did not grow |N[v] \\ V(P)|",
                encode_graph6(g));
    }
    throw contradiction_error("improve_packing_near_vertex: exchange loop exceeded n iterations",
                              encode_graph6(g));
}

}  // namespace oddminor
