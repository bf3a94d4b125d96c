#include "oddminor/construct.hpp"

#include <algorithm>

#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

int ceil_half(int n) { return (n + 1) / 2; }

void push(ConstructionTrace* t, const std::string& rule, const std::string& detail) {
    if (t) t->push_back({rule, detail});
}

void assert_verified(const Graph& g, const OddModel& m, bool special, const char* who) {
    auto violations = verify_odd_model(g, m, special);
    if (!violations.empty())
        throw contradiction_error(std::string(who) + ": constructed model failed verification (" +
                                      violation_kind_name(violations.front().kind) + ": " +
                                      violations.front().detail + ")",
                                  encode_graph6(g));
}

BranchSet singleton(int v, Side side = Side::Left) {
    BranchSet b;
    b.side = side;
    b.vertices = {v};
    return b;
}

BranchSet path_set(const P3& p, Side side = Side::Left) {
    BranchSet b;
    b.side = side;
    b.vertices = {p.end_a, p.mid, p.end_b};
    b.tree_edges = {{p.end_a, p.mid}, {p.mid, p.end_b}};
    return b;
}

// Drop colors of vertices no longer in any branch set.
void prune_colors(OddModel& m) {
    std::map<int, int> kept;
    for (const BranchSet& b : m.branch_sets)
        for (int v : b.vertices) {
            auto it = m.colors.find(v);
            if (it != m.colors.end()) kept[v] = it->second;
        }
    m.colors = std::move(kept);
}

}  // namespace

OddModel relabel_model(const OddModel& m, const std::vector<int>& new_to_old) {
    OddModel out;
    out.pattern = m.pattern;
    for (const BranchSet& b : m.branch_sets) {
        BranchSet nb;
        nb.side = b.side;
        for (int v : b.vertices) nb.vertices.push_back(new_to_old.at(v));
        for (auto [u, v] : b.tree_edges)
            nb.tree_edges.emplace_back(new_to_old.at(u), new_to_old.at(v));
        out.branch_sets.push_back(std::move(nb));
    }
    for (auto [v, c] : m.colors) out.colors[new_to_old.at(v)] = c;
    return out;
}

OddModel odd_clique_from_cut(const Graph& g, ConstructionTrace* trace) {
    int n = g.n();
    if (n == 0) throw precondition_error("odd_clique_from_cut: empty graph");
    if (!independence_at_most_two(g))
        throw precondition_error("odd_clique_from_cut: alpha(G) > 2");
    int ch = ceil_half(n);
    if (vertex_connectivity(g) >= ch)
        throw precondition_error("odd_clique_from_cut: G is ceil(n/2)-connected");

    push(trace, "cut-clique", "kappa < ceil(n/2) = " + std::to_string(ch));

    OddModel m;
    if (n == 1) {
        m.pattern = Pattern::clique(1);
        m.branch_sets.push_back(singleton(0));
        m.colors[0] = 1;
        assert_verified(g, m, true, "odd_clique_from_cut");
        return m;
    }

    CutCertificate cert = minimum_vertex_cut(g);
    std::vector<int> xl = cert.cut_left.to_vector();
    int msize = std::min(int(xl.size()), cert.right.count());
    VertexSet a(n);
    for (int i = 0; i < msize; ++i) a.set(xl[i]);

    MatchingOrViolator mv = saturating_matching(g, a, cert.right);
    if (!mv.saturated) {
        std::string s;
        mv.violator.for_each([&](int v) { s += std::to_string(v) + " "; });
        throw contradiction_error(
            "odd_clique_from_cut: Hall violator {" + s + "} inside a minimum cut", encode_graph6(g));
    }

    cert.left.for_each([&](int v) {
        m.branch_sets.push_back(singleton(v));
        m.colors[v] = 1;
    });
    for (auto [x, r] : mv.matching) {
        BranchSet b;
        b.vertices = {x, r};
        b.tree_edges = {{x, r}};
        m.branch_sets.push_back(std::move(b));
        m.colors[x] = 1;
        m.colors[r] = 2;
    }
    m.pattern = Pattern::clique(int(m.branch_sets.size()));
    if (m.pattern.left < ch)
        throw contradiction_error("odd_clique_from_cut: model size " +
                                      std::to_string(m.pattern.left) + " < ceil(n/2)",
                                  encode_graph6(g));
    assert_verified(g, m, true, "odd_clique_from_cut");
    return m;
}

OddModel odd_clique_via_clique_and_paths(const Graph& g, ConstructionTrace* trace) {
    int n = g.n();
    if (!independence_at_most_two(g))
        throw precondition_error("odd_clique_via_clique_and_paths: alpha(G) > 2");
    if (n % 2 == 0) throw precondition_error("odd_clique_via_clique_and_paths: n must be odd");
    int ch = ceil_half(n);
    int omega = max_clique_size(g);
    if (4 * omega < n + 3)
        throw precondition_error("odd_clique_via_clique_and_paths: omega < (n+3)/4");
    if (vertex_connectivity(g) < ch)
        throw precondition_error("odd_clique_via_clique_and_paths: kappa < ceil(n/2)");

    VertexSet clique = max_clique(g);
    int use = std::min(omega, ch);
    int paths_needed = ch - use;
    push(trace, "big-clique",
         "omega = " + std::to_string(omega) + ", paths = " + std::to_string(paths_needed));

    auto pack = find_p3_packing(g, paths_needed, clique);
    if (!pack)
        throw contradiction_error("odd_clique_via_clique_and_paths: no P3 packing of size " +
                                      std::to_string(paths_needed) + " outside the clique",
                                  encode_graph6(g));

    OddModel m;
    std::vector<int> kverts = clique.to_vector();
    for (int i = 0; i < use; ++i) {
        m.branch_sets.push_back(singleton(kverts[i]));
        m.colors[kverts[i]] = 1;
    }
    for (const P3& p : pack->paths) {
        m.branch_sets.push_back(path_set(p));
        m.colors[p.end_a] = 1;
        m.colors[p.end_b] = 1;
        m.colors[p.mid] = 2;
    }
    m.pattern = Pattern::clique(ch);
    assert_verified(g, m, true, "odd_clique_via_clique_and_paths");
    return m;
}

namespace {

// keep `count` branch sets of a clique model, singletons before larger sets
OddModel truncate_clique_model(OddModel m, int count) {
    std::vector<BranchSet> keep;
    for (const BranchSet& b : m.branch_sets)
        if (b.vertices.size() == 1 && int(keep.size()) < count) keep.push_back(b);
    for (const BranchSet& b : m.branch_sets)
        if (b.vertices.size() > 1 && int(keep.size()) < count) keep.push_back(b);
    m.branch_sets = std::move(keep);
    m.pattern = Pattern::clique(count);
    prune_colors(m);
    return m;
}

}  // namespace

OddModel special_model_half_order(const Graph& g, int l, ConstructionTrace* trace) {
    int n = g.n();
    int ch = ceil_half(n);
    if (l < 1) throw precondition_error("special_model_half_order: l must be >= 1");
    if (2 * l > ch) throw precondition_error("special_model_half_order: 2l > ceil(n/2)");
    if (!independence_at_most_two(g))
        throw precondition_error("special_model_half_order: alpha(G) > 2");

    if (g.is_complete()) {
        // recursion below can strip the last non-edge; ceil(n/2) singletons do
        push(trace, "complete", "");
        OddModel m;
        m.pattern = Pattern::bipartite_plus_clique(l, ch - l);
        for (int v = 0; v < ch; ++v) {
            m.branch_sets.push_back(singleton(v, v < l ? Side::Left : Side::Right));
            m.colors[v] = 1;
        }
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }

    if (n % 2 == 0) {
        push(trace, "parity-delete", "delete vertex 0");
        VertexSet keep = VertexSet::full(n);
        keep.reset(0);
        InducedSubgraph sub = induced_subgraph(g, keep);
        OddModel m = relabel_model(special_model_half_order(sub.graph, l, trace), sub.new_to_old);
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }

    if (vertex_connectivity(g) < ch) {
        OddModel m = odd_clique_from_cut(g, trace);
        m = truncate_clique_model(std::move(m), ch);
        m = clique_model_to_bipartite(std::move(m), l);
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }

    if (4 * max_clique_size(g) >= n + 3) {
        OddModel m = clique_model_to_bipartite(odd_clique_via_clique_and_paths(g, trace), l);
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }

    if (n >= 4 * l + 1) {
        push(trace, "packing", std::to_string(l) + " disjoint induced P3s");
        auto pack = find_p3_packing(g, l, VertexSet(n));
        if (!pack)
            throw contradiction_error("special_model_half_order: guaranteed P3 packing of size " +
                                          std::to_string(l) + " not found",
                                      encode_graph6(g));
        OddModel m;
        m.pattern = Pattern::bipartite_plus_clique(l, ch - l);
        for (const P3& p : pack->paths) {
            m.branch_sets.push_back(path_set(p, Side::Left));
            m.colors[p.end_a] = 2;
            m.colors[p.end_b] = 2;
            m.colors[p.mid] = 1;
        }
        VertexSet leftover = VertexSet::full(n) - pack->vertices(n);
        int want = ch - l;
        for (int v = leftover.first(); v >= 0 && want > 0; v = leftover.next(v), --want) {
            m.branch_sets.push_back(singleton(v, Side::Right));
            m.colors[v] = 2;
        }
        if (want > 0)
            throw contradiction_error("special_model_half_order: not enough leftover vertices",
                                      encode_graph6(g));
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }

    // n = 4l - 1
    for (int v = 0; v < n; ++v) {
        VertexSet forbidden(n);
        forbidden.set(v);
        auto pack = find_p3_packing(g, l - 1, forbidden);
        if (!pack) continue;
        push(trace, "terminal", "v = " + std::to_string(v));
        P3Packing improved = improve_packing_near_vertex(g, v, *pack);

        VertexSet b = VertexSet::full(n) - improved.vertices(n);
        b.reset(v);
        VertexSet y = b & g.neighbors(v);
        VertexSet x = b - g.neighbors(v);
        if (x.count() > 1)
            throw contradiction_error("special_model_half_order: |X| > 1 after improvement",
                                      encode_graph6(g));
        if (y.count() < l)
            throw contradiction_error("special_model_half_order: |Y| < l in terminal case",
                                      encode_graph6(g));

        OddModel m;
        m.pattern = Pattern::bipartite_plus_clique(l, ch - l);
        for (const P3& p : improved.paths) {
            m.branch_sets.push_back(path_set(p, Side::Left));
            m.colors[p.end_a] = 2;
            m.colors[p.end_b] = 2;
            m.colors[p.mid] = 1;
        }
        m.branch_sets.push_back(singleton(v, Side::Left));
        m.colors[v] = 2;
        int want = l;
        for (int u = y.first(); u >= 0 && want > 0; u = y.next(u), --want) {
            m.branch_sets.push_back(singleton(u, Side::Right));
            m.colors[u] = 2;
        }
        assert_verified(g, m, true, "special_model_half_order");
        return m;
    }
    throw contradiction_error(
        "special_model_half_order: no vertex admits an (l-1)-packing in the terminal case",
        encode_graph6(g));
}

std::vector<VertexSet> anti_components(const Graph& g) {
    return connected_components(complement(g));
}

CriticalReduction critical_reduction(const Graph& g) {
    CriticalReduction out;
    out.graph = g;
    out.new_to_old.resize(g.n());
    for (int v = 0; v < g.n(); ++v) out.new_to_old[v] = v;
    if (g.n() == 0) return out;
    int chi = chromatic_number(g).chi;
    bool again = true;
    while (again) {
        again = false;
        for (int v = 0; v < out.graph.n(); ++v) {
            VertexSet keep = VertexSet::full(out.graph.n());
            keep.reset(v);
            InducedSubgraph sub = induced_subgraph(out.graph, keep);
            if (chromatic_number(sub.graph).chi == chi) {
                out.removed.push_back(out.new_to_old[v]);
                std::vector<int> remap(sub.graph.n());
                for (int w = 0; w < sub.graph.n(); ++w)
                    remap[w] = out.new_to_old[sub.new_to_old[w]];
                out.new_to_old = std::move(remap);
                out.graph = sub.graph;
                again = true;
                break;
            }
        }
    }
    return out;
}

OddModel compose_join_models(const Graph& g, const OddModel& m1, const OddModel& m2,
                             const VertexSet& v1, const VertexSet& v2) {
    if (v1.intersects(v2)) throw precondition_error("compose_join_models: parts intersect");
    for (int a = v1.first(); a >= 0; a = v1.next(a))
        if ((g.neighbors(a) & v2).count() != v2.count())
            throw precondition_error("compose_join_models: V1 is not complete to V2");

    auto check_part = [&](const OddModel& m, const VertexSet& part, const char* name) {
        if (m.pattern.kind != PatternKind::Bipartite)
            throw precondition_error(std::string("compose_join_models: ") + name +
                                     " is not a plain bipartite model");
        for (const BranchSet& b : m.branch_sets) {
            for (int v : b.vertices)
                if (!part.test(v))
                    throw precondition_error(std::string("compose_join_models: ") + name +
                                             " leaves its part");
            if (b.vertices.size() == 1) {
                auto it = m.colors.find(b.vertices[0]);
                if (it == m.colors.end() || it->second != 1)
                    throw precondition_error(std::string("compose_join_models: ") + name +
                                             " is not normalized special (singleton color 1)");
            }
        }
        if (!verify_odd_model(g, m, true).empty())
            throw precondition_error(std::string("compose_join_models: ") + name +
                                     " does not verify");
    };
    check_part(m1, v1, "m1");
    check_part(m2, v2, "m2");

    OddModel out;
    out.pattern =
        Pattern::bipartite(m1.pattern.left + m2.pattern.left, m1.pattern.right + m2.pattern.right);
    out.branch_sets = m1.branch_sets;
    out.branch_sets.insert(out.branch_sets.end(), m2.branch_sets.begin(), m2.branch_sets.end());
    out.colors = m1.colors;
    out.colors.insert(m2.colors.begin(), m2.colors.end());
    assert_verified(g, out, true, "compose_join_models");
    return out;
}

OddModel special_bipartite_model(const Graph& g, int l, ConstructionTrace* trace) {
    if (!independence_at_most_two(g))
        throw precondition_error("special_bipartite_model: alpha(G) > 2");
    int chi = chromatic_number(g).chi;
    if (l < 1 || l >= chi)
        throw precondition_error("special_bipartite_model: need 1 <= l < chi(G) = " +
                                 std::to_string(chi));

    if (g.is_complete()) {
        push(trace, "complete", "chi = n = " + std::to_string(chi));
        OddModel m;
        m.pattern = Pattern::bipartite(l, chi - l);
        for (int v = 0; v < g.n(); ++v) {
            m.branch_sets.push_back(singleton(v, v < l ? Side::Left : Side::Right));
            m.colors[v] = 1;
        }
        assert_verified(g, m, true, "special_bipartite_model");
        return m;
    }

    if (l == 1) {
        // Delta >= chi - 1 always, so a max-degree star carries K_{1,chi-1}
        int center = 0;
        for (int v = 1; v < g.n(); ++v)
            if (g.degree(v) > g.degree(center)) center = v;
        if (g.degree(center) < chi - 1)
            throw contradiction_error("special_bipartite_model: Delta < chi - 1",
                                      encode_graph6(g));
        push(trace, "star", "center " + std::to_string(center));
        OddModel m;
        m.pattern = Pattern::bipartite(1, chi - 1);
        m.branch_sets.push_back(singleton(center, Side::Left));
        m.colors[center] = 1;
        int want = chi - 1;
        for (int u = g.neighbors(center).first(); u >= 0 && want > 0;
             u = g.neighbors(center).next(u), --want) {
            m.branch_sets.push_back(singleton(u, Side::Right));
            m.colors[u] = 1;
        }
        assert_verified(g, m, true, "special_bipartite_model");
        return m;
    }

    CriticalReduction red = critical_reduction(g);
    const Graph& h = red.graph;
    if (!red.removed.empty())
        push(trace, "reduce", std::to_string(red.removed.size()) + " vertices removed");

    auto lift_and_check = [&](const OddModel& mh) {
        OddModel m = relabel_model(mh, red.new_to_old);
        assert_verified(g, m, true, "special_bipartite_model");
        return m;
    };

    std::vector<VertexSet> anti = anti_components(h);
    if (anti.size() >= 2) {
        VertexSet part1 = anti[0];
        VertexSet part2(h.n());
        for (size_t i = 1; i < anti.size(); ++i) part2 |= anti[i];
        InducedSubgraph s1 = induced_subgraph(h, part1);
        InducedSubgraph s2 = induced_subgraph(h, part2);
        int chi1 = chromatic_number(s1.graph).chi;
        int chi2 = chromatic_number(s2.graph).chi;
        if (chi1 + chi2 != chi)
            throw contradiction_error("special_bipartite_model: chi not additive over the join",
                                      encode_graph6(g));

        // split l = l1 + l2, preferring both parts interior (1 <= li <= chi_i - 1)
        int best_l1 = -1, best_score = -1;
        for (int l1 = std::max(0, l - chi2); l1 <= std::min(l, chi1); ++l1) {
            int l2 = l - l1;
            int score = (l1 >= 1 && l1 <= chi1 - 1 ? 1 : 0) + (l2 >= 1 && l2 <= chi2 - 1 ? 1 : 0);
            if (score > best_score) {
                best_score = score;
                best_l1 = l1;
            }
        }
        int l1 = best_l1, l2 = l - best_l1;
        push(trace, "join-compose",
             "l = " + std::to_string(l1) + " + " + std::to_string(l2) + ", chi = " +
                 std::to_string(chi1) + " + " + std::to_string(chi2));

        auto sub_model = [&](const InducedSubgraph& s, int li, int chii) {
            OddModel mi;
            if (li >= 1 && li <= chii - 1) {
                mi = normalize_colors(special_bipartite_model(s.graph, li, trace));
            } else {
                // degenerate split: chi_i singletons on one side, color 1;
                // the join edges supply every cross condition
                mi.pattern = Pattern::bipartite(li, chii - li);
                for (int v = 0; v < chii; ++v) {
                    mi.branch_sets.push_back(singleton(v, li == 0 ? Side::Right : Side::Left));
                    mi.colors[v] = 1;
                }
            }
            return relabel_model(mi, s.new_to_old);
        };
        OddModel m1 = sub_model(s1, l1, chi1);
        OddModel m2 = sub_model(s2, l2, chi2);
        return lift_and_check(compose_join_models(h, m1, m2, part1, part2));
    }

    // h is chi-vertex-critical and anti-connected; its order must be 2chi-1
    if (h.n() != 2 * chi - 1)
        throw contradiction_error("special_bipartite_model: critical anti-connected graph has " +
                                      std::to_string(h.n()) + " vertices, expected 2chi-1 = " +
                                      std::to_string(2 * chi - 1),
                                  encode_graph6(g));
    push(trace, "terminal", "n = 2chi - 1");
    int lp = std::min(l, chi - l);
    OddModel m = weaken_pattern(special_model_half_order(h, lp, trace));
    if (lp != l) m = transpose_bipartite(m);
    return lift_and_check(m);
}

}  // namespace oddminor
