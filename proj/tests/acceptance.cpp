// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1-4 share a single enumeration pass over all labeled
// graphs with alpha <= 2 on n <= 7 vertices.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "naive_checker.hpp"
#include "oddminor/construct.hpp"
#include "oddminor/errors.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/json_io.hpp"
#include "oddminor/oracle.hpp"
#include "oddminor/sweep.hpp"

using namespace oddminor;
using clock_type = std::chrono::steady_clock;

namespace {

double secs_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Criterion {
    bool pass = true;
    std::string detail;
    void fail(const std::string& msg) {
        pass = false;
        if (detail.empty()) detail = msg;
    }
};

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

std::string kind_name_set(const std::set<std::string>& s) {
    std::string out;
    for (const auto& k : s) out += (out.empty() ? "" : ",") + k;
    return out;
}

// ---- criteria 1-4: exhaustive pass over alpha<=2 graphs, n <= 7 ----------

struct ExhaustiveStats {
    Criterion c1, c2, c3, c4;
    long c1_pairs = 0, c2_pairs = 0, c3_graphs = 0, c4_pairs = 0;
    double c1_secs = 0, c2_secs = 0;
    // certificate pool reused by the mutation criterion
    std::vector<std::pair<std::string, OddModel>> pool;
};

void run_exhaustive(ExhaustiveStats& st) {
    std::mt19937_64 pool_rng(2024);
    for (int n = 1; n <= 7; ++n) {
        enumerate_alpha2_graphs(n, [&](const Graph& g) {
            int chi = chromatic_number(g).chi;
            int ch = (n + 1) / 2;
            std::string g6;  // encoded lazily, only on failure or pool pick

            // criterion 1: bipartite certificates for every 1 <= l < chi
            auto t1 = clock_type::now();
            for (int l = 1; l < chi; ++l) {
                ++st.c1_pairs;
                try {
                    OddModel m = special_bipartite_model(g, l);
                    auto bad = verify_odd_model(g, m, true);
                    if (!bad.empty())
                        st.c1.fail(encode_graph6(g) + " l=" + std::to_string(l) +
                                   ": verifier rejected certificate");
                    else if (pool_rng() % 97 == 0 && st.pool.size() < 600)
                        st.pool.emplace_back(encode_graph6(g), m);
                } catch (const std::exception& e) {
                    st.c1.fail(encode_graph6(g) + " l=" + std::to_string(l) + ": " + e.what());
                }
            }
            st.c1_secs += secs_since(t1);

            // criterion 2: oracle independently finds each model (n <= 6)
            if (n <= 6) {
                auto t2 = clock_type::now();
                for (int l = 1; l < chi; ++l) {
                    ++st.c2_pairs;
                    auto m = brute_force_odd_model(g, Pattern::bipartite(l, chi - l), true);
                    if (!m)
                        st.c2.fail(encode_graph6(g) + " l=" + std::to_string(l) +
                                   ": oracle found no model");
                    else if (!verify_odd_model(g, *m, true).empty())
                        st.c2.fail(encode_graph6(g) + " l=" + std::to_string(l) +
                                   ": oracle model rejected");
                }
                st.c2_secs += secs_since(t2);
            }

            // criterion 3: cut route whenever kappa < ceil(n/2)
            if (vertex_connectivity(g) < ch) {
                ++st.c3_graphs;
                try {
                    OddModel m = odd_clique_from_cut(g);
                    if (int(m.branch_sets.size()) < ch)
                        st.c3.fail(encode_graph6(g) + ": model too small");
                    else if (!verify_odd_model(g, m, false).empty())
                        st.c3.fail(encode_graph6(g) + ": cut model rejected");
                } catch (const std::exception& e) {
                    st.c3.fail(encode_graph6(g) + ": " + e.what());
                }
            }

            // criterion 4: half-order certificates on alpha = 2 graphs
            if (independence_number(g) == 2) {
                for (int l = 1; 2 * l <= ch; ++l) {
                    ++st.c4_pairs;
                    try {
                        OddModel m = special_model_half_order(g, l);
                        if (m.pattern != Pattern::bipartite_plus_clique(l, ch - l))
                            st.c4.fail(encode_graph6(g) + " l=" + std::to_string(l) +
                                       ": wrong pattern");
                        else if (!verify_odd_model(g, m, true).empty())
                            st.c4.fail(encode_graph6(g) + " l=" + std::to_string(l) +
                                       ": rejected");
                        else if (pool_rng() % 97 == 0 && st.pool.size() < 900)
                            st.pool.emplace_back(encode_graph6(g), m);
                    } catch (const std::exception& e) {
                        st.c4.fail(encode_graph6(g) + " l=" + std::to_string(l) + ": " +
                                   e.what());
                    }
                }
            }
        });
    }
}

// ---- criterion 5: named instances -----------------------------------------

Criterion run_named(std::string& detail) {
    Criterion c;
    struct Named {
        const char* name;
        Graph g;
        int chi;
    };
    std::vector<Named> named = {{"C5", cycle(5), 3},
                                {"co-C7", complement(cycle(7)), 4},
                                {"co-Petersen", complement(petersen()), 5},
                                {"C5+C5", join(cycle(5), cycle(5)), 6}};
    double worst = 0;
    for (auto& [name, g, chi] : named) {
        ColoringResult fast = chromatic_number(g);
        ColoringResult exact = detail::chi_branch_and_bound(g);
        if (fast.chi != chi || exact.chi != chi) {
            c.fail(std::string(name) + ": chi mismatch");
            continue;
        }
        for (int l = 1; l < chi; ++l) {
            auto t0 = clock_type::now();
            try {
                OddModel m = special_bipartite_model(g, l);
                if (!verify_odd_model(g, m, true).empty())
                    c.fail(std::string(name) + " l=" + std::to_string(l) + ": rejected");
            } catch (const std::exception& e) {
                c.fail(std::string(name) + " l=" + std::to_string(l) + ": " + e.what());
            }
            double s = secs_since(t0);
            worst = std::max(worst, s);
            if (s >= 1.0)
                c.fail(std::string(name) + " l=" + std::to_string(l) + ": took " +
                       std::to_string(s) + "s");
        }
    }
    detail = "worst per-certificate time " + std::to_string(worst) + "s";
    return c;
}

// ---- criterion 6: verifier soundness under seeded mutations ----------------

OddModel mutate(const OddModel& m, std::mt19937_64& rng) {
    OddModel out = m;
    for (int attempt = 0; attempt < 50; ++attempt) {
        out = m;
        switch (rng() % 7) {
            case 0: {  // flip a color
                if (out.colors.empty()) continue;
                auto it = out.colors.begin();
                std::advance(it, rng() % out.colors.size());
                it->second = 3 - it->second;
                return out;
            }
            case 1: {  // drop a color entry
                if (out.colors.empty()) continue;
                auto it = out.colors.begin();
                std::advance(it, rng() % out.colors.size());
                out.colors.erase(it);
                return out;
            }
            case 2: {  // copy a vertex into another branch set (overlap)
                if (out.branch_sets.size() < 2) continue;
                size_t i = rng() % out.branch_sets.size();
                size_t j = rng() % out.branch_sets.size();
                if (i == j) continue;
                int v = out.branch_sets[i].vertices[rng() %
                                                    out.branch_sets[i].vertices.size()];
                out.branch_sets[j].vertices.push_back(v);
                return out;
            }
            case 3: {  // drop a tree edge
                size_t i = rng() % out.branch_sets.size();
                auto& te = out.branch_sets[i].tree_edges;
                if (te.empty()) continue;
                te.erase(te.begin() + rng() % te.size());
                return out;
            }
            case 4: {  // add a bogus tree edge inside a branch set
                size_t i = rng() % out.branch_sets.size();
                auto& bs = out.branch_sets[i];
                if (bs.vertices.size() < 2) continue;
                int u = bs.vertices[rng() % bs.vertices.size()];
                int v = bs.vertices[rng() % bs.vertices.size()];
                if (u == v) continue;
                bs.tree_edges.emplace_back(u, v);
                return out;
            }
            case 5: {  // delete a vertex from a multi-vertex branch set
                size_t i = rng() % out.branch_sets.size();
                auto& bs = out.branch_sets[i];
                if (bs.vertices.size() < 2) continue;
                bs.vertices.erase(bs.vertices.begin() + rng() % bs.vertices.size());
                return out;
            }
            default: {  // flip a side tag
                size_t i = rng() % out.branch_sets.size();
                auto& bs = out.branch_sets[i];
                bs.side = bs.side == Side::Left ? Side::Right : Side::Left;
                return out;
            }
        }
    }
    return out;
}

Criterion run_mutations(const std::vector<std::pair<std::string, OddModel>>& pool,
                        std::string& detail) {
    Criterion c;
    if (pool.size() < 50) {
        c.fail("certificate pool too small: " + std::to_string(pool.size()));
        return c;
    }
    std::mt19937_64 rng(1234);
    long violating = 0, harmless = 0, trials = 0;
    while (violating < 1200 && trials < 40000) {
        ++trials;
        const auto& [g6, base] = pool[rng() % pool.size()];
        Graph g = parse_graph6(g6);
        OddModel mut = mutate(base, rng);

        std::set<std::string> expect = naive::check(g, mut, true);
        if (expect.empty()) {
            ++harmless;
            if (!verify_odd_model(g, mut, true).empty()) {
                c.fail(g6 + ": false reject of a definition-valid mutation");
                break;
            }
            continue;
        }
        ++violating;
        if (expect.count("schema")) {
            try {
                verify_odd_model(g, mut, true);
                c.fail(g6 + ": schema-breaking mutation accepted");
                break;
            } catch (const parse_error&) {
            }
            continue;
        }
        std::set<std::string> got;
        for (const Violation& v : verify_odd_model(g, mut, true))
            got.insert(violation_kind_name(v.kind));
        if (got.empty()) {
            c.fail(g6 + ": false accept (expected " + kind_name_set(expect) + ")");
            break;
        }
        bool overlap = false;
        for (const auto& k : got)
            if (expect.count(k)) overlap = true;
        if (!overlap) {
            c.fail(g6 + ": kinds " + kind_name_set(got) + " none among expected " +
                   kind_name_set(expect));
            break;
        }
    }
    if (violating < 1000)
        c.fail("only " + std::to_string(violating) + " definition-violating mutations");
    detail = std::to_string(violating) + " violating + " + std::to_string(harmless) +
             " harmless mutations";
    return c;
}

// ---- criterion 7: random scale and report stability -------------------------

Criterion run_scale(std::string& detail) {
    Criterion c;
    SweepOptions opts;
    opts.mode = SweepMode::Random;
    opts.n = 25;
    opts.count = 1000;
    opts.seed = 42;
    opts.jobs = 8;
    auto t0 = clock_type::now();
    SweepReport a = run_sweep(opts);
    double secs = secs_since(t0);
    if (a.verified != a.pairs || a.contradiction_events != 0)
        c.fail("verified " + std::to_string(a.verified) + "/" + std::to_string(a.pairs) +
               ", contradictions " + std::to_string(a.contradiction_events));
    if (a.graphs != 1000) c.fail("expected 1000 graphs, got " + std::to_string(a.graphs));
    for (const GraphRecord& r : a.records)
        if (!r.error.empty()) c.fail(r.graph6 + ": " + r.error);
    if (secs > 300) c.fail("runtime " + std::to_string(secs) + "s exceeds 300s");
    SweepReport b = run_sweep(opts);
    if (report_to_json(a, false).dump() != report_to_json(b, false).dump())
        c.fail("report not byte-stable across reruns (timing excluded)");
    detail = std::to_string(a.pairs) + " certificates over 1000 graphs in " +
             std::to_string(secs) + "s";
    return c;
}

void print(int idx, const char* name, const Criterion& c, const std::string& extra) {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name, c.pass ? "PASS" : "FAIL",
                extra.empty() && c.detail.empty() ? "" : " — ",
                (c.pass ? extra : c.detail).c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    ExhaustiveStats st;
    auto t0 = clock_type::now();
    run_exhaustive(st);
    double exhaustive_secs = secs_since(t0);

    if (st.c1_secs > 900) st.c1.fail("runtime " + std::to_string(st.c1_secs) + "s > 900s");
    if (st.c2_secs > 1800) st.c2.fail("runtime " + std::to_string(st.c2_secs) + "s > 1800s");

    print(1, "exhaustive bipartite certificates n<=7", st.c1,
          std::to_string(st.c1_pairs) + " (graph,l) pairs in " + std::to_string(st.c1_secs) +
              "s");
    print(2, "oracle agreement n<=6", st.c2,
          std::to_string(st.c2_pairs) + " pairs in " + std::to_string(st.c2_secs) + "s");
    print(3, "minimum-cut clique route", st.c3,
          std::to_string(st.c3_graphs) + " low-connectivity graphs");
    print(4, "half-order certificates on alpha=2", st.c4,
          std::to_string(st.c4_pairs) + " (graph,l) pairs");

    std::string d5;
    Criterion c5 = run_named(d5);
    print(5, "named instances", c5, d5);

    std::string d6;
    Criterion c6 = run_mutations(st.pool, d6);
    print(6, "verifier mutation soundness", c6, d6);

    std::string d7;
    Criterion c7 = run_scale(d7);
    print(7, "random scale n=25", c7, d7);

    std::printf("exhaustive pass total: %.1fs\n", exhaustive_secs);
    bool all = st.c1.pass && st.c2.pass && st.c3.pass && st.c4.pass && c5.pass && c6.pass &&
               c7.pass;
    return all ? 0 : 1;
}
