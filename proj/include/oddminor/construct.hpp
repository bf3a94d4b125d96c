#pragma once

#include <string>
#include <vector>

#include "oddminor/graph.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/model.hpp"
#include "oddminor/structure.hpp"

namespace oddminor {

struct TraceStep {
    std::string rule;    // parity-delete, cut-clique, big-clique, packing,
                         // terminal, star, reduce, join-compose, complete
    std::string detail;
};
using ConstructionTrace = std::vector<TraceStep>;

// Odd K_m model (m >= ceil(n/2)) from a minimum vertex cut: the larger
// clique component as singletons plus a matching from the cut into the
// other component.  Requires alpha <= 2 and kappa < ceil(n/2).
OddModel odd_clique_from_cut(const Graph& g, ConstructionTrace* trace = nullptr);

// Odd K_{ceil(n/2)} model from a maximum clique plus disjoint induced P3s
// outside it.  Requires alpha <= 2, n odd, omega >= (n+3)/4, kappa >= ceil(n/2).
OddModel odd_clique_via_clique_and_paths(const Graph& g, ConstructionTrace* trace = nullptr);

// Special odd K^l_{l, ceil(n/2)-l} model; requires alpha <= 2, 1 <= l,
// 2l <= ceil(n/2).
OddModel special_model_half_order(const Graph& g, int l, ConstructionTrace* trace = nullptr);

// Special odd K_{l, chi-l} model; requires alpha <= 2, 1 <= l < chi(g).
OddModel special_bipartite_model(const Graph& g, int l, ConstructionTrace* trace = nullptr);

// Join composition: m1, m2 are verified special Bipartite models inside
// g[v1], g[v2] (original indices), normalized so singletons carry color 1,
// with v1 complete to v2.
OddModel compose_join_models(const Graph& g, const OddModel& m1, const OddModel& m2,
                             const VertexSet& v1, const VertexSet& v2);

struct CriticalReduction {
    Graph graph;
    std::vector<int> removed;     // original indices, in removal order
    std::vector<int> new_to_old;  // reduced index -> original index
};
// Repeatedly delete the smallest-index vertex whose removal keeps chi
// unchanged; the result is chi(g)-vertex-critical.
CriticalReduction critical_reduction(const Graph& g);

// Connected components of the complement; >= 2 of them means the graph is a
// join across any grouping of the components.
std::vector<VertexSet> anti_components(const Graph& g);

// Rewrite a model built on induced-subgraph indices back into host indices.
OddModel relabel_model(const OddModel& m, const std::vector<int>& new_to_old);

}  // namespace oddminor
