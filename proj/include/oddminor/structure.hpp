#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

// Induced 3-vertex path end-mid-end; ends are nonadjacent, stored end_a < end_b.
struct P3 {
    int end_a, mid, end_b;
    bool operator==(const P3&) const = default;
};

struct P3Packing {
    std::vector<P3> paths;
    VertexSet vertices(int universe) const {
        VertexSet s(universe);
        for (const P3& p : paths) {
            s.set(p.end_a);
            s.set(p.mid);
            s.set(p.end_b);
        }
        return s;
    }
};

// Either a matching saturating side A into R, or a Hall violator S ⊆ A with
// |S| > |N(S) ∩ R|.
struct MatchingOrViolator {
    bool saturated = false;
    std::vector<std::pair<int, int>> matching;  // (a, r) pairs
    VertexSet violator;
};

MatchingOrViolator saturating_matching(const Graph& g, const VertexSet& a, const VertexSet& r);

// Exact backtracking search for k pairwise vertex-disjoint induced P3s
// avoiding `forbidden`.  Deterministic: candidate paths are generated
// mid-vertex-first by ascending index and the first packing found wins.
std::optional<P3Packing> find_p3_packing(const Graph& g, int k, const VertexSet& forbidden);

// Exchange loop near v: returns a same-size packing whose leftover vertices
// B = V \ (V(packing) ∪ {v}) meet M(v) = V \ N[v] in at most one vertex.
// Each exchange strictly grows |N[v] \ V(packing)|, so the loop terminates.
P3Packing improve_packing_near_vertex(const Graph& g, int v, P3Packing packing);

// |N[v] \ V(packing)| — the monotone quantity of the exchange loop.
int free_closed_neighborhood_size(const Graph& g, int v, const P3Packing& packing);

bool is_induced_p3(const Graph& g, const P3& p);

}  // namespace oddminor
