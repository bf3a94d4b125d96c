#pragma once

#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

// Minimum vertex cut of an alpha<=2 graph, with the structure Lemma-style
// arguments need: two clique components and a split of the cut into the
// vertices complete to each side.  Sides are normalized so that
// |left| + |cut_left| >= |right| + |cut_right|.
struct CutCertificate {
    VertexSet cut;
    VertexSet left, right;
    VertexSet cut_left, cut_right;
};

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;  // proper coloring with values 0..chi-1
};

bool independence_at_most_two(const Graph& g);
int independence_number(const Graph& g);          // n <= 64
ColoringResult chromatic_number(const Graph& g);  // n <= 40
VertexSet max_clique(const Graph& g);             // n <= 64, lexicographically least
int max_clique_size(const Graph& g);
int vertex_connectivity(const Graph& g);  // kappa(K_n) = n-1; disconnected -> 0
CutCertificate minimum_vertex_cut(const Graph& g);

namespace detail {
// Exact chi by branch and bound (DSATUR order, clique lower bound, greedy
// upper bound).  The public chromatic_number() routes alpha<=2 graphs
// through a complement-matching computation instead; tests cross-check the
// two against each other.
ColoringResult chi_branch_and_bound(const Graph& g);
// Maximum matching on a general graph (blossom contraction), mate[] or -1.
std::vector<int> max_matching(const Graph& g);
}  // namespace detail

}  // namespace oddminor
