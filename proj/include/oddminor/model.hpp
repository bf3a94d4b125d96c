#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

enum class PatternKind { Clique, Bipartite, BipartitePlusClique };

// Target minor shape.  Clique(m) stores m in `left`.  For the bipartite
// kinds the left side is the one completed to a clique in
// BipartitePlusClique (the K^l shape).
struct Pattern {
    PatternKind kind = PatternKind::Clique;
    int left = 0;
    int right = 0;

    static Pattern clique(int m) { return {PatternKind::Clique, m, 0}; }
    static Pattern bipartite(int l, int r) { return {PatternKind::Bipartite, l, r}; }
    static Pattern bipartite_plus_clique(int l, int r) {
        return {PatternKind::BipartitePlusClique, l, r};
    }
    int size() const { return left + right; }
    bool operator==(const Pattern&) const = default;
};

enum class Side { Left, Right };

struct BranchSet {
    Side side = Side::Left;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> tree_edges;
};

struct OddModel {
    Pattern pattern;
    std::vector<BranchSet> branch_sets;
    std::map<int, int> colors;  // vertex -> 1 or 2
};

enum class ViolationKind {
    Overlap,
    NotTree,
    TreeEdgeMonochromatic,
    MissingMonoCrossEdge,
    UncoloredVertex,
    NotSpecial,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

const char* violation_kind_name(ViolationKind k);

// Pattern edges as branch-set index pairs (i < j), derived from the pattern
// kind and side tags.
std::vector<std::pair<int, int>> pattern_edges(const OddModel& m);

// Definition-driven checker; shares no code with the constructors.  All
// violations are reported, not just the first.  Structural schema problems
// (vertex out of range, side counts not matching the pattern) throw
// parse_error instead.
std::vector<Violation> verify_odd_model(const Graph& g, const OddModel& m, bool require_special);

// Flip colors globally so singleton branch sets carry color 1.
OddModel normalize_colors(OddModel m);

// Retag a verified Clique(k) model as BipartitePlusClique(l, k-l): first l
// branch sets become the clique side.
OddModel clique_model_to_bipartite(OddModel m, int l);

// Swap the sides of a plain Bipartite model.
OddModel transpose_bipartite(OddModel m);

// Drop the left-left pattern edges: BipartitePlusClique(l,r) -> Bipartite(l,r).
OddModel weaken_pattern(OddModel m);

}  // namespace oddminor
