#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "oddminor/graph.hpp"
#include "oddminor/model.hpp"

namespace oddminor {

// Exhaustive odd-model existence search straight from the definitions:
// all ways of placing the pattern's branch sets as disjoint connected
// subsets, all 2-colorings (lowest used vertex pinned to color 1).
// Independent of the constructors.  Guard: n <= 9, pattern size <= n.
std::optional<OddModel> brute_force_odd_model(const Graph& g, const Pattern& p,
                                              bool require_special);

// Every labeled graph on n vertices with alpha <= 2, each exactly once
// (complements of triangle-free graphs, generated edge-by-edge).  Guard
// n <= 8.
void enumerate_alpha2_graphs(int n, const std::function<void(const Graph&)>& yield);

// Deterministic: complement of a maximal triangle-free graph grown by
// seeded random edge insertion with triangle rejection.
Graph random_alpha2_graph(int n, uint64_t seed);

}  // namespace oddminor
