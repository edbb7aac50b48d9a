#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace homcolor {

struct PlanarityResult {
    bool planar = false;
    // Rotation system (cyclic neighbor order per vertex) when planar.
    std::vector<std::vector<std::size_t>> embedding;
    // Edges of a Kuratowski subgraph when not planar.
    std::vector<std::pair<std::size_t, std::size_t>> kuratowski;
};

PlanarityResult planarity_check(const Graph& g);

// Exact proper 4-coloring by saturation-ordered backtracking with component
// decomposition. The graph must be planar, so a solution exists; the node
// budget guards against pathological search orders.
inline constexpr std::uint64_t kDefaultColorBudget = 10'000'000;
Coloring color_planar_4(const Graph& g, std::uint64_t node_budget = kDefaultColorBudget);

// Classical contraction-based 5-coloring for planar graphs.
Coloring color_planar_5(const Graph& g);

struct DegeneracyOrder {
    std::vector<std::size_t> order;  // removal order
    std::size_t degeneracy = 0;      // max degree seen at removal time
};

DegeneracyOrder degeneracy_order(const Graph& g);

// Colors in reverse removal order with the smallest available color.
Coloring greedy_color(const Graph& g, const std::vector<std::size_t>& order);

// Proper coloring with every vertex colored from its own list; lists must
// all have at least 5 entries and the graph must be planar.
Coloring list_color_planar_5(const Graph& g, const std::vector<std::vector<int>>& lists);

}  // namespace homcolor
