#pragma once

// Test-only oracles, kept deliberately independent of the library's
// candidate-enumeration paths: straight-line ray casting for the gauge,
// vertex-polygon membership for containment, and dense parameter grids
// for edge sets.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "core/dual.hpp"
#include "core/geometry.hpp"
#include "core/primal.hpp"

namespace homcolor::oracle {

// Gauge via exact ray/boundary intersection: the unique s > 0 with s*v on
// the polygon boundary gives gauge(v) = 1/s.
Rat gauge_by_ray(const ConvexRange& range, const Vec2& v);

// Membership via the homothet's own vertex polygon and cross-product
// signs, no facet functionals involved.
Side side_by_vertex_polygon(const ConvexRange& range, const Homothet& h, const Vec2& p);

// Exact covered set at one homothet parameter.
std::vector<std::size_t> covered_set(const ConvexRange& range, const PointSet& pts,
                                     const Homothet& h);

// Dense (t, lambda) grid scan collecting every covered set of size exactly
// two; `step` is the grid pitch for centers and scalings.
std::set<std::pair<std::size_t, std::size_t>> primal_grid_edges(const ConvexRange& range,
                                                                const PointSet& pts,
                                                                const Rat& step);

// Same with the pitch halved until the edge set is stable twice in a row.
std::set<std::pair<std::size_t, std::size_t>> primal_grid_edges_stable(const ConvexRange& range,
                                                                       const PointSet& pts);

// Weighted-distance grid oracle for the dual graph: at each sample point
// the two smallest values of gauge(p - c_i) - lambda_i certify an edge when
// strictly below the third smallest.
std::set<std::pair<std::size_t, std::size_t>> dual_grid_edges(const ConvexRange& range,
                                                              const DualFamily& family,
                                                              const Rat& step);
std::set<std::pair<std::size_t, std::size_t>> dual_grid_edges_stable(const ConvexRange& range,
                                                                     const DualFamily& family);

// Edge sets of built graphs, as index pairs (definition-witnessed only for
// the primal builder).
std::set<std::pair<std::size_t, std::size_t>> witnessed_edges(const DelaunayGraph& dg);
std::set<std::pair<std::size_t, std::size_t>> graph_edges(const Graph& g);

}  // namespace homcolor::oracle
