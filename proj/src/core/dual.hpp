#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "primal.hpp"  // VerifyReport
#include "sweep.hpp"

namespace homcolor {

struct LabeledHomothet {
    std::string label;
    Homothet h;
};

struct DualFamily {
    std::vector<LabeledHomothet> members;
};

// rho: homothet -> (center_x, center_y, scaling).
Vec3 lift(const Homothet& h);

// Membership of q in the upward cone with the given apex: gauge of the
// reflected range at (q_xy - apex_xy) against q_z - apex_z.
Side cone_side(const ConvexRange& range, const Vec3& apex, const Vec3& q);
inline bool cone_contains(const ConvexRange& range, const Vec3& apex, const Vec3& q) {
    return cone_side(range, apex, q) != Side::Outside;
}

// Height at which the lifted homothet meets the cone lifted from p:
// scaling - d(center, p). Errors when p is not covered by h.
Rat z_height(const ConvexRange& range, const Homothet& h, const Vec2& p);

struct DualGraph {
    Graph graph;  // vertices in family order
    std::map<std::pair<std::size_t, std::size_t>, Vec3> apex_witness;
    // Edges added by the tie rule (no two-point apex witness stored).
    std::set<std::pair<std::size_t, std::size_t>> rule_edges;
};

// Adjacency of the lifted family under upward cones (equivalently, of the
// additively weighted Voronoi diagram of the centers). Errors if one member
// is contained in another.
DualGraph build_dual_graph(const ConvexRange& range, const DualFamily& family,
                           unsigned workers = 1);

// Members strictly contained in another member, plus duplicates beyond the
// first; second vector holds, for each such member, a containing member
// outside the set.
struct ContainmentSplit {
    std::vector<std::size_t> contained;   // indices into the family
    std::vector<std::size_t> container;   // parallel: container outside I
    std::vector<std::size_t> free;        // the rest, original order
};
ContainmentSplit split_contained(const ConvexRange& range, const DualFamily& family);

// At most 4 colors; every point of the plane covered twice sees two colors.
Coloring color_dual(const ConvexRange& range, const DualFamily& family, unsigned workers = 1,
                    std::uint64_t node_budget = kDefaultColorBudget);

// Complete check over candidate depth-change points: boundary/boundary
// intersections, polygon vertices, one interior sample per member, and
// exact perturbations of each candidate into every incident cell.
VerifyReport verify_dual(const ConvexRange& range, const DualFamily& family,
                         const Coloring& coloring);

// Distinct covering sets over the same candidate points, as bitmask words,
// with one witness point each. This enumerates every hyperedge of the
// family's coverage hypergraph.
struct CoverSets {
    std::size_t words;
    std::vector<std::vector<std::uint64_t>> masks;
    std::vector<Vec2> witness;
};
CoverSets covering_sets(const ConvexRange& range, const DualFamily& family);

// Exact parameter-space system over the lifted points (test support).
ConeSystem dual_cone_system(const ConvexRange& range, const DualFamily& family, Int& scale_out);

}  // namespace homcolor
