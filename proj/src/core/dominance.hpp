#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "dual.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace homcolor {

struct LabeledPoint3 {
    std::string label;
    Vec3 p;
};

// Finite set of labeled points in 3-space; hyperedges are the distinct
// downward-dominance sets. Comparisons use per-axis ranks where ties are
// broken by point index, i.e. the symbolic perturbation that guarantees
// pairwise-distinct coordinates.
class Realizer3D {
  public:
    explicit Realizer3D(std::vector<LabeledPoint3> pts);

    const std::vector<LabeledPoint3>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }

    // rank of point i along axis (0=x, 1=y, 2=z)
    std::size_t rank(std::size_t i, int axis) const { return ranks_[axis][i]; }

    // The self-dual transform: negate every coordinate.
    Realizer3D negated() const;

  private:
    std::vector<LabeledPoint3> pts_;
    std::array<std::vector<std::size_t>, 3> ranks_;
};

using Mask = std::vector<std::uint64_t>;

// Members with image componentwise <= apex (ties dominated).
std::vector<std::size_t> dominated_set(const Realizer3D& r, const Vec3& apex);

struct DominanceHypergraph {
    std::size_t n = 0;
    std::vector<Mask> edges;  // distinct nonempty dominance sets
};

// All distinct dominance sets, via the O(n^3) candidate apexes built from
// member coordinate ranks.
DominanceHypergraph enumerate_hyperedges(const Realizer3D& r);

// G_k: uv is an edge iff the componentwise max of u,v dominates at most k
// points (dominated sets grow with the apex, so the check is exact).
Graph build_gk(const Realizer3D& r, int k);

// Hyperedges of size exactly k whose per-axis minimum members are not all
// distinct.
std::size_t extreme_count(const Realizer3D& r, const DominanceHypergraph& hg, int k);

// Degeneracy-greedy coloring of G_k: at most 6(k-1) colors, every
// hyperedge e gets min(|e|, k) distinct colors.
Coloring color_k(const Realizer3D& r, int k);

struct PolyVerifyReport {
    bool pass = true;
    std::string message;
    std::optional<Mask> violating_edge;
};

PolyVerifyReport verify_polychromatic(const Realizer3D& r, const DominanceHypergraph& hg,
                                      const Coloring& coloring, int k);

// Homothets of a triangle map to their facet offset vectors (negated), so
// coverage becomes dominance; plane points map to apexes the same way.
struct TriangleRealizer {
    Realizer3D realizer;
    // apex image of a plane point, for cross-checking coverage
    std::function<Vec3(const Vec2&)> point_map;
};
TriangleRealizer triangle_dual_realizer(const ConvexRange& triangle, const DualFamily& family);

}  // namespace homcolor
