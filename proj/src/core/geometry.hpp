#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace homcolor {

// One facet of a convex polygon in normalized form a·x <= 1, kept both as
// the rational functional and as an integer pair (A, b) with A·x <= b,
// gcd-reduced, b > 0. The integer form feeds the exact kernels.
struct Facet {
    Vec2 a;        // rational functional, a·x <= 1
    Int ax, ay;    // integer form A
    Int b;         // integer offset, > 0
};

enum class Side { Interior, Boundary, Outside };

// Convex polygon strictly containing the origin, counterclockwise vertex
// order. The gauge (convex distance from the origin) of such a polygon is
// finite, positive definite and piecewise linear, which keeps every
// downstream predicate inside exact rational arithmetic.
class ConvexRange {
  public:
    explicit ConvexRange(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    // gamma(v) = max_j a_j·v = min { lambda >= 0 : v in lambda * range }
    Rat gauge(const Vec2& v) const;

    // Convex distance d(p, q) = gauge(q - p). Not symmetric in general.
    Rat distance(const Vec2& p, const Vec2& q) const;

    // Reflection through the origin (the scaling by -1).
    ConvexRange reflected() const;

    // True if the two ranges are the same polygon.
    bool same_polygon(const ConvexRange& other) const;

    // Linear image M * range; M must be invertible.
    ConvexRange linear_image(const Rat& m00, const Rat& m01, const Rat& m10,
                             const Rat& m11) const;

  private:
    std::vector<Vec2> verts_;
    std::vector<Facet> facets_;
};

struct Homothet {
    Vec2 center;  // t
    Rat scaling;  // lambda > 0
};

Side homothet_side(const ConvexRange& range, const Homothet& h, const Vec2& p);
inline bool homothet_contains(const ConvexRange& range, const Homothet& h, const Vec2& p) {
    return homothet_side(range, h, p) != Side::Outside;
}

// Q(t1,l1) subset of Q(t2,l2), decided by checking every vertex of the
// inner homothet against the outer facets.
bool contained_in(const ConvexRange& range, const Homothet& h1, const Homothet& h2);

struct LabeledPoint {
    std::string label;
    Vec2 p;
};

struct PointSetReport {
    // Groups of labels sharing identical coordinates (size >= 2 each).
    std::vector<std::vector<std::string>> duplicate_groups;
};

class PointSet {
  public:
    explicit PointSet(std::vector<LabeledPoint> pts);

    const std::vector<LabeledPoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const PointSetReport& report() const { return report_; }

  private:
    std::vector<LabeledPoint> pts_;
    PointSetReport report_;
};

}  // namespace homcolor
