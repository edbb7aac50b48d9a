#include "geometry.hpp"

#include <algorithm>
#include <map>

namespace homcolor {

namespace {

// Reduce (nx, ny, d) so the three integers are coprime and d > 0.
void reduce_facet(Int& nx, Int& ny, Int& d) {
    Int g = gcd(gcd(abs(nx), abs(ny)), abs(d));
    if (g > 1) {
        nx /= g;
        ny /= g;
        d /= g;
    }
}

std::size_t lex_min_index(const std::vector<Vec2>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (lex_less(v[i], v[best])) best = i;
    return best;
}

}  // namespace

ConvexRange::ConvexRange(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
    const std::size_t n = verts_.size();
    if (n < 3) throw validation_error("range needs at least 3 vertices");

    // Canonical start: lexicographically smallest vertex first.
    std::rotate(verts_.begin(), verts_.begin() + lex_min_index(verts_), verts_.end());

    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = verts_[i];
        const Vec2& v = verts_[(i + 1) % n];
        const Vec2& w = verts_[(i + 2) % n];
        Rat turn = cross(v - u, w - v);
        if (turn <= 0)
            throw validation_error(
                "range vertices must be in strictly convex counterclockwise position");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& u = verts_[i];
        const Vec2& v = verts_[(i + 1) % n];
        Vec2 e = v - u;
        Vec2 normal{e.y, -e.x};  // outward for CCW order
        Rat c = dot(normal, u);
        if (c <= 0) throw validation_error("range must strictly contain the origin");
        Facet f;
        f.a = {normal.x / c, normal.y / c};
        // Integer form: clear the two denominators of f.a.
        Int dx = denominator(f.a.x), dy = denominator(f.a.y);
        Int l = dx / gcd(dx, dy) * dy;
        f.ax = numerator(f.a.x) * (l / dx);
        f.ay = numerator(f.a.y) * (l / dy);
        f.b = l;
        reduce_facet(f.ax, f.ay, f.b);
        facets_.push_back(std::move(f));
    }

    // Cross-check: every vertex satisfies all facets, with equality exactly
    // on its own two facets.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat val = dot(facets_[j].a, verts_[i]);
            bool on = (j == i) || ((j + 1) % n == i);
            if (on ? (val != 1) : (val >= 1))
                throw internal_fault("facet/vertex cross-check failed");
        }
    }
}

Rat ConvexRange::gauge(const Vec2& v) const {
    Rat best = dot(facets_[0].a, v);
    for (std::size_t j = 1; j < facets_.size(); ++j) {
        Rat val = dot(facets_[j].a, v);
        if (val > best) best = val;
    }
    if (best < 0) best = 0;  // only possible at v = 0 up to arithmetic form
    return best;
}

Rat ConvexRange::distance(const Vec2& p, const Vec2& q) const { return gauge(q - p); }

ConvexRange ConvexRange::reflected() const {
    std::vector<Vec2> neg;
    neg.reserve(verts_.size());
    for (const Vec2& v : verts_) neg.push_back({-v.x, -v.y});
    return ConvexRange(std::move(neg));  // 180-degree rotation keeps CCW order
}

bool ConvexRange::same_polygon(const ConvexRange& other) const {
    return verts_ == other.verts_;
}

ConvexRange ConvexRange::linear_image(const Rat& m00, const Rat& m01, const Rat& m10,
                                      const Rat& m11) const {
    Rat det = m00 * m11 - m01 * m10;
    if (det == 0) throw validation_error("linear map must be invertible");
    std::vector<Vec2> img;
    img.reserve(verts_.size());
    for (const Vec2& v : verts_) img.push_back({m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y});
    if (det < 0) std::reverse(img.begin(), img.end());
    return ConvexRange(std::move(img));
}

Side homothet_side(const ConvexRange& range, const Homothet& h, const Vec2& p) {
    if (h.scaling <= 0) throw validation_error("homothet scaling must be positive");
    Rat g = range.gauge(p - h.center);
    if (g < h.scaling) return Side::Interior;
    if (g == h.scaling) return Side::Boundary;
    return Side::Outside;
}

bool contained_in(const ConvexRange& range, const Homothet& h1, const Homothet& h2) {
    if (h1.scaling <= 0 || h2.scaling <= 0)
        throw validation_error("homothet scaling must be positive");
    for (const Vec2& v : range.vertices()) {
        Vec2 p = h1.center + h1.scaling * v;
        if (homothet_side(range, h2, p) == Side::Outside) return false;
    }
    return true;
}

PointSet::PointSet(std::vector<LabeledPoint> pts) : pts_(std::move(pts)) {
    std::map<std::string, int> seen;
    for (const auto& lp : pts_) {
        if (++seen[lp.label] > 1)
            throw validation_error("duplicate point label: " + lp.label);
    }
    // Duplicate coordinates are permitted but reported.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> by_coord;
    for (const auto& lp : pts_)
        by_coord[{rat_str(lp.p.x), rat_str(lp.p.y)}].push_back(lp.label);
    for (auto& [coord, labels] : by_coord)
        if (labels.size() > 1) report_.duplicate_groups.push_back(labels);
}

}  // namespace homcolor
