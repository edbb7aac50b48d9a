#include "dominance.hpp"

#include <algorithm>
#include <set>

namespace homcolor {

namespace {

inline bool mask_get(const Mask& m, std::size_t i) { return m[i / 64] >> (i % 64) & 1; }
inline void mask_set(Mask& m, std::size_t i) { m[i / 64] |= 1ull << (i % 64); }
inline std::size_t mask_count(const Mask& m) {
    std::size_t c = 0;
    for (auto w : m) c += __builtin_popcountll(w);
    return c;
}

}  // namespace

Realizer3D::Realizer3D(std::vector<LabeledPoint3> pts) : pts_(std::move(pts)) {
    std::set<std::string> seen;
    for (const auto& p : pts_)
        if (!seen.insert(p.label).second)
            throw validation_error("duplicate realizer label: " + p.label);
    const std::size_t n = pts_.size();
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        auto coord = [&](std::size_t i) -> const Rat& {
            return axis == 0 ? pts_[i].p.x : axis == 1 ? pts_[i].p.y : pts_[i].p.z;
        };
        // Ties broken by index: the symbolic perturbation of the point set.
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return coord(a) < coord(b); });
        ranks_[axis].resize(n);
        for (std::size_t i = 0; i < n; ++i) ranks_[axis][idx[i]] = i;
    }
}

Realizer3D Realizer3D::negated() const {
    std::vector<LabeledPoint3> neg;
    neg.reserve(pts_.size());
    for (const auto& p : pts_)
        neg.push_back({p.label, Vec3{-p.p.x, -p.p.y, -p.p.z}});
    return Realizer3D(std::move(neg));
}

std::vector<std::size_t> dominated_set(const Realizer3D& r, const Vec3& apex) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Vec3& p = r.points()[i].p;
        if (p.x <= apex.x && p.y <= apex.y && p.z <= apex.z) out.push_back(i);
    }
    return out;
}

DominanceHypergraph enumerate_hyperedges(const Realizer3D& r) {
    const std::size_t n = r.size();
    DominanceHypergraph hg;
    hg.n = n;
    if (n == 0) return hg;

    // Points sorted by rank per axis; candidate apexes take one rank cap
    // per axis, so each distinct dominance set of any real apex appears.
    std::vector<std::vector<std::size_t>> rank_of(3, std::vector<std::size_t>(n));
    for (int axis = 0; axis < 3; ++axis)
        for (std::size_t i = 0; i < n; ++i) rank_of[axis][i] = r.rank(i, axis);

    std::set<Mask> seen;
    const std::size_t words = (n + 63) / 64;
    // For each (x-cap, y-cap) collect members below both, sorted by z-rank;
    // apex z-caps then yield the nested prefixes.
    std::vector<std::size_t> by_z(n);
    for (std::size_t i = 0; i < n; ++i) by_z[rank_of[2][i]] = i;

    for (std::size_t xc = 0; xc < n; ++xc) {
        for (std::size_t yc = 0; yc < n; ++yc) {
            Mask m(words, 0);
            bool any = false;
            for (std::size_t zr = 0; zr < n; ++zr) {
                std::size_t i = by_z[zr];
                if (rank_of[0][i] <= xc && rank_of[1][i] <= yc) {
                    mask_set(m, i);
                    any = true;
                    seen.insert(m);
                }
            }
            (void)any;
        }
    }
    hg.edges.assign(seen.begin(), seen.end());
    return hg;
}

Graph build_gk(const Realizer3D& r, int k) {
    if (k < 2) throw validation_error("the polychromatic parameter k must be at least 2");
    const std::size_t n = r.size();
    std::vector<std::string> labels;
    for (const auto& p : r.points()) labels.push_back(p.label);
    Graph g(std::move(labels));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t xc = std::max(r.rank(u, 0), r.rank(v, 0));
            std::size_t yc = std::max(r.rank(u, 1), r.rank(v, 1));
            std::size_t zc = std::max(r.rank(u, 2), r.rank(v, 2));
            std::size_t dom = 0;
            for (std::size_t w = 0; w < n; ++w)
                if (r.rank(w, 0) <= xc && r.rank(w, 1) <= yc && r.rank(w, 2) <= zc) ++dom;
            if (dom <= static_cast<std::size_t>(k)) g.add_edge(u, v);
        }
    }
    return g;
}

std::size_t extreme_count(const Realizer3D& r, const DominanceHypergraph& hg, int k) {
    std::size_t count = 0;
    for (const Mask& e : hg.edges) {
        if (mask_count(e) != static_cast<std::size_t>(k)) continue;
        std::size_t ex[3] = {SIZE_MAX, SIZE_MAX, SIZE_MAX};
        for (std::size_t i = 0; i < hg.n; ++i) {
            if (!mask_get(e, i)) continue;
            for (int axis = 0; axis < 3; ++axis)
                if (ex[axis] == SIZE_MAX || r.rank(i, axis) < r.rank(ex[axis], axis)) ex[axis] = i;
        }
        if (ex[0] == ex[1] || ex[1] == ex[2] || ex[0] == ex[2]) ++count;
    }
    return count;
}

Coloring color_k(const Realizer3D& r, int k) {
    Graph g = build_gk(r, k);
    DegeneracyOrder ord = degeneracy_order(g);
    const std::size_t bound = 6 * (static_cast<std::size_t>(k) - 1);
    if (r.size() >= 2 && ord.degeneracy > bound - 1)
        throw internal_fault("auxiliary graph degeneracy exceeds 6(k-1)-1");
    Coloring c = greedy_color(g, ord.order);
    if (c.palette > static_cast<int>(bound) && r.size() > 1)
        throw internal_fault("degeneracy coloring exceeded 6(k-1) colors");
    return c;
}

PolyVerifyReport verify_polychromatic(const Realizer3D& r, const DominanceHypergraph& hg,
                                      const Coloring& coloring, int k) {
    PolyVerifyReport report;
    if (coloring.color.size() != r.size())
        throw validation_error("coloring must cover every realizer point");
    std::set<int> colors;
    for (const Mask& e : hg.edges) {
        colors.clear();
        std::size_t size = 0;
        for (std::size_t i = 0; i < hg.n; ++i)
            if (mask_get(e, i)) {
                ++size;
                colors.insert(coloring.color[i]);
            }
        std::size_t need = std::min<std::size_t>(size, static_cast<std::size_t>(k));
        if (colors.size() < need) {
            report.pass = false;
            report.violating_edge = e;
            report.message = "hyperedge of size " + std::to_string(size) + " sees only " +
                             std::to_string(colors.size()) + " colors:";
            for (std::size_t i = 0; i < hg.n; ++i)
                if (mask_get(e, i)) report.message += " " + r.points()[i].label;
            return report;
        }
    }
    return report;
}

TriangleRealizer triangle_dual_realizer(const ConvexRange& triangle, const DualFamily& family) {
    if (triangle.facet_count() != 3)
        throw validation_error("the dominance reduction needs a triangle range");

    // p in T(t, lam) iff a_j . p <= a_j . t + b_j lam for the three facets;
    // negating both sides turns coverage into componentwise dominance.
    std::vector<LabeledPoint3> pts;
    pts.reserve(family.members.size());
    const auto& facets = triangle.facets();
    for (const auto& m : family.members) {
        Vec3 image;
        Rat* out[3] = {&image.x, &image.y, &image.z};
        for (int j = 0; j < 3; ++j) {
            Rat beta = facets[j].a.x * m.h.center.x + facets[j].a.y * m.h.center.y + m.h.scaling;
            *out[j] = -beta;
        }
        pts.push_back({m.label, image});
    }
    TriangleRealizer tr{Realizer3D(std::move(pts)), {}};
    std::array<Vec2, 3> a{facets[0].a, facets[1].a, facets[2].a};
    tr.point_map = [a](const Vec2& p) {
        return Vec3{-(a[0].x * p.x + a[0].y * p.y), -(a[1].x * p.x + a[1].y * p.y),
                    -(a[2].x * p.x + a[2].y * p.y)};
    };
    return tr;
}

}  // namespace homcolor
