#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace homcolor::oracle {

Rat gauge_by_ray(const ConvexRange& range, const Vec2& v) {
    if (v.x == 0 && v.y == 0) return 0;
    const auto& verts = range.vertices();
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts[i];
        const Vec2& b = verts[(i + 1) % n];
        // Solve s*v = a + t*(b - a) with s > 0, t in [0, 1].
        Vec2 e = b - a;
        Rat den = cross(v, e);
        if (den == 0) continue;  // ray parallel to the edge
        Rat s = cross(a, e) / den;
        Rat t = cross(a, v) / den;
        if (s > 0 && t >= 0 && t <= 1) return 1 / s;
    }
    throw internal_fault("ray missed the polygon boundary");
}

Side side_by_vertex_polygon(const ConvexRange& range, const Homothet& h, const Vec2& p) {
    std::vector<Vec2> poly;
    for (const Vec2& v : range.vertices()) poly.push_back(h.center + h.scaling * v);
    const std::size_t n = poly.size();
    bool boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
        Rat c = cross(poly[(i + 1) % n] - poly[i], p - poly[i]);
        if (c < 0) return Side::Outside;
        if (c == 0) boundary = true;
    }
    return boundary ? Side::Boundary : Side::Interior;
}

std::vector<std::size_t> covered_set(const ConvexRange& range, const PointSet& pts,
                                     const Homothet& h) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (side_by_vertex_polygon(range, h, pts.points()[i].p) != Side::Outside)
            out.push_back(i);
    return out;
}

namespace {

using I64 = long long;
using I128 = __int128;

I64 scaled_to_i64(const Rat& r, const Int& scale) {
    Int v = numerator(r) * (scale / denominator(r));
    if (v > std::numeric_limits<I64>::max() || v < std::numeric_limits<I64>::min())
        throw internal_fault("grid oracle instance too large");
    return static_cast<I64>(v);
}

Int lcm2(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

struct IntFacets {
    std::vector<std::array<I64, 3>> f;  // (ax, ay, b)
};

IntFacets facets_of(const ConvexRange& range) {
    IntFacets out;
    for (const Facet& fc : range.facets())
        out.f.push_back({static_cast<I64>(fc.ax), static_cast<I64>(fc.ay),
                         static_cast<I64>(fc.b)});
    return out;
}

}  // namespace

std::set<std::pair<std::size_t, std::size_t>> primal_grid_edges(const ConvexRange& range,
                                                                const PointSet& pts,
                                                                const Rat& step) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = pts.size();
    if (n < 2) return edges;

    // One integer frame clears both the step and the coordinates.
    Int scale = denominator(step);
    for (const auto& lp : pts.points()) {
        scale = lcm2(scale, denominator(lp.p.x));
        scale = lcm2(scale, denominator(lp.p.y));
    }
    const I64 st = scaled_to_i64(step, scale);
    std::vector<std::array<I64, 2>> coords;
    for (const auto& lp : pts.points())
        coords.push_back({scaled_to_i64(lp.p.x, scale), scaled_to_i64(lp.p.y, scale)});

    Rat lam_max_r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                lam_max_r = std::max(lam_max_r, range.distance(pts.points()[i].p, pts.points()[j].p));
    lam_max_r += 1;
    Rat ext = 0;
    for (const Vec2& v : range.vertices()) ext = std::max({ext, abs(v.x), abs(v.y)});

    I64 lo = coords[0][0], hi = coords[0][0];
    for (const auto& c : coords) {
        lo = std::min({lo, c[0], c[1]});
        hi = std::max({hi, c[0], c[1]});
    }
    const I64 lam_max = scaled_to_i64(lam_max_r, scale) + st;
    const I64 reach = scaled_to_i64(lam_max_r * ext + 1, scale) + st;
    const I64 t_lo = lo - reach, t_hi = hi + reach;

    IntFacets facets = facets_of(range);

    for (I64 ty = t_lo; ty <= t_hi; ty += st) {
        for (I64 tx = t_lo; tx <= t_hi; tx += st) {
            for (I64 lam = st; lam <= lam_max; lam += st) {
                std::size_t a = SIZE_MAX, b = SIZE_MAX, count = 0;
                for (std::size_t i = 0; i < n && count <= 2; ++i) {
                    bool inside = true;
                    for (const auto& fc : facets.f) {
                        I128 lhs = I128(fc[0]) * (coords[i][0] - tx) +
                                   I128(fc[1]) * (coords[i][1] - ty);
                        if (lhs > I128(fc[2]) * lam) {
                            inside = false;
                            break;
                        }
                    }
                    if (inside) {
                        ++count;
                        (a == SIZE_MAX ? a : b) = i;
                    }
                }
                if (count == 2) edges.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }
    return edges;
}

std::set<std::pair<std::size_t, std::size_t>> primal_grid_edges_stable(const ConvexRange& range,
                                                                       const PointSet& pts) {
    Rat step(1, 2);
    auto prev = primal_grid_edges(range, pts, step);
    for (int depth = 0; depth < 3; ++depth) {
        step /= 2;
        auto next = primal_grid_edges(range, pts, step);
        if (next == prev) return next;
        prev = std::move(next);
    }
    return prev;
}

std::set<std::pair<std::size_t, std::size_t>> dual_grid_edges(const ConvexRange& range,
                                                              const DualFamily& family,
                                                              const Rat& step) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = family.members.size();
    if (n < 2) return edges;

    Int scale = denominator(step);
    for (const auto& m : family.members) {
        scale = lcm2(scale, denominator(m.h.center.x));
        scale = lcm2(scale, denominator(m.h.center.y));
        scale = lcm2(scale, denominator(m.h.scaling));
    }
    const I64 st = scaled_to_i64(step, scale);
    std::vector<std::array<I64, 3>> mem;  // cx, cy, lam
    I64 lam_max = 0;
    for (const auto& m : family.members) {
        mem.push_back({scaled_to_i64(m.h.center.x, scale), scaled_to_i64(m.h.center.y, scale),
                       scaled_to_i64(m.h.scaling, scale)});
        lam_max = std::max(lam_max, mem.back()[2]);
    }
    I64 lo = mem[0][0], hi = mem[0][0];
    for (const auto& m : mem) {
        lo = std::min({lo, m[0], m[1]});
        hi = std::max({hi, m[0], m[1]});
    }
    Rat ext = 0;
    for (const Vec2& v : range.vertices()) ext = std::max({ext, abs(v.x), abs(v.y)});
    const I64 reach = scaled_to_i64(Rat(lam_max) * ext / Rat(scale) + 1, scale) + st;
    const I64 x_lo = lo - reach, x_hi = hi + reach;

    IntFacets facets = facets_of(range);

    // Weighted distance to member i at (x, y): max_j (A_j.(p-c) - b_j*lam)/b_j.
    struct Frac {
        I128 num;
        I64 den;
    };
    auto weighted = [&](I64 x, I64 y, std::size_t i) -> Frac {
        Frac best{0, 1};
        bool first = true;
        for (const auto& fc : facets.f) {
            I128 num = I128(fc[0]) * (x - mem[i][0]) + I128(fc[1]) * (y - mem[i][1]) -
                       I128(fc[2]) * mem[i][2];
            if (first || num * best.den > best.num * fc[2]) {
                best = {num, fc[2]};
                first = false;
            }
        }
        return best;
    };

    std::vector<std::pair<Frac, std::size_t>> dist(n);
    for (I64 y = x_lo; y <= x_hi; y += st) {
        for (I64 x = x_lo; x <= x_hi; x += st) {
            for (std::size_t i = 0; i < n; ++i) dist[i] = {weighted(x, y, i), i};
            std::sort(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
                I128 l = a.first.num * b.first.den, r = b.first.num * a.first.den;
                if (l != r) return l < r;
                return a.second < b.second;
            });
            bool second_strictly_below_third =
                n == 2 || dist[1].first.num * dist[2].first.den <
                              dist[2].first.num * dist[1].first.den;
            if (second_strictly_below_third) {
                std::size_t a = dist[0].second, b = dist[1].second;
                if (a > b) std::swap(a, b);
                edges.insert({a, b});
            }
        }
    }
    return edges;
}

std::set<std::pair<std::size_t, std::size_t>> dual_grid_edges_stable(const ConvexRange& range,
                                                                     const DualFamily& family) {
    Rat step(1, 2);
    auto prev = dual_grid_edges(range, family, step);
    for (int depth = 0; depth < 3; ++depth) {
        step /= 2;
        auto next = dual_grid_edges(range, family, step);
        if (next == prev) return next;
        prev = std::move(next);
    }
    return prev;
}

std::set<std::pair<std::size_t, std::size_t>> witnessed_edges(const DelaunayGraph& dg) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [edge, w] : dg.witnesses)
        if (std::holds_alternative<WitnessHomothet>(w)) out.insert(edge);
    return out;
}

std::set<std::pair<std::size_t, std::size_t>> graph_edges(const Graph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (auto e : g.edges()) out.insert(e);
    return out;
}

}  // namespace homcolor::oracle
