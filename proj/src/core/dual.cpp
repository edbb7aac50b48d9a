#include "dual.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "parallel.hpp"
#include "sweep_clients.hpp"

namespace homcolor {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

Vec3 unscale_apex(const Vec3& u, const Int& scale) {
    Rat l(scale);
    return Vec3{u.x / l, u.y / l, u.z / l};
}

// Order on lifted coordinates with index tie-break, for the tie rule.
std::vector<std::size_t> lift_rank(const DualFamily& family) {
    std::vector<std::size_t> idx(family.members.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Homothet& x = family.members[a].h;
        const Homothet& y = family.members[b].h;
        if (x.center.x != y.center.x) return x.center.x < y.center.x;
        if (x.center.y != y.center.y) return x.center.y < y.center.y;
        return x.scaling < y.scaling;
    });
    std::vector<std::size_t> rank(family.members.size());
    for (std::size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = i;
    return rank;
}

}  // namespace

Vec3 lift(const Homothet& h) { return Vec3{h.center.x, h.center.y, h.scaling}; }

Side cone_side(const ConvexRange& range, const Vec3& apex, const Vec3& q) {
    // Slice of the cone at height z is the reflected range scaled by
    // z - apex_z, so membership compares the original gauge of
    // (apex_xy - q_xy) against q_z - apex_z.
    Rat g = range.gauge(Vec2{apex.x - q.x, apex.y - q.y});
    Rat dz = q.z - apex.z;
    if (g < dz) return Side::Interior;
    if (g == dz) return Side::Boundary;
    return Side::Outside;
}

Rat z_height(const ConvexRange& range, const Homothet& h, const Vec2& p) {
    Rat d = range.distance(h.center, p);
    if (d > h.scaling) throw validation_error("z_height requires the point to be covered");
    return h.scaling - d;
}

ConeSystem dual_cone_system(const ConvexRange& range, const DualFamily& family, Int& scale_out) {
    Int scale = 1;
    for (const auto& m : family.members) {
        scale = lcm_int(scale, denominator(m.h.center.x));
        scale = lcm_int(scale, denominator(m.h.center.y));
        scale = lcm_int(scale, denominator(m.h.scaling));
    }
    scale_out = scale;

    ConeSystem sys;
    sys.positive_z = false;
    for (const Facet& f : range.facets()) sys.mu.push_back({f.ax, f.ay, f.b});
    sys.rhs.resize(family.members.size());
    for (std::size_t r = 0; r < family.members.size(); ++r) {
        const Homothet& h = family.members[r].h;
        Int cx = numerator(h.center.x) * (scale / denominator(h.center.x));
        Int cy = numerator(h.center.y) * (scale / denominator(h.center.y));
        Int lz = numerator(h.scaling) * (scale / denominator(h.scaling));
        sys.rhs[r].reserve(range.facet_count());
        for (const Facet& f : range.facets()) sys.rhs[r].push_back(f.ax * cx + f.ay * cy + f.b * lz);
    }
    sys.finalize();
    return sys;
}

ContainmentSplit split_contained(const ConvexRange& range, const DualFamily& family) {
    const std::size_t n = family.members.size();
    ContainmentSplit out;
    std::vector<char> in_i(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && !in_i[i]; ++j) {
            if (j == i) continue;
            const Homothet& hi = family.members[i].h;
            const Homothet& hj = family.members[j].h;
            if (!contained_in(range, hi, hj)) continue;
            bool equal = hi.center == hj.center && hi.scaling == hj.scaling;
            if (!equal || j < i) in_i[i] = 1;  // duplicates: all but the first
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_i[i]) {
            out.free.push_back(i);
            continue;
        }
        std::size_t container = SIZE_MAX;
        for (std::size_t j = 0; j < n && container == SIZE_MAX; ++j)
            if (!in_i[j] && j != i &&
                contained_in(range, family.members[i].h, family.members[j].h))
                container = j;
        if (container == SIZE_MAX)
            throw internal_fault("contained member without a maximal container");
        out.contained.push_back(i);
        out.container.push_back(container);
    }
    return out;
}

DualGraph build_dual_graph(const ConvexRange& range, const DualFamily& family, unsigned workers) {
    const std::size_t n = family.members.size();
    std::vector<std::string> labels;
    for (const auto& m : family.members) labels.push_back(m.label);
    DualGraph out{Graph(std::move(labels)), {}, {}};
    if (n < 2) return out;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && contained_in(range, family.members[i].h, family.members[j].h))
                throw validation_error("family contains a nested pair: strip the contained set first");

    Int scale;
    ConeSystem sys = dual_cone_system(range, family, scale);
    std::vector<std::size_t> rank = lift_rank(family);

    auto pairs = index_pairs(n);
    std::vector<std::optional<Vec3>> pair_witness(pairs.size());
    std::vector<std::vector<PairBuildClient::RuleHit>> rule_hits(pairs.size());

    parallel_for(pairs.size(), workers, [&](std::size_t pi) {
        PairBuildClient client;
        client.rank = &rank;
        client.begin(pairs[pi].first, pairs[pi].second, n);
        sweep_pair_all_lines(sys, pairs[pi].first, pairs[pi].second, client);
        pair_witness[pi] = client.pair_witness;
        rule_hits[pi] = std::move(client.rule_hits);
    });

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        if (!pair_witness[pi]) continue;
        auto [a, b] = pairs[pi];
        out.graph.add_edge(a, b);
        out.apex_witness.insert({{a, b}, unscale_apex(*pair_witness[pi], scale)});
    }
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        for (auto& hit : rule_hits[pi]) {
            auto sorted = hit.tri;
            std::sort(sorted.begin(), sorted.end());
            if (!seen.insert(sorted).second) continue;
            for (int e = 0; e < 3; ++e) {
                std::size_t u = sorted[e], v = sorted[(e + 1) % 3];
                if (u > v) std::swap(u, v);
                if (!out.graph.has_edge(u, v)) {
                    out.graph.add_edge(u, v);
                    out.rule_edges.insert({u, v});
                }
            }
        }
    }
    return out;
}

Coloring color_dual(const ConvexRange& range, const DualFamily& family, unsigned workers,
                    std::uint64_t node_budget) {
    const std::size_t n = family.members.size();
    Coloring result;
    result.color.assign(n, -1);
    if (n == 0) {
        result.palette = 0;
        return result;
    }

    ContainmentSplit split = split_contained(range, family);
    DualFamily free_family;
    for (std::size_t i : split.free) free_family.members.push_back(family.members[i]);

    DualGraph dg = build_dual_graph(range, free_family, workers);
    if (!planarity_check(dg.graph).planar)
        throw internal_fault("lifted adjacency graph failed the planarity test");
    Coloring base;
    try {
        base = color_planar_4(dg.graph, node_budget);
    } catch (const budget_exhausted& e) {
        throw internal_fault(std::string("4-coloring search exhausted its budget: ") + e.what());
    }
    for (std::size_t k = 0; k < split.free.size(); ++k)
        result.color[split.free[k]] = base.color[k];

    // Contained members pick any color other than their container's.
    std::map<std::size_t, std::size_t> pos_in_family;
    for (std::size_t k = 0; k < split.contained.size(); ++k) {
        std::size_t i = split.contained[k];
        int avoid = result.color[split.container[k]];
        result.color[i] = avoid == 0 ? 1 : 0;
    }
    int maxc = 0;
    for (int c : result.color) maxc = std::max(maxc, c + 1);
    result.palette = maxc;
    return result;
}

// ---------------------------------------------------------------------------
// Candidate-point verification machinery.
//
// All geometry is carried out in an integer frame: true coordinates scaled
// by R*L where L clears the family's denominators and R the range vertex
// denominators. Candidate points are homogeneous triples (X, Y, W), W > 0.
// ---------------------------------------------------------------------------

namespace {

struct Frame {
    Int R = 1, L = 1;
    std::size_t n = 0;
    std::size_t F = 0;
    std::vector<std::array<Int, 2>> facet_a;  // integer facet functionals
    std::vector<Int> off;                     // member*F: R*(A.T + b*Lam)
    std::vector<std::array<Int, 2>> poly;     // member*F polygon vertices
    std::vector<std::array<Int, 2>> center;   // member centers (frame)
    std::vector<std::array<Int, 4>> bbox;     // member bounding boxes

    const Int& offset(std::size_t m, std::size_t k) const { return off[m * F + k]; }
    const std::array<Int, 2>& vertex(std::size_t m, std::size_t k) const {
        return poly[m * F + k];
    }
};

Frame build_frame(const ConvexRange& range, const DualFamily& family) {
    Frame fr;
    fr.n = family.members.size();
    fr.F = range.facet_count();
    for (const auto& m : family.members) {
        fr.L = lcm_int(fr.L, denominator(m.h.center.x));
        fr.L = lcm_int(fr.L, denominator(m.h.center.y));
        fr.L = lcm_int(fr.L, denominator(m.h.scaling));
    }
    for (const Vec2& v : range.vertices()) {
        fr.R = lcm_int(fr.R, denominator(v.x));
        fr.R = lcm_int(fr.R, denominator(v.y));
    }
    for (const Facet& f : range.facets()) fr.facet_a.push_back({f.ax, f.ay});

    std::vector<std::array<Int, 2>> w;  // range vertices * R
    for (const Vec2& v : range.vertices())
        w.push_back({numerator(v.x) * (fr.R / denominator(v.x)),
                     numerator(v.y) * (fr.R / denominator(v.y))});

    fr.off.resize(fr.n * fr.F);
    fr.poly.resize(fr.n * fr.F);
    for (std::size_t m = 0; m < fr.n; ++m) {
        const Homothet& h = family.members[m].h;
        Int tx = numerator(h.center.x) * (fr.L / denominator(h.center.x));
        Int ty = numerator(h.center.y) * (fr.L / denominator(h.center.y));
        Int lam = numerator(h.scaling) * (fr.L / denominator(h.scaling));
        fr.center.push_back({fr.R * tx, fr.R * ty});
        Int bx0, bx1, by0, by1;
        for (std::size_t k = 0; k < fr.F; ++k) {
            const Facet& f = range.facets()[k];
            fr.off[m * fr.F + k] = fr.R * (f.ax * tx + f.ay * ty + f.b * lam);
            std::array<Int, 2> p{fr.R * tx + lam * w[k][0], fr.R * ty + lam * w[k][1]};
            if (k == 0) {
                bx0 = bx1 = p[0];
                by0 = by1 = p[1];
            } else {
                bx0 = std::min(bx0, p[0]);
                bx1 = std::max(bx1, p[0]);
                by0 = std::min(by0, p[1]);
                by1 = std::max(by1, p[1]);
            }
            fr.poly[m * fr.F + k] = p;
        }
        fr.bbox.push_back({bx0, bx1, by0, by1});
    }
    return fr;
}

using HPoint = std::array<Int, 3>;  // homogeneous (X, Y, W), W > 0

HPoint reduce(HPoint p) {
    Int g = gcd(gcd(abs(p[0]), abs(p[1])), p[2]);
    if (g > 1) {
        p[0] /= g;
        p[1] /= g;
        p[2] /= g;
    }
    return p;
}

// Facet value of member m, facet k at homogeneous point: <= 0 inside.
Int facet_value(const Frame& fr, const HPoint& p, std::size_t m, std::size_t k) {
    return fr.facet_a[k][0] * p[0] + fr.facet_a[k][1] * p[1] - p[2] * fr.offset(m, k);
}

Side point_side(const Frame& fr, const HPoint& p, std::size_t m) {
    bool boundary = false;
    for (std::size_t k = 0; k < fr.F; ++k) {
        Int v = facet_value(fr, p, m, k);
        if (v > 0) return Side::Outside;
        if (v == 0) boundary = true;
    }
    return boundary ? Side::Boundary : Side::Interior;
}

// Candidate points: polygon vertices, pairwise boundary intersections,
// centers, and exact perturbations of every boundary candidate into each
// incident cell (and along each incident boundary direction).
std::vector<HPoint> candidate_points(const Frame& fr) {
    std::set<HPoint> base;
    for (std::size_t m = 0; m < fr.n; ++m) {
        base.insert(reduce({fr.center[m][0], fr.center[m][1], Int(1)}));
        for (std::size_t k = 0; k < fr.F; ++k)
            base.insert(reduce({fr.vertex(m, k)[0], fr.vertex(m, k)[1], Int(1)}));
    }

    auto boxes_meet = [&](std::size_t a, std::size_t b) {
        return !(fr.bbox[a][1] < fr.bbox[b][0] || fr.bbox[b][1] < fr.bbox[a][0] ||
                 fr.bbox[a][3] < fr.bbox[b][2] || fr.bbox[b][3] < fr.bbox[a][2]);
    };

    for (std::size_t ma = 0; ma < fr.n; ++ma) {
        for (std::size_t mb = ma + 1; mb < fr.n; ++mb) {
            if (!boxes_meet(ma, mb)) continue;
            for (std::size_t ka = 0; ka < fr.F; ++ka) {
                const auto& a0 = fr.vertex(ma, ka);
                const auto& a1 = fr.vertex(ma, (ka + 1) % fr.F);
                for (std::size_t kb = 0; kb < fr.F; ++kb) {
                    const auto& b0 = fr.vertex(mb, kb);
                    const auto& b1 = fr.vertex(mb, (kb + 1) % fr.F);
                    Int d1x = a1[0] - a0[0], d1y = a1[1] - a0[1];
                    Int d2x = b1[0] - b0[0], d2y = b1[1] - b0[1];
                    Int den = d1x * d2y - d1y * d2x;
                    if (den == 0) continue;  // parallel: endpoints suffice
                    Int ex = b0[0] - a0[0], ey = b0[1] - a0[1];
                    Int s_num = ex * d2y - ey * d2x;   // along segment a
                    Int t_num = ex * d1y - ey * d1x;   // along segment b
                    Int lo = 0, hi = den;
                    if (den < 0) std::swap(lo, hi);
                    if (s_num < std::min(lo, hi) || s_num > std::max(lo, hi)) continue;
                    if (t_num < std::min(lo, hi) || t_num > std::max(lo, hi)) continue;
                    HPoint p{a0[0] * den + s_num * d1x, a0[1] * den + s_num * d1y, den};
                    if (p[2] < 0) {
                        p[0] = -p[0];
                        p[1] = -p[1];
                        p[2] = -p[2];
                    }
                    base.insert(reduce(p));
                }
            }
        }
    }

    // Perturbations: for each candidate on at least one boundary, push an
    // exact epsilon along every incident boundary direction and into every
    // angular sector between consecutive directions.
    std::vector<HPoint> out(base.begin(), base.end());
    std::vector<HPoint> extra;
    for (const HPoint& p : out) {
        std::set<std::array<Int, 2>> dirset;
        for (std::size_t m = 0; m < fr.n; ++m) {
            if (point_side(fr, p, m) != Side::Boundary) continue;
            for (std::size_t k = 0; k < fr.F; ++k)
                if (facet_value(fr, p, m, k) == 0) {
                    std::array<Int, 2> e{-fr.facet_a[k][1], fr.facet_a[k][0]};
                    Int g = gcd(abs(e[0]), abs(e[1]));
                    if (g > 1) {
                        e[0] /= g;
                        e[1] /= g;
                    }
                    dirset.insert(e);
                    dirset.insert({-e[0], -e[1]});
                }
        }
        if (dirset.empty()) continue;
        std::vector<std::array<Int, 2>> dirs(dirset.begin(), dirset.end());
        std::sort(dirs.begin(), dirs.end(), [](const auto& u, const auto& v) {
            auto half = [](const auto& d) { return (d[1] < 0 || (d[1] == 0 && d[0] < 0)) ? 1 : 0; };
            int hu = half(u), hv = half(v);
            if (hu != hv) return hu < hv;
            Int c = u[0] * v[1] - u[1] * v[0];
            if (c != 0) return c > 0;
            return u < v;
        });
        std::vector<std::array<Int, 2>> samples = dirs;
        for (std::size_t t = 0; t < dirs.size(); ++t) {
            const auto& d1 = dirs[t];
            const auto& d2 = dirs[(t + 1) % dirs.size()];
            Int c = d1[0] * d2[1] - d1[1] * d2[0];
            if (c > 0)
                samples.push_back({d1[0] + d2[0], d1[1] + d2[1]});
            else if (c == 0)  // opposite directions: half-turn sector
                samples.push_back({-d1[1], d1[0]});
        }
        for (const auto& m : samples) {
            // First flip of any facet status along p + eps*m decides the
            // safe step; half of it realizes the perturbed cell exactly.
            Int best_num = 1, best_den = 1;
            bool have = false;
            for (std::size_t mem = 0; mem < fr.n; ++mem) {
                for (std::size_t k = 0; k < fr.F; ++k) {
                    Int v0 = facet_value(fr, p, mem, k);
                    Int slope = (fr.facet_a[k][0] * m[0] + fr.facet_a[k][1] * m[1]) * p[2];
                    if (v0 == 0 || slope == 0) continue;
                    if ((v0 < 0) == (slope < 0)) continue;  // moving away, no flip
                    Int num = abs(v0), den = abs(slope);
                    if (!have || num * best_den < best_num * den) {
                        best_num = num;
                        best_den = den;
                        have = true;
                    }
                }
            }
            Int pn = best_num, pd = 2 * best_den;  // eps = first flip / 2
            HPoint q{p[0] * pd + pn * m[0] * p[2], p[1] * pd + pn * m[1] * p[2], p[2] * pd};
            extra.push_back(reduce(q));
        }
    }
    out.insert(out.end(), extra.begin(), extra.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> cover_mask(const Frame& fr, const HPoint& p) {
    std::vector<std::uint64_t> mask((fr.n + 63) / 64, 0);
    for (std::size_t m = 0; m < fr.n; ++m) {
        if (fr.bbox[m][0] * p[2] > p[0] || p[0] > fr.bbox[m][1] * p[2] ||
            fr.bbox[m][2] * p[2] > p[1] || p[1] > fr.bbox[m][3] * p[2])
            continue;
        if (point_side(fr, p, m) != Side::Outside) mask[m / 64] |= 1ull << (m % 64);
    }
    return mask;
}

Vec2 frame_to_true(const Frame& fr, const HPoint& p) {
    Rat w = Rat(p[2]) * Rat(fr.R) * Rat(fr.L);
    return Vec2{Rat(p[0]) / w, Rat(p[1]) / w};
}

}  // namespace

VerifyReport verify_dual(const ConvexRange& range, const DualFamily& family,
                         const Coloring& coloring) {
    VerifyReport report;
    if (coloring.color.size() != family.members.size())
        throw validation_error("coloring must cover every member");
    if (family.members.size() < 2) return report;

    Frame fr = build_frame(range, family);
    for (const HPoint& p : candidate_points(fr)) {
        auto mask = cover_mask(fr, p);
        int depth = 0;
        for (auto wword : mask) depth += __builtin_popcountll(wword);
        if (depth < 2) continue;
        int seen_color = -1;
        bool mono = true;
        for (std::size_t m = 0; m < fr.n && mono; ++m)
            if (mask[m / 64] >> (m % 64) & 1) {
                if (seen_color < 0)
                    seen_color = coloring.color[m];
                else if (coloring.color[m] != seen_color)
                    mono = false;
            }
        if (mono) {
            report.pass = false;
            Vec2 at = frame_to_true(fr, p);
            report.message = "monochromatic depth-" + std::to_string(depth) + " point at (" +
                             rat_str(at.x) + ", " + rat_str(at.y) + ") covering";
            for (std::size_t m = 0; m < fr.n; ++m)
                if (mask[m / 64] >> (m % 64) & 1) {
                    report.covered_labels.push_back(family.members[m].label);
                    report.message += " " + family.members[m].label;
                }
            return report;
        }
    }
    return report;
}

CoverSets covering_sets(const ConvexRange& range, const DualFamily& family) {
    CoverSets out;
    out.words = (family.members.size() + 63) / 64;
    if (family.members.empty()) return out;
    Frame fr = build_frame(range, family);
    std::map<std::vector<std::uint64_t>, Vec2> seen;
    for (const HPoint& p : candidate_points(fr)) {
        auto mask = cover_mask(fr, p);
        bool empty = true;
        for (auto wword : mask)
            if (wword) empty = false;
        if (empty) continue;
        if (!seen.count(mask)) seen.insert({mask, frame_to_true(fr, p)});
    }
    for (auto& [mask, wit] : seen) {
        out.masks.push_back(mask);
        out.witness.push_back(wit);
    }
    return out;
}

}  // namespace homcolor
