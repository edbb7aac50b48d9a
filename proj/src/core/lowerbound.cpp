#include "lowerbound.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "primal.hpp"

namespace homcolor {

namespace {

// Primitive unoriented direction of an integer vector.
std::pair<Int, Int> unoriented_dir(Int x, Int y) {
    Int g = gcd(abs(x), abs(y));
    if (g > 1) {
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

bool is_parallelogram_like(const ConvexRange& range) {
    std::set<std::pair<Int, Int>> dirs;
    for (const Facet& f : range.facets()) dirs.insert(unoriented_dir(f.ax, f.ay));
    return dirs.size() == 2;
}

// Positive coefficients alpha, beta with alpha*m1 + beta*m2 = -m3?
bool positively_spanning(const Vec2& m1, const Vec2& m2, const Vec2& m3) {
    Rat det = cross(m1, m2);
    if (det == 0) return false;
    Rat alpha = cross(Vec2{-m3.x, -m3.y}, m2) / det;
    Rat beta = cross(m1, Vec2{-m3.x, -m3.y}) / det;
    return alpha > 0 && beta > 0;
}

// Triangle cut out by three halfplanes dir_i . x <= 1 whose normals
// positively span the plane; returns its vertices.
std::optional<std::array<Vec2, 3>> halfplane_triangle(const std::array<Vec2, 3>& dir) {
    std::array<Vec2, 3> verts;
    for (int i = 0; i < 3; ++i) {
        const Vec2& a = dir[(i + 1) % 3];
        const Vec2& b = dir[(i + 2) % 3];
        Rat det = cross(a, b);
        if (det == 0) return std::nullopt;
        // a.v = 1, b.v = 1
        verts[i] = Vec2{(b.y - a.y) / det, (a.x - b.x) / det};
    }
    return verts;
}

std::vector<Vec2> cluster_offsets(int count, const Rat& u) {
    std::vector<Vec2> out;
    for (int m = 0; m < count; ++m) out.push_back(Vec2{Rat(m) * u, Rat(m) * Rat(m) * u});
    return out;
}

std::string cluster_label(std::size_t cluster, int member) {
    return "g" + std::to_string(cluster + 1) + "_" + std::to_string(member + 1);
}

// Candidate 4-point configurations (three outer points plus an interior
// one) adapted to the range's facet normals. Each is validated afterwards
// by the exact pair-witness search, so the list only needs to contain one
// workable layout per range class.
std::vector<std::array<Vec2, 4>> candidate_configs(const ConvexRange& range) {
    std::vector<std::array<Vec2, 4>> configs;
    const auto& facets = range.facets();
    const std::size_t F = facets.size();
    for (std::size_t a = 0; a < F; ++a)
        for (std::size_t b = a + 1; b < F; ++b)
            for (std::size_t c = b + 1; c < F; ++c) {
                std::array<Vec2, 3> m{facets[a].a, facets[b].a, facets[c].a};
                if (!positively_spanning(m[0], m[1], m[2])) continue;
                for (int variant = 0; variant < 2; ++variant) {
                    std::array<Vec2, 3> dir = m;
                    if (variant == 1)
                        for (auto& d : dir) d = Vec2{-d.x, -d.y};
                    auto tri = halfplane_triangle(dir);
                    if (!tri) continue;
                    Vec2 centroid{((*tri)[0].x + (*tri)[1].x + (*tri)[2].x) / 3,
                                  ((*tri)[0].y + (*tri)[1].y + (*tri)[2].y) / 3};
                    configs.push_back({(*tri)[0], (*tri)[1], (*tri)[2], centroid});
                }
            }
    return configs;
}

// Parallelogram variant: two adjacent vertices and the center.
std::array<Vec2, 3> parallelogram_config(const ConvexRange& range) {
    const auto& v = range.vertices();
    Vec2 center{(v[0].x + v[2].x) / 2, (v[0].y + v[2].y) / 2};
    return {v[0], v[1], center};
}

struct ValidatedConfig {
    std::vector<Vec2> centers;
    // witness homothet covering exactly {i, j} among the centers
    std::map<std::pair<std::size_t, std::size_t>, Homothet> pair_witness;
};

std::optional<ValidatedConfig> validate_config(const ConvexRange& range,
                                               const std::vector<Vec2>& centers) {
    std::vector<LabeledPoint> pts;
    for (std::size_t i = 0; i < centers.size(); ++i)
        pts.push_back({"q" + std::to_string(i), centers[i]});
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (centers[i] == centers[j]) return std::nullopt;
    PointSet ps(pts);
    ValidatedConfig out;
    out.centers = centers;
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            auto w = edge_witness(range, ps, i, j);
            if (!w) return std::nullopt;
            out.pair_witness[{i, j}] = *w;
        }
    return out;
}

ValidatedConfig find_config(const ConvexRange& range, bool weak) {
    if (weak) {
        auto cfg = parallelogram_config(range);
        if (auto v = validate_config(range, {cfg[0], cfg[1], cfg[2]})) return *v;
        throw internal_fault("no selectable three-point layout for this parallelogram");
    }
    for (const auto& cfg : candidate_configs(range)) {
        if (auto v = validate_config(range, {cfg[0], cfg[1], cfg[2], cfg[3]})) return *v;
    }
    throw internal_fault("no selectable four-point layout found for this range");
}

Rat config_spread(const std::vector<Vec2>& centers) {
    Rat best = 0;
    for (const Vec2& a : centers)
        for (const Vec2& b : centers) {
            Rat dx = abs(a.x - b.x), dy = abs(a.y - b.y);
            if (dx > best) best = dx;
            if (dy > best) best = dy;
        }
    return best == 0 ? Rat(1) : best;
}

}  // namespace

LowerBoundInstance gen_lowerbound_primal(const ConvexRange& range, int k) {
    if (k < 2) throw validation_error("lower-bound construction needs k >= 2");
    const bool weak = is_parallelogram_like(range);
    ValidatedConfig cfg = find_config(range, weak);
    const std::size_t groups = cfg.centers.size();
    const int s = k / 2;

    LowerBoundInstance inst{range,
                            false,
                            k,
                            static_cast<int>(groups) * s,
                            weak,
                            {},
                            {},
                            {},
                            {},
                            {}};

    // Cluster radius: a small fraction of the configuration size, halved
    // until every inflated witness still isolates its pair exactly.
    Rat u = config_spread(cfg.centers) / 1000;
    for (int attempt = 0; attempt < 40; ++attempt, u /= 2) {
        inst.points.clear();
        inst.clusters.assign(groups, {});
        auto offsets = cluster_offsets(s, u);
        for (std::size_t g = 0; g < groups; ++g)
            for (int m = 0; m < s; ++m) {
                inst.clusters[g].push_back(inst.points.size());
                inst.points.push_back(
                    {cluster_label(g, m), cfg.centers[g] + offsets[m]});
            }

        inst.witness_ranges.clear();
        bool ok = true;
        for (std::size_t i = 0; i < groups && ok; ++i)
            for (std::size_t j = i + 1; j < groups && ok; ++j) {
                const Homothet& base = cfg.pair_witness.at({i, j});
                // Exact minimal scaling about the same center that covers
                // both clusters.
                Rat lam = 0;
                for (std::size_t g : {i, j})
                    for (std::size_t idx : inst.clusters[g]) {
                        Rat d = range.gauge(inst.points[idx].p - base.center);
                        if (d > lam) lam = d;
                    }
                if (lam <= 0) lam = base.scaling;
                Homothet w{base.center, lam};
                // Validation: precisely the two clusters are covered.
                for (std::size_t g = 0; g < groups && ok; ++g) {
                    bool expect = (g == i || g == j);
                    for (std::size_t idx : inst.clusters[g])
                        if (homothet_contains(range, w, inst.points[idx].p) != expect) ok = false;
                }
                if (ok) inst.witness_ranges.push_back(w);
            }
        if (ok) return inst;
    }
    throw internal_fault("cluster radius search failed to isolate every pair");
}

LowerBoundInstance gen_lowerbound_dual(const ConvexRange& range, int k) {
    if (k < 2) throw validation_error("lower-bound construction needs k >= 2");
    const bool weak = is_parallelogram_like(range);
    ValidatedConfig cfg = find_config(range, weak);
    const std::size_t groups = cfg.centers.size();
    const int s = k / 2;

    LowerBoundInstance inst{range,
                            true,
                            k,
                            static_cast<int>(groups) * s,
                            weak,
                            {},
                            {},
                            {},
                            {},
                            {}};

    Rat spread = config_spread(cfg.centers);
    auto pair_masks_present = [&](const DualFamily& family,
                                  std::vector<Vec2>* witnesses) -> bool {
        CoverSets cs = covering_sets(range, family);
        std::map<std::vector<std::uint64_t>, Vec2> seen;
        for (std::size_t t = 0; t < cs.masks.size(); ++t) seen[cs.masks[t]] = cs.witness[t];
        if (witnesses) witnesses->clear();
        for (std::size_t i = 0; i < groups; ++i)
            for (std::size_t j = i + 1; j < groups; ++j) {
                std::vector<std::uint64_t> want((family.members.size() + 63) / 64, 0);
                for (std::size_t g : {i, j})
                    for (std::size_t m = 0; m < static_cast<std::size_t>(s); ++m) {
                        std::size_t idx = g * s + m;
                        want[idx / 64] |= 1ull << (idx % 64);
                    }
                auto it = seen.find(want);
                if (it == seen.end()) return false;
                if (witnesses) witnesses->push_back(it->second);
            }
        return true;
    };

    // Scaling schedule: grow uniform sizes (slightly distinct per cluster
    // to avoid symmetric depth ties) until every cluster pair owns a
    // depth-2s point; then thin concentric copies form the clusters.
    for (int pull = 0; pull < 3; ++pull) {
        std::vector<Vec2> centers = cfg.centers;
        if (pull > 0) {
            Vec2 g{0, 0};
            for (const Vec2& c : centers) g = g + c;
            g = Vec2{g.x / Rat(centers.size()), g.y / Rat(centers.size())};
            for (auto& c : centers)
                c = c + Rat(pull) / 4 * (g - c);
        }
        for (int t = 2; t <= 40; ++t) {
            Rat lam = spread * Rat(t) / 8;
            Rat eps(1, 1024);
            for (int attempt = 0; attempt < 12; ++attempt, eps /= 2) {
                DualFamily family;
                inst.clusters.assign(groups, {});
                for (std::size_t g = 0; g < groups; ++g) {
                    Rat base = lam * Rat(64 + static_cast<int>(g)) / 64;
                    for (int m = 0; m < s; ++m) {
                        inst.clusters[g].push_back(family.members.size());
                        family.members.push_back(
                            {cluster_label(g, m), Homothet{centers[g], base * (1 + Rat(m) * eps)}});
                    }
                }
                std::vector<Vec2> witnesses;
                if (pair_masks_present(family, &witnesses)) {
                    inst.family = family;
                    inst.witness_points = witnesses;
                    return inst;
                }
                if (s == 1) break;  // nothing to shrink without copies
            }
        }
    }
    throw internal_fault("no scaling found that realizes every cluster pair as a depth point");
}

bool check_lowerbound(const LowerBoundInstance& instance, int palette_size) {
    if (palette_size < 1) throw validation_error("palette must be positive");
    const std::size_t n =
        instance.dual ? instance.family.members.size() : instance.points.size();
    if (n == 0) throw validation_error("empty lower-bound instance");
    if (n > 16) throw budget_exhausted("exhaustive coloring search is limited to 16 vertices");

    // Witness hyperedges, re-evaluated exactly from the stored witnesses.
    std::vector<std::vector<std::size_t>> edges;
    if (instance.dual) {
        for (const Vec2& p : instance.witness_points) {
            std::vector<std::size_t> e;
            for (std::size_t m = 0; m < n; ++m)
                if (homothet_contains(instance.range, instance.family.members[m].h, p))
                    e.push_back(m);
            edges.push_back(std::move(e));
        }
    } else {
        for (const Homothet& w : instance.witness_ranges) {
            std::vector<std::size_t> e;
            for (std::size_t m = 0; m < n; ++m)
                if (homothet_contains(instance.range, w, instance.points[m].p)) e.push_back(m);
            edges.push_back(std::move(e));
        }
    }

    // Restricted-growth enumeration of colorings with at most palette_size
    // classes; a coloring "survives" when every witness hyperedge sees
    // min(size, k) distinct colors. Pruned on completed hyperedges.
    std::vector<int> color(n, -1);
    std::vector<std::vector<std::size_t>> edges_of(n);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t v : edges[e]) edges_of[v].push_back(e);
    std::vector<std::size_t> remaining(edges.size());
    std::vector<std::set<int>> seen_colors(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) remaining[e] = edges[e].size();

    std::function<bool(std::size_t, int)> survives = [&](std::size_t v, int used) -> bool {
        if (v == n) return true;  // a valid coloring exists
        int limit = std::min(used + 1, palette_size);
        for (int c = 0; c < limit; ++c) {
            color[v] = c;
            bool feasible = true;
            std::vector<std::pair<std::size_t, bool>> touched;
            for (std::size_t e : edges_of[v]) {
                bool inserted = seen_colors[e].insert(c).second;
                touched.push_back({e, inserted});
                --remaining[e];
                std::size_t need =
                    std::min(edges[e].size(), static_cast<std::size_t>(instance.k));
                if (seen_colors[e].size() + remaining[e] < need) feasible = false;
            }
            if (feasible && survives(v + 1, std::max(used, c + 1))) return true;
            for (auto& [e, inserted] : touched) {
                ++remaining[e];
                if (inserted) seen_colors[e].erase(c);
            }
            color[v] = -1;
        }
        return false;
    };

    return !survives(0, 0);
}

}  // namespace homcolor
