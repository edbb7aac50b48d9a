#include "primal.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "parallel.hpp"
#include "sweep_clients.hpp"

namespace homcolor {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

// Lexicographic order on coordinates with the point index as the symbolic
// perturbation tie-break.
std::vector<std::size_t> lex_rank(const PointSet& points) {
    std::vector<std::size_t> idx(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points.points()[a].p, points.points()[b].p);
    });
    std::vector<std::size_t> rank(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = i;
    return rank;
}

Homothet unscale(const Vec3& u, const Int& scale) {
    Rat l(scale);
    return Homothet{{u.x / l, u.y / l}, u.z / l};
}

struct VerifyClient final : SweepClient {
    const std::vector<int>* color;
    std::vector<int> per_color;
    std::size_t count = 0;
    int distinct = 0;

    bool violated = false;
    std::vector<std::size_t> covered;
    std::optional<Vec3> where;

    std::vector<char> active;

    void begin(std::size_t n, int palette) {
        active.assign(n, 0);
        per_color.assign(std::max(palette, 1), 0);
        count = 0;
        distinct = 0;
    }

    void open(std::size_t r) override {
        active[r] = 1;
        ++count;
        if (++per_color[(*color)[r]] == 1) ++distinct;
    }
    void close(std::size_t r) override {
        active[r] = 0;
        --count;
        if (--per_color[(*color)[r]] == 0) --distinct;
    }

    bool state(const SweepStateView& view) override {
        if (count >= 2 && distinct == 1) {
            if (auto u = view.sample()) {
                violated = true;
                where = *u;
                covered.clear();
                for (std::size_t r = 0; r < active.size(); ++r)
                    if (active[r]) covered.push_back(r);
                return true;
            }
        }
        return false;
    }
};

struct CoverageClient final : SweepClient {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<char> active;
    std::size_t count = 0;
    std::size_t active_edges = 0;

    bool failed = false;
    std::vector<std::size_t> covered;

    void begin(const Graph& g) {
        adj = g.adjacency();
        active.assign(g.size(), 0);
        count = 0;
        active_edges = 0;
    }

    void open(std::size_t r) override {
        for (std::size_t w : adj[r])
            if (active[w]) ++active_edges;
        active[r] = 1;
        ++count;
    }
    void close(std::size_t r) override {
        active[r] = 0;
        --count;
        for (std::size_t w : adj[r])
            if (active[w]) --active_edges;
    }

    bool state(const SweepStateView&) override {
        if (count >= 2 && active_edges == 0) {
            failed = true;
            covered.clear();
            for (std::size_t r = 0; r < active.size(); ++r)
                if (active[r]) covered.push_back(r);
            return true;
        }
        return false;
    }
};

struct EdgeOnlyClient final : SweepClient {
    std::size_t a, b;
    std::vector<char> active;
    std::size_t count = 0;
    bool a_active = false, b_active = false;
    std::optional<Vec3> witness;

    void begin(std::size_t pa, std::size_t pb, std::size_t n) {
        a = pa;
        b = pb;
        active.assign(n, 0);
        count = 0;
        a_active = b_active = false;
    }
    void open(std::size_t r) override {
        active[r] = 1;
        ++count;
        if (r == a) a_active = true;
        if (r == b) b_active = true;
    }
    void close(std::size_t r) override {
        active[r] = 0;
        --count;
        if (r == a) a_active = false;
        if (r == b) b_active = false;
    }
    bool state(const SweepStateView& view) override {
        if (count == 2 && a_active && b_active) {
            if (auto u = view.sample()) {
                witness = *u;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

ConeSystem primal_cone_system(const ConvexRange& range, const PointSet& points, Int& scale_out) {
    Int scale = 1;
    for (const auto& lp : points.points()) {
        scale = lcm_int(scale, denominator(lp.p.x));
        scale = lcm_int(scale, denominator(lp.p.y));
    }
    scale_out = scale;

    ConeSystem sys;
    sys.positive_z = true;
    for (const Facet& f : range.facets()) sys.mu.push_back({-f.ax, -f.ay, -f.b});
    sys.rhs.resize(points.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        const Vec2& p = points.points()[r].p;
        Int px = numerator(p.x) * (scale / denominator(p.x));
        Int py = numerator(p.y) * (scale / denominator(p.y));
        sys.rhs[r].reserve(range.facet_count());
        for (const Facet& f : range.facets()) sys.rhs[r].push_back(-(f.ax * px + f.ay * py));
    }
    sys.finalize();
    return sys;
}

std::optional<Homothet> edge_witness(const ConvexRange& range, const PointSet& points,
                                     std::size_t p, std::size_t q) {
    if (p == q || p >= points.size() || q >= points.size())
        throw validation_error("edge_witness needs two distinct member points");
    Int scale;
    ConeSystem sys = primal_cone_system(range, points, scale);
    EdgeOnlyClient client;
    client.begin(p, q, points.size());
    sweep_pair_all_lines(sys, p, q, client);
    if (!client.witness) return std::nullopt;
    return unscale(*client.witness, scale);
}

DelaunayGraph build_delaunay(const ConvexRange& range, const PointSet& points, unsigned workers) {
    const std::size_t n = points.size();
    std::vector<std::string> labels;
    for (const auto& lp : points.points()) labels.push_back(lp.label);
    DelaunayGraph out{Graph(std::move(labels)), {}};
    if (n < 2) return out;

    Int scale;
    ConeSystem sys = primal_cone_system(range, points, scale);
    std::vector<std::size_t> rank = lex_rank(points);

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
        out.witnesses.insert({{a, b}, WitnessHomothet{unscale(*pair_witness[pi], scale)}});
    }
    std::set<std::array<std::size_t, 3>> seen_triples;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        for (auto& hit : rule_hits[pi]) {
            auto sorted = hit.tri;
            std::sort(sorted.begin(), sorted.end());
            if (!seen_triples.insert(sorted).second) continue;
            std::vector<std::string> covered_labels;
            for (std::size_t r : hit.covered) covered_labels.push_back(points.points()[r].label);
            Homothet h = unscale(hit.sample, scale);
            for (int e = 0; e < 3; ++e) {
                std::size_t u = sorted[e], v = sorted[(e + 1) % 3];
                if (u > v) std::swap(u, v);
                if (!out.graph.has_edge(u, v)) {
                    out.graph.add_edge(u, v);
                    out.witnesses.insert({{u, v}, WitnessLexRule{h, covered_labels}});
                }
            }
        }
    }
    return out;
}

Coloring color_primal(const ConvexRange& range, const PointSet& points, unsigned workers,
                      std::uint64_t node_budget) {
    DelaunayGraph dg = build_delaunay(range, points, workers);
    PlanarityResult pl = planarity_check(dg.graph);
    if (!pl.planar)
        throw internal_fault("proximity graph failed the planarity test");
    try {
        return color_planar_4(dg.graph, node_budget);
    } catch (const budget_exhausted& e) {
        throw internal_fault(std::string("4-coloring search exhausted its budget: ") + e.what());
    }
}

VerifyReport verify_primal(const ConvexRange& range, const PointSet& points,
                           const Coloring& coloring, unsigned workers) {
    VerifyReport report;
    if (coloring.color.size() != points.size())
        throw validation_error("coloring must cover every point");
    const std::size_t n = points.size();
    if (n < 2) return report;

    Int scale;
    ConeSystem sys = primal_cone_system(range, points, scale);
    auto pairs = index_pairs(n);

    std::mutex mu;
    bool found = false;
    VerifyReport first;
    std::size_t first_pi = SIZE_MAX;

    parallel_for(pairs.size(), workers, [&](std::size_t pi) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (found && pi > first_pi) return;
        }
        VerifyClient client;
        client.color = &coloring.color;
        client.begin(n, coloring.palette);
        sweep_pair_all_lines(sys, pairs[pi].first, pairs[pi].second, client);
        if (client.violated) {
            std::lock_guard<std::mutex> lock(mu);
            if (!found || pi < first_pi) {
                found = true;
                first_pi = pi;
                first.pass = false;
                first.witness = unscale(*client.where, scale);
                first.covered_labels.clear();
                for (std::size_t r : client.covered)
                    first.covered_labels.push_back(points.points()[r].label);
            }
        }
    });

    if (found) {
        first.message = "monochromatic homothet covering";
        for (const auto& l : first.covered_labels) first.message += " " + l;
        return first;
    }
    return report;
}

std::optional<std::vector<std::string>> primal_uncovered_candidate(const ConvexRange& range,
                                                                   const PointSet& points,
                                                                   const DelaunayGraph& dg) {
    const std::size_t n = points.size();
    if (n < 2) return std::nullopt;
    Int scale;
    ConeSystem sys = primal_cone_system(range, points, scale);
    for (auto [a, b] : index_pairs(n)) {
        CoverageClient client;
        client.begin(dg.graph);
        sweep_pair_all_lines(sys, a, b, client);
        if (client.failed) {
            std::vector<std::string> labels;
            for (std::size_t r : client.covered) labels.push_back(points.points()[r].label);
            return labels;
        }
    }
    return std::nullopt;
}

}  // namespace homcolor
