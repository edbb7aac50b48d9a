#include "coloring.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <numeric>

#include "rational.hpp"

namespace homcolor {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.size());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    int idx = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei)
        boost::put(boost::edge_index, bg, *ei, idx++);
    return bg;
}

}  // namespace

PlanarityResult planarity_check(const Graph& g) {
    PlanarityResult res;
    if (g.size() == 0) {
        res.planar = true;
        return res;
    }
    BoostGraph bg = to_boost(g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
    std::vector<Edge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    res.planar = planar;
    if (planar) {
        res.embedding.resize(g.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            for (const Edge& e : embedding[v]) {
                std::size_t a = boost::source(e, bg), b = boost::target(e, bg);
                res.embedding[v].push_back(a == v ? b : a);
            }
    } else {
        for (const Edge& e : kuratowski)
            res.kuratowski.push_back({boost::source(e, bg), boost::target(e, bg)});
    }
    return res;
}

namespace {

// DSATUR-ordered backtracking over one connected component.
struct FourColorSearch {
    const std::vector<std::vector<std::size_t>>& adj;
    const std::vector<std::size_t>& comp;  // vertices of this component
    std::vector<int>& color;               // global color array, -1 = unset
    std::uint64_t& nodes;
    std::uint64_t budget;

    bool run() {
        std::size_t assigned = 0;
        return descend(assigned);
    }

    bool descend(std::size_t assigned) {
        if (assigned == comp.size()) return true;
        if (++nodes > budget) throw budget_exhausted("4-coloring node budget exhausted");

        // Pick the uncolored vertex with maximum saturation, ties by degree,
        // then by smallest index: deterministic.
        std::size_t best = SIZE_MAX;
        int best_sat = -1;
        std::size_t best_deg = 0;
        for (std::size_t v : comp) {
            if (color[v] >= 0) continue;
            int mask = 0;
            for (std::size_t w : adj[v])
                if (color[w] >= 0) mask |= 1 << color[w];
            int sat = __builtin_popcount(mask);
            std::size_t deg = adj[v].size();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }

        int forbidden = 0;
        for (std::size_t w : adj[best])
            if (color[w] >= 0) forbidden |= 1 << color[w];
        for (int c = 0; c < 4; ++c) {
            if (forbidden & (1 << c)) continue;
            color[best] = c;
            if (descend(assigned + 1)) return true;
            color[best] = -1;
        }
        return false;
    }
};

std::vector<std::vector<std::size_t>> components(const Graph& g) {
    std::vector<int> comp_of(g.size(), -1);
    auto adj = g.adjacency();
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<std::size_t> stack{s}, members;
        comp_of[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (std::size_t w : adj[v])
                if (comp_of[w] < 0) {
                    comp_of[w] = comp_of[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

}  // namespace

Coloring color_planar_4(const Graph& g, std::uint64_t node_budget) {
    Coloring result;
    result.color.assign(g.size(), -1);
    if (g.size() == 0) {
        result.palette = 0;
        return result;
    }
    auto adj = g.adjacency();
    std::uint64_t nodes = 0;
    for (const auto& comp : components(g)) {
        FourColorSearch search{adj, comp, result.color, nodes, node_budget};
        if (!search.run())
            throw internal_fault("planar graph admitted no 4-coloring (planarity violated?)");
    }
    int maxc = -1;
    for (int c : result.color) maxc = std::max(maxc, c);
    result.palette = maxc + 1;
    return result;
}

Coloring color_planar_5(const Graph& g) {
    // Contraction algorithm: find a vertex of degree <= 5; if it has degree
    // 5, merge two non-adjacent neighbors (they exist in a planar graph),
    // recurse, then expand. Runs on a union-find over merged groups.
    const std::size_t n = g.size();
    Coloring result;
    result.color.assign(n, -1);
    if (n == 0) {
        result.palette = 0;
        return result;
    }

    std::vector<std::set<std::size_t>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> alive(n, true);
    struct Step {
        std::size_t v;                      // removed or absorbed vertex
        bool merge;                         // true: v absorbed into `into`
        std::size_t into = SIZE_MAX;
        std::vector<std::size_t> neighbors;  // at removal time (for removals)
    };
    std::vector<Step> steps;
    std::size_t remaining = n;

    auto absorb = [&](std::size_t a, std::size_t b) {
        // b disappears into a; edges of b transfer to a.
        for (std::size_t w : adj[b]) {
            adj[w].erase(b);
            if (w != a) {
                adj[w].insert(a);
                adj[a].insert(w);
            }
        }
        adj[b].clear();
        adj[a].erase(b);
        alive[b] = false;
        --remaining;
    };

    while (remaining > 0) {
        std::size_t v = SIZE_MAX;
        for (std::size_t u = 0; u < n; ++u)
            if (alive[u] && adj[u].size() <= 4) {
                v = u;
                break;
            }
        if (v != SIZE_MAX) {
            steps.push_back({v, false, SIZE_MAX, {adj[v].begin(), adj[v].end()}});
            for (std::size_t w : adj[v]) adj[w].erase(v);
            adj[v].clear();
            alive[v] = false;
            --remaining;
            continue;
        }
        for (std::size_t u = 0; u < n && v == SIZE_MAX; ++u)
            if (alive[u] && adj[u].size() == 5) v = u;
        if (v == SIZE_MAX)
            throw internal_fault("no vertex of degree <= 5: graph is not planar");
        // Two non-adjacent neighbors of v exist, else K6 minor.
        std::vector<std::size_t> nb(adj[v].begin(), adj[v].end());
        std::size_t a = SIZE_MAX, b = SIZE_MAX;
        for (std::size_t i = 0; i < nb.size() && a == SIZE_MAX; ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]].count(nb[j])) {
                    a = nb[i];
                    b = nb[j];
                    break;
                }
        if (a == SIZE_MAX)
            throw internal_fault("degree-5 vertex with a K5 neighborhood: not planar");
        steps.push_back({b, true, a, {}});
        absorb(a, b);
    }

    // Replay in reverse, assigning the smallest color allowed. Every
    // recorded neighbor disappears later in forward time, so its color is
    // already set here; a merged vertex copies its group representative
    // (group members are pairwise non-adjacent in the original graph).
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->merge) {
            if (result.color[it->into] < 0)
                throw internal_fault("5-coloring replay: representative uncolored");
            result.color[it->v] = result.color[it->into];
            continue;
        }
        bool used[5] = {false, false, false, false, false};
        for (std::size_t w : it->neighbors) {
            if (result.color[w] < 0)
                throw internal_fault("5-coloring replay: neighbor uncolored");
            if (result.color[w] < 5) used[result.color[w]] = true;
        }
        for (int c = 0; c < 5; ++c)
            if (!used[c]) {
                result.color[it->v] = c;
                break;
            }
        if (result.color[it->v] < 0)
            throw internal_fault("5-coloring replay found no free color");
    }

    int maxc = -1;
    for (int c : result.color) maxc = std::max(maxc, c);
    result.palette = maxc + 1;
    if (!is_proper(g, result)) throw internal_fault("5-coloring produced an improper coloring");
    return result;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    const std::size_t n = g.size();
    DegeneracyOrder out;
    auto adj = g.adjacency();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].size();

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = SIZE_MAX;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == SIZE_MAX || deg[v] < deg[best])) best = v;
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        out.order.push_back(best);
        removed[best] = true;
        for (std::size_t w : adj[best])
            if (!removed[w]) --deg[w];
    }
    return out;
}

Coloring greedy_color(const Graph& g, const std::vector<std::size_t>& order) {
    if (order.size() != g.size()) throw validation_error("order must be a permutation");
    Coloring result;
    result.color.assign(g.size(), -1);
    auto adj = g.adjacency();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        std::vector<bool> used(g.size() + 1, false);
        for (std::size_t w : adj[v])
            if (result.color[w] >= 0) used[result.color[w]] = true;
        int c = 0;
        while (used[c]) ++c;
        result.color[v] = c;
        result.palette = std::max(result.palette, c + 1);
    }
    return result;
}

}  // namespace homcolor
