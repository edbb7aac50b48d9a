#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "coloring.hpp"
#include "rational.hpp"

namespace homcolor {

namespace {

// Adds every edge that keeps the graph planar, in deterministic order.
// The result is simple and maximal planar, hence every face of every
// embedding is a triangle. Quadratic, which is fine at the sizes the
// coloring pipelines produce.
Graph maximal_planar_supergraph(const Graph& g) {
    Graph h(g.labels());
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (std::size_t u = 0; u < h.size(); ++u)
        for (std::size_t v = u + 1; v < h.size(); ++v) {
            if (h.has_edge(u, v)) continue;
            h.add_edge(u, v);
            if (!planarity_check(h).planar) h.remove_edge(u, v);
        }
    return h;
}

struct Triangulation {
    std::vector<std::array<std::size_t, 3>> faces;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edge_faces;

    static std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b) {
        return {std::min(a, b), std::max(a, b)};
    }

    const std::vector<std::size_t>& faces_of(std::size_t a, std::size_t b) const {
        return edge_faces.at(key(a, b));
    }
};

Triangulation build_faces(const Graph& h, const PlanarityResult& emb) {
    Triangulation tri;
    // Faces are the orbits of the next-edge map over directed edges.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rot_pos;
    for (std::size_t v = 0; v < h.size(); ++v)
        for (std::size_t k = 0; k < emb.embedding[v].size(); ++k)
            rot_pos[{v, emb.embedding[v][k]}] = k;

    std::set<std::pair<std::size_t, std::size_t>> visited;
    for (std::size_t v = 0; v < h.size(); ++v) {
        for (std::size_t u : emb.embedding[v]) {
            if (visited.count({v, u})) continue;
            std::vector<std::size_t> walk;
            std::size_t a = v, b = u;
            while (!visited.count({a, b})) {
                visited.insert({a, b});
                walk.push_back(a);
                std::size_t k = rot_pos.at({b, a});
                std::size_t deg = emb.embedding[b].size();
                std::size_t c = emb.embedding[b][(k + 1) % deg];
                a = b;
                b = c;
            }
            if (walk.size() != 3) throw internal_fault("triangulation face of length != 3");
            tri.faces.push_back({walk[0], walk[1], walk[2]});
        }
    }
    for (std::size_t f = 0; f < tri.faces.size(); ++f)
        for (int e = 0; e < 3; ++e)
            tri.edge_faces[Triangulation::key(tri.faces[f][e], tri.faces[f][(e + 1) % 3])]
                .push_back(f);
    for (auto& [k, fs] : tri.edge_faces)
        if (fs.size() != 2) throw internal_fault("triangulation edge not on two faces");
    return tri;
}

struct ListColorer {
    const Triangulation& tri;
    std::vector<std::vector<int>> lists;  // mutable working lists
    std::vector<int>& color;

    void remove_from_list(std::size_t v, int c) {
        auto& l = lists[v];
        l.erase(std::remove(l.begin(), l.end(), c), l.end());
    }

    // Colors every vertex of the disc other than cycle[0] and cycle[1],
    // which are precolored with distinct colors.
    void solve(std::vector<std::size_t> cycle, std::vector<char>& in_disc,
               std::size_t face_count) {
        const std::size_t p = cycle.size();

        if (face_count == 1) {
            // Triangle base case.
            std::size_t v3 = cycle[2];
            for (int c : lists[v3])
                if (c != color[cycle[0]] && c != color[cycle[1]]) {
                    color[v3] = c;
                    return;
                }
            throw internal_fault("list coloring: no color left at base triangle");
        }

        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < p; ++i) pos[cycle[i]] = i;

        // Chord: an edge of a disc face between non-consecutive cycle
        // vertices. Splitting there keeps both sides near-triangulated.
        for (std::size_t f = 0; f < tri.faces.size(); ++f) {
            if (!in_disc[f]) continue;
            for (int e = 0; e < 3; ++e) {
                std::size_t x = tri.faces[f][e], y = tri.faces[f][(e + 1) % 3];
                auto ix = pos.find(x), iy = pos.find(y);
                if (ix == pos.end() || iy == pos.end()) continue;
                std::size_t d = (ix->second + p - iy->second) % p;
                if (d == 1 || d == p - 1) continue;  // cycle edge
                split_on_chord(cycle, in_disc, face_count, std::min(ix->second, iy->second),
                               std::max(ix->second, iy->second));
                return;
            }
        }

        // No chord: peel the outer vertex next to cycle[0].
        peel_last(cycle, in_disc, face_count);
    }

    void split_on_chord(const std::vector<std::size_t>& cycle, std::vector<char>& in_disc,
                        std::size_t face_count, std::size_t i, std::size_t j) {
        const std::size_t p = cycle.size();
        std::size_t cx = cycle[i], cy = cycle[j];

        // Flood side A from one chord face, blocked by the chord itself;
        // the disc boundary bounds the flood on all other sides.
        const auto& chord_faces = tri.faces_of(cx, cy);
        std::vector<std::size_t> inside;
        for (std::size_t f : chord_faces)
            if (in_disc[f]) inside.push_back(f);
        if (inside.size() != 2) throw internal_fault("chord must border two disc faces");

        std::set<std::pair<std::size_t, std::size_t>> blocked;
        blocked.insert(Triangulation::key(cx, cy));
        for (std::size_t t = 0; t < p; ++t)
            blocked.insert(Triangulation::key(cycle[t], cycle[(t + 1) % p]));

        std::vector<char> side_a(tri.faces.size(), 0);
        std::vector<std::size_t> stack{inside[0]};
        side_a[inside[0]] = 1;
        std::size_t count_a = 1;
        while (!stack.empty()) {
            std::size_t f = stack.back();
            stack.pop_back();
            for (int e = 0; e < 3; ++e) {
                auto k = Triangulation::key(tri.faces[f][e], tri.faces[f][(e + 1) % 3]);
                if (blocked.count(k)) continue;
                for (std::size_t g2 : tri.edge_faces.at(k))
                    if (in_disc[g2] && !side_a[g2]) {
                        side_a[g2] = 1;
                        ++count_a;
                        stack.push_back(g2);
                    }
            }
        }

        // Which side holds the precolored edge (cycle[0], cycle[1])?
        std::size_t start_face = SIZE_MAX;
        for (std::size_t f : tri.faces_of(cycle[0], cycle[1]))
            if (in_disc[f]) start_face = f;
        if (start_face == SIZE_MAX)
            throw internal_fault("precolored edge lost from disc");
        bool colored_in_a = side_a[start_face];

        // Arc [i..j] closes through the chord; the other arc likewise.
        std::vector<std::size_t> arc_a, arc_b;
        for (std::size_t t = i; t <= j; ++t) arc_a.push_back(cycle[t]);
        for (std::size_t t = j;; t = (t + 1) % p) {
            arc_b.push_back(cycle[t]);
            if (t == i) break;
        }
        // arc_b currently runs j..i; as a cycle its edges are consecutive
        // pairs plus the chord (i -> j).

        // The arc containing the pair (cycle[0], cycle[1]) consecutively:
        // positions 0 and 1 sit in arc_a iff i == 0.
        std::vector<std::size_t> first_cycle, second_cycle;
        if (i == 0) {
            first_cycle = arc_a;
            second_cycle = arc_b;
        } else {
            // Rotate arc_b to start at cycle[0].
            std::size_t off = 0;
            while (arc_b[off] != cycle[0]) ++off;
            for (std::size_t t = 0; t < arc_b.size(); ++t)
                first_cycle.push_back(arc_b[(off + t) % arc_b.size()]);
            second_cycle = arc_a;
        }

        // Face sets per side.
        std::vector<char> first_faces(tri.faces.size(), 0), second_faces(tri.faces.size(), 0);
        std::size_t first_count = 0, second_count = 0;
        for (std::size_t f = 0; f < tri.faces.size(); ++f) {
            if (!in_disc[f]) continue;
            bool a = side_a[f];
            bool to_first = (a == colored_in_a);
            (to_first ? first_faces : second_faces)[f] = 1;
            (to_first ? first_count : second_count) += 1;
        }
        (void)count_a;
        (void)face_count;

        solve(first_cycle, first_faces, first_count);

        // Rotate the second side to start with the chord edge, now colored.
        std::vector<std::size_t>& sc = second_cycle;
        std::size_t off = 0;
        while (!((sc[off] == cx && sc[(off + 1) % sc.size()] == cy) ||
                 (sc[off] == cy && sc[(off + 1) % sc.size()] == cx)))
            ++off;
        std::vector<std::size_t> rotated;
        for (std::size_t t = 0; t < sc.size(); ++t) rotated.push_back(sc[(off + t) % sc.size()]);
        solve(rotated, second_faces, second_count);
    }

    void peel_last(const std::vector<std::size_t>& cycle, std::vector<char>& in_disc,
                   std::size_t face_count) {
        const std::size_t p = cycle.size();
        std::size_t v1 = cycle[0], vp = cycle[p - 1], vprev = cycle[p - 2];

        // Link of vp inside the disc: chain the opposite edges of its
        // incident faces into a path from v1 to v_{p-1}.
        std::map<std::size_t, std::vector<std::size_t>> link;
        std::size_t removed_faces = 0;
        for (std::size_t f = 0; f < tri.faces.size(); ++f) {
            if (!in_disc[f]) continue;
            const auto& tr = tri.faces[f];
            int at = -1;
            for (int e = 0; e < 3; ++e)
                if (tr[e] == vp) at = e;
            if (at < 0) continue;
            std::size_t a = tr[(at + 1) % 3], b = tr[(at + 2) % 3];
            link[a].push_back(b);
            link[b].push_back(a);
            in_disc[f] = 0;
            ++removed_faces;
        }
        std::vector<std::size_t> path{v1};
        std::size_t prev = SIZE_MAX, cur = v1;
        while (cur != vprev) {
            const auto& nb = link.at(cur);
            std::size_t nxt = SIZE_MAX;
            for (std::size_t w : nb)
                if (w != prev) nxt = w;
            if (nxt == SIZE_MAX) throw internal_fault("broken fan at boundary vertex");
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }

        // Reserve two colors for vp, distinct from color(v1); interior fan
        // vertices give both up so vp stays colorable afterwards.
        std::vector<int> avail;
        for (int c : lists[vp])
            if (c != color[v1]) avail.push_back(c);
        if (avail.size() < 2) throw internal_fault("list too small at boundary vertex");
        int c1 = avail[0], c2 = avail[1];
        for (std::size_t t = 1; t + 1 < path.size(); ++t) {
            remove_from_list(path[t], c1);
            remove_from_list(path[t], c2);
        }

        std::vector<std::size_t> new_cycle(cycle.begin(), cycle.end() - 1);
        for (std::size_t t = 1; t + 1 < path.size(); ++t) new_cycle.push_back(path[t]);

        solve(new_cycle, in_disc, face_count - removed_faces);

        color[vp] = (color[vprev] == c1) ? c2 : c1;
    }
};

}  // namespace

Coloring list_color_planar_5(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (lists.size() != g.size())
        throw validation_error("one color list per vertex required");
    for (const auto& l : lists)
        if (l.size() < 5) throw validation_error("every color list needs at least 5 colors");
    if (!planarity_check(g).planar)
        throw validation_error("list coloring requires a planar graph");

    Coloring result;
    result.color.assign(g.size(), -1);

    auto finish = [&]() {
        int maxc = 0;
        for (std::size_t v = 0; v < g.size(); ++v) maxc = std::max(maxc, result.color[v] + 1);
        result.palette = maxc;
        if (!is_proper(g, result))
            throw internal_fault("list coloring produced an improper coloring");
        for (std::size_t v = 0; v < g.size(); ++v)
            if (std::find(lists[v].begin(), lists[v].end(), result.color[v]) == lists[v].end())
                throw internal_fault("list coloring ignored a vertex list");
        return result;
    };

    if (g.size() <= 2) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            std::vector<int> sorted = lists[v];
            std::sort(sorted.begin(), sorted.end());
            for (int c : sorted) {
                bool clash = false;
                for (std::size_t w = 0; w < v; ++w)
                    if (g.has_edge(v, w) && result.color[w] == c) clash = true;
                if (!clash) {
                    result.color[v] = c;
                    break;
                }
            }
        }
        return finish();
    }

    Graph h = maximal_planar_supergraph(g);
    PlanarityResult emb = planarity_check(h);
    if (!emb.planar) throw internal_fault("maximal planar supergraph failed planarity");
    Triangulation tri = build_faces(h, emb);
    if (tri.faces.size() != 2 * h.size() - 4)
        throw internal_fault("unexpected face count in triangulation");

    ListColorer colorer{tri, lists, result.color};
    for (auto& l : colorer.lists) std::sort(l.begin(), l.end());

    // Outer face: face 0. The disc is everything else.
    std::vector<std::size_t> outer{tri.faces[0][0], tri.faces[0][1], tri.faces[0][2]};
    std::vector<char> in_disc(tri.faces.size(), 1);
    in_disc[0] = 0;

    result.color[outer[0]] = colorer.lists[outer[0]].front();
    for (int c : colorer.lists[outer[1]])
        if (c != result.color[outer[0]]) {
            result.color[outer[1]] = c;
            break;
        }

    colorer.solve(outer, in_disc, tri.faces.size() - 1);
    return finish();
}

}  // namespace homcolor
