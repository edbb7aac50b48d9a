#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homcolor {

// Simple undirected graph over labeled vertices. Vertices are addressed by
// index; labels are carried for I/O and reports. Edges are stored as a
// sorted set of index pairs (lo, hi), so the structure is canonical for a
// given label order.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<std::vector<std::size_t>> adjacency() const;

    // Subgraph induced by `keep` (indices into this graph). The i-th vertex
    // of the result is keep[i].
    Graph induced(const std::vector<std::size_t>& keep) const;

  private:
    std::vector<std::string> labels_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// Proper-coloring result shared by every engine: vertex -> 0-based color.
struct Coloring {
    std::vector<int> color;
    int palette = 0;  // number of colors used
};

bool is_proper(const Graph& g, const Coloring& c);

// DOT round-trip for undirected graphs. The writer emits a canonical form;
// the reader accepts the subset the writer produces (node and edge
// statements, quoted or bare identifiers).
std::string graph_to_dot(const Graph& g, const std::string& name = "G");
std::string graph_to_dot(const Graph& g, const Coloring& coloring,
                         const std::string& name = "G");
Graph graph_from_dot(const std::string& text);

}  // namespace homcolor
