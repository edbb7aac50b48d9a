#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "coloring.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "sweep.hpp"

namespace homcolor {

// Edge provenance: a homothet covering exactly the two endpoints, or the
// lexicographic tie rule applied to a homothet with more than three
// boundary points.
struct WitnessHomothet {
    Homothet h;
};
struct WitnessLexRule {
    Homothet h;
    std::vector<std::string> covered;  // labels of the covered set
};
using EdgeWitness = std::variant<WitnessHomothet, WitnessLexRule>;

struct DelaunayGraph {
    Graph graph;  // vertices in point-set order
    std::map<std::pair<std::size_t, std::size_t>, EdgeWitness> witnesses;
};

struct VerifyReport {
    bool pass = true;
    std::string message;                     // first violation, human readable
    std::optional<Homothet> witness;         // violating homothet (primal)
    std::vector<std::string> covered_labels; // covered set of the violation
};

// Proximity graph of the point set under homothets of the range: pq is an
// edge iff some homothet covers exactly {p, q}; homothets with more than
// three boundary points additionally contribute a triangle on the three
// lexicographically smallest covered points.
DelaunayGraph build_delaunay(const ConvexRange& range, const PointSet& points,
                             unsigned workers = 1);

// One covering-exactly witness for the pair, if any.
std::optional<Homothet> edge_witness(const ConvexRange& range, const PointSet& points,
                                     std::size_t p, std::size_t q);

// At most 4 colors such that every homothet covering >= 2 points covers
// two of distinct colors.
Coloring color_primal(const ConvexRange& range, const PointSet& points, unsigned workers = 1,
                      std::uint64_t node_budget = kDefaultColorBudget);

// Exhaustive re-enumeration of minimal candidate homothets; reports the
// first one whose covered set (>= 2 points) is monochromatic.
VerifyReport verify_primal(const ConvexRange& range, const PointSet& points,
                           const Coloring& coloring, unsigned workers = 1);

// Exact parameter-space system for the instance; shared with tests.
ConeSystem primal_cone_system(const ConvexRange& range, const PointSet& points, Int& scale_out);

// Every candidate covered set of size >= 2 contains a graph edge; returns
// the first counterexample, if any (test support for the edge-coverage
// property).
std::optional<std::vector<std::string>> primal_uncovered_candidate(const ConvexRange& range,
                                                                   const PointSet& points,
                                                                   const DelaunayGraph& dg);

}  // namespace homcolor
