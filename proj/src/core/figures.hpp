#pragma once

#include <string>

#include "dual.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "primal.hpp"

namespace homcolor {

// Static SVG figures. Coordinates are rendered in floating point; the
// output is for inspection only and is byte-stable for identical inputs.

// Point set with graph edges and, when given, the per-edge witness
// homothet outlines.
std::string svg_primal(const ConvexRange& range, const PointSet& points,
                       const DelaunayGraph* graph);

// Homothet family with dual-graph edges drawn between centers.
std::string svg_dual(const ConvexRange& range, const DualFamily& family, const DualGraph* graph);

// Planar projection of the lifted configuration: centers as nodes, each
// edge drawn through the projection of its witness apex.
std::string svg_lifted(const DualFamily& family, const DualGraph& graph);

}  // namespace homcolor
