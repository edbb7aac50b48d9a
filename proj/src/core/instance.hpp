#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dual.hpp"
#include "dominance.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "lowerbound.hpp"

namespace homcolor {

enum class InstanceKind { Primal, Dual, Realizer3d };

std::string kind_name(InstanceKind k);

// Parsed instance file. Rationals are serialized as [numerator,
// denominator] integer pairs (decimal strings beyond 64 bits), vertices
// and 2D points as [xn, xd, yn, yd].
struct Instance {
    InstanceKind kind = InstanceKind::Primal;
    std::optional<ConvexRange> range;     // primal/dual
    std::vector<LabeledPoint> points;     // primal
    DualFamily family;                    // dual
    std::vector<LabeledPoint3> realizer;  // realizer3d

    // Present on generated lower-bound instances.
    struct LowerBoundBlock {
        int k = 2;
        int bound = 4;
        bool weak_variant = false;
        std::vector<std::vector<std::size_t>> clusters;
        std::vector<Homothet> witness_ranges;  // primal instances
        std::vector<Vec2> witness_points;      // dual instances
    };
    std::optional<LowerBoundBlock> lowerbound;

    std::vector<std::string> labels() const;
};

Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst);  // canonical form

Instance instance_from_lowerbound(const LowerBoundInstance& lb);
LowerBoundInstance lowerbound_from_instance(const Instance& inst);

// Coloring files: one "label index" line per vertex, instance order;
// lines starting with '#' are comments.
std::string write_coloring(const std::vector<std::string>& labels, const Coloring& coloring);
Coloring parse_coloring(const std::string& text, const std::vector<std::string>& labels);

}  // namespace homcolor
