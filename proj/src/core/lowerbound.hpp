#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dual.hpp"
#include "geometry.hpp"

namespace homcolor {

// Four clusters of floor(k/2) vertices arranged so every cluster pair is
// isolated by a witness: ranges for the primal side, depth points for the
// dual side. Parallelogram-like ranges only support a three-cluster
// variant with the correspondingly weaker bound.
struct LowerBoundInstance {
    ConvexRange range;
    bool dual = false;
    int k = 2;
    int bound = 4;                  // 4*floor(k/2), or 3*floor(k/2) weak form
    bool weak_variant = false;      // reconstructed parallelogram variant
    std::vector<std::vector<std::size_t>> clusters;

    std::vector<LabeledPoint> points;      // primal instances
    std::vector<Homothet> witness_ranges;  // primal: one per cluster pair

    DualFamily family;                     // dual instances
    std::vector<Vec2> witness_points;      // dual: one per cluster pair
};

LowerBoundInstance gen_lowerbound_primal(const ConvexRange& range, int k);
LowerBoundInstance gen_lowerbound_dual(const ConvexRange& range, int k);

// True iff every coloring with the given palette (enumerated up to color
// symmetry) leaves some witness hyperedge with fewer than min(size, k)
// distinct colors. Guardrail: at most 16 vertices.
bool check_lowerbound(const LowerBoundInstance& instance, int palette_size);

}  // namespace homcolor
