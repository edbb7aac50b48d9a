#pragma once

// Shared fixture ranges and small builders for the test suites.

#include <random>
#include <string>
#include <vector>

#include "core/dual.hpp"
#include "core/geometry.hpp"

namespace homcolor::testshapes {

inline ConvexRange unit_square() {
    return ConvexRange({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(-1)}});
}

inline ConvexRange triangle() {
    return ConvexRange({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}});
}

inline ConvexRange hexagon() {
    return ConvexRange({{Rat(2), Rat(0)},
                        {Rat(1), Rat(2)},
                        {Rat(-1), Rat(2)},
                        {Rat(-2), Rat(0)},
                        {Rat(-1), Rat(-2)},
                        {Rat(1), Rat(-2)}});
}

inline ConvexRange pentagon() {
    return ConvexRange({{Rat(2), Rat(0)},
                        {Rat(1), Rat(2)},
                        {Rat(-1), Rat(1)},
                        {Rat(-2), Rat(-1)},
                        {Rat(0), Rat(-2)}});
}

inline ConvexRange shape_by_index(int i) {
    switch (i % 3) {
        case 0: return unit_square();
        case 1: return triangle();
        default: return hexagon();
    }
}

inline PointSet points_of(const std::vector<std::pair<long long, long long>>& coords) {
    std::vector<LabeledPoint> pts;
    for (std::size_t i = 0; i < coords.size(); ++i)
        pts.push_back({"p" + std::to_string(i), {Rat(coords[i].first), Rat(coords[i].second)}});
    return PointSet(std::move(pts));
}

inline PointSet random_points(std::mt19937_64& rng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    std::set<std::pair<long long, long long>> seen;
    std::vector<LabeledPoint> pts;
    while (pts.size() < n) {
        auto c = std::make_pair(d(rng), d(rng));
        if (!seen.insert(c).second) continue;
        pts.push_back({"p" + std::to_string(pts.size()), {Rat(c.first), Rat(c.second)}});
    }
    return PointSet(std::move(pts));
}

inline DualFamily random_family(std::mt19937_64& rng, std::size_t n, long long lo, long long hi,
                                int lam_den = 2, int lam_max_num = 8, bool plant_contained = false) {
    std::uniform_int_distribution<long long> d(lo, hi);
    std::uniform_int_distribution<int> lam(1, lam_max_num);
    DualFamily fam;
    for (std::size_t i = 0; i < n; ++i) {
        Homothet h{{Rat(d(rng)), Rat(d(rng))}, Rat(lam(rng), lam_den)};
        if (plant_contained && i > 0 && i % 5 == 0) {
            // shrink inside the previous member to exercise the contained set
            const Homothet& outer = fam.members.back().h;
            h = Homothet{outer.center, outer.scaling / 2};
        }
        fam.members.push_back({"h" + std::to_string(i), h});
    }
    return fam;
}

}  // namespace homcolor::testshapes
