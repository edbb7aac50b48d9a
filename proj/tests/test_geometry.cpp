#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/geometry.hpp"
#include "oracles.hpp"
#include "shapes.hpp"

using namespace homcolor;
using namespace homcolor::testshapes;

namespace {

Rat rr(std::mt19937_64& rng, int lo = -8, int hi = 8, int den_max = 4) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, den_max);
    return Rat(num(rng), den(rng));
}

Vec2 rv(std::mt19937_64& rng) { return {rr(rng), rr(rng)}; }

}  // namespace

TEST_CASE("range construction validates its input") {
    CHECK_THROWS_AS(ConvexRange({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}), validation_error);
    // origin on the boundary
    CHECK_THROWS_AS(ConvexRange({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}),
                    validation_error);
    // origin outside
    CHECK_THROWS_AS(ConvexRange({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}}),
                    validation_error);
    // flat (collinear) polygon
    CHECK_THROWS_AS(ConvexRange({{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}}),
                    validation_error);
    // clockwise order is rejected, not silently fixed
    CHECK_THROWS_AS(ConvexRange({{Rat(1), Rat(-1)}, {Rat(-1), Rat(-1)}, {Rat(-1), Rat(1)},
                                 {Rat(1), Rat(1)}}),
                    validation_error);
    CHECK_NOTHROW(unit_square());
    CHECK_NOTHROW(triangle());
    CHECK_NOTHROW(hexagon());
    CHECK_NOTHROW(pentagon());
}

TEST_CASE("gauge of the unit square is the max norm") {
    ConvexRange sq = unit_square();
    CHECK(sq.gauge({Rat(3), Rat(1)}) == Rat(3));
    CHECK(sq.gauge({Rat(0), Rat(0)}) == Rat(0));
    CHECK(sq.gauge({Rat(-2), Rat(-5)}) == Rat(5));
}

TEST_CASE("gauge of the triangle at (-1,0) is 2") {
    // The ray toward (-1, 0) leaves the triangle at (-1/2, 0).
    ConvexRange tr = triangle();
    CHECK(tr.gauge({Rat(-1), Rat(0)}) == Rat(2));
    CHECK(oracle::gauge_by_ray(tr, {Rat(-1), Rat(0)}) == Rat(2));
}

TEST_CASE("gauge properties on random rational vectors") {
    std::mt19937_64 rng(20240811);
    for (int shape = 0; shape < 3; ++shape) {
        ConvexRange range = shape_by_index(shape);
        for (int it = 0; it < 200; ++it) {
            Vec2 v = rv(rng), w = rv(rng);
            Rat gv = range.gauge(v);
            CHECK(gv >= 0);
            CHECK((gv == 0) == (v.x == 0 && v.y == 0));
            // positive homogeneity
            Rat c = abs(rr(rng)) + Rat(1, 3);
            CHECK(range.gauge(c * v) == c * gv);
            // triangle inequality (subadditivity)
            CHECK(range.gauge(v + w) <= gv + range.gauge(w));
            // agreement with the ray-casting oracle
            CHECK(gv == oracle::gauge_by_ray(range, v));
        }
    }
}

TEST_CASE("convex distance examples and asymmetry") {
    ConvexRange sq = unit_square();
    CHECK(sq.distance({Rat(0), Rat(0)}, {Rat(3), Rat(1)}) == Rat(3));
    CHECK(sq.distance({Rat(2), Rat(2)}, {Rat(2), Rat(2)}) == Rat(0));

    ConvexRange tr = triangle();
    CHECK(tr.distance({Rat(0), Rat(0)}, {Rat(1), Rat(0)}) == Rat(1));
    CHECK(tr.distance({Rat(1), Rat(0)}, {Rat(0), Rat(0)}) == Rat(2));
}

TEST_CASE("reflection identities") {
    ConvexRange sq = unit_square();
    CHECK(sq.reflected().same_polygon(sq));  // centrally symmetric

    ConvexRange tr = triangle();
    ConvexRange expected({{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(1)}});
    CHECK(tr.reflected().same_polygon(expected));
    CHECK(tr.reflected().reflected().same_polygon(tr));

    // d(p, q) with the original range equals the reflected gauge of p - q.
    std::mt19937_64 rng(77);
    ConvexRange refl = tr.reflected();
    for (int it = 0; it < 100; ++it) {
        Vec2 p = rv(rng), q = rv(rng);
        CHECK(tr.distance(p, q) == refl.gauge(p - q));
    }
}

TEST_CASE("homothet membership classification") {
    ConvexRange sq = unit_square();
    CHECK(homothet_side(sq, {{Rat(0), Rat(0)}, Rat(1)}, {Rat(1), Rat(1)}) == Side::Boundary);
    CHECK(homothet_side(sq, {{Rat(0), Rat(0)}, Rat(1)}, {Rat(2), Rat(0)}) == Side::Outside);
    CHECK(homothet_side(sq, {{Rat(5), Rat(5)}, Rat(2)}, {Rat(5), Rat(5)}) == Side::Interior);
}

TEST_CASE("membership agrees with the vertex-polygon oracle") {
    std::mt19937_64 rng(123456);
    for (int shape = 0; shape < 3; ++shape) {
        ConvexRange range = shape_by_index(shape);
        for (int it = 0; it < 300; ++it) {
            Homothet h{rv(rng), abs(rr(rng)) + Rat(1, 2)};
            Vec2 p = rv(rng);
            CHECK(homothet_side(range, h, p) == oracle::side_by_vertex_polygon(range, h, p));
        }
    }
}

TEST_CASE("containment of homothets") {
    ConvexRange sq = unit_square();
    CHECK(contained_in(sq, {{Rat(0), Rat(0)}, Rat(1)}, {{Rat(0), Rat(0)}, Rat(2)}));
    CHECK(contained_in(sq, {{Rat(1, 2), Rat(0)}, Rat(1, 2)}, {{Rat(0), Rat(0)}, Rat(1)}));
    CHECK(!contained_in(sq, {{Rat(0), Rat(0)}, Rat(1)}, {{Rat(3), Rat(0)}, Rat(1)}));

    // Equivalent form: containment iff gauge(t1 - t2) <= l2 - l1.
    std::mt19937_64 rng(999);
    for (int shape = 0; shape < 3; ++shape) {
        ConvexRange range = shape_by_index(shape);
        for (int it = 0; it < 200; ++it) {
            Homothet h1{rv(rng), abs(rr(rng)) + Rat(1, 2)};
            Homothet h2{rv(rng), abs(rr(rng)) + Rat(1, 2)};
            bool direct = contained_in(range, h1, h2);
            bool via_gauge = range.gauge(h1.center - h2.center) <= h2.scaling - h1.scaling;
            CHECK(direct == via_gauge);
        }
    }
}

TEST_CASE("containment is a partial order on random triples") {
    std::mt19937_64 rng(31337);
    ConvexRange range = triangle();
    for (int it = 0; it < 150; ++it) {
        Homothet a{rv(rng), abs(rr(rng)) + Rat(1, 2)};
        Homothet b{rv(rng), abs(rr(rng)) + Rat(1, 2)};
        Homothet c{rv(rng), abs(rr(rng)) + Rat(1, 2)};
        CHECK(contained_in(range, a, a));
        if (contained_in(range, a, b) && contained_in(range, b, a))
            CHECK((a.center == b.center && a.scaling == b.scaling));
        if (contained_in(range, a, b) && contained_in(range, b, c))
            CHECK(contained_in(range, a, c));
    }
}

TEST_CASE("point sets flag duplicate coordinates but reject duplicate labels") {
    std::vector<LabeledPoint> pts{{"a", {Rat(0), Rat(0)}},
                                  {"b", {Rat(1), Rat(0)}},
                                  {"c", {Rat(0), Rat(0)}}};
    PointSet ps(pts);
    REQUIRE(ps.report().duplicate_groups.size() == 1);
    CHECK(ps.report().duplicate_groups[0] == std::vector<std::string>{"a", "c"});

    pts.push_back({"a", {Rat(5), Rat(5)}});
    CHECK_THROWS_AS(PointSet(pts), validation_error);
}
