#include <doctest.h>

#include "parasurf/errors.hpp"
#include "parasurf/surface.hpp"

using namespace parasurf;

TEST_CASE("vertices of the deformed polygon") {
    CHECK(vertex(0).position == PolyVec(Rat(0), Rat(0)));
    CHECK(vertex(1).position == PolyVec(Rat(1), Rat(1)));
    CHECK(vertex(-1).position == PolyVec(Rat(-1), Rat(1)));

    Poly c = Poly::variable();
    CHECK(vertex(2).position == PolyVec(c * Rat(2), c * Rat(2) + Poly(2)));

    SUBCASE("at the square parameter the vertices sit on the parabola") {
        for (long n = -6; n <= 6; ++n) {
            auto [x, y] = vertex(n).position.eval(1);
            CHECK(x == Rat(n));
            CHECK(y == Rat(n * n));
        }
    }

    SUBCASE("defining recurrence as a polynomial identity") {
        Poly cm1 = c - Poly(1), cp1 = c + Poly(1);
        for (long n = -4; n <= 4; ++n) {
            PolyVec v = vertex(n).position;
            PolyVec next(c * v.x + cm1 * v.y + Poly(1), cp1 * v.x + c * v.y + Poly(1));
            CHECK(vertex(n + 1).position == next);
        }
    }
}

TEST_CASE("edge holonomies") {
    CHECK(edge_holonomy(0) == PolyVec(Rat(1), Rat(1)));
    CHECK(edge_holonomy(-1) == PolyVec(Rat(1), Rat(-1)));
    Poly c = Poly::variable();
    CHECK(edge_holonomy(1) == PolyVec(c * Rat(2) - Poly(1), c * Rat(2) + Poly(1)));
    CHECK(edge_holonomy(-2) == PolyVec(c * Rat(2) - Poly(1), -(c * Rat(2)) - Poly(1)));
    CHECK(edge_holonomy(2) ==
          PolyVec(c * c * Rat(4) - c * Rat(2) - Poly(1), c * c * Rat(4) + c * Rat(2) - Poly(1)));
}

TEST_CASE("vertex parity") {
    CHECK(vertex_parity(Sheet::upper, 0) == 0);
    CHECK(vertex_parity(Sheet::upper, 3) == 1);
    CHECK(vertex_parity(Sheet::upper, -2) == 0);
    CHECK(vertex_parity(Sheet::lower, 0) == 1);
    CHECK(vertex_parity(Sheet::lower, 1) == 0);
    CHECK(vertex_parity(Sheet::lower, -3) == 0);
}

TEST_CASE("tracing boundary edge 0") {
    SaddleConnection s = trace_geodesic(0, Vec2R(Rat(1), Rat(1)));
    CHECK(s.start_parity == 0);
    CHECK(s.end_parity == 1);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::upper);
    CHECK(s.chain[0].from == Vec2R(Rat(0), Rat(0)));
    CHECK(s.chain[0].to == Vec2R(Rat(1), Rat(1)));
    CHECK(s.cls == edge_holonomy(0));
    CHECK(sigma_connection(0).cls == s.cls);
}

TEST_CASE("tracing through the gluing: horizontal from the origin") {
    // Leaves vertex 0 rightward, crosses into the mirror polygon, ends at the
    // mirror image of vertex -1.  Both endpoints even -> same singularity.
    SaddleConnection s = trace_geodesic(0, Vec2R(Rat(2), Rat(0)));
    CHECK(s.start_parity == 0);
    CHECK(s.end_parity == 0);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::lower);
    CHECK(s.chain[0].from == Vec2R(Rat(-1), Rat(-1)));
    CHECK(s.chain[0].to == Vec2R(Rat(1), Rat(-1)));
    CHECK(s.cls == edge_holonomy(-1) + edge_holonomy(0));
    auto [hx, hy] = s.cls.eval(1);
    CHECK(hx == Rat(2));
    CHECK(hy == Rat(0));
}

TEST_CASE("tracing the chord over the origin") {
    // From vertex -1 straight to vertex 1 inside the upper polygon.
    SaddleConnection s = trace_geodesic(-1, Vec2R(Rat(2), Rat(0)));
    CHECK(s.start_parity == 1);
    CHECK(s.end_parity == 1);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::upper);
    CHECK(s.chain[0].from == Vec2R(Rat(-1), Rat(1)));
    CHECK(s.chain[0].to == Vec2R(Rat(1), Rat(1)));
    CHECK(s.cls == edge_holonomy(-1) + edge_holonomy(0));
}

TEST_CASE("tracing a long chord") {
    // From vertex -2 to vertex 2 at height 4.
    SaddleConnection s = trace_geodesic(-2, Vec2R(Rat(4), Rat(0)));
    CHECK(s.start_parity == 0);
    CHECK(s.end_parity == 0);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::upper);
    PolyVec expect = vertex(2).position - vertex(-2).position;
    CHECK(s.cls == expect);
}

TEST_CASE("tracing across a vertex-adjacent edge") {
    // Horizontal from vertex 2: immediately crosses edge 2 and runs through
    // the mirror polygon at depth 9 to the mirror of vertex -3.
    SaddleConnection s = trace_geodesic(2, Vec2R(Rat(6), Rat(0)));
    CHECK(s.start_parity == 0);
    CHECK(s.end_parity == 0);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::lower);
    CHECK(s.chain[0].from == Vec2R(Rat(-3), Rat(-9)));
    CHECK(s.chain[0].to == Vec2R(Rat(3), Rat(-9)));
    CHECK(s.cls == vertex(3).position - vertex(-3).position);
    auto [hx, hy] = s.cls.eval(1);
    CHECK(hx == Rat(6));
    CHECK(hy == Rat(0));
}

TEST_CASE("tracing a steeper closed-up direction") {
    // From vertex 0 along (2,4): exits through the interior and lands on
    // vertex 2, giving the two-edge boundary path.
    SaddleConnection s = trace_geodesic(0, Vec2R(Rat(2), Rat(4)));
    CHECK(s.start_parity == 0);
    CHECK(s.end_parity == 0);
    REQUIRE(s.chain.size() == 1);
    CHECK(s.chain[0].sheet == Sheet::upper);
    CHECK(s.cls == edge_holonomy(0) + edge_holonomy(1));
}

TEST_CASE("tracer error cases") {
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(0), Rat(0))), DomainError);
    // Along edge 0 but overshooting vertex 1.
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(2), Rat(2))), HitsVertexInterior);
    // Horizontal through the mirror image of vertex -1 with length to spare.
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(4), Rat(0))), HitsVertexInterior);
    // Stops halfway along edge 0.
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(1, 2), Rat(1, 2))), NotClosingAtSingularity);
    // Ends at an interior point.
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(1), Rat(2))), NotClosingAtSingularity);
    CHECK_THROWS_AS(trace_geodesic(0, Vec2R(Rat(0), Rat(-2))), NotClosingAtSingularity);
}

TEST_CASE("crossing counts") {
    SaddleConnection chord = trace_geodesic(-1, Vec2R(Rat(2), Rat(0)));
    SaddleConnection edge0 = sigma_connection(0);
    SaddleConnection steep = trace_geodesic(0, Vec2R(Rat(2), Rat(4)));
    SaddleConnection mirror_horizontal = trace_geodesic(0, Vec2R(Rat(2), Rat(0)));

    // Chord at height 1 meets the line of edge 0 only at the shared singular
    // endpoint (1,1), which does not count.
    CHECK(count_crossings(chord, edge0) == 0);
    // The steep connection passes through (1/2, 1) crossing the chord once.
    CHECK(count_crossings(chord, steep) == 1);
    CHECK(count_crossings(steep, chord) == 1);
    // Different sheets, no common point.
    CHECK(count_crossings(chord, mirror_horizontal) == 0);
    // Self-comparison shares whole segments.
    CHECK_THROWS_AS(count_crossings(chord, chord), NotTransverse);
}

TEST_CASE("horizontal walks") {
    HorizontalWalk w = horizontal_walk(Rat(1, 2));
    CHECK(w.circumference == Rat(2));
    CHECK(w.chain.size() == 3);

    SUBCASE("leaf independence inside a band") {
        CHECK(horizontal_walk(Rat(1, 4)).circumference == Rat(2));
        CHECK(horizontal_walk(Rat(3, 4)).circumference == Rat(2));
        CHECK(horizontal_walk(Rat(3, 2)).circumference == Rat(6));
        CHECK(horizontal_walk(Rat(7, 2)).circumference == Rat(6));
        CHECK(horizontal_walk(Rat(9, 2)).circumference == Rat(10));
    }

    SUBCASE("marked heights rejected") {
        CHECK_THROWS_AS(horizontal_walk(Rat(1)), HitsVertexInterior);
        CHECK_THROWS_AS(horizontal_walk(Rat(4)), HitsVertexInterior);
        CHECK_THROWS_AS(horizontal_walk(Rat(0)), DomainError);
        CHECK_THROWS_AS(horizontal_walk(Rat(-2)), DomainError);
    }
}

TEST_CASE("horizontal cylinders") {
    Cylinder a0 = horizontal_cylinder(0);
    CHECK(a0.circumference == Rat(2));
    CHECK(a0.height == Rat(1));
    CHECK(a0.area == Rat(2));
    auto [cx, cy] = a0.core.eval(1);
    CHECK(cx == Rat(2));
    CHECK(cy == Rat(0));

    Cylinder a1 = horizontal_cylinder(1);
    CHECK(a1.circumference == Rat(6));
    CHECK(a1.height == Rat(3));
    CHECK(a1.area == Rat(18));
    CHECK(a1.core == vertex(2).position + vertex(1).position - vertex(-1).position -
                         vertex(-2).position);

    SUBCASE("dimension formulas hold for the first several cylinders") {
        for (long i = 0; i <= 8; ++i) {
            Cylinder cyl = horizontal_cylinder(i);
            CHECK(cyl.circumference == Rat(4 * i + 2));
            CHECK(cyl.height == Rat(2 * i + 1));
            CHECK(cyl.area == cyl.circumference * cyl.height);
            auto [hx, hy] = cyl.core.eval(1);
            CHECK(hx == cyl.circumference);
            CHECK(hy == Rat(0));
        }
    }

    CHECK_THROWS_AS(horizontal_cylinder(-1), DomainError);
}
