#pragma once

#include <vector>

#include "parasurf/poly.hpp"
#include "parasurf/rational.hpp"

namespace parasurf {

// The surface is built from two convex polygons in the plane: the upper one
// is the region above the piecewise-linear interpolation of the marked points
// (n, position of the n-th vertex), the lower one its image under v -> -v.
// Edge j of the upper polygon (from vertex j to vertex j+1) is glued to the
// corresponding edge of the lower polygon by a translation.  All geometry in
// this header is specialised to the parameter value 1, where the vertices sit
// at (n, n^2); deformation data (holonomy as a polynomial in the parameter)
// rides along through the vertex positions.

struct Vec2R {
    Rat x, y;
    Vec2R() : x(0), y(0) {}
    Vec2R(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Vec2R operator+(const Vec2R& o) const { return {x + o.x, y + o.y}; }
    Vec2R operator-(const Vec2R& o) const { return {x - o.x, y - o.y}; }
    Vec2R operator-() const { return {-x, -y}; }
    Vec2R operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2R& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2R& o) const { return !(*this == o); }
};

inline Rat wedge(const Vec2R& u, const Vec2R& v) { return u.x * v.y - u.y * v.x; }

enum class Sheet { upper, lower };

// One straight piece of a geodesic, in the coordinates of its own polygon.
struct Segment {
    Sheet sheet;
    Vec2R from, to;
};

// A geodesic joining two singular points.  `cls` is the deformation holonomy
// of its relative homology class — evaluate at 1 to recover the plane vector
// actually travelled.  Parities name the endpoint singularities (0 or 1).
struct SaddleConnection {
    int start_parity = 0;
    int end_parity = 0;
    std::vector<Segment> chain;
    PolyVec cls;
};

// Marked point n of the upper polygon, with its deformation position.
struct Vertex {
    long index = 0;
    PolyVec position;
};

// The n-th marked point: the orbit of the origin under the defining affine
// map (matrix [[c, c-1], [c+1, c]], translation (1,1)) and its inverse.
Vertex vertex(long n);

// Deformation holonomy of boundary edge j: vertex(j+1) - vertex(j).
PolyVec edge_holonomy(long j);

// Which singularity (0 or 1) a vertex of the given sheet belongs to.  Upper
// vertex n has parity n mod 2; lower vertex m (at (-m, -m^2)) is glued to the
// upper vertices of the opposite parity.
int vertex_parity(Sheet sheet, long m);

// Shoot a straight geodesic from upper-polygon vertex `start` along the given
// displacement, unfolding through the edge gluings, until the displacement is
// exhausted.  The endpoint must be another marked point (NotClosingAtSingularity
// otherwise); meeting a marked point with displacement still to travel throws
// HitsVertexInterior.  Directions leaving the start vertex outside the upper
// polygon's corner enter the lower polygon across the right edge (edge
// `start`) when dx > 0 — also for straight-down dx == 0 — and across the left
// edge (edge start-1) when dx < 0.
SaddleConnection trace_geodesic(long start, const Vec2R& displacement);

// The boundary edge j itself as a saddle connection (single upper segment).
SaddleConnection sigma_connection(long j);

// Number of interior intersection points of two saddle connections (common
// singular endpoints do not count).  Throws NotTransverse when the chains
// share a straight piece of positive length.
size_t count_crossings(const SaddleConnection& a, const SaddleConnection& b);

// Closed horizontal leaf through height y0 (which must avoid the marked
// heights i^2).  Chain is the closed walk starting at (0, y0); circumference
// is the total horizontal length.
struct HorizontalWalk {
    Rat circumference;
    std::vector<Segment> chain;
};
HorizontalWalk horizontal_walk(const Rat& y0);

// Maximal horizontal cylinder i >= 0: the band between heights i^2 and
// (i+1)^2 of the upper polygon glued to its mirror band.  Circumference is
// derived by walking the core leaf at mid-height, never from a closed form.
struct Cylinder {
    long index = 0;
    PolyVec core; // deformation class of the core curve
    Rat circumference, height, area;
};
Cylinder horizontal_cylinder(long i);

} // namespace parasurf
