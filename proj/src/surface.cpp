#include "parasurf/surface.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "parasurf/errors.hpp"

namespace parasurf {

namespace {

// Defining affine map: position(n+1) = M position(n) + (1, 1).
PolyMatrix defining_matrix() {
    Poly c = Poly::variable();
    return {c, c - Poly(Rat(1)), c + Poly(Rat(1)), c};
}

// Upper-polygon vertex n at parameter 1: (n, n^2).
Vec2R vertex_at1(long n) {
    Rat x(n);
    return {x, x * x};
}

// Gluing translation for edge j at parameter 1: upper point -> lower point.
Vec2R glue_shift(long j) {
    // -(v_j + v_{j+1}) evaluated at 1.
    Rat xs = Rat(j) + Rat(j + 1);
    Rat ys = Rat(j) * Rat(j) + Rat(j + 1) * Rat(j + 1);
    return {-xs, -ys};
}

// Boundary height of the upper polygon above x (piecewise linear through the
// marked points).  Only used through edge-indexed forms below.
Rat edge_line_defect(long j, const Vec2R& q) {
    // >= 0 iff q is on or above the line through vertices j and j+1.
    return q.y - Rat(2 * j + 1) * q.x + Rat(j) * Rat(j + 1);
}

struct ExitEvent {
    enum Kind { interior_end, edge_hit, vertex_hit } kind = interior_end;
    Rat t;       // parameter along the ray, in (0, 1]
    long index = 0; // edge index for edge_hit, vertex index for vertex_hit
    Vec2R point;
};

// First boundary event of the ray q + t s, t in (0, 1], inside the upper
// polygon.  q must lie in the closed polygon.  Handles travel along a
// boundary edge (the ray and an edge collinear) explicitly.
ExitEvent upper_exit(const Vec2R& q, const Vec2R& s) {
    // Collinear-with-boundary travel.  The only edge lines that pass through
    // an interior-or-boundary point q within their own x-span are edges q
    // actually lies on, so it suffices to inspect the edges at floor(q.x).
    {
        Int fx = rat_floor(q.x);
        long jf = fx.get_si();
        bool x_integral = is_integer(q.x);
        for (long j : {x_integral ? jf - 1 : jf, jf}) {
            if (edge_line_defect(j, q) != 0) continue;
            if (q.x < Rat(j) || q.x > Rat(j + 1)) continue;
            // Parallel to edge j's direction (1, 2j+1)?
            if (s.y != Rat(2 * j + 1) * s.x) continue;
            if (s.x == 0) continue; // can't happen together with the above unless s == 0
            bool forward = s.x > 0;
            if (forward && q.x == Rat(j + 1)) continue;  // leaving the edge at once
            if (!forward && q.x == Rat(j)) continue;
            long m = forward ? j + 1 : j;
            Rat tv = (Rat(m) - q.x) / s.x;
            ExitEvent ev;
            if (tv <= 1) {
                ev.kind = ExitEvent::vertex_hit;
                ev.t = tv;
                ev.index = m;
                ev.point = vertex_at1(m);
            } else {
                ev.kind = ExitEvent::edge_hit; // lands mid-edge at t = 1
                ev.t = Rat(1);
                ev.index = j;
                ev.point = q + s;
            }
            return ev;
        }
    }

    Rat x_end = q.x + s.x;
    Rat x_lo = std::min(q.x, x_end), x_hi = std::max(q.x, x_end);
    long j_lo = rat_floor(x_lo).get_si() - 1;
    long j_hi = rat_floor(x_hi).get_si() + 1;

    std::optional<ExitEvent> best;
    for (long j = j_lo; j <= j_hi; ++j) {
        Rat denom = s.y - Rat(2 * j + 1) * s.x;
        if (denom == 0) continue;
        Rat t = -edge_line_defect(j, q) / denom;
        if (t <= 0 || t > 1) continue;
        Vec2R pt = q + s * t;
        if (pt.x < Rat(j) || pt.x > Rat(j + 1)) continue;
        if (best && t >= best->t) {
            // Same t can recur only at a shared vertex; the earlier record
            // already carries the point.
            continue;
        }
        ExitEvent ev;
        ev.t = t;
        ev.point = pt;
        if (is_integer(pt.x) && pt.y == pt.x * pt.x) {
            ev.kind = ExitEvent::vertex_hit;
            ev.index = rat_floor(pt.x).get_si();
        } else {
            ev.kind = ExitEvent::edge_hit;
            ev.index = rat_floor(pt.x).get_si();
        }
        best = ev;
    }
    if (best) return *best;

    ExitEvent ev;
    ev.kind = ExitEvent::interior_end;
    ev.t = Rat(1);
    ev.point = q + s;
    return ev;
}

// Is direction d inside the (closed) corner of the upper polygon at vertex n?
bool in_upper_corner(long n, const Vec2R& d) {
    if (d.x > 0) return d.y >= Rat(2 * n + 1) * d.x;
    if (d.x < 0) return d.y >= Rat(2 * n - 1) * d.x;
    return d.y > 0;
}

} // namespace

Vertex vertex(long n) {
    PolyMatrix m = defining_matrix();
    PolyVec shift{Poly(Rat(1)), Poly(Rat(1))};
    PolyVec pos; // origin
    if (n >= 0) {
        for (long k = 0; k < n; ++k) pos = m.apply(pos) + shift;
    } else {
        // Inverse map: pos -> M^{-1} (pos - shift); det M = 1.
        PolyMatrix inv = m.adjugate();
        for (long k = 0; k > n; --k) pos = inv.apply(pos - shift);
    }
    return {n, pos};
}

PolyVec edge_holonomy(long j) { return vertex(j + 1).position - vertex(j).position; }

int vertex_parity(Sheet sheet, long m) {
    bool even = ((m % 2) + 2) % 2 == 0;
    if (sheet == Sheet::upper) return even ? 0 : 1;
    return even ? 1 : 0;
}

namespace {

// Class contribution of the boundary path between anchor vertices i -> j of
// one polygon.  On the upper polygon the path from vertex i to vertex j is
// +sum of edges [i, j); on the lower polygon the same index path runs through
// the glued edges backwards, so it contributes with the opposite sign.
void add_boundary_path(PolyVec& cls, Sheet sheet, long i, long j) {
    int sign = (sheet == Sheet::upper) ? 1 : -1;
    if (j > i) {
        for (long m = i; m < j; ++m)
            cls = (sign > 0) ? cls + edge_holonomy(m) : cls - edge_holonomy(m);
    } else {
        for (long m = j; m < i; ++m)
            cls = (sign > 0) ? cls - edge_holonomy(m) : cls + edge_holonomy(m);
    }
}

} // namespace

SaddleConnection trace_geodesic(long start, const Vec2R& displacement) {
    if (displacement.x == 0 && displacement.y == 0)
        throw DomainError("displacement must be nonzero");

    SaddleConnection sc;
    sc.start_parity = vertex_parity(Sheet::upper, start);

    Sheet sheet = Sheet::upper;
    Vec2R p = vertex_at1(start);
    Vec2R remaining = displacement;
    // Anchor of the current polygon visit: a vertex index for the upper
    // sheet's first visit, otherwise derived from the entry edge below.
    long anchor_vertex = start;

    if (!in_upper_corner(start, displacement)) {
        long j0 = (displacement.x > 0 || (displacement.x == 0 && displacement.y < 0))
                      ? start
                      : start - 1;
        add_boundary_path(sc.cls, Sheet::upper, start, j0);
        p = p + glue_shift(j0);
        sheet = Sheet::lower;
        anchor_vertex = j0 + 1; // lower-sheet path starts at lower vertex j0+1
    }

    for (int guard = 0; guard < 100000; ++guard) {
        bool mirrored = (sheet == Sheet::lower);
        Vec2R q = mirrored ? -p : p;
        Vec2R s = mirrored ? -remaining : remaining;
        ExitEvent ev = upper_exit(q, s);
        Vec2R real_pt = mirrored ? -ev.point : ev.point;

        switch (ev.kind) {
        case ExitEvent::interior_end:
            throw NotClosingAtSingularity("geodesic ends at an interior point");
        case ExitEvent::vertex_hit: {
            if (ev.t < 1)
                throw HitsVertexInterior("geodesic meets a marked point before its endpoint");
            if (real_pt != p) sc.chain.push_back({sheet, p, real_pt});
            add_boundary_path(sc.cls, sheet, anchor_vertex, ev.index);
            sc.end_parity = vertex_parity(sheet, ev.index);
            return sc;
        }
        case ExitEvent::edge_hit: {
            if (ev.t == 1)
                throw NotClosingAtSingularity("geodesic ends on an edge, not at a marked point");
            long j = ev.index;
            if (real_pt != p) sc.chain.push_back({sheet, p, real_pt});
            remaining = remaining - (real_pt - p);
            if (sheet == Sheet::upper) {
                add_boundary_path(sc.cls, Sheet::upper, anchor_vertex, j);
                p = real_pt + glue_shift(j);
                sheet = Sheet::lower;
                anchor_vertex = j + 1;
            } else {
                add_boundary_path(sc.cls, Sheet::lower, anchor_vertex, j + 1);
                p = real_pt - glue_shift(j);
                sheet = Sheet::upper;
                anchor_vertex = j;
            }
            break;
        }
        }
    }
    throw DomainError("geodesic trace did not terminate");
}

SaddleConnection sigma_connection(long j) {
    SaddleConnection sc;
    sc.start_parity = vertex_parity(Sheet::upper, j);
    sc.end_parity = vertex_parity(Sheet::upper, j + 1);
    sc.chain.push_back({Sheet::upper, vertex_at1(j), vertex_at1(j + 1)});
    sc.cls = edge_holonomy(j);
    return sc;
}

namespace {

bool is_singular(Sheet sheet, const Vec2R& pt) {
    if (!is_integer(pt.x)) return false;
    return (sheet == Sheet::upper) ? pt.y == pt.x * pt.x : pt.y == -(pt.x * pt.x);
}

// Map a non-singular point to a canonical surface representative: points on
// the lower boundary move to the glued upper-boundary point.
std::tuple<int, Rat, Rat> canonical_point(Sheet sheet, const Vec2R& pt) {
    if (sheet == Sheet::lower) {
        Vec2R m{-pt.x, -pt.y};
        Int fx = rat_floor(m.x);
        long j = fx.get_si();
        if (edge_line_defect(j, m) == 0 && m.x >= Rat(j) && m.x <= Rat(j + 1)) {
            Vec2R up = pt - glue_shift(j);
            return {0, up.x, up.y};
        }
        return {1, pt.x, pt.y};
    }
    return {0, pt.x, pt.y};
}

} // namespace

size_t count_crossings(const SaddleConnection& a, const SaddleConnection& b) {
    std::set<std::tuple<int, Rat, Rat>> points;

    for (const Segment& sa : a.chain) {
        for (const Segment& sb : b.chain) {
            if (sa.sheet != sb.sheet) continue;
            Vec2R u = sa.to - sa.from;
            Vec2R v = sb.to - sb.from;
            Vec2R w = sb.from - sa.from;
            Rat den = wedge(u, v);
            if (den == 0) {
                if (wedge(u, w) != 0) continue; // parallel, distinct lines
                // Collinear: compare parameter intervals along sa.
                bool use_x = u.x != 0;
                Rat ua = use_x ? u.x : u.y;
                Rat t0 = (use_x ? w.x : w.y) / ua;
                Rat t1 = (use_x ? (sb.to.x - sa.from.x) : (sb.to.y - sa.from.y)) / ua;
                Rat lo = std::min(t0, t1), hi = std::max(t0, t1);
                lo = std::max(lo, Rat(0));
                hi = std::min(hi, Rat(1));
                if (lo < hi)
                    throw NotTransverse("saddle connections share a segment of positive length");
                if (lo == hi) {
                    Vec2R pt = sa.from + u * lo;
                    if (!is_singular(sa.sheet, pt)) points.insert(canonical_point(sa.sheet, pt));
                }
                continue;
            }
            Rat s = wedge(w, v) / den;
            Rat t = wedge(w, u) / den;
            if (s < 0 || s > 1 || t < 0 || t > 1) continue;
            Vec2R pt = sa.from + u * s;
            if (is_singular(sa.sheet, pt)) continue;
            points.insert(canonical_point(sa.sheet, pt));
        }
    }
    return points.size();
}

HorizontalWalk horizontal_walk(const Rat& y0) {
    if (y0 <= 0) throw DomainError("horizontal leaf height must be positive");
    Int fy = rat_floor(y0);
    Int r;
    mpz_sqrt(r.get_mpz_t(), fy.get_mpz_t());
    long i = r.get_si();
    Rat lo = Rat(i) * Rat(i), hi = Rat(i + 1) * Rat(i + 1);
    if (y0 == lo || y0 == hi)
        throw HitsVertexInterior("horizontal leaf through a marked height");

    // Right boundary of the upper polygon at height y (band i).
    auto x_right = [i](const Rat& y) -> Rat {
        return Rat(i) + (y - Rat(i) * Rat(i)) / Rat(2 * i + 1);
    };

    Rat xr = x_right(y0);
    Vec2R shift_r = glue_shift(i);          // across edge i
    Vec2R shift_l = glue_shift(-i - 1);     // across edge -i-1 (lower -> upper below)

    HorizontalWalk walk;
    Vec2R a{Rat(0), y0};
    Vec2R b{xr, y0};
    walk.chain.push_back({Sheet::upper, a, b});

    Vec2R c = b + shift_r;                  // enter the lower polygon
    Rat y_low = c.y;
    Rat x_hat = x_right(-y_low);            // lower right boundary via the mirror
    Vec2R d{x_hat, y_low};
    walk.chain.push_back({Sheet::lower, c, d});

    Vec2R e = d - shift_l;                  // back to the upper polygon
    Vec2R f{Rat(0), y0};
    if (e.y != y0 || e.x != -xr)
        throw DomainError("horizontal walk failed to close up (internal error)");
    walk.chain.push_back({Sheet::upper, e, f});

    walk.circumference = (b.x - a.x) + (d.x - c.x) + (f.x - e.x);
    return walk;
}

Cylinder horizontal_cylinder(long i) {
    if (i < 0) throw DomainError("cylinder index must be nonnegative");
    Rat y_mid = (Rat(i) * Rat(i) + Rat(i + 1) * Rat(i + 1)) / 2;
    HorizontalWalk walk = horizontal_walk(y_mid);

    Cylinder cyl;
    cyl.index = i;
    cyl.circumference = walk.circumference;
    cyl.height = Rat(2 * i + 1);
    cyl.area = cyl.circumference * cyl.height;
    cyl.core = vertex(i + 1).position + vertex(i).position - vertex(-i).position -
               vertex(-i - 1).position;
    return cyl;
}

} // namespace parasurf
