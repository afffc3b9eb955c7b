#pragma once

#include <map>

#include "parasurf/poly.hpp"
#include "parasurf/surface.hpp"

namespace parasurf {

// Relative homology classes (cycles allowed to end on the singular points)
// are carried by their deformation holonomy vector: the boundary edges form a
// basis, and the holonomy map is injective on their span, so the polynomial
// vector is a faithful representative.
struct RelClass {
    PolyVec hvec;
    bool operator==(const RelClass& o) const { return hvec == o.hvec; }
};

// Absolute classes (closed curves) are cut out by the vanishing of the
// y-component at parameter -1; see epsilon below.
struct AbsClass {
    PolyVec hvec;
    bool operator==(const AbsClass& o) const { return hvec == o.hvec; }
};

// Validating constructor: throws DomainError unless epsilon vanishes.
AbsClass abs_class(PolyVec hvec);

inline RelClass rel(const AbsClass& a) { return {a.hvec}; }

// Boundary edge j as a relative class.
RelClass sigma_class(long j);

// The closed curve gamma_j (j != 0, else ZeroIndex): crosses edge j once and
// edge 0 once backwards.  Its holonomy is vertex(j+1) + vertex(j) - vertex(1)
// - vertex(0), which vanishes at -1 and so defines an absolute class.
AbsClass gamma_class(long j);

// Obstruction functional: the y-component of the holonomy at parameter -1.
// Vanishes exactly on absolute classes; on edge j it equals (-1)^j.
Rat epsilon(const PolyVec& hvec);
inline Rat epsilon(const RelClass& s) { return epsilon(s.hvec); }

// Holonomy vector at a given parameter value.
inline std::pair<Rat, Rat> hol_at(const RelClass& s, const Rat& at) { return s.hvec.eval(at); }
inline std::pair<Rat, Rat> hol_at(const AbsClass& s, const Rat& at) { return s.hvec.eval(at); }

// Exact coordinates of a relative class in the edge basis indexed by
// [-max_index-1, max_index].  Throws DegreeTooHigh when the holonomy degree
// exceeds max_index.  Zero coordinates are omitted from the map.
std::map<long, Rat> sigma_coords(const RelClass& s, long max_index);

// Exact coordinates of an absolute class in the gamma basis indexed by
// [-max_index-1, max_index] \ {0}; same degree window as sigma_coords.
std::map<long, Rat> gamma_coords(const AbsClass& a, long max_index);

} // namespace parasurf
