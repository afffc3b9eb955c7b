#pragma once

#include <mutex>
#include <vector>

#include "parasurf/homology.hpp"
#include "parasurf/surface.hpp"
#include "parasurf/veech.hpp"

namespace parasurf {

// The intersection pairing of two classes integrates the parameter-wedge of
// their holonomies against the arc measure of the parameter circle:
//
//   pair(g, s) = sum_m  p_m W(m),   where  wedge(g, s)(c) = sum_m p_m c^m
//
// and W(m) is the m-th moment of (1 - cos t)/2pi over [0, pi].  The moments
// are exact binomial expressions:
//   W(m) = C(m, m/2) / 2^{m+1}            for even m,
//   W(m) = -C(m+1, (m+1)/2) / 2^{m+2}     for odd m.
// W(0) = 1/2, W(1) = -1/4, W(2) = 1/4, ...

// Append-only cache of the moments.  Reads of already-computed entries are
// lock-free on the caller's side in the sense that the table only grows;
// extensions serialize on a mutex so concurrent growth stays deterministic.
class MomentTable {
public:
    Rat moment(size_t m) const;

private:
    mutable std::vector<Rat> values_;
    mutable std::mutex mutex_;
};

MomentTable& default_moments();
Rat moment(size_t m);

// Bilinear, antisymmetric pairing; accepts any mix of class flavors.
Rat pair(const PolyVec& g, const PolyVec& s);
inline Rat pair(const RelClass& g, const RelClass& s) { return pair(g.hvec, s.hvec); }
inline Rat pair(const AbsClass& g, const RelClass& s) { return pair(g.hvec, s.hvec); }
inline Rat pair(const RelClass& g, const AbsClass& s) { return pair(g.hvec, s.hvec); }
inline Rat pair(const AbsClass& g, const AbsClass& s) { return pair(g.hvec, s.hvec); }

// Exact area of the overlap of two horizontal cylinders, the first one moved
// by the n-th power of the symmetry `w` when given.  The cores must be
// non-parallel at parameter 1 (ParallelCylinders otherwise):
//
//   Area(A cap B) = |pair(core_A, core_B)| area(A) area(B) / |hol_1 core_A ^ hol_1 core_B|
Rat cylinder_overlap_area(const Cylinder& A, const Cylinder& B);
Rat cylinder_overlap_area(const Cylinder& A, const Cylinder& B, const GroupWord& w, long n);

// Two-sided bound for the geometric crossing number of two transverse
// multicurves given as lists of component classes: each component pair's
// crossing count differs from |pair| by at most 1, so with k = |alpha| and
// l = |gamma| components,
//   center = sum |pair(alpha_i, gamma_j)|,  bounds = center -+ 2 k l.
struct PairBounds {
    Rat lower, center, upper;
};
PairBounds geodesic_pair_bounds(const std::vector<PolyVec>& alpha,
                                const std::vector<PolyVec>& gamma);

} // namespace parasurf
