#pragma once

#include <string>

#include "parasurf/homology.hpp"
#include "parasurf/poly.hpp"

namespace parasurf {

// A word in the three reflection generators a, b, c of the symmetry group,
// together with a central sign.  Each generator is an involution, so a word
// is reduced iff no two adjacent letters are equal; `letters` is always kept
// reduced, with "" denoting the identity.
struct GroupWord {
    std::string letters;
    int sign = 1;

    bool is_identity() const { return letters.empty() && sign == 1; }
    bool operator==(const GroupWord& o) const {
        return letters == o.letters && sign == o.sign;
    }
};

// Cancel adjacent equal letters (involutions) until reduced.  Letters outside
// {a, b, c} throw DomainError.
GroupWord word_reduce(const std::string& letters, int sign = 1);

// "abcb" or "-abcb" (leading '-' for the central sign); "" is the identity.
GroupWord parse_word(const std::string& text);
std::string word_str(const GroupWord& w);

// Group law with reduction at the seam.
GroupWord concat(const GroupWord& lhs, const GroupWord& rhs);

// Parameter-dependent representation.  Generator images:
//   a -> [[-1, 0], [0, 1]]      (reflection across the vertical axis)
//   b -> [[-1, 2], [0, 1]]      (reflection in the line through edge 1's slope)
//   c -> [[-c, c-1], [-c-1, c]] (the parameter-dependent reflection)
// Words act by the left-to-right product of generator images.
PolyMatrix rho(const GroupWord& w);

// Exact 2x2 rational matrix: rho evaluated at a parameter value.
struct RatMat {
    Rat a, b, c, d;
    RatMat mul(const RatMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    std::pair<Rat, Rat> apply(const std::pair<Rat, Rat>& v) const {
        return {a * v.first + b * v.second, c * v.first + d * v.second};
    }
    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }
};
RatMat rho_at(const GroupWord& w, const Rat& at);

// Hyperbolic at parameter 1: |trace| > 2 for determinant +1, trace != 0 for
// determinant -1 (then the square has trace t^2 + 2 > 2).
bool is_hyperbolic(const GroupWord& w);

// Action on deformation classes: hvec -> rho(w) hvec.
PolyVec act_vec(const GroupWord& w, const PolyVec& v);
inline RelClass act(const GroupWord& w, const RelClass& s) { return {act_vec(w, s.hvec)}; }
AbsClass act(const GroupWord& w, const AbsClass& s);

// n-fold action (negative n through the exact inverse; determinant is +-1).
PolyVec act_power_vec(const GroupWord& w, const PolyVec& v, long n);
inline RelClass act_power(const GroupWord& w, const RelClass& s, long n) {
    return {act_power_vec(w, s.hvec, n)};
}
AbsClass act_power(const GroupWord& w, const AbsClass& s, long n);

} // namespace parasurf
