#include "parasurf/homology.hpp"

#include "parasurf/errors.hpp"

namespace parasurf {

AbsClass abs_class(PolyVec hvec) {
    if (hvec.y.eval(Rat(-1)) != 0)
        throw DomainError("not an absolute class: obstruction functional is nonzero");
    return {std::move(hvec)};
}

RelClass sigma_class(long j) { return {edge_holonomy(j)}; }

AbsClass gamma_class(long j) {
    if (j == 0) throw ZeroIndex("gamma_class(0) is not defined");
    PolyVec h = vertex(j + 1).position + vertex(j).position - vertex(1).position -
                vertex(0).position;
    return abs_class(std::move(h));
}

Rat epsilon(const PolyVec& hvec) { return hvec.y.eval(Rat(-1)); }

// Both coordinate solves peel from the top degree down.  At degree d >= 1 the
// only basis elements with a degree-d holonomy are the pair with indices d and
// -d-1, whose leading x/y coefficients are (2^d, 2^d) and (2^d, -2^d) in the
// edge basis, and (2^d, 2^d) and (-2^d, 2^d) in the gamma basis — a 2x2 unit
// of determinant +-2^{2d+1}, so each step is an exact division by 2^{d+1}.

std::map<long, Rat> sigma_coords(const RelClass& s, long max_index) {
    if (max_index < 0) throw DomainError("max_index must be nonnegative");
    PolyVec rem = s.hvec;
    if (rem.degree() > max_index)
        throw DegreeTooHigh("holonomy degree exceeds the basis window");

    std::map<long, Rat> out;
    for (long d = rem.degree(); d >= 1; --d) {
        Rat xd = rem.x.coeff(d), yd = rem.y.coeff(d);
        Rat scale = Rat(pow2(static_cast<unsigned long>(d) + 1));
        Rat u = (xd + yd) / scale;
        Rat v = (xd - yd) / scale;
        if (u != 0) {
            out[d] = u;
            rem = rem - u * edge_holonomy(d);
        }
        if (v != 0) {
            out[-d - 1] = v;
            rem = rem - v * edge_holonomy(-d - 1);
        }
        if (rem.x.coeff(d) != 0 || rem.y.coeff(d) != 0)
            throw DomainError("edge-coordinate peeling failed (internal error)");
    }
    Rat x0 = rem.x.coeff(0), y0 = rem.y.coeff(0);
    Rat u = (x0 + y0) / 2;
    Rat v = (x0 - y0) / 2;
    if (u != 0) {
        out[0] = u;
        rem = rem - u * edge_holonomy(0);
    }
    if (v != 0) {
        out[-1] = v;
        rem = rem - v * edge_holonomy(-1);
    }
    if (!rem.is_zero())
        throw DomainError("class does not lie in the edge span (internal error)");
    return out;
}

std::map<long, Rat> gamma_coords(const AbsClass& a, long max_index) {
    if (max_index < 0) throw DomainError("max_index must be nonnegative");
    PolyVec rem = a.hvec;
    if (rem.degree() > max_index)
        throw DegreeTooHigh("holonomy degree exceeds the basis window");

    std::map<long, Rat> out;
    for (long d = rem.degree(); d >= 1; --d) {
        Rat xd = rem.x.coeff(d), yd = rem.y.coeff(d);
        Rat scale = Rat(pow2(static_cast<unsigned long>(d) + 1));
        Rat u = (yd + xd) / scale;
        Rat v = (yd - xd) / scale;
        if (u != 0) {
            out[d] = u;
            rem = rem - u * gamma_class(d).hvec;
        }
        if (v != 0) {
            out[-d - 1] = v;
            rem = rem - v * gamma_class(-d - 1).hvec;
        }
        if (rem.x.coeff(d) != 0 || rem.y.coeff(d) != 0)
            throw DomainError("gamma-coordinate peeling failed (internal error)");
    }
    Rat x0 = rem.x.coeff(0), y0 = rem.y.coeff(0);
    if (y0 != 0)
        throw DomainError("class does not lie in the gamma span (internal error)");
    if (x0 != 0) {
        out[-1] = -x0 / 2; // gamma_{-1} has constant holonomy (-2, 0)
        rem = rem - (-x0 / 2) * gamma_class(-1).hvec;
    }
    if (!rem.is_zero())
        throw DomainError("gamma-coordinate residue is nonzero (internal error)");
    return out;
}

} // namespace parasurf
