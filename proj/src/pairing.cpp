#include "parasurf/pairing.hpp"

#include "parasurf/errors.hpp"

namespace parasurf {

namespace {
Rat moment_value(size_t m) {
    if (m % 2 == 0) {
        // C(m, m/2) / 2^(m+1)
        return Rat(binomial(m, m / 2)) / Rat(pow2(m + 1));
    }
    return -Rat(binomial(m + 1, (m + 1) / 2)) / Rat(pow2(m + 2));
}
} // namespace

Rat MomentTable::moment(size_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= m) values_.push_back(moment_value(values_.size()));
    return values_[m];
}

MomentTable& default_moments() {
    static MomentTable table;
    return table;
}

Rat moment(size_t m) { return default_moments().moment(m); }

Rat pair(const PolyVec& g, const PolyVec& s) {
    Poly w = wedge(g, s);
    Rat acc(0);
    for (int m = 0; m <= w.degree(); ++m) acc += w.coeff(m) * moment(m);
    return acc;
}

Rat cylinder_overlap_area(const Cylinder& A, const Cylinder& B) {
    return cylinder_overlap_area(A, B, GroupWord{}, 0);
}

Rat cylinder_overlap_area(const Cylinder& A, const Cylinder& B, const GroupWord& w, long n) {
    PolyVec core_a = (n == 0) ? A.core : act_power_vec(w, A.core, n);
    Rat w1 = wedge(core_a, B.core).eval(Rat(1));
    if (w1 == 0)
        throw ParallelCylinders("cylinder cores are parallel at parameter 1");
    Rat p = pair(core_a, B.core);
    return rat_abs(p) * A.area * B.area / rat_abs(w1);
}

PairBounds geodesic_pair_bounds(const std::vector<PolyVec>& alpha,
                                const std::vector<PolyVec>& gamma) {
    if (alpha.empty() || gamma.empty())
        throw DomainError("geodesic_pair_bounds needs nonempty multicurves");
    Rat center(0);
    for (const auto& a : alpha)
        for (const auto& g : gamma) center += rat_abs(pair(a, g));
    Rat slack = Rat(2) * Rat(static_cast<long>(alpha.size())) *
                Rat(static_cast<long>(gamma.size()));
    return {center - slack, center, center + slack};
}

} // namespace parasurf
