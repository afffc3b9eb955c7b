#pragma once

#include <array>
#include <utility>
#include <vector>

#include "parasurf/highprec.hpp"
#include "parasurf/quadratic.hpp"
#include "parasurf/veech.hpp"

namespace parasurf {

// Exact spectral decomposition of rho(w) at parameter 1 for a hyperbolic w.
// Eigenvalues and eigenvectors live in Q(sqrt(D)) with D the squarefree part
// of the characteristic discriminant; the discriminant of a hyperbolic word
// is never a perfect square, so D > 1 always.
struct SpectralData {
    GroupWord word;
    Poly trace_poly;      // trace of rho(w) as a polynomial in the parameter
    Rat det;              // +1 or -1
    long disc = 1;        // squarefree D
    QuadNum lambda_u, lambda_s;              // |lambda_u| > |lambda_s|
    std::pair<QuadNum, QuadNum> eigvec_u;    // exact, unnormalized
    std::pair<QuadNum, QuadNum> eigvec_s;
    std::pair<Real, Real> unit_u, unit_s;    // numeric unit eigenvectors
};
SpectralData spectral_data(const GroupWord& w); // NotHyperbolic on failure

// Logarithmic derivative of the expanding eigenvalue along the parameter at
// 1:  beta = t'(1) / (2 lambda_u - t(1)).  Positive for every hyperbolic w.
QuadNum beta(const GroupWord& w);

// Taylor data (in eps = parameter - 1, truncated at `order`) of the
// eigenvalues and spectral projectors of rho(w):
//   rho = lambda_u P_u + lambda_s P_s,  P_u + P_s = I,  P_u^2 = P_u.
// All coefficients are exact elements of Q(sqrt(D)).
struct EigenSeries {
    long disc = 1;
    int order = 0;
    QuadSeries lambda_u, lambda_s;
    std::array<QuadSeries, 4> proj_u, proj_s; // row-major [[0,1],[2,3]]
};
EigenSeries eigen_series(const GroupWord& w, int order);

// Leading Taylor data of (P_u g) wedge s at the special parameter: the first
// eps-order k with a nonzero coefficient kappa.  Starts at `order` terms and
// doubles up to 64 before giving up (TruncationCapExceeded).
struct BarwedgeResult {
    int k = 0;
    QuadNum kappa;
};
BarwedgeResult barwedge_taylor(const GroupWord& w, const PolyVec& g, const PolyVec& s,
                               int order = 16);

// Decay-law constant for the pairing sequence pair(w^n g, s) ~ C lambda_u^n n^{-k-3/2}:
//   C = (-1)^k Gamma(k + 3/2) kappa sqrt(2) / (4 pi beta^{k+3/2}).
Real asymptotic_constant_value(int k, const QuadNum& kappa, const QuadNum& beta_val);
Real asymptotic_constant(const GroupWord& w, const PolyVec& g, const PolyVec& s);

// Mixing prediction for cylinder overlap areas:
//   Area(w^n A cap B) ~ area(A) area(B) / (4 sqrt(2 pi) beta^{3/2}) * n^{-3/2}.
Real mixing_constant(const GroupWord& w, const Rat& area_a, const Rat& area_b);

// Expansion/contraction content of a multicurve given by component classes:
//   mu_u = sum_i |u_u ^ hol_1(part_i)|,   mu_s likewise,
// with unit eigenvectors of rho(w) at parameter 1.
struct MuMeasures {
    Real mu_u, mu_s;
};
MuMeasures mu_measures(const GroupWord& w, const std::vector<PolyVec>& parts);

// The scale-invariant product |u_s ^ hol_1 v| |u_u ^ hol_1 w| / |u_u ^ u_s|,
// exact in Q(sqrt(D)); equals |kappa| of barwedge_taylor at order 0.
QuadNum mu_product_exact(const GroupWord& w, const PolyVec& v, const PolyVec& s);

// Spectral radius of rho(w) on a parameter grid (double precision floats).
struct ScanRow {
    Rat at;
    double radius;
};
std::vector<ScanRow> spectral_radius_scan(const GroupWord& w, const Rat& lo, const Rat& hi,
                                          const Rat& step);

// Convergence diagnostics for a decaying pairing sequence.
//   ratio_n = value_n n^{k+3/2} / (lambda^n C)   (lambda^n in log space),
//   log_ratio_n = log|value_n| - n log|lambda|,
//   slope = least-squares slope of log_ratio against log n over the window,
//   richardson = extrapolation of ratio_n in powers of n^{-1/2} along the
//   longest tail of rows whose indices grow by a constant integer factor.
struct DiagnosticsRow {
    long n = 0;
    Rat value;
    bool has_log = false;
    Real log_ratio;
    Real ratio;
};
struct DiagnosticsReport {
    std::vector<DiagnosticsRow> rows;
    Real slope;
    Real richardson;
    bool richardson_valid = false;
};
DiagnosticsReport convergence_diagnostics(const std::vector<std::pair<long, Rat>>& seq,
                                          const QuadNum& lambda, int k, const Real& C,
                                          long slope_lo = 0, long slope_hi = 0);

// Richardson extrapolation on a dyadic subsequence of `seq` (which must be
// sorted by index): starting from the largest index, keep halving while the
// halved index is present, up to `rungs` rows, then extrapolate the ratio
// column along that ladder.  Returns false when fewer than two ladder rows
// exist or the ladder degenerates (a vanishing value, say).
bool ladder_richardson(const std::vector<std::pair<long, Rat>>& seq, const QuadNum& lambda,
                       int k, const Real& C, Real& out, int rungs = 6);

} // namespace parasurf
