#include "parasurf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "parasurf/errors.hpp"

namespace parasurf {

namespace {

// Trace and determinant polynomials of rho(w).
PolyMatrix rho_mat(const GroupWord& w) { return rho(w); }

Rat det_constant(const PolyMatrix& m) {
    Poly d = m.det();
    if (d.degree() > 0)
        throw DomainError("group image has non-constant determinant");
    return d.coeff(0);
}

} // namespace

SpectralData spectral_data(const GroupWord& w) {
    if (!is_hyperbolic(w))
        throw NotHyperbolic("word is not hyperbolic at c=1");
    PolyMatrix m = rho_mat(w);
    Poly t = m.trace();
    Rat det = det_constant(m);
    Rat t1 = t.eval(1);
    // For a hyperbolic word the trace at 1 is an integer and the discriminant
    // t1^2 - 4 det is positive and never a perfect square.
    Rat disc_rat = t1 * t1 - 4 * det;
    if (!is_integer(t1) || !is_integer(disc_rat))
        throw DomainError("non-integral trace at the square parameter");
    if (sign(disc_rat) <= 0)
        throw NotHyperbolic("discriminant is not positive at c=1");
    auto [sq, sf] = squarefree_split(disc_rat.get_num());
    if (sf == 1)
        throw DomainError("hyperbolic discriminant is a perfect square (unexpected)");
    if (!sf.fits_slong_p())
        throw DomainError("discriminant radicand out of range");
    long d = sf.get_si();

    SpectralData out;
    out.word = w;
    out.trace_poly = t;
    out.det = det;
    out.disc = d;
    // lambda = (t1 +- sq sqrt(d)) / 2; the expanding one has the larger
    // absolute value, i.e. the sign of the surd term matches the sign of t1
    // (when t1 = 0 the det is -1 case with trace 0, excluded by hyperbolicity).
    Rat half_t = t1 / 2;
    Rat half_s = Rat(sq) / 2;
    if (sign(t1) >= 0) {
        out.lambda_u = QuadNum(half_t, half_s, d);
        out.lambda_s = QuadNum(half_t, -half_s, d);
    } else {
        out.lambda_u = QuadNum(half_t, -half_s, d);
        out.lambda_s = QuadNum(half_t, half_s, d);
    }

    // Exact eigenvectors of the 2x2 matrix at parameter 1.
    Rat a = m.a.eval(1), b = m.b.eval(1), c = m.c.eval(1), dd = m.d.eval(1);
    auto eigvec = [&](const QuadNum& lam) -> std::pair<QuadNum, QuadNum> {
        QuadNum qa(a, Rat(0), d), qb(b, Rat(0), d);
        QuadNum qc(c, Rat(0), d), qd(dd, Rat(0), d);
        if (!(qb == QuadNum(Rat(0), Rat(0), d)))
            return {qb, lam - qa};
        if (!(qc == QuadNum(Rat(0), Rat(0), d)))
            return {lam - qd, qc};
        // Diagonal matrix: eigenvalues rational, contradicting d > 1.
        throw DomainError("diagonal image with irrational eigenvalues");
    };
    out.eigvec_u = eigvec(out.lambda_u);
    out.eigvec_s = eigvec(out.lambda_s);

    auto unitize = [](const std::pair<QuadNum, QuadNum>& v) -> std::pair<Real, Real> {
        Real x = v.first.embed(), y = v.second.embed();
        Real nrm = sqrt(x * x + y * y);
        return {x / nrm, y / nrm};
    };
    out.unit_u = unitize(out.eigvec_u);
    out.unit_s = unitize(out.eigvec_s);
    return out;
}

QuadNum beta(const GroupWord& w) {
    SpectralData sd = spectral_data(w);
    Rat tp1 = sd.trace_poly.derivative().eval(1);
    Rat t1 = sd.trace_poly.eval(1);
    QuadNum denom = sd.lambda_u * QuadNum::rational(Rat(2), sd.disc) -
                    QuadNum::rational(t1, sd.disc);
    QuadNum b = QuadNum::rational(tp1, sd.disc) / denom;
    if (b.sign() <= 0)
        throw DomainError("eigenvalue derivative is not positive");
    return b;
}

EigenSeries eigen_series(const GroupWord& w, int order) {
    if (order < 0)
        throw DomainError("negative series order");
    SpectralData sd = spectral_data(w);
    long d = sd.disc;
    PolyMatrix m = rho_mat(w);

    // Re-express every entry in eps = parameter - 1 and truncate.
    auto as_series = [&](const Poly& p) {
        return QuadSeries::from_poly(p.shifted(1), d, order);
    };
    QuadSeries a = as_series(m.a), b = as_series(m.b);
    QuadSeries c = as_series(m.c), dd = as_series(m.d);

    QuadSeries t = a + dd;
    QuadSeries det = a * dd - b * c;
    QuadSeries disc = t * t - det * QuadNum::rational(Rat(4), d);
    QuadSeries s = quad_series_sqrt(disc);

    QuadNum half(Rat(1, 2), Rat(0), d);
    QuadSeries lu = (sign(sd.trace_poly.eval(1)) >= 0 ? t + s : t - s) * half;
    QuadSeries ls = (sign(sd.trace_poly.eval(1)) >= 0 ? t - s : t + s) * half;

    // P_u = (rho - lambda_s I) / (lambda_u - lambda_s), entrywise.
    QuadSeries gap = lu - ls;
    auto div_gap = [&](const QuadSeries& num) { return quad_series_div(num, gap); };
    QuadSeries one = QuadSeries::constant(QuadNum::rational(Rat(1), d), order);
    QuadSeries zero = QuadSeries::constant(QuadNum::rational(Rat(0), d), order);

    EigenSeries out;
    out.disc = d;
    out.order = order;
    out.lambda_u = lu;
    out.lambda_s = ls;
    out.proj_u = {div_gap(a - ls), div_gap(b), div_gap(c), div_gap(dd - ls)};
    out.proj_s = {one - out.proj_u[0], zero - out.proj_u[1], zero - out.proj_u[2],
                  one - out.proj_u[3]};
    return out;
}

BarwedgeResult barwedge_taylor(const GroupWord& w, const PolyVec& g, const PolyVec& s,
                               int order) {
    if (order < 1)
        throw DomainError("series order must be positive");
    constexpr int kOrderCap = 64;
    int ord = order;
    while (true) {
        EigenSeries es = eigen_series(w, ord);
        long d = es.disc;
        QuadSeries gx = QuadSeries::from_poly(g.x.shifted(1), d, ord);
        QuadSeries gy = QuadSeries::from_poly(g.y.shifted(1), d, ord);
        QuadSeries sx = QuadSeries::from_poly(s.x.shifted(1), d, ord);
        QuadSeries sy = QuadSeries::from_poly(s.y.shifted(1), d, ord);

        QuadSeries px = es.proj_u[0] * gx + es.proj_u[1] * gy;
        QuadSeries py = es.proj_u[2] * gx + es.proj_u[3] * gy;
        QuadSeries wedge = px * sy - py * sx;

        int k = wedge.first_nonzero_order();
        if (k >= 0)
            return {k, wedge.coeff(k)};
        if (ord >= kOrderCap)
            throw TruncationCapExceeded("projected wedge vanishes to every checked order");
        ord = std::min(ord * 2, kOrderCap);
    }
}

Real asymptotic_constant_value(int k, const QuadNum& kappa, const QuadNum& beta_val) {
    if (k < 0)
        throw DomainError("negative vanishing order");
    // Gamma(k + 3/2) = (2k+1)!! sqrt(pi) / 2^{k+1}.
    Int dfac = 1;
    for (int j = 1; j <= 2 * k + 1; j += 2)
        dfac *= j;
    Real pi = real_pi();
    Real gam = to_real(Rat(dfac)) * sqrt(pi) / to_real(Rat(pow2(k + 1)));
    Real bk = pow(beta_val.embed(), Real(k) + Real(3) / 2);
    Real c = gam * kappa.embed() * sqrt(Real(2)) / (4 * pi * bk);
    return (k % 2 == 0) ? c : -c;
}

Real asymptotic_constant(const GroupWord& w, const PolyVec& g, const PolyVec& s) {
    BarwedgeResult br = barwedge_taylor(w, g, s);
    return asymptotic_constant_value(br.k, br.kappa, beta(w));
}

Real mixing_constant(const GroupWord& w, const Rat& area_a, const Rat& area_b) {
    QuadNum b = beta(w);
    Real pi = real_pi();
    Real denom = 4 * sqrt(2 * pi) * pow(b.embed(), Real(3) / 2);
    return to_real(area_a * area_b) / denom;
}

MuMeasures mu_measures(const GroupWord& w, const std::vector<PolyVec>& parts) {
    SpectralData sd = spectral_data(w);
    Real mu_u = 0, mu_s = 0;
    for (const PolyVec& p : parts) {
        auto [hx, hy] = p.eval(1);
        Real x = to_real(hx), y = to_real(hy);
        mu_u += abs(sd.unit_u.first * y - sd.unit_u.second * x);
        mu_s += abs(sd.unit_s.first * y - sd.unit_s.second * x);
    }
    return {mu_u, mu_s};
}

QuadNum mu_product_exact(const GroupWord& w, const PolyVec& v, const PolyVec& s) {
    SpectralData sd = spectral_data(w);
    long d = sd.disc;
    auto [vx, vy] = v.eval(1);
    auto [sx, sy] = s.eval(1);
    auto wedge_with = [&](const std::pair<QuadNum, QuadNum>& u, const Rat& x,
                          const Rat& y) {
        return u.first * QuadNum::rational(y, d) - u.second * QuadNum::rational(x, d);
    };
    QuadNum num = wedge_with(sd.eigvec_s, vx, vy).abs() * wedge_with(sd.eigvec_u, sx, sy).abs();
    QuadNum den =
        (sd.eigvec_u.first * sd.eigvec_s.second - sd.eigvec_u.second * sd.eigvec_s.first)
            .abs();
    return num / den;
}

std::vector<ScanRow> spectral_radius_scan(const GroupWord& w, const Rat& lo, const Rat& hi,
                                          const Rat& step) {
    if (sign(step) <= 0)
        throw DomainError("scan step must be positive");
    if (lo > hi)
        throw DomainError("empty scan range");
    PolyMatrix m = rho_mat(w);
    Poly t = m.trace();
    Rat det = det_constant(m);
    std::vector<ScanRow> out;
    for (Rat at = lo; at <= hi; at += step) {
        double tr = t.eval(at).get_d();
        double de = det.get_d();
        double disc = tr * tr - 4 * de;
        double radius;
        if (disc >= 0) {
            double r = std::sqrt(disc);
            radius = std::max(std::abs((tr + r) / 2), std::abs((tr - r) / 2));
        } else {
            // Complex pair: |lambda| = sqrt(det).
            radius = std::sqrt(de);
        }
        out.push_back({at, radius});
    }
    return out;
}

DiagnosticsReport convergence_diagnostics(const std::vector<std::pair<long, Rat>>& seq,
                                          const QuadNum& lambda, int k, const Real& C,
                                          long slope_lo, long slope_hi) {
    if (seq.empty())
        throw DegenerateSequence("empty sequence");
    if (C == 0)
        throw DomainError("zero reference constant");
    Real log_lam = log(abs(lambda.embed()));
    Real log_c = log(abs(C));
    Real expo = Real(k) + Real(3) / 2;

    DiagnosticsReport rep;
    rep.rows.reserve(seq.size());
    for (const auto& [n, value] : seq) {
        if (n <= 0)
            throw DomainError("sequence indices must be positive");
        DiagnosticsRow row;
        row.n = n;
        row.value = value;
        if (sign(value) != 0) {
            Real log_v = log(abs(to_real(value)));
            row.has_log = true;
            row.log_ratio = log_v - Real(n) * log_lam;
            // value * n^{k+3/2} / (lambda^n C), assembled in log space so that
            // lambda^n never overflows, with the sign restored at the end.
            Real log_ratio_c = log_v + expo * log(Real(n)) - Real(n) * log_lam - log_c;
            Real mag = exp(log_ratio_c);
            int sgn = sign(value) * (C < 0 ? -1 : 1);
            // lambda^n sign: negative lambda flips odd powers.
            if (lambda.embed() < 0 && n % 2 == 1)
                sgn = -sgn;
            row.ratio = sgn < 0 ? -mag : mag;
        } else {
            row.ratio = Real(0);
        }
        rep.rows.push_back(row);
    }

    // Least-squares slope of log|value / lambda^n| against log n.
    std::vector<std::pair<Real, Real>> pts;
    for (const auto& row : rep.rows) {
        if (!row.has_log)
            continue;
        if (slope_hi > slope_lo && (row.n < slope_lo || row.n > slope_hi))
            continue;
        pts.push_back({log(Real(row.n)), row.log_ratio});
    }
    if (pts.size() < 2)
        throw DegenerateSequence("not enough nonzero terms for a slope estimate");
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    Real n_pts = Real(static_cast<long>(pts.size()));
    rep.slope = (n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);

    // Richardson extrapolation along the longest suffix whose indices grow by
    // a constant integer factor rho; errors decay in powers of n^{-1/2}, so
    // the elimination ratio is q = rho^{-1/2}.
    long rho = 0;
    size_t start = rep.rows.size();
    for (size_t i = rep.rows.size(); i-- > 1;) {
        long cur = rep.rows[i].n, prev = rep.rows[i - 1].n;
        if (prev <= 0 || cur % prev != 0) break;
        long f = cur / prev;
        if (f < 2) break;
        if (rho == 0) rho = f;
        if (f != rho) break;
        start = i - 1;
    }
    if (rho >= 2 && rep.rows.size() - start >= 2) {
        std::vector<Real> col;
        bool usable = true;
        for (size_t i = start; i < rep.rows.size(); ++i) {
            if (!rep.rows[i].has_log) {
                usable = false;
                break;
            }
            col.push_back(rep.rows[i].ratio);
        }
        if (usable && col.size() >= 2) {
            Real q = Real(1) / sqrt(Real(rho));
            Real qm = 1;
            for (size_t m = 1; m < col.size(); ++m) {
                qm *= q;
                std::vector<Real> next;
                for (size_t i = 0; i + 1 < col.size(); ++i)
                    next.push_back((col[i + 1] - qm * col[i]) / (1 - qm));
                col = std::move(next);
            }
            rep.richardson = col[0];
            rep.richardson_valid = true;
        }
    }
    return rep;
}

bool ladder_richardson(const std::vector<std::pair<long, Rat>>& seq, const QuadNum& lambda,
                       int k, const Real& C, Real& out, int rungs) {
    if (seq.empty() || rungs < 2) return false;
    std::vector<std::pair<long, Rat>> ladder;
    long n = seq.back().first;
    while (static_cast<int>(ladder.size()) < rungs) {
        auto it = std::lower_bound(
            seq.begin(), seq.end(), n,
            [](const std::pair<long, Rat>& row, long key) { return row.first < key; });
        if (it == seq.end() || it->first != n) break;
        ladder.push_back(*it);
        if (n % 2 != 0) break;
        n /= 2;
    }
    if (ladder.size() < 2) return false;
    std::reverse(ladder.begin(), ladder.end());
    try {
        DiagnosticsReport diag = convergence_diagnostics(ladder, lambda, k, C);
        if (!diag.richardson_valid) return false;
        out = diag.richardson;
        return true;
    } catch (const DegenerateSequence&) {
        return false;
    }
}

} // namespace parasurf
