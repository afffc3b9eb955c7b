#pragma once

#include <string>
#include <vector>

#include "parasurf/highprec.hpp"
#include "parasurf/poly.hpp"
#include "parasurf/rational.hpp"

namespace parasurf {

// Element a + b*sqrt(D) of a real quadratic field, D > 1 squarefree.  Every
// value carries its radicand; mixing distinct radicands throws.  Pure
// rationals are represented with b == 0 but still live over a declared D so
// that downstream arithmetic has an unambiguous field.
class QuadNum {
public:
    QuadNum() : a_(0), b_(0), d_(1) {}
    QuadNum(Rat a, Rat b, long d);
    static QuadNum rational(const Rat& a, long d) { return QuadNum(a, Rat(0), d); }

    const Rat& rat_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const; // DomainError on zero divisor

    bool operator==(const QuadNum& o) const;
    bool operator!=(const QuadNum& o) const { return !(*this == o); }

    QuadNum conj() const { return QuadNum(a_, -b_, d_); }
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); } // value * conjugate

    // Exact sign of the real embedding (sqrt(D) > 0).
    int sign() const;
    QuadNum abs() const { return sign() < 0 ? -(*this) : *this; }

    Real embed() const; // numeric value at working precision

    // "p/q + r/s*sqrt(D)" — stable machine-facing form used in JSON reports.
    std::string str() const;
    // Compact human form: "2+sqrt(5)", "sqrt(5)/5", "-1/2", ...
    std::string pretty() const;

private:
    Rat a_, b_;
    long d_;
    long common_radicand(const QuadNum& o) const;
};

// Write the square root of a nonnegative rational inside Q(sqrt(D)):
// r = s^2 gives (s, 0), r = s^2 * D gives (0, s).  Throws NegativeConstantTerm
// for r < 0 and DomainError when the root does not lie in the field.
QuadNum quad_sqrt_of_rational(const Rat& r, long d);

// n = square * squarefree decomposition; returns {sqrt(square), squarefree}.
// Exact for every n whose post-trial-division cofactor is 1, prime, a perfect
// square, or below 10^18; throws DomainError beyond that.
std::pair<Int, Int> squarefree_split(const Int& n);

// Truncated power series with QuadNum coefficients: sum_{m<=K} c_m eps^m.
// The truncation order K is part of the value; binary operations take the
// smaller K of their operands.  Coefficients are exact, so every coefficient
// of a sum/product/quotient/sqrt up to its K is the true Taylor coefficient.
class QuadSeries {
public:
    QuadSeries() : d_(1), order_(0) { coeffs_.assign(1, QuadNum()); }
    QuadSeries(std::vector<QuadNum> coeffs, long d, int order);

    // Constant series over D, truncated at order K.
    static QuadSeries constant(const QuadNum& c, int order);
    // Lift a polynomial (in the same variable as the series) over D.
    static QuadSeries from_poly(const Poly& p, long d, int order);

    int order() const { return order_; }
    long radicand() const { return d_; }
    const QuadNum& coeff(size_t m) const;

    QuadSeries operator+(const QuadSeries& o) const;
    QuadSeries operator-(const QuadSeries& o) const;
    QuadSeries operator-() const;
    QuadSeries operator*(const QuadSeries& o) const;
    QuadSeries operator*(const QuadNum& s) const;

    bool operator==(const QuadSeries& o) const;

    bool is_zero() const;
    // Smallest m with nonzero coefficient, or -1 if identically zero to K.
    int first_nonzero_order() const;

private:
    std::vector<QuadNum> coeffs_; // size order_+1
    long d_;
    int order_;
};

// s / t. The divisor's constant term must be invertible (NonUnitConstantTerm).
QuadSeries quad_series_div(const QuadSeries& s, const QuadSeries& t);

// Square root with the positive-embedding branch at order zero.  The constant
// term must be nonzero (NonUnitConstantTerm), embed positively
// (NegativeConstantTerm), and possess a square root inside the field.
QuadSeries quad_series_sqrt(const QuadSeries& s);

} // namespace parasurf
