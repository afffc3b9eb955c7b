#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "parasurf/rational.hpp"

namespace parasurf {

// Dense univariate polynomial over the rationals.  The family parameter of
// the surface is the indeterminate throughout the library, so a Poly is "a
// number that knows how it varies with the parameter".
//
// Invariant: coeffs_ is empty (the zero polynomial) or its last entry is
// nonzero.  All operations are pure; a Poly never mutates after construction.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs); // coeffs[m] multiplies x^m

    static Poly variable();                       // x
    static Poly monomial(const Rat& a, size_t m); // a * x^m

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^m, zero beyond the degree.
    Rat coeff(size_t m) const;
    const Rat& leading() const; // pre: nonzero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(const Rat& at) const;
    Poly derivative() const;

    // p(x + a): the Taylor shift.  shifted(1) re-expands around the special
    // parameter value, shifted(-1) undoes it exactly.
    Poly shifted(const Rat& a) const;

    const std::vector<Rat>& coeffs() const { return coeffs_; }

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Column vector of two polynomials: a deformation holonomy vector.  Evaluating
// at a parameter value gives the ordinary holonomy vector there.
struct PolyVec {
    Poly x, y;

    PolyVec() = default;
    PolyVec(Poly px, Poly py) : x(std::move(px)), y(std::move(py)) {}
    PolyVec(const Rat& cx, const Rat& cy) : x(cx), y(cy) {}

    PolyVec operator+(const PolyVec& o) const { return {x + o.x, y + o.y}; }
    PolyVec operator-(const PolyVec& o) const { return {x - o.x, y - o.y}; }
    PolyVec operator-() const { return {-x, -y}; }
    PolyVec operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const PolyVec& o) const { return x == o.x && y == o.y; }
    bool operator!=(const PolyVec& o) const { return !(*this == o); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    int degree() const { return std::max(x.degree(), y.degree()); }

    std::pair<Rat, Rat> eval(const Rat& at) const { return {x.eval(at), y.eval(at)}; }
};

inline PolyVec operator*(const Rat& s, const PolyVec& v) { return v * s; }
inline PolyVec operator*(const Poly& p, const PolyVec& v) { return {p * v.x, p * v.y}; }

// Determinant of the 2x2 with columns u, v — a polynomial in the parameter.
inline Poly wedge(const PolyVec& u, const PolyVec& v) { return u.x * v.y - u.y * v.x; }

// 2x2 polynomial matrix [[a, b], [c, d]].
struct PolyMatrix {
    Poly a, b, c, d;

    static PolyMatrix identity();

    PolyMatrix mul(const PolyMatrix& o) const;
    PolyVec apply(const PolyVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Poly det() const { return a * d - b * c; }
    Poly trace() const { return a + d; }

    PolyMatrix operator*(const Rat& s) const { return {a * s, b * s, c * s, d * s}; }
    PolyMatrix operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const PolyMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // Adjugate [[d, -b], [-c, a]]; mul(adjugate()) == det * I.
    PolyMatrix adjugate() const { return {d, -b, -c, a}; }
};

// Binary exponentiation; n == 0 gives the identity.  Negative n requires a
// constant determinant of +1 or -1 (true of every matrix this library hands
// out) and throws DomainError otherwise.
PolyMatrix pmat_pow(const PolyMatrix& m, long n);

} // namespace parasurf
