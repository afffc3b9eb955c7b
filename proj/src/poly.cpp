#include "parasurf/poly.hpp"

#include <algorithm>

namespace parasurf {

Poly::Poly(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::variable() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& a, size_t m) {
    if (a == 0) return {};
    std::vector<Rat> c(m + 1, Rat(0));
    c[m] = a;
    return Poly(std::move(c));
}

Rat Poly::coeff(size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : Rat(0);
}

const Rat& Poly::leading() const { return coeffs_.back(); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x = -x;
    Poly p;
    p.coeffs_ = std::move(c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return {};
    std::vector<Rat> c(coeffs_);
    for (auto& x : c) x *= s;
    Poly p;
    p.coeffs_ = std::move(c);
    return p;
}

Rat Poly::eval(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> c(coeffs_.size() - 1);
    for (size_t m = 1; m < coeffs_.size(); ++m) c[m - 1] = coeffs_[m] * Rat(static_cast<long>(m));
    return Poly(std::move(c));
}

Poly Poly::shifted(const Rat& a) const {
    // Horner in (x + a): result = (...(c_n (x+a) + c_{n-1})(x+a) + ...) + c_0.
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        // acc <- acc * (x + a) + c_i
        Poly shifted_up = Poly::monomial(Rat(1), 1) * acc + acc * a;
        acc = shifted_up + Poly(*it);
    }
    return acc;
}

PolyMatrix PolyMatrix::identity() {
    return {Poly(Rat(1)), Poly(), Poly(), Poly(Rat(1))};
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

PolyMatrix pmat_pow(const PolyMatrix& m, long n) {
    PolyMatrix base = m;
    if (n < 0) {
        Poly dt = m.det();
        if (dt.degree() > 0 || (dt != Poly(Rat(1)) && dt != Poly(Rat(-1))))
            throw DomainError("negative power needs determinant +1 or -1");
        // adj(m) = det * m^{-1}; with det = s in {1, -1}: m^{-1} = s * adj(m).
        base = m.adjugate();
        if (dt == Poly(Rat(-1))) base = -base;
        n = -n;
    }
    PolyMatrix acc = PolyMatrix::identity();
    while (n > 0) {
        if (n & 1) acc = acc.mul(base);
        base = base.mul(base);
        n >>= 1;
    }
    return acc;
}

} // namespace parasurf
