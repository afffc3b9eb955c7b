#include "parasurf/quadratic.hpp"

#include <algorithm>

namespace parasurf {

QuadNum::QuadNum(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) throw DomainError("radicand must be positive");
}

long QuadNum::common_radicand(const QuadNum& o) const {
    if (d_ == o.d_) return d_;
    if (b_ == 0) return o.d_;
    if (o.b_ == 0) return d_;
    throw MixedRadicands("cannot mix sqrt(" + std::to_string(d_) + ") with sqrt(" +
                         std::to_string(o.d_) + ")");
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    return QuadNum(a_ + o.a_, b_ + o.b_, common_radicand(o));
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    return QuadNum(a_ - o.a_, b_ - o.b_, common_radicand(o));
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    long d = common_radicand(o);
    return QuadNum(a_ * o.a_ + b_ * o.b_ * Rat(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    long d = common_radicand(o);
    Rat n = o.norm();
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm cannot
    // vanish for a nonzero value since d is not a perfect square.
    QuadNum inv(o.a_ / n, -o.b_ / n, d);
    return *this * inv;
}

bool QuadNum::operator==(const QuadNum& o) const {
    if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
    if (d_ != o.d_) return false;
    return a_ == o.a_ && b_ == o.b_;
}

int QuadNum::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    if (sgn(a_) == sgn(b_)) return sgn(a_);
    // Opposite signs: compare |a| against |b| sqrt(d) through the norm.
    int s = sgn(norm());
    return sgn(a_) > 0 ? s : -s;
}

Real QuadNum::embed() const {
    return to_real(a_) + to_real(b_) * sqrt(Real(d_));
}

std::string QuadNum::str() const {
    return rat_str(a_) + " + " + rat_str(b_) + "*sqrt(" + std::to_string(d_) + ")";
}

namespace {
std::string surd_term(const Rat& b, long d) {
    Int num = b.get_num(), den = b.get_den();
    std::string core = "sqrt(" + std::to_string(d) + ")";
    std::string s;
    if (num == 1) s = core;
    else if (num == -1) s = "-" + core;
    else s = num.get_str() + "*" + core;
    if (den != 1) s += "/" + den.get_str();
    return s;
}
} // namespace

std::string QuadNum::pretty() const {
    if (b_ == 0) return rat_str(a_);
    if (a_ == 0) return surd_term(b_, d_);
    if (b_ > 0) return rat_str(a_) + "+" + surd_term(b_, d_);
    return rat_str(a_) + "-" + surd_term(-b_, d_);
}

namespace {
// Exact square root of a nonnegative rational if it exists.
bool rational_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn) / Rat(sd);
    return true;
}
} // namespace

QuadNum quad_sqrt_of_rational(const Rat& r, long d) {
    if (r < 0) throw NegativeConstantTerm("square root of a negative value");
    if (r == 0) return QuadNum(Rat(0), Rat(0), d);
    Rat s;
    if (rational_sqrt(r, s)) return QuadNum(s, Rat(0), d);
    if (rational_sqrt(r / Rat(d), s)) return QuadNum(Rat(0), s, d);
    throw DomainError("square root does not lie in Q(sqrt(" + std::to_string(d) + "))");
}

std::pair<Int, Int> squarefree_split(const Int& n) {
    if (n <= 0) throw DomainError("squarefree_split needs a positive integer");
    Int square_root(1), squarefree(1), m = n;

    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) square_root *= static_cast<long>(p);
        if (e % 2 == 1) squarefree *= static_cast<long>(p);
    };

    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= 1000000ul; p += 6) {
        if (m == 1) break;
        Int psq = Int(static_cast<long>(p)) * static_cast<long>(p);
        if (psq > m) break; // remaining cofactor is prime
        strip(p);
        strip(p + 2);
    }

    if (m > 1) {
        // Cofactor with no prime factor <= 10^6 (or proven prime by the
        // early break above).
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Int sm;
            mpz_sqrt(sm.get_mpz_t(), m.get_mpz_t());
            square_root *= sm;
        } else if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
            squarefree *= m;
        } else if (m < Int("1000000000000000000")) {
            // Composite, not a square, both prime factors above 10^6 and at
            // most two of them: necessarily squarefree.
            squarefree *= m;
        } else {
            throw DomainError("cannot certify squarefree part of " + m.get_str());
        }
    }
    return {square_root, squarefree};
}

// ---------------------------------------------------------------------------

QuadSeries::QuadSeries(std::vector<QuadNum> coeffs, long d, int order)
    : coeffs_(std::move(coeffs)), d_(d), order_(order) {
    if (order_ < 0) throw DomainError("series order must be nonnegative");
    coeffs_.resize(order_ + 1, QuadNum::rational(Rat(0), d_));
    for (auto& c : coeffs_) {
        if (!c.is_rational() && c.radicand() != d_)
            throw MixedRadicands("series coefficient over a different radicand");
        c = QuadNum(c.rat_part(), c.surd_part(), d_);
    }
}

QuadSeries QuadSeries::constant(const QuadNum& c, int order) {
    return QuadSeries({c}, c.radicand(), order);
}

QuadSeries QuadSeries::from_poly(const Poly& p, long d, int order) {
    std::vector<QuadNum> c;
    c.reserve(order + 1);
    for (int m = 0; m <= order; ++m) c.push_back(QuadNum::rational(p.coeff(m), d));
    return QuadSeries(std::move(c), d, order);
}

const QuadNum& QuadSeries::coeff(size_t m) const {
    if (m >= coeffs_.size()) throw DomainError("series coefficient beyond truncation order");
    return coeffs_[m];
}

namespace {
long merge_radicand(const QuadSeries& s, const QuadSeries& t) {
    if (s.radicand() == t.radicand()) return s.radicand();
    auto all_rational = [](const QuadSeries& q) {
        for (int m = 0; m <= q.order(); ++m)
            if (!q.coeff(m).is_rational()) return false;
        return true;
    };
    if (all_rational(s)) return t.radicand();
    if (all_rational(t)) return s.radicand();
    throw MixedRadicands("cannot combine series over different radicands");
}
} // namespace

QuadSeries QuadSeries::operator+(const QuadSeries& o) const {
    long d = merge_radicand(*this, o);
    int k = std::min(order_, o.order_);
    std::vector<QuadNum> c;
    c.reserve(k + 1);
    for (int m = 0; m <= k; ++m) c.push_back(coeffs_[m] + o.coeffs_[m]);
    return QuadSeries(std::move(c), d, k);
}

QuadSeries QuadSeries::operator-(const QuadSeries& o) const { return *this + (-o); }

QuadSeries QuadSeries::operator-() const {
    std::vector<QuadNum> c;
    c.reserve(order_ + 1);
    for (const auto& x : coeffs_) c.push_back(-x);
    return QuadSeries(std::move(c), d_, order_);
}

QuadSeries QuadSeries::operator*(const QuadSeries& o) const {
    long d = merge_radicand(*this, o);
    int k = std::min(order_, o.order_);
    std::vector<QuadNum> c(k + 1, QuadNum::rational(Rat(0), d));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return QuadSeries(std::move(c), d, k);
}

QuadSeries QuadSeries::operator*(const QuadNum& s) const {
    std::vector<QuadNum> c;
    c.reserve(order_ + 1);
    for (const auto& x : coeffs_) c.push_back(x * s);
    long d = (!s.is_rational()) ? s.radicand() : d_;
    return QuadSeries(std::move(c), d, order_);
}

bool QuadSeries::operator==(const QuadSeries& o) const {
    if (order_ != o.order_) return false;
    for (int m = 0; m <= order_; ++m)
        if (coeffs_[m] != o.coeffs_[m]) return false;
    return true;
}

bool QuadSeries::is_zero() const { return first_nonzero_order() < 0; }

int QuadSeries::first_nonzero_order() const {
    for (int m = 0; m <= order_; ++m)
        if (!coeffs_[m].is_zero()) return m;
    return -1;
}

QuadSeries quad_series_div(const QuadSeries& s, const QuadSeries& t) {
    long d = merge_radicand(s, t);
    int k = std::min(s.order(), t.order());
    if (t.coeff(0).is_zero())
        throw NonUnitConstantTerm("division by a series with zero constant term");
    std::vector<QuadNum> r(k + 1, QuadNum::rational(Rat(0), d));
    for (int m = 0; m <= k; ++m) {
        QuadNum acc = s.coeff(m);
        for (int i = 0; i < m; ++i) acc = acc - r[i] * t.coeff(m - i);
        r[m] = acc / t.coeff(0);
    }
    return QuadSeries(std::move(r), d, k);
}

namespace {
// Square root of a QuadNum inside its own field, positive embedding branch.
QuadNum quad_sqrt(const QuadNum& c) {
    if (c.is_zero()) throw NonUnitConstantTerm("square root of a series with zero constant term");
    if (c.sign() < 0) throw NegativeConstantTerm("square root of a negatively-embedded constant");
    long d = c.radicand();
    if (c.is_rational()) return quad_sqrt_of_rational(c.rat_part(), d);
    // (p + q sqrt(d))^2 = c:  p^2 + q^2 d = a,  2pq = b.  Then p^2 solves
    // X^2 - a X + b^2 d / 4 = 0, whose discriminant is the norm of c.
    Rat nrm = c.norm();
    Rat root_nrm;
    if (nrm >= 0 && mpz_perfect_square_p(nrm.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(nrm.get_den().get_mpz_t())) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), nrm.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), nrm.get_den().get_mpz_t());
        root_nrm = Rat(sn) / Rat(sd);
        for (int branch = 0; branch < 2; ++branch) {
            Rat X = (c.rat_part() + (branch == 0 ? root_nrm : -root_nrm)) / 2;
            if (X <= 0) continue;
            if (!mpz_perfect_square_p(X.get_num().get_mpz_t()) ||
                !mpz_perfect_square_p(X.get_den().get_mpz_t()))
                continue;
            Int pn, pd;
            mpz_sqrt(pn.get_mpz_t(), X.get_num().get_mpz_t());
            mpz_sqrt(pd.get_mpz_t(), X.get_den().get_mpz_t());
            Rat p = Rat(pn) / Rat(pd);
            Rat q = c.surd_part() / (2 * p);
            QuadNum cand(p, q, d);
            if (cand * cand == c) return cand.sign() > 0 ? cand : -cand;
        }
    }
    throw DomainError("square root does not lie in Q(sqrt(" + std::to_string(d) + "))");
}
} // namespace

QuadSeries quad_series_sqrt(const QuadSeries& s) {
    int k = s.order();
    long d = s.radicand();
    QuadNum r0 = quad_sqrt(s.coeff(0));
    std::vector<QuadNum> r(k + 1, QuadNum::rational(Rat(0), d));
    r[0] = r0;
    QuadNum two = QuadNum::rational(Rat(2), d);
    for (int m = 1; m <= k; ++m) {
        QuadNum acc = s.coeff(m);
        for (int i = 1; i < m; ++i) acc = acc - r[i] * r[m - i];
        r[m] = acc / (two * r0);
    }
    return QuadSeries(std::move(r), d, k);
}

} // namespace parasurf
