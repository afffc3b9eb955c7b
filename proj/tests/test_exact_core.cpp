#include <doctest.h>

#include "oracles.hpp"
#include "parasurf/errors.hpp"
#include "parasurf/highprec.hpp"
#include "parasurf/poly.hpp"
#include "parasurf/quadratic.hpp"
#include "parasurf/rational.hpp"

using namespace parasurf;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-2/4") == Rat(-1, 2));
    CHECK(rat_parse("42") == Rat(42));
    CHECK(rat_parse("-0") == Rat(0));
    CHECK(rat_str(Rat(5, 1)) == "5");
    CHECK(rat_str(Rat(-7, 3)) == "-7/3");
    CHECK(rat_str(rat_parse("-7/3")) == "-7/3");
    CHECK_THROWS_AS(rat_parse("abc"), DomainError);
    CHECK_THROWS_AS(rat_parse("1/0"), DomainError);
    CHECK_THROWS_AS(rat_parse(""), DomainError);
    CHECK_THROWS_AS(rat_parse("1.5"), DomainError);
}

TEST_CASE("rational helpers") {
    CHECK(rat_floor(Rat(-3, 2)) == Int(-2));
    CHECK(rat_floor(Rat(3, 2)) == Int(1));
    CHECK(rat_floor(Rat(-4, 2)) == Int(-2));
    CHECK(binomial(6, 3) == Int(20));
    CHECK(binomial(0, 0) == Int(1));
    CHECK(pow2(10) == Int(1024));
    CHECK(sign(Rat(0)) == 0);
    CHECK(sign(Rat(-1, 7)) == -1);
    CHECK(rat_abs(Rat(-5, 2)) == Rat(5, 2));
    CHECK(is_integer(Rat(4, 2)));
    CHECK_FALSE(is_integer(Rat(1, 2)));
}

TEST_CASE("high-precision reals") {
    CHECK(precision_bits() >= 256);
    CHECK_THROWS_AS(set_precision_bits(32), DomainError);
    Real third = to_real(Rat(1, 3));
    CHECK(abs(third * 3 - 1) < Real("1e-70"));
    CHECK(abs(real_pi() - Real("3.14159265358979323846264338328")) < Real("1e-25"));
    // Deterministic rendering.
    CHECK(real_str(third) == real_str(to_real(Rat(1, 3))));
}

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::variable();
    Poly p = x * x + x * Rat(2) + Poly(1); // (x+1)^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(3) == Rat(16));
    CHECK(p.derivative() == x * Rat(2) + Poly(2));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.coeff(5) == Rat(0));
    CHECK(p.leading() == Rat(1));

    Poly q = Poly(std::vector<Rat>{Rat(1), Rat(3), Rat(3), Rat(1)}); // (1+x)^3
    CHECK(q == (x + Poly(1)) * (x + Poly(1)) * (x + Poly(1)));

    SUBCASE("taylor shift") {
        Poly s = q.shifted(1); // (2+x)^3
        CHECK(s == Poly(std::vector<Rat>{Rat(8), Rat(12), Rat(6), Rat(1)}));
        CHECK(s.shifted(-1) == q);
        CHECK(q.shifted(Rat(1, 2)).eval(0) == q.eval(Rat(1, 2)));
    }
}

TEST_CASE("polynomial vectors and wedge") {
    PolyVec u(Rat(1), Rat(1));
    PolyVec v(Rat(1), Rat(-1));
    CHECK(wedge(u, v) == Poly(-2));
    CHECK(wedge(u, u).is_zero());
    auto [x1, y1] = (u + v).eval(7);
    CHECK(x1 == Rat(2));
    CHECK(y1 == Rat(0));
    CHECK((u * Rat(3)).x == Poly(3));
}

TEST_CASE("polynomial matrices and powers") {
    Poly c = Poly::variable();
    PolyMatrix t{c, c - Poly(1), c + Poly(1), c}; // det == 1
    CHECK(t.det() == Poly(1));
    CHECK(pmat_pow(t, 0) == PolyMatrix::identity());
    CHECK(pmat_pow(t, 3) == t.mul(t).mul(t));
    CHECK(pmat_pow(t, -2).mul(pmat_pow(t, 2)) == PolyMatrix::identity());
    CHECK(t.mul(t.adjugate()) == PolyMatrix::identity());

    PolyMatrix r{-c, c - Poly(1), -c - Poly(1), c}; // det == -1
    CHECK(r.det() == Poly(-1));
    CHECK(pmat_pow(r, -1).mul(r) == PolyMatrix::identity());
    CHECK(pmat_pow(r, -3) == pmat_pow(r, -1).mul(pmat_pow(r, -1)).mul(pmat_pow(r, -1)));

    PolyMatrix bad{c, Poly(0), Poly(0), c}; // det == c^2, not invertible over Z[c]
    CHECK_THROWS_AS(pmat_pow(bad, -1), DomainError);
}

TEST_CASE("quadratic field arithmetic") {
    QuadNum a(Rat(1), Rat(1), 5);  // 1 + sqrt(5)
    QuadNum b(Rat(2), Rat(-1), 5); // 2 - sqrt(5)
    CHECK(a * b == QuadNum(Rat(-3), Rat(1), 5));
    CHECK((a / a) == QuadNum(Rat(1), Rat(0), 5));
    CHECK(a.conj() == QuadNum(Rat(1), Rat(-1), 5));
    CHECK(a.norm() == Rat(-4));
    CHECK((a + b) == QuadNum(Rat(3), Rat(0), 5));
    CHECK_THROWS_AS(a / QuadNum(Rat(0), Rat(0), 5), DomainError);

    SUBCASE("mixed radicands rejected, rationals adopt") {
        QuadNum r2(Rat(1), Rat(1), 2);
        CHECK_THROWS_AS((void)(a + r2), MixedRadicands);
        QuadNum plain(Rat(3), Rat(0), 2); // rational payload over another field
        CHECK(a + plain == QuadNum(Rat(4), Rat(1), 5));
    }

    SUBCASE("sign is exact near zero") {
        // 72 sqrt(5) = sqrt(25920) vs 161 = sqrt(25921): difference ~ -0.003.
        QuadNum tiny(Rat(-161), Rat(72), 5);
        CHECK(tiny.sign() == -1);
        CHECK((-tiny).sign() == 1);
        CHECK(tiny.abs() == -tiny);
        CHECK(QuadNum(Rat(0), Rat(0), 5).sign() == 0);
        double emb = static_cast<double>(tiny.embed());
        CHECK(emb < 0);
        CHECK(emb > -0.01);
    }

    SUBCASE("rendering") {
        CHECK(QuadNum(Rat(-1), Rat(1, 5), 5).str() == "-1 + 1/5*sqrt(5)");
        CHECK(QuadNum(Rat(2), Rat(1), 5).pretty() == "2+sqrt(5)");
        CHECK(QuadNum(Rat(0), Rat(1, 5), 5).pretty() == "sqrt(5)/5");
        CHECK(QuadNum(Rat(-1, 2), Rat(0), 5).pretty() == "-1/2");
    }
}

TEST_CASE("square roots of rationals inside a field") {
    CHECK(quad_sqrt_of_rational(Rat(4), 5) == QuadNum(Rat(2), Rat(0), 5));
    CHECK(quad_sqrt_of_rational(Rat(20), 5) == QuadNum(Rat(0), Rat(2), 5));
    CHECK(quad_sqrt_of_rational(Rat(9, 4), 5) == QuadNum(Rat(3, 2), Rat(0), 5));
    CHECK_THROWS_AS(quad_sqrt_of_rational(Rat(3), 5), DomainError);
    CHECK_THROWS_AS(quad_sqrt_of_rational(Rat(-1), 5), NegativeConstantTerm);
}

TEST_CASE("squarefree split") {
    CHECK(squarefree_split(Int(20)) == std::pair<Int, Int>(Int(2), Int(5)));
    CHECK(squarefree_split(Int(1)) == std::pair<Int, Int>(Int(1), Int(1)));
    CHECK(squarefree_split(Int(49)) == std::pair<Int, Int>(Int(7), Int(1)));
    CHECK(squarefree_split(Int(12)) == std::pair<Int, Int>(Int(2), Int(3)));
    CHECK(squarefree_split(Int(5)) == std::pair<Int, Int>(Int(1), Int(5)));
    // Large prime cofactor after trial division.
    Int p("1000000007");
    CHECK(squarefree_split(4 * p) == std::pair<Int, Int>(Int(2), p));
}

TEST_CASE("quadratic power series") {
    long d = 5;
    Poly x = Poly::variable();

    SUBCASE("from_poly and arithmetic") {
        QuadSeries s = QuadSeries::from_poly(x + Poly(1), d, 3);
        CHECK(s.coeff(0) == QuadNum(Rat(1), Rat(0), d));
        CHECK(s.coeff(1) == QuadNum(Rat(1), Rat(0), d));
        CHECK(s.coeff(2) == QuadNum(Rat(0), Rat(0), d));
        QuadSeries sq = s * s;
        CHECK(sq.coeff(0) == QuadNum(Rat(1), Rat(0), d));
        CHECK(sq.coeff(1) == QuadNum(Rat(2), Rat(0), d));
        CHECK(sq.coeff(2) == QuadNum(Rat(1), Rat(0), d));
        CHECK(sq.coeff(3) == QuadNum(Rat(0), Rat(0), d));
    }

    SUBCASE("division round-trip") {
        QuadSeries s = QuadSeries::from_poly(x + Poly(1), d, 6);
        QuadSeries t = QuadSeries::from_poly(x * x * Rat(-1) + Poly(1), d, 6); // 1 - x^2
        CHECK(quad_series_div(t, s) == QuadSeries::from_poly(Poly(1) - x, d, 6));
        CHECK(quad_series_div(s, s) == QuadSeries::constant(QuadNum(Rat(1), Rat(0), d), 6));
        QuadSeries zero_const = QuadSeries::from_poly(x, d, 6);
        CHECK_THROWS_AS(quad_series_div(s, zero_const), NonUnitConstantTerm);
    }

    SUBCASE("square root round-trip") {
        QuadSeries s = QuadSeries::from_poly(x + Poly(1), d, 8);
        CHECK(quad_series_sqrt(s * s) == s);
        // Constant term a quadratic irrational: (1/2 + 1/2 sqrt(5))^2.
        QuadNum phi(Rat(1, 2), Rat(1, 2), d);
        QuadSeries t = (s * s) * (phi * phi);
        CHECK(quad_series_sqrt(t) == s * phi);
        // Constant term whose root leaves the field.
        QuadSeries no_root = QuadSeries::constant(QuadNum(Rat(3), Rat(0), d), 4);
        CHECK_THROWS_AS(quad_series_sqrt(no_root), DomainError);
        QuadSeries neg = QuadSeries::constant(QuadNum(Rat(-4), Rat(0), d), 4);
        CHECK_THROWS_AS(quad_series_sqrt(neg), NegativeConstantTerm);
    }

    SUBCASE("first nonzero order") {
        QuadSeries s = QuadSeries::from_poly(x * x * Rat(3), d, 5);
        CHECK(s.first_nonzero_order() == 2);
        CHECK(QuadSeries::constant(QuadNum(), 5).first_nonzero_order() == -1);
    }
}
