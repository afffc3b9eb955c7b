#include <doctest.h>

#include "oracles.hpp"
#include "parasurf/errors.hpp"
#include "parasurf/veech.hpp"

using namespace parasurf;

TEST_CASE("word reduction") {
    CHECK(word_reduce("abba").is_identity());
    CHECK(parse_word("aabccb").is_identity());
    CHECK(word_reduce("abab").letters == "abab");
    CHECK(word_reduce("abbbba").letters == "");
    CHECK(word_reduce("cabbac").letters == "");
    CHECK_THROWS_AS(word_reduce("abxc"), DomainError);

    GroupWord neg = parse_word("-ab");
    CHECK(neg.letters == "ab");
    CHECK(neg.sign == -1);
    CHECK_FALSE(neg.is_identity());
    CHECK(parse_word(word_str(neg)) == neg);
    CHECK(parse_word("").is_identity());
    CHECK(word_str(parse_word("abc")) == "abc");
}

TEST_CASE("group law") {
    GroupWord ab = parse_word("ab"), ba = parse_word("ba");
    CHECK(concat(ab, ba).is_identity());
    CHECK(concat(ab, parse_word("bc")).letters == "ac");
    CHECK(concat(parse_word("-a"), parse_word("-b")) == parse_word("ab"));
    CHECK(concat(parse_word("-a"), parse_word("b")) == parse_word("-ab"));

    SUBCASE("random round-trips") {
        for (int i = 0; i < 50; ++i) {
            GroupWord w = word_reduce(oracles::random_word(10));
            CHECK(concat(w, w).letters.size() % 2 == 0);
            CHECK(parse_word(word_str(w)) == w);
        }
    }
}

TEST_CASE("generator images") {
    Poly c = Poly::variable();
    CHECK(rho(parse_word("a")) == PolyMatrix{Poly(-1), Poly(0), Poly(0), Poly(1)});
    CHECK(rho(parse_word("b")) == PolyMatrix{Poly(-1), Poly(2), Poly(0), Poly(1)});
    CHECK(rho(parse_word("c")) == PolyMatrix{-c, c - Poly(1), -c - Poly(1), c});
    CHECK(rho(parse_word("ab")) == PolyMatrix{Poly(1), Poly(-2), Poly(0), Poly(1)});
    CHECK(rho(GroupWord{}) == PolyMatrix::identity());
    CHECK(rho(parse_word("-")) == -PolyMatrix::identity());

    SUBCASE("involutions") {
        for (const char* g : {"a", "b", "c"}) {
            GroupWord w = parse_word(g);
            CHECK(rho(w).mul(rho(w)) == PolyMatrix::identity());
            CHECK(rho(w).det() == Poly(-1));
        }
    }

    SUBCASE("pinned composite") {
        PolyMatrix m = rho(parse_word("abc"));
        CHECK(m.trace() == c * Rat(2) + Poly(2));
        CHECK(m.det() == Poly(-1));
        CHECK(m == PolyMatrix{c + Poly(2), -c - Poly(1), -c - Poly(1), c});
    }
}

TEST_CASE("evaluation at a parameter") {
    RatMat m = rho_at(parse_word("c"), 1);
    CHECK(m.a == Rat(-1));
    CHECK(m.b == Rat(0));
    CHECK(m.c == Rat(-2));
    CHECK(m.d == Rat(1));
    CHECK(m.det() == Rat(-1));

    RatMat h = rho_at(parse_word("abc"), 1);
    CHECK(h.a == Rat(3));
    CHECK(h.b == Rat(-2));
    CHECK(h.c == Rat(-2));
    CHECK(h.d == Rat(1));
    CHECK(h.trace() == Rat(4));
}

TEST_CASE("representation is a homomorphism") {
    for (int i = 0; i < 100; ++i) {
        GroupWord w1 = word_reduce(oracles::random_word(8));
        GroupWord w2 = word_reduce(oracles::random_word(8));
        CHECK(rho(concat(w1, w2)) == rho(w1).mul(rho(w2)));
    }
}

TEST_CASE("hyperbolicity at the square parameter") {
    CHECK(is_hyperbolic(parse_word("abc")));
    CHECK(is_hyperbolic(parse_word("cba")));
    CHECK_FALSE(is_hyperbolic(parse_word("a")));   // trace 0, det -1
    CHECK_FALSE(is_hyperbolic(parse_word("ab")));  // parabolic, trace 2
    CHECK_FALSE(is_hyperbolic(parse_word("ac")));  // parabolic
    CHECK_FALSE(is_hyperbolic(GroupWord{}));       // identity
    CHECK(is_hyperbolic(parse_word("abcb")));
}

TEST_CASE("action on classes") {
    PolyVec s0 = sigma_class(0).hvec;
    PolyVec moved = act_vec(parse_word("ab"), s0);
    CHECK(moved == PolyVec(Rat(-1), Rat(1)));

    SUBCASE("closed curves stay closed") {
        for (const char* txt : {"a", "b", "c", "abc", "bcab"}) {
            GroupWord w = parse_word(txt);
            CHECK_NOTHROW(act(w, gamma_class(1)));
            CHECK_NOTHROW(act(w, gamma_class(-2)));
        }
    }

    SUBCASE("powers compose") {
        GroupWord w = parse_word("abc");
        PolyVec g = gamma_class(1).hvec;
        PolyVec thrice = act_vec(w, act_vec(w, act_vec(w, g)));
        CHECK(act_power_vec(w, g, 3) == thrice);
        CHECK(act_power_vec(w, act_power_vec(w, g, -2), 2) == g);
        CHECK(act_power_vec(w, g, 0) == g);
    }
}
