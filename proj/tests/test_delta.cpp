// The determinant-quotient operator delta_{a;b}: polynomiality, degree
// shifts, closed forms, boundary identities, and the warning that arguments
// must never be truncated before applying the operator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinv/delta.hpp"

using namespace trinv;

TEST_CASE("q_integer values") {
    CHECK(q_integer(0, 2) == 0);
    CHECK(q_integer(1, 2) == 1);
    CHECK(q_integer(2, 2) == 3);
    CHECK(q_integer(3, 2) == 7);
    CHECK(q_integer(2, 3) == 4);
    CHECK(q_integer(3, 3) == 13);
}

TEST_CASE("delta raises degree by q^b - q^(a-1) and adds one variable") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int m : {2, 3}) {
            Poly f = Q(1, 0, F, 1).pow(2);
            auto d = delta(2, m, f);
            REQUIRE(d.ok);
            CHECK(d.value.nvars == 2);
            CHECK(*d.value.degree() == *f.degree() + int_pow(q, m) - q);
            Poly g = Q(2, 1, F, 2);
            auto d3 = delta(3, m, g);
            REQUIRE(d3.ok);
            CHECK(d3.value.nvars == 3);
            // the image can vanish identically (it does at m = 2)
            if (!d3.value.is_zero())
                CHECK(*d3.value.degree() == *g.degree() + int_pow(q, m) - q * q);
        }
    }
}

TEST_CASE("frozen small image") {
    const Gf& F = field_of_size(2);
    // delta_{2;2}(x1) over F_2
    Poly d = delta(2, 2, Q(1, 0, F, 1)).poly();
    CHECK(d == parse_poly("x1^2*x2 + x1*x2^2", 2, F));
    // delta_{1;m}(1) is x1^(q^m - 1)
    Poly d1 = delta(1, 2, Poly::one(0, F)).poly();
    CHECK(d1 == parse_poly("x1^3", 1, F));
}

TEST_CASE("non-divisibility is reported, not thrown") {
    const Gf& F = field_of_size(2);
    // x1 as a two-variable polynomial is not GL_2-invariant enough for delta_3
    Poly f = Poly::variable(0, 2, F);
    auto d = delta(3, 2, f);
    CHECK_FALSE(d.ok);
    CHECK_FALSE(d.remainder.is_zero());
    CHECK_THROWS(d.poly());
}

TEST_CASE("closed form of delta_2(Q_{1,0}^s)") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int m : {2, 3}) {
            long long mq = q_integer(m, q);
            for (long long s = 0; s < mq; ++s) {
                auto d = delta(2, m, Q(1, 0, F, 1).pow(s));
                REQUIRE(d.ok);
                CHECK(d.value.truncated(m) == y_closed(m, static_cast<int>(s), F).truncated(m));
            }
            CHECK_THROWS(y_closed(m, static_cast<int>(mq), F));
        }
    }
}

TEST_CASE("closed form of delta_2^2(Q_{1,0}^s)") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int m : {2, 3}) {
            long long mq = q_integer(m, q);
            for (long long s = 0; s <= mq; ++s) {
                auto d = delta_iter(2, m, 2, Q(1, 0, F, 1).pow(s));
                REQUIRE(d.ok);
                CHECK(d.value.truncated(m) == a_closed(m, static_cast<int>(s), F).truncated(m));
            }
        }
    }
}

TEST_CASE("boundary identities just past the closed-form range") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int m : {2, 3}) {
            long long mq = q_integer(m, q);
            long long top = int_pow(q, m) - 1;
            Poly b1 = delta(2, m, Q(1, 0, F, 1).pow(mq + 1)).poly().truncated(m);
            Monomial t2{static_cast<int>(top), static_cast<int>(top)};
            CHECK(b1 == -Poly::monomial(t2, 1, F));
            Poly b2 = delta_iter(2, m, 2, Q(1, 0, F, 1).pow(mq + 2)).poly().truncated(m);
            Monomial t3{static_cast<int>(top), static_cast<int>(top), static_cast<int>(top)};
            CHECK(b2 == Poly::monomial(t3, 1, F));
        }
    }
}

TEST_CASE("truncating before delta changes the answer") {
    // the operator does not descend to the truncated ring: the canonical
    // lift matters, so arguments must be composed entirely upstairs
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int m : {2, 3}) {
            long long mq = q_integer(m, q);
            Poly f = Q(1, 0, F, 1).pow(mq + 1);  // x1^(q^m + q - 2), zero mod the ideal
            CHECK(f.truncated(m).is_zero());
            Poly upstairs = delta(2, m, f).poly().truncated(m);
            CHECK_FALSE(upstairs.is_zero());  // but its image is not
        }
    }
}

TEST_CASE("iterated delta composes in the full ring") {
    const Gf& F = field_of_size(2);
    Poly f = Q(1, 0, F, 1).pow(2);
    auto once = delta(2, 2, f);
    REQUIRE(once.ok);
    auto twice = delta(2, 2, once.value);
    REQUIRE(twice.ok);
    auto iter = delta_iter(2, 2, 2, f);
    REQUIRE(iter.ok);
    CHECK(iter.value == twice.value);
}

TEST_CASE("argument arity bounds") {
    const Gf& F = field_of_size(2);
    Poly f = Poly::one(1, F);
    CHECK_THROWS(delta(3, 2, f));  // needs at least 2 variables
    CHECK_THROWS(delta(0, 2, f));
}
