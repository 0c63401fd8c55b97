// Dickson invariants: the V_k products, bracket determinants, the recursion
// against the determinant quotient, invariance, and Dickson words.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinv/groups.hpp"

using namespace trinv;

TEST_CASE("known small Dickson invariants") {
    const Gf& F2 = field_of_size(2);
    CHECK(Q(2, 1, F2).str() == "x1^2 + x1*x2 + x2^2");
    CHECK(Q(1, 0, F2) == Poly::variable(0, 1, F2));
    CHECK(Q(2, 0, F2) == parse_poly("x1^2*x2 + x1*x2^2", 2, F2));
    const Gf& F3 = field_of_size(3);
    CHECK(Q(1, 0, F3) == Poly::variable(0, 1, F3).pow(2));
    // edge conventions
    CHECK(Q(2, 2, F2) == Poly::one(2, F2));
    CHECK(Q(2, -1, F2).is_zero());
    CHECK(Q(2, 3, F2).is_zero());
}

TEST_CASE("degrees are q^n - q^i") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i < n; ++i) {
                CHECK(*Q(n, i, F).degree() == dickson_degree(q, n, i));
                CHECK(Q(n, i, F).homogeneous());
            }
    }
}

TEST_CASE("recursion agrees with the bracket determinant quotient") {
    for (int q : {2, 3, 4}) {
        const Gf& F = field_of_size(q);
        int nmax = q == 4 ? 2 : 3;
        for (int n = 1; n <= nmax; ++n)
            for (int i = 0; i <= n; ++i) CHECK(Q(n, i, F) == Q_via_bracket(n, i, F));
    }
}

TEST_CASE("Dickson invariants are GL-invariant") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int n = 2; n <= 3; ++n)
            for (const auto& g : gl_generators(n, F))
                for (int i = 0; i < n; ++i) CHECK(act(g, Q(n, i, F)) == Q(n, i, F));
    }
}

TEST_CASE("fundamental equation for V_{n+1}") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int n = 1; n <= 3; ++n) CHECK(fundamental_check(n, F));
    }
    CHECK(fundamental_check(1, field_of_size(4)));
    CHECK(fundamental_check(2, field_of_size(4)));
    CHECK(fundamental_check(1, field_of_size(5)));
    CHECK(fundamental_check(2, field_of_size(5)));
}

TEST_CASE("V_k degree, window placement, and L_n product") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        for (int k = 1; k <= 3; ++k) {
            Poly v = V(k, F, 3);
            CHECK(*v.degree() == int_pow(q, k - 1));
            // depends only on the first k variables
            for (const auto& [m, c] : v.terms)
                for (int i = k; i < 3; ++i) CHECK(m[i] == 0);
        }
        CHECK(L(3, F) == V(1, F, 3) * V(2, F, 3) * V(3, F, 3));
        CHECK(V(2, F, 3, 1) == shift_vars(V(2, F, 2), {1, 2}, 3));
    }
}

TEST_CASE("Q_window relocates variables") {
    const Gf& F = field_of_size(2);
    Poly w = Q_window(2, 1, F, 3, 1);  // Q_{2,1} in x2, x3
    CHECK(w == parse_poly("x2^2 + x2*x3 + x3^2", 3, F));
}

TEST_CASE("Dickson words expand, multiply, and shift rank") {
    for (int q : {2, 3}) {
        const Gf& F = field_of_size(q);
        DicksonWord w(2, {2, 1});  // Q_{2,1}^2 Q_{2,0}
        CHECK(expand(w, F, 2) == Q(2, 1, F).pow(2) * Q(2, 0, F));
        CHECK(w.degree(q) == 2 * dickson_degree(q, 2, 1) + dickson_degree(q, 2, 0));
        CHECK(*expand(w, F, 2).degree() == w.degree(q));
        CHECK(w.times_Q(1) == DicksonWord(2, {3, 1}));
        CHECK(w.times_Q(0) == DicksonWord(2, {2, 2}));
        // rank shift keeps the exponent prefix: Q_{2,i} -> Q_{3,i+1}
        DicksonWord pw = phi(w);
        CHECK(pw.s == 3);
        CHECK(pw.exps == std::vector<int>{2, 1, 0});
        CHECK(expand(pw, F, 3) == Q(3, 2, F).pow(2) * Q(3, 1, F));
    }
}

TEST_CASE("shift_vars renames variables") {
    const Gf& F = field_of_size(3);
    Poly f = parse_poly("x1^2*x2 + 2*x1", 2, F);
    CHECK(shift_vars(f, {2, 0}, 3) == parse_poly("x3^2*x1 + 2*x3", 3, F));
}
