// Finite field tables, Frobenius, binomials mod p, and extension embeddings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinv/gfq.hpp"

using namespace trinv;

TEST_CASE("field axioms for small prime powers") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
        const Gf& F = field_of_size(q);
        REQUIRE(F.q == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("characteristic and prime subfield") {
    const Gf& F9 = field_of_size(9);
    CHECK(F9.p == 3);
    CHECK(F9.e == 2);
    int x = F9.from_int(1);
    CHECK(F9.add(F9.add(x, x), x) == 0);  // 3 * 1 = 0
}

TEST_CASE("primitive element has full multiplicative order") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const Gf& F = field_of_size(q);
        int g = F.primitive_element();
        int x = g, ord = 1;
        while (x != 1) {
            x = F.mul(x, g);
            ++ord;
        }
        CHECK(ord == q - 1);
    }
}

TEST_CASE("frobenius fixes exactly the base subfield") {
    for (int q : {4, 8, 9}) {
        const Gf& F = field_of_size(q);
        int fixed = 0;
        for (int a = 0; a < q; ++a) {
            CHECK(F.frobenius(a, F.e) == a);  // x^(p^e) = x
            if (F.frobenius(a, 1) == a) ++fixed;
        }
        CHECK(fixed == F.p);  // fixed points of x -> x^p form F_p
    }
    // frobenius is additive and multiplicative
    const Gf& F = field_of_size(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
            CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
        }
}

TEST_CASE("binom_mod_p agrees with Pascal's triangle") {
    for (int p : {2, 3, 5}) {
        std::vector<std::vector<long long>> pas(20, std::vector<long long>(20, 0));
        for (int n = 0; n < 20; ++n) {
            pas[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                pas[n][k] = (pas[n - 1][k - 1] + pas[n - 1][k]) % p;
        }
        for (int n = 0; n < 20; ++n)
            for (int k = 0; k <= n; ++k) CHECK(binom_mod_p(n, k, p) == pas[n][k]);
    }
    CHECK(binom_mod_p(10, 11, 2) == 0);
    CHECK(binom_mod_p(10, -1, 2) == 0);
    // Lucas at scale: C(2^k, j) = 0 mod 2 for 0 < j < 2^k
    for (long long j = 1; j < 16; ++j) CHECK(binom_mod_p(16, j, 2) == 0);
}

TEST_CASE("field flyweight returns identical instances") {
    CHECK(&field_of_size(4) == &field(2, 2));
    CHECK(&field_of_size(3) == &field_of_size(3));
    CHECK(&field_of_size(2) != static_cast<const Gf*>(&field_of_size(4)));
}

TEST_CASE("extension embedding is a field homomorphism") {
    for (int q : {2, 3, 4}) {
        for (int m : {2, 3}) {
            if (q == 4 && m == 3) continue;  // q^m beyond the table cap
            const Gf& F = field_of_size(q);
            Extension ext = make_extension(F, m);
            const Gf& E = *ext.big;
            int qm = 1;
            for (int i = 0; i < m; ++i) qm *= q;
            CHECK(E.q == qm);
            CHECK(ext.embed[0] == 0);
            CHECK(ext.embed[1] == 1);
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    CHECK(ext.embed[F.add(a, b)] == E.add(ext.embed[a], ext.embed[b]));
                    CHECK(ext.embed[F.mul(a, b)] == E.mul(ext.embed[a], ext.embed[b]));
                }
            // injective
            std::vector<int> seen;
            for (int a = 0; a < q; ++a) seen.push_back(ext.embed[a]);
            std::sort(seen.begin(), seen.end());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        }
    }
}

TEST_CASE("scalar wrapper checks fields and computes") {
    const Gf& F = field_of_size(3);
    Scalar a(2, F), b(2, F);
    CHECK((a + b).v == 1);
    CHECK((a * b).v == 1);
    CHECK(a.pow(2).v == 1);
    CHECK(a.inverse().v == 2);
    const Gf& G = field_of_size(5);
    Scalar c(1, G);
    CHECK_THROWS(a + c);
}

TEST_CASE("invalid field parameters are rejected") {
    CHECK_THROWS(field_of_size(6));
    CHECK_THROWS(field_of_size(1));
    CHECK_THROWS(Gf(4, 1));  // p not prime
    const Gf& F = field_of_size(2);
    CHECK_THROWS(F.inv(0));
}
