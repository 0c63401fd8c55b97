// The determinant-quotient operator delta_{a;b}: from c variables to c+1.
//
// Everything here is computed in the full polynomial ring S on canonical
// lifts; arguments are never truncated first, because equality mod the
// Frobenius power ideal is not preserved by the operator.  Callers truncate
// the final output themselves.

#pragma once

#include "trinv/dickson.hpp"

namespace trinv {

/// Result of a delta application: the quotient when it is a polynomial,
/// otherwise the offending remainder.  Non-divisibility is a first-class
/// outcome (it is how the polynomiality hypotheses are probed), not an error.
struct DeltaResult {
    bool ok = false;
    Poly value;      // the quotient when ok
    Poly remainder;  // nonzero division remainder when !ok

    const Poly& poly() const {
        if (!ok) throw std::domain_error("delta: quotient is not a polynomial");
        return value;
    }
};

/// delta_{a;b}(f) for a polynomial f in c variables, 1 <= a <= c+1.
/// Raises degree by q^b - q^{a-1} on homogeneous input (b >= a-1).
inline DeltaResult delta(int a, int b, const Poly& f) {
    const Gf& F = *f.F;
    int c = f.nvars;
    if (a < 1 || a > c + 1) throw std::invalid_argument("delta: need 1 <= a <= nvars+1");
    int nv = c + 1;

    // numerator: rows x_j^{q^i} (i = 0..a-2), last row x_j^{q^b} f(omit x_j)
    std::vector<std::vector<Poly>> num(a, std::vector<Poly>(a, Poly(nv, F)));
    for (int i = 0; i + 1 < a; ++i)
        for (int j = 0; j < a; ++j) {
            Monomial m(nv, 0);
            m[j] = static_cast<int>(int_pow(F.q, i));
            num[i][j] = Poly::monomial(std::move(m), 1, F);
        }
    for (int j = 0; j < a; ++j) {
        std::vector<int> map;  // f's k-th variable -> position in x_1..x_{c+1} minus x_{j+1}
        for (int v = 0; v < nv; ++v)
            if (v != j) map.push_back(v);
        Poly fj = shift_vars(f, map, nv);
        Monomial m(nv, 0);
        m[j] = static_cast<int>(int_pow(F.q, b));
        num[a - 1][j] = Poly::monomial(std::move(m), 1, F) * fj;
    }
    Poly numerator = poly_det(num);

    // denominator: det(x_j^{q^i}) over i = 0..a-1, in the first a variables
    std::vector<int> rs(a);
    for (int i = 0; i < a; ++i) rs[i] = i;
    Poly denominator = bracket(rs, F, nv);

    if (numerator.is_zero()) return {true, Poly(nv, F), Poly(nv, F)};
    auto div = divide(numerator, denominator);
    if (!div.exact()) return {false, Poly(nv, F), div.remainder};
    return {true, div.quotient, Poly(nv, F)};
}

/// Iterated delta_{a;b}, composed in S with no intermediate truncation.
inline DeltaResult delta_iter(int a, int b, int reps, const Poly& f) {
    DeltaResult r{true, f, Poly(f.nvars, *f.F)};
    for (int k = 0; k < reps; ++k) {
        r = delta(a, b, r.value);
        if (!r.ok) return r;
    }
    return r;
}

/// q-integer (q^a - 1)/(q - 1) as a plain integer (literal formula).
inline long long q_integer(int a, int q) {
    long long r = 0;
    for (int i = 0; i < a; ++i) r = r * q + 1;
    return r;
}

/// The y_s family: the closed-form expansion of delta_{2;m}(Q_{1,0}^s)
/// for 0 <= s < [m]_q, a polynomial in two variables.
inline Poly y_closed(int m, int s, const Gf& F) {
    int q = F.q;
    long long top = int_pow(q, m) - q;  // q^m - q
    long long mq = q_integer(m, q);
    if (s < 0 || s >= mq) throw std::invalid_argument("y_closed: need 0 <= s < [m]_q");
    Poly r(2, F);
    for (long long k = 0;; ++k) {
        long long e1 = top - k * (q - 1);
        long long e2 = (s + k) * (q - 1);
        if (e1 < static_cast<long long>(s) * (q - 1)) break;
        Monomial mon{static_cast<int>(e1), static_cast<int>(e2)};
        r.add_term(mon, 1);
    }
    return r;
}

/// The a_{m,3,s} family: the closed form of delta_2^2(Q_{1,0}^s) mod I_m,
/// the sum of x^(i1(q-1)) y^(i2(q-1)) z^(i3(q-1)) over i_j < [m]_q with
/// i1+i2+i3 = 2[m]_q - 2 + s.
inline Poly a_closed(int m, int s, const Gf& F) {
    int q = F.q;
    long long mq = q_integer(m, q);
    if (s < 0 || s > mq) throw std::invalid_argument("a_closed: need 0 <= s <= [m]_q");
    long long target = 2 * mq - 2 + s;
    Poly r(3, F);
    for (long long i1 = 0; i1 < mq; ++i1)
        for (long long i2 = 0; i2 < mq; ++i2) {
            long long i3 = target - i1 - i2;
            if (i3 < 0 || i3 >= mq) continue;
            Monomial mon{static_cast<int>(i1 * (q - 1)), static_cast<int>(i2 * (q - 1)),
                         static_cast<int>(i3 * (q - 1))};
            r.add_term(mon, 1);
        }
    return r;
}

}  // namespace trinv
