// q-integers, Gaussian binomials, the box-partition core spaces with the
// essential/edge classification, (q,t)-multinomials, and the conjectured
// Hilbert series C_{alpha,m}(t).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "trinv/delta.hpp"

namespace trinv {

using BigInt = boost::multiprecision::cpp_int;

/// Ordered parts; weak compositions (zero parts) allowed where noted.
using Composition = std::vector<int>;

inline int comp_size(const Composition& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

/// [a]_q with the convention [0]_q = 1 used in window range bounds.
/// (The literal formula, which gives [0]_q = 0, is q_integer in delta.hpp.)
inline long long q_int(int a, int q) {
    if (a == 0) return 1;
    return q_integer(a, q);
}

/// Number of s-dimensional subspaces of F_q^m, via the q-Pascal recursion.
inline BigInt gauss_binom(int m, int s, int q) {
    if (s < 0 || s > m) return 0;
    std::vector<std::vector<BigInt>> tab(m + 1, std::vector<BigInt>(m + 1, 0));
    tab[0][0] = 1;
    for (int mm = 1; mm <= m; ++mm) {
        tab[mm][0] = 1;
        BigInt qs = 1;
        for (int ss = 1; ss <= mm; ++ss) {
            qs *= q;  // q^ss
            tab[mm][ss] = tab[mm - 1][ss - 1] + qs * tab[mm - 1][ss];
        }
    }
    return tab[m][s];
}

// ---------------------------------------------------------------------------
// univariate series with exact big-integer coefficients

class SeriesPoly {
  public:
    std::vector<BigInt> c;  // c[d] is the coefficient of t^d; trailing zeros stripped

    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<BigInt> cc) : c(std::move(cc)) { normalize(); }
    static SeriesPoly one() { return SeriesPoly({BigInt(1)}); }
    static SeriesPoly monomial(long long d, BigInt coeff = 1) {
        std::vector<BigInt> cc(d + 1, 0);
        cc[d] = std::move(coeff);
        return SeriesPoly(std::move(cc));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    BigInt coeff(long long d) const {
        return (d >= 0 && d < static_cast<long long>(c.size())) ? c[d] : BigInt(0);
    }
    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& x : c) s += x;
        return s;
    }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return SeriesPoly(std::move(r));
    }
    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return SeriesPoly(std::move(r));
    }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return SeriesPoly(std::move(r));
    }
    friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) { return a.c == b.c; }

    /// t -> t^k substitution.
    SeriesPoly stretched(long long k) const {
        if (is_zero()) return {};
        std::vector<BigInt> r(static_cast<size_t>(degree() * k + 1), 0);
        for (size_t i = 0; i < c.size(); ++i) r[i * k] = c[i];
        return SeriesPoly(std::move(r));
    }

    /// Exact division; throws if the division leaves a remainder.
    friend SeriesPoly exact_div(const SeriesPoly& a, const SeriesPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("SeriesPoly: division by zero");
        if (a.is_zero()) return {};
        std::vector<BigInt> rem = a.c;
        long long dq = a.degree() - b.degree();
        if (dq < 0) throw std::domain_error("SeriesPoly: inexact division");
        std::vector<BigInt> quo(dq + 1, 0);
        for (long long d = dq; d >= 0; --d) {
            BigInt lead = rem[d + b.degree()];
            if (lead == 0) continue;
            if (lead % b.c.back() != 0) throw std::domain_error("SeriesPoly: inexact division");
            BigInt f = lead / b.c.back();
            quo[d] = f;
            for (size_t i = 0; i < b.c.size(); ++i) rem[d + i] -= f * b.c[i];
        }
        for (const auto& x : rem)
            if (x != 0) throw std::domain_error("SeriesPoly: inexact division");
        return SeriesPoly(std::move(quo));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (size_t d = 0; d < c.size(); ++d) {
            if (c[d] == 0) continue;
            if (!first) s += " + ";
            first = false;
            if (d == 0) {
                s += c[d].str();
            } else {
                if (c[d] != 1) s += c[d].str() + "*";
                s += "t";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> r;
        for (const auto& x : c) r.push_back(x.str());
        return r;
    }
};

// ---------------------------------------------------------------------------
// box partitions and the core subspace Delta^m_s

/// Partitions l_1 >= ... >= l_s >= 0 with l_1 <= maxpart.
inline std::vector<std::vector<int>> box_partitions(int s, int maxpart) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s, 0);
    auto rec = [&](auto&& self, int idx, int cap) -> void {
        if (idx == s) {
            out.push_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur[idx] = v;
            self(self, idx + 1, v);
        }
    };
    if (s == 0) {
        out.push_back({});
        return out;
    }
    if (maxpart < 0) return out;
    rec(rec, 0, maxpart);
    return out;
}

/// The exponent window for e_i given (l_i, l_{i+1}):
/// [ (q^{l_i} - q^{l_{i+1}})/(q-1), (q^{l_i + 1} - q^{l_{i+1}})/(q-1) ).
inline std::pair<long long, long long> type_window(int q, int li, int li1) {
    long long lo = (int_pow(q, li) - int_pow(q, li1)) / (q - 1);
    long long hi = (int_pow(q, li + 1) - int_pow(q, li1)) / (q - 1);
    return {lo, hi};
}

/// The unique partition a word is q-compatible with (no box constraint).
inline std::vector<int> word_type(const DicksonWord& w, int q) {
    std::vector<int> lambda(w.s + 1, 0);
    for (int i = w.s; i >= 1; --i) {
        long long v = static_cast<long long>(w.exps[i - 1]) * (q - 1) + int_pow(q, lambda[i]);
        int li = 0;
        while (int_pow(q, li + 1) <= v) ++li;
        lambda[i - 1] = li;
    }
    lambda.pop_back();
    return lambda;  // lambda[0] = l_1, ..., lambda[s-1] = l_s
}

/// All Dickson monomials of rank s whose type fits in the s x (m-s) box,
/// grouped type by type.  |Delta^m_s| equals the Gaussian binomial [m s]_q.
inline std::vector<DicksonWord> delta_space(int m, int s, int q) {
    std::vector<DicksonWord> out;
    if (s > m) return out;
    if (s == 0) {
        out.emplace_back(0, std::vector<int>{});
        return out;
    }
    for (const auto& lam : box_partitions(s, m - s)) {
        std::vector<std::pair<long long, long long>> win(s);
        for (int i = 0; i < s; ++i) win[i] = type_window(q, lam[i], i + 1 < s ? lam[i + 1] : 0);
        std::vector<int> e(s);
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == s) {
                out.emplace_back(s, e);
                return;
            }
            for (long long v = win[idx].first; v < win[idx].second; ++v) {
                e[idx] = static_cast<int>(v);
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

enum class WordClass { Essential, Edge, Neither };

/// Essential: type fits the s x (m-s) box.  Edge: Q_{s,i} times an essential
/// word (equivalently, one exponent at the right endpoint of its window).
inline WordClass classify(const DicksonWord& w, int m, int q) {
    auto essential = [&](const DicksonWord& u) {
        if (u.s > m) return false;
        if (u.s == 0) return true;
        auto lam = word_type(u, q);
        return lam[0] <= m - u.s;
    };
    if (essential(w)) return WordClass::Essential;
    for (int j = 0; j < w.s; ++j) {
        if (w.exps[j] == 0) continue;
        DicksonWord u = w;
        u.exps[j] -= 1;
        if (essential(u)) return WordClass::Edge;
    }
    return WordClass::Neither;
}

// ---------------------------------------------------------------------------
// (q,t)-multinomials and the conjectural Hilbert series

/// [d over alpha]_{q,t} for a weak composition alpha of d:
/// numerator prod_{j<d} (1 - t^{q^d - q^j}), denominator
/// prod_i prod_{j=0}^{alpha_i - 1} (1 - t^{q^{A_i} - q^{A_{i-1}+j}}).
/// The inner product stops below alpha_i so that [d over (d)] = 1; the
/// division is exact by construction and an inexact division throws.
inline SeriesPoly qt_multinomial(int d, const Composition& alpha, int q) {
    if (comp_size(alpha) != d) throw std::invalid_argument("qt_multinomial: |alpha| != d");
    auto factor = [&](long long e) {  // 1 - t^e
        return SeriesPoly::one() - SeriesPoly::monomial(e);
    };
    SeriesPoly num = SeriesPoly::one();
    for (int j = 0; j < d; ++j) num = num * factor(int_pow(q, d) - int_pow(q, j));
    SeriesPoly den = SeriesPoly::one();
    int A = 0;
    for (int part : alpha) {
        int Aprev = A;
        A += part;
        for (int j = 0; j < part; ++j) den = den * factor(int_pow(q, A) - int_pow(q, Aprev + j));
    }
    return exact_div(num, den);
}

/// Gaussian (q,t)-binomial [m over s] = [m over (s, m-s)].
inline SeriesPoly qt_binomial(int m, int s, int q) {
    return qt_multinomial(m, {s, m - s}, q);
}

/// Enumerate weak compositions beta <= alpha with |beta| <= m.
inline std::vector<Composition> sub_compositions(const Composition& alpha, int m) {
    std::vector<Composition> out;
    Composition beta(alpha.size(), 0);
    auto rec = [&](auto&& self, size_t idx, int used) -> void {
        if (idx == alpha.size()) {
            out.push_back(beta);
            return;
        }
        for (int b = 0; b <= alpha[idx] && used + b <= m; ++b) {
            beta[idx] = b;
            self(self, idx + 1, used + b);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// C_{alpha,m}(t): the conjectured Hilbert series of Q_m(n)^{P(alpha)}:
/// sum over beta <= alpha, |beta| <= m of
/// t^{sum_i (alpha_i - beta_i)(q^m - q^{B_i})} [m over (beta, m - |beta|)].
inline SeriesPoly hilbert_conjecture(const Composition& alpha, int m, int q) {
    SeriesPoly total;
    for (const auto& beta : sub_compositions(alpha, m)) {
        long long e = 0;
        int B = 0;
        for (size_t i = 0; i < alpha.size(); ++i) {
            B += beta[i];
            e += static_cast<long long>(alpha[i] - beta[i]) * (int_pow(q, m) - int_pow(q, B));
        }
        Composition multi = beta;
        multi.push_back(m - comp_size(beta));
        total = total + SeriesPoly::monomial(e) * qt_multinomial(m, multi, q);
    }
    return total;
}

}  // namespace trinv
