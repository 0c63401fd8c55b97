// Dickson invariants and their relatives: V_k, L_n, bracket determinants
// [r_1..r_n], the invariants Q_{n,i}, Dickson monomial words and the rank
// shift Q_{s,i} -> Q_{s+1,i+1}.

#pragma once

#include <mutex>
#include <tuple>

#include "trinv/mvpoly.hpp"

namespace trinv {

inline long long int_pow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// deg Q_{n,i} = q^n - q^i.
inline long long dickson_degree(int q, int n, int i) { return int_pow(q, n) - int_pow(q, i); }

/// Rename variables: x_{i+1} -> x_{map[i]+1} in a wider ring.
inline Poly shift_vars(const Poly& f, const std::vector<int>& map, int new_nvars) {
    Poly r(new_nvars, *f.F);
    for (const auto& [m, c] : f.terms) {
        Monomial mm(new_nvars, 0);
        for (int i = 0; i < f.nvars; ++i) mm[map[i]] += m[i];
        r.add_term(mm, c);
    }
    return r;
}

/// V_k over the window x_{offset+1}..x_{offset+k}, as a poly in nvars
/// variables: the product of x_{offset+k} + (all F_q-combinations of the
/// earlier window variables).  Degree q^{k-1}.
inline Poly V(int k, const Gf& F, int nvars, int offset = 0) {
    if (k < 1 || offset + k > nvars) throw std::invalid_argument("V: window out of range");
    Poly prod = Poly::one(nvars, F);
    std::vector<int> lambda(k - 1, 0);
    while (true) {
        Poly lin = Poly::variable(offset + k - 1, nvars, F);
        for (int i = 0; i < k - 1; ++i)
            if (lambda[i] != 0) lin = lin + Poly::variable(offset + i, nvars, F).scaled(lambda[i]);
        prod = prod * lin;
        int pos = 0;
        while (pos < k - 1 && lambda[pos] == F.q - 1) lambda[pos++] = 0;
        if (pos == k - 1) break;
        ++lambda[pos];
    }
    return prod;
}

/// [r_1..r_n] = det(x_i^{q^{r_j}}).
inline Poly bracket(const std::vector<int>& rs, const Gf& F, int nvars) {
    int n = static_cast<int>(rs.size());
    if (nvars < n) throw std::invalid_argument("bracket: too few variables");
    std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n, Poly(nvars, F)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Monomial m(nvars, 0);
            m[i] = static_cast<int>(int_pow(F.q, rs[j]));
            mat[i][j] = Poly::monomial(std::move(m), 1, F);
        }
    return poly_det(mat);
}

/// L_n = V_1 V_2 ... V_n.
inline Poly L(int n, const Gf& F, int nvars = -1) {
    if (nvars < 0) nvars = n;
    Poly prod = Poly::one(nvars, F);
    for (int k = 1; k <= n; ++k) prod = prod * V(k, F, nvars);
    return prod;
}

/// Q_{n,i} via the Dickson recursion, memoized per (field, n, i).
/// Q_{n,i} = 0 outside 0 <= i <= n; Q_{n,n} = 1.
inline Poly Q(int n, int i, const Gf& F, int nvars = -1) {
    if (nvars < 0) nvars = n;
    if (i < 0 || i > n) return Poly::zero(nvars, F);
    static std::mutex mu;
    static std::map<std::tuple<const Gf*, int, int>, Poly> memo;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find({&F, n, i});
        if (it != memo.end()) return it->second.extended(nvars);
    }
    Poly result(n, F);
    if (n == 0) {
        result = Poly::one(0, F);
    } else {
        Poly vn = V(n, F, n).pow(F.q - 1);
        Poly a = Q(n - 1, i, F, n);
        Poly b = Q(n - 1, i - 1, F, n);
        result = vn * a + b.pow(F.q);
    }
    {
        std::lock_guard<std::mutex> lk(mu);
        memo.emplace(std::make_tuple(&F, n, i), result);
    }
    return result.extended(nvars);
}

/// Independent route: Q_{n,i} = [0,..,^i,..,n] / L_n (always exact).
inline Poly Q_via_bracket(int n, int i, const Gf& F, int nvars = -1) {
    if (nvars < 0) nvars = n;
    std::vector<int> rs;
    for (int r = 0; r <= n; ++r)
        if (r != i) rs.push_back(r);
    Poly num = bracket(rs, F, n);
    std::vector<int> low(n);
    for (int r = 0; r < n; ++r) low[r] = r;
    Poly den = bracket(low, F, n);
    return exact_div(num, den).extended(nvars);
}

/// Q_{n,i} in the window x_{offset+1}..x_{offset+n}.
inline Poly Q_window(int n, int i, const Gf& F, int nvars, int offset) {
    Poly base = Q(n, i, F, n);
    std::vector<int> map(n);
    for (int k = 0; k < n; ++k) map[k] = offset + k;
    return shift_vars(base, map, nvars);
}

// ---------------------------------------------------------------------------
// Dickson monomial words

/// The formal exponent vector (e_1..e_s) denoting Q_{s,s-1}^{e_1} ... Q_{s,0}^{e_s}.
struct DicksonWord {
    int s = 0;
    std::vector<int> exps;  // exps[j] is the exponent of Q_{s, s-1-j}

    DicksonWord() = default;
    DicksonWord(int s_, std::vector<int> e) : s(s_), exps(std::move(e)) {
        if (static_cast<int>(exps.size()) != s) throw std::invalid_argument("DicksonWord: size");
    }

    bool operator==(const DicksonWord&) const = default;
    bool operator<(const DicksonWord& o) const {
        return std::tie(s, exps) < std::tie(o.s, o.exps);
    }

    long long degree(int q) const {
        long long d = 0;
        for (int j = 0; j < s; ++j) d += static_cast<long long>(exps[j]) * dickson_degree(q, s, s - 1 - j);
        return d;
    }

    /// Multiply by Q_{s,i} (increments the matching exponent).
    DicksonWord times_Q(int i) const {
        DicksonWord w = *this;
        w.exps.at(s - 1 - i) += 1;
        return w;
    }
};

/// Expand a word into an honest polynomial (in nvars >= s variables).
inline Poly expand(const DicksonWord& w, const Gf& F, int nvars = -1) {
    if (nvars < 0) nvars = w.s;
    Poly r = Poly::one(nvars, F);
    for (int j = 0; j < w.s; ++j)
        if (w.exps[j] > 0) r = r * Q(w.s, w.s - 1 - j, F, nvars).pow(w.exps[j]);
    return r;
}

/// The ring map Phi: D_s -> D_{s+1}, Q_{s,i} -> Q_{s+1,i+1}, on words:
/// (e_1..e_s) -> (e_1..e_s, 0).
inline DicksonWord phi(const DicksonWord& w) {
    DicksonWord r;
    r.s = w.s + 1;
    r.exps = w.exps;
    r.exps.push_back(0);
    return r;
}

/// Verify the fundamental equation
/// V_{n+1}(x_1..x_n, X) = X^{q^n} + sum_{i<n} (-1)^{n-i} Q_{n,i} X^{q^i}.
inline bool fundamental_check(int n, const Gf& F) {
    int nv = n + 1;
    Poly lhs = V(n + 1, F, nv);
    Poly rhs(nv, F);
    for (int i = 0; i <= n; ++i) {
        Monomial xm(nv, 0);
        xm[n] = static_cast<int>(int_pow(F.q, i));
        Poly term = Q(n, i, F, nv) * Poly::monomial(std::move(xm), 1, F);
        if ((n - i) % 2 == 1) term = -term;
        rhs = rhs + term;
    }
    return lhs == rhs;
}

}  // namespace trinv
