// Brute-force invariant theory in the truncated ring Q_m(n): per-degree
// invariant dimensions by exact kernel computations, the full Hilbert
// series, and orbit counting on F_{q^m}^n as an independent total.

#pragma once

#include <numeric>

#include "trinv/groups.hpp"
#include "trinv/parallel.hpp"

namespace trinv {

/// All exponent vectors of length n with entries < cap and total degree d,
/// in ascending lex order.
inline std::vector<Monomial> monomials_of_degree(int n, long long d, long long cap) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, int idx, long long rem) -> void {
        if (idx == n) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        long long hi = std::min(rem, cap - 1);
        for (long long e = 0; e <= hi; ++e) {
            cur[idx] = static_cast<int>(e);
            self(self, idx + 1, rem - e);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    return out;
}

/// Dimension of the degree-d invariants of Q_m(n) under the group generated
/// by gens: the kernel of the stacked matrices (A_g - I) over all
/// generators, where A_g is g's action on the degree-d monomial basis.
inline long long invariant_dimension(const std::vector<MatrixGF>& gens, int m, long long d) {
    if (gens.empty()) throw std::invalid_argument("invariant_dimension: no generators");
    const Gf& F = *gens[0].F;
    int n = gens[0].rows;
    long long cap = int_pow(F.q, m);
    auto mons = monomials_of_degree(n, d, cap);
    int N = static_cast<int>(mons.size());
    if (N == 0) return 0;
    std::map<Monomial, int> index;
    for (int j = 0; j < N; ++j) index[mons[j]] = j;

    MatrixGF stacked(N * static_cast<int>(gens.size()), N, F);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int r0 = static_cast<int>(gi) * N;
        for (int j = 0; j < N; ++j) {
            Poly img = act(gens[gi], Poly::monomial(mons[j], 1, F)).truncated(m);
            for (const auto& [mon, c] : img.terms) stacked.at(r0 + index.at(mon), j) = c;
            stacked.at(r0 + j, j) = F.sub(stacked.at(r0 + j, j), 1);
        }
    }
    return N - stacked.rank();
}

/// The degree-d invariants themselves, as coordinate vectors over the
/// ascending-lex monomial basis of that degree.
inline std::pair<std::vector<Monomial>, std::vector<std::vector<int>>> invariant_basis(
    const std::vector<MatrixGF>& gens, int m, long long d) {
    const Gf& F = *gens.at(0).F;
    int n = gens[0].rows;
    long long cap = int_pow(F.q, m);
    auto mons = monomials_of_degree(n, d, cap);
    int N = static_cast<int>(mons.size());
    std::map<Monomial, int> index;
    for (int j = 0; j < N; ++j) index[mons[j]] = j;
    MatrixGF stacked(std::max(1, N * static_cast<int>(gens.size())), std::max(1, N), F);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int r0 = static_cast<int>(gi) * N;
        for (int j = 0; j < N; ++j) {
            Poly img = act(gens[gi], Poly::monomial(mons[j], 1, F)).truncated(m);
            for (const auto& [mon, c] : img.terms) stacked.at(r0 + index.at(mon), j) = c;
            stacked.at(r0 + j, j) = F.sub(stacked.at(r0 + j, j), 1);
        }
    }
    if (N == 0) return {mons, {}};
    return {mons, stacked.kernel()};
}

/// Hilbert series of Q_m(n)^G, degree by degree, by brute force.
/// Degrees run 0 .. n(q^m - 1).
inline SeriesPoly hilbert_bruteforce(const std::vector<MatrixGF>& gens, int m, int jobs = 1) {
    const Gf& F = *gens.at(0).F;
    int n = gens[0].rows;
    long long dmax = static_cast<long long>(n) * (int_pow(F.q, m) - 1);
    std::vector<BigInt> dims(dmax + 1, 0);
    parallel_for(jobs, static_cast<int>(dmax + 1), [&](int d) {
        dims[d] = invariant_dimension(gens, m, d);
    });
    return SeriesPoly(std::move(dims));
}

// ---------------------------------------------------------------------------
// orbit counting on F_{q^m}^n

/// Number of orbits of the group generated by gens (matrices over F_q,
/// entries embedded into F_{q^m}) acting linearly on F_{q^m}^n.  Equals the
/// total dimension of Q_m(n)^G.  Union-find over all q^{mn} points.
inline long long orbit_count(const std::vector<MatrixGF>& gens, int m) {
    const Gf& F = *gens.at(0).F;
    int n = gens[0].rows;
    Extension ext = make_extension(F, m);
    const Gf& E = *ext.big;
    long long Q = E.q;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= Q;

    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = static_cast<int>(a);
    };

    std::vector<int> v(n), w(n);
    for (long long pt = 0; pt < total; ++pt) {
        long long t = pt;
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<int>(t % Q);
            t /= Q;
        }
        for (const auto& g : gens) {
            for (int i = 0; i < n; ++i) {
                int acc = 0;
                for (int j = 0; j < n; ++j)
                    acc = E.add(acc, E.mul(ext.embed[g.at(i, j)], v[j]));
                w[i] = acc;
            }
            long long img = 0;
            for (int i = n - 1; i >= 0; --i) img = img * Q + w[i];
            unite(pt, img);
        }
    }
    long long orbits = 0;
    for (long long x = 0; x < total; ++x)
        if (find(x) == x) ++orbits;
    return orbits;
}

// ---------------------------------------------------------------------------
// conjecture vs brute force

struct HilbertReport {
    Composition alpha;
    int m = 0, q = 0;
    SeriesPoly conjecture;
    SeriesPoly bruteforce;
    bool equal = false;
    BigInt conjecture_total;   // value at t = 1
    BigInt bruteforce_total;   // sum of invariant dimensions
    long long orbit_total = -1;  // orbit count, when computed
};

/// Compare the conjectured Hilbert series C_{alpha,m}(t) against the
/// brute-force series of Q_m(n)^{P(alpha)}.
inline HilbertReport verify_hilbert(const Composition& alpha, int m, int q, int jobs = 1,
                                    bool with_orbits = true) {
    const Gf& F = field_of_size(q);
    HilbertReport rep;
    rep.alpha = alpha;
    rep.m = m;
    rep.q = q;
    rep.conjecture = hilbert_conjecture(alpha, m, q);
    auto gens = parabolic_generators(alpha, F);
    rep.bruteforce = hilbert_bruteforce(gens, m, jobs);
    rep.equal = rep.conjecture == rep.bruteforce;
    rep.conjecture_total = rep.conjecture.at_one();
    rep.bruteforce_total = rep.bruteforce.at_one();
    if (with_orbits) rep.orbit_total = orbit_count(gens, m);
    return rep;
}

}  // namespace trinv
