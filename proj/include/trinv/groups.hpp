// Matrix groups over F_q: generator sets for GL_n and its parabolic
// subgroups P(alpha), explicit element enumeration by closure, left coset
// representatives, and the relative transfer map on truncated polynomials.

#pragma once

#include <set>

#include "trinv/combinat.hpp"

namespace trinv {

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
inline BigInt gl_order(int n, int q) {
    BigInt r = 1, qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

/// |P(alpha)| = prod_i |GL_{alpha_i}| * q^{(n^2 - sum alpha_i^2)/2}.
inline BigInt parabolic_order(const Composition& alpha, int q) {
    int n = comp_size(alpha);
    BigInt r = 1;
    long long sq = 0;
    for (int a : alpha) {
        r *= gl_order(a, q);
        sq += static_cast<long long>(a) * a;
    }
    long long uni = (static_cast<long long>(n) * n - sq) / 2;
    for (long long i = 0; i < uni; ++i) r *= q;
    return r;
}

/// Standard generators of GL_n(F_q): diag(gamma, 1..1) for a primitive
/// gamma (omitted when q = 2), the n-cycle permutation, and the
/// transvection I + E_{1,2}.  GL_1 reduces to the diagonal alone.
inline std::vector<MatrixGF> gl_generators(int n, const Gf& F) {
    std::vector<MatrixGF> gens;
    if (n < 1) throw std::invalid_argument("gl_generators: n >= 1");
    if (F.q > 2) {
        MatrixGF d = MatrixGF::identity(n, F);
        d.at(0, 0) = F.primitive_element();
        gens.push_back(d);
    }
    if (n >= 2) {
        MatrixGF c(n, n, F);  // n-cycle: x_1 -> x_2 -> ... -> x_n -> x_1
        for (int i = 0; i < n; ++i) c.at((i + 1) % n, i) = 1;
        gens.push_back(c);
        MatrixGF t = MatrixGF::identity(n, F);
        t.at(0, 1) = 1;
        gens.push_back(t);
    }
    if (gens.empty()) gens.push_back(MatrixGF::identity(n, F));  // GL_1(F_2)
    return gens;
}

/// Generators of the parabolic P(alpha) of block upper triangular matrices:
/// each block's GL generators embedded at its diagonal position, plus the
/// cross transvections I + E_{A_i, A_i + 1} straddling consecutive blocks.
inline std::vector<MatrixGF> parabolic_generators(const Composition& alpha, const Gf& F) {
    int n = comp_size(alpha);
    std::vector<MatrixGF> gens;
    int off = 0;
    for (size_t b = 0; b < alpha.size(); ++b) {
        for (const auto& g : gl_generators(alpha[b], F)) {
            MatrixGF m = MatrixGF::identity(n, F);
            for (int i = 0; i < alpha[b]; ++i)
                for (int j = 0; j < alpha[b]; ++j) m.at(off + i, off + j) = g.at(i, j);
            gens.push_back(m);
        }
        off += alpha[b];
        if (off < n) {
            MatrixGF t = MatrixGF::identity(n, F);
            t.at(off - 1, off) = 1;
            gens.push_back(t);
        }
    }
    return gens;
}

/// Borel subgroup = P(1,1,...,1).
inline std::vector<MatrixGF> borel_generators(int n, const Gf& F) {
    return parabolic_generators(Composition(n, 1), F);
}

/// Enumerate the group generated by gens via breadth-first closure.
/// If expected_order > 0 the result size is checked against it.
inline std::vector<MatrixGF> generated_group(const std::vector<MatrixGF>& gens,
                                             const BigInt& expected_order = 0) {
    if (gens.empty()) throw std::invalid_argument("generated_group: no generators");
    std::set<MatrixGF> seen;
    std::vector<MatrixGF> frontier{MatrixGF::identity(gens[0].rows, *gens[0].F)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<MatrixGF> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                MatrixGF y = x * g;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    if (expected_order > 0 && BigInt(seen.size()) != expected_order)
        throw std::logic_error("generated_group: order mismatch");
    return {seen.begin(), seen.end()};
}

/// Left coset representatives of H in G (one g per coset gH).  H must be a
/// subgroup of G; both are given as full element lists.
inline std::vector<MatrixGF> left_coset_reps(const std::vector<MatrixGF>& G,
                                             const std::vector<MatrixGF>& H) {
    if (G.size() % H.size() != 0) throw std::invalid_argument("left_coset_reps: |H| does not divide |G|");
    std::set<MatrixGF> covered;
    std::vector<MatrixGF> reps;
    for (const auto& g : G) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (const auto& h : H) covered.insert(g * h);
    }
    if (reps.size() * H.size() != G.size())
        throw std::invalid_argument("left_coset_reps: H is not a subgroup of G");
    return reps;
}

/// Relative transfer tr_H^G(f) = sum over coset reps g of g.f, computed in
/// the truncated ring (each summand is truncated mod the Frobenius power
/// ideal).  Well defined only on H-invariants of the truncated ring.
inline Poly transfer(const Poly& f, int m, const std::vector<MatrixGF>& reps) {
    Poly r(f.nvars, *f.F);
    for (const auto& g : reps) r = r + act(g, f).truncated(m);
    return r;
}

/// Transfer with the H-invariance hypothesis checked against H's generators.
inline Poly transfer_checked(const Poly& f, int m, const std::vector<MatrixGF>& reps,
                             const std::vector<MatrixGF>& h_gens) {
    Poly fm = f.truncated(m);
    for (const auto& h : h_gens)
        if (act(h, f).truncated(m) != fm)
            throw std::invalid_argument("transfer: input is not H-invariant mod the ideal");
    return transfer(f, m, reps);
}

/// Parse "a,b,c;d,e,f;g,h,i" into a matrix (entries are canonical field
/// indices).  Rows separated by ';', entries by ','.
inline MatrixGF parse_matrix(const std::string& s, const Gf& F) {
    std::vector<std::vector<int>> rows(1);
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("parse_matrix: empty entry");
        rows.back().push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else if (ch == ';') {
            flush();
            rows.emplace_back();
        } else {
            cur += ch;
        }
    }
    flush();
    int n = static_cast<int>(rows.size());
    MatrixGF m(n, n, F);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("parse_matrix: ragged rows");
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] < 0 || rows[i][j] >= F.q)
                throw std::invalid_argument("parse_matrix: entry out of field range");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

}  // namespace trinv
