// Candidate bases B_m(alpha) for the P(alpha)-invariants of Q_m(n):
// construction from the general nested-delta recipe, verification against
// the brute-force solver, Dickson-monomial re-expression, and the edge
// reduction checks in ranks 2 and 3.

#pragma once

#include <optional>
#include <sstream>

#include "trinv/delta.hpp"
#include "trinv/solver.hpp"

namespace trinv {

struct BasisElement {
    Composition beta;                // the sub-composition of the recipe
    std::vector<DicksonWord> words;  // chosen factor per segment (rank B_i)
    Poly value;                      // truncated to Q_m
    long long degree = 0;            // predicted degree of the recipe

    std::string recipe() const {
        std::ostringstream os;
        os << "beta=(";
        for (size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
        os << ")";
        for (size_t i = 0; i < words.size(); ++i) {
            os << " f" << (i + 1) << "=(";
            for (size_t j = 0; j < words[i].exps.size(); ++j)
                os << (j ? "," : "") << words[i].exps[j];
            os << ")";
        }
        return os.str();
    }
};

/// Build B_m(alpha): for each beta <= alpha with |beta| <= m and each choice
/// of factors f_i in Phi^{B_{i-1}} Delta^{m-B_{i-1}}_{beta_i}, the element
///   delta_{B_1+1;m}^{alpha_1-beta_1}( f_1 * delta_{B_2+1;m}^{...}( ... f_l ... ) ),
/// assembled innermost-out entirely in S and truncated once at the end.
inline std::vector<BasisElement> build(const Composition& alpha, int m, const Gf& F) {
    int q = F.q;
    int ell = static_cast<int>(alpha.size());
    if (ell == 0) throw std::invalid_argument("build: empty composition");
    std::vector<BasisElement> out;

    for (const auto& beta : sub_compositions(alpha, m)) {
        std::vector<int> B(ell + 1, 0);
        for (int i = 0; i < ell; ++i) B[i + 1] = B[i] + beta[i];

        std::vector<std::vector<DicksonWord>> choices(ell);
        for (int i = 0; i < ell; ++i) {
            for (auto w : delta_space(m - B[i], beta[i], q)) {
                for (int k = 0; k < B[i]; ++k) w = phi(w);
                choices[i].push_back(std::move(w));
            }
        }
        bool any_empty = false;
        for (const auto& c : choices) any_empty |= c.empty();
        if (any_empty) continue;

        std::vector<size_t> idx(ell, 0);
        while (true) {
            BasisElement el;
            el.beta = beta;
            for (int i = 0; i < ell; ++i) el.words.push_back(choices[i][idx[i]]);

            Poly cur = expand(el.words[ell - 1], F, B[ell]);
            el.degree = el.words[ell - 1].degree(q);
            for (int i = ell - 1; i >= 0; --i) {
                if (i < ell - 1) {
                    cur = expand(el.words[i], F, cur.nvars) * cur;
                    el.degree += el.words[i].degree(q);
                }
                for (int r = 0; r < alpha[i] - beta[i]; ++r) {
                    auto d = delta(B[i + 1] + 1, m, cur);
                    if (!d.ok)
                        throw std::logic_error("build: delta quotient not a polynomial at " +
                                               el.recipe());
                    cur = d.value;
                    el.degree += int_pow(q, m) - int_pow(q, B[i + 1]);
                }
            }
            el.value = cur.truncated(m);
            out.push_back(std::move(el));

            int pos = 0;
            while (pos < ell && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos == ell) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// verification against the solver

struct BasisReport {
    Composition alpha;
    int m = 0, q = 0;
    long long count = 0;
    bool nonzero = true;        // every element survives truncation
    bool degrees_match = true;  // per-degree counts equal the conjectured series
    bool invariant = true;      // fixed by every parabolic generator in Q_m
    bool independent = true;    // per-degree rank equals element count
    bool spans = true;          // per-degree rank equals brute-force dimension
    std::vector<std::string> failures;

    bool ok() const { return nonzero && degrees_match && invariant && independent && spans; }
};

inline BasisReport verify_basis(const Composition& alpha, int m, int q, int jobs = 1) {
    const Gf& F = field_of_size(q);
    int n = comp_size(alpha);
    long long cap = int_pow(q, m);
    BasisReport rep;
    rep.alpha = alpha;
    rep.m = m;
    rep.q = q;

    auto elems = build(alpha, m, F);
    rep.count = static_cast<long long>(elems.size());
    auto gens = parabolic_generators(alpha, F);

    std::map<long long, std::vector<const BasisElement*>> by_degree;
    for (const auto& el : elems) {
        if (el.value.is_zero()) {
            rep.nonzero = false;
            rep.failures.push_back("zero after truncation: " + el.recipe());
            continue;
        }
        if (*el.value.degree() != el.degree) {
            rep.nonzero = false;
            rep.failures.push_back("degree mismatch: " + el.recipe());
        }
        by_degree[el.degree].push_back(&el);
        for (const auto& g : gens)
            if (act(g, el.value).truncated(m) != el.value) {
                rep.invariant = false;
                rep.failures.push_back("not invariant: " + el.recipe());
                break;
            }
    }

    SeriesPoly conj = hilbert_conjecture(alpha, m, q);
    long long dmax = static_cast<long long>(n) * (cap - 1);
    std::vector<long long> degs;
    for (long long d = 0; d <= dmax; ++d) degs.push_back(d);
    std::vector<std::string> fails(degs.size());
    std::vector<char> dm(degs.size(), 1), ind(degs.size(), 1), sp(degs.size(), 1);
    parallel_for(jobs, static_cast<int>(degs.size()), [&](int di) {
        long long d = degs[di];
        auto it = by_degree.find(d);
        long long cnt = it == by_degree.end() ? 0 : static_cast<long long>(it->second.size());
        if (BigInt(cnt) != conj.coeff(d)) dm[di] = 0;
        long long dim = invariant_dimension(gens, m, d);
        std::ostringstream os;
        if (cnt > 0) {
            auto mons = monomials_of_degree(n, d, cap);
            std::map<Monomial, int> index;
            for (size_t j = 0; j < mons.size(); ++j) index[mons[j]] = static_cast<int>(j);
            MatrixGF mat(static_cast<int>(cnt), static_cast<int>(mons.size()), F);
            for (long long r = 0; r < cnt; ++r)
                for (const auto& [mon, c] : it->second[r]->value.terms)
                    mat.at(static_cast<int>(r), index.at(mon)) = c;
            int rank = mat.rank();
            if (rank != cnt) ind[di] = 0;
            if (rank != dim) sp[di] = 0;
        } else if (dim != 0) {
            sp[di] = 0;
        }
        if (!dm[di] || !ind[di] || !sp[di]) {
            os << "degree " << d << ": count=" << cnt << " dim=" << dim
               << " conjectured=" << conj.coeff(d).str();
            fails[di] = os.str();
        }
    });
    for (size_t di = 0; di < degs.size(); ++di) {
        rep.degrees_match &= static_cast<bool>(dm[di]);
        rep.independent &= static_cast<bool>(ind[di]);
        rep.spans &= static_cast<bool>(sp[di]);
        if (!fails[di].empty()) rep.failures.push_back(fails[di]);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dickson-monomial re-expression by linear algebra

/// All rank-s Dickson words of the given homogeneous degree.
inline std::vector<DicksonWord> dickson_words_of_degree(int s, long long D, int q) {
    std::vector<DicksonWord> out;
    std::vector<int> e(s, 0);
    auto rec = [&](auto&& self, int j, long long rem) -> void {
        if (j == s) {
            if (rem == 0) out.emplace_back(s, e);
            return;
        }
        long long dg = dickson_degree(q, s, s - 1 - j);
        for (long long v = 0; v * dg <= rem; ++v) {
            e[j] = static_cast<int>(v);
            self(self, j + 1, rem - v * dg);
        }
        e[j] = 0;
    };
    if (s == 0) {
        if (D == 0) out.emplace_back(0, std::vector<int>{});
        return out;
    }
    rec(rec, 0, D);
    return out;
}

/// Express a homogeneous f in s variables as a linear combination of rank-s
/// Dickson monomials; nullopt if f is not in the Dickson algebra.  The
/// representation is unique because D_s is a polynomial algebra.
inline std::optional<std::map<DicksonWord, int>> dickson_coords(const Poly& f, int s) {
    const Gf& F = *f.F;
    if (f.is_zero()) return std::map<DicksonWord, int>{};
    if (!f.homogeneous()) return std::nullopt;
    long long D = *f.degree();
    auto words = dickson_words_of_degree(s, D, F.q);
    std::vector<Poly> expanded;
    std::set<Monomial> monset;
    for (const auto& w : words) {
        expanded.push_back(expand(w, F, f.nvars));
        for (const auto& [mon, c] : expanded.back().terms) monset.insert(mon);
    }
    for (const auto& [mon, c] : f.terms) monset.insert(mon);
    std::map<Monomial, int> index;
    int r = 0;
    for (const auto& mon : monset) index[mon] = r++;

    int W = static_cast<int>(words.size());
    MatrixGF aug(r, W + 1, F);
    for (int w = 0; w < W; ++w)
        for (const auto& [mon, c] : expanded[w].terms) aug.at(index.at(mon), w) = c;
    for (const auto& [mon, c] : f.terms) aug.at(index.at(mon), W) = c;
    auto pivots = aug.rref();
    std::map<DicksonWord, int> coords;
    for (size_t row = 0; row < pivots.size(); ++row) {
        if (pivots[row] == W) return std::nullopt;  // inconsistent system
        int c = aug.at(static_cast<int>(row), W);
        if (c != 0) coords[words[pivots[row]]] = c;
    }
    return coords;
}

// ---------------------------------------------------------------------------
// edge reductions

/// Rank 2: the edge monomial Q_{2,1}^{(q^{m-1}-q^i)/(q-1)} Q_{2,0}^{[i]}
/// differs from delta_2(Q_{1,0}^{[i]}) by a combination of essential
/// monomials divisible by Q_{2,0}^{(q^{i+1}-1)/(q-1)}, as polynomials in S.
/// Here [i] = (q^i - 1)/(q - 1).
inline bool rank2_edge_check(int m, int i, const Gf& F) {
    int q = F.q;
    if (i < 0 || i > m - 1) throw std::invalid_argument("rank2_edge_check: 0 <= i <= m-1");
    long long e1 = (int_pow(q, m - 1) - int_pow(q, i)) / (q - 1);
    long long e2 = q_integer(i, q);
    DicksonWord edge(2, {static_cast<int>(e1), static_cast<int>(e2)});
    Poly lhs = expand(edge, F, 2);
    auto d = delta(2, m, Q(1, 0, F, 1).pow(q_integer(i, q)));
    if (!d.ok) return false;
    Poly diff = lhs - d.value;
    auto coords = dickson_coords(diff, 2);
    if (!coords) return false;
    long long need = q_integer(i + 1, q);
    for (const auto& [w, c] : *coords) {
        if (classify(w, m, q) != WordClass::Essential) return false;
        if (w.exps[1] < need) return false;
    }
    return true;
}

/// Rank 3: the three edge families of Dickson monomials lie in the span of
/// B_m(3) inside Q_m(3), checked per degree by row-space membership.
inline bool rank3_edge_check(int m, const Gf& F, std::vector<std::string>* failures = nullptr) {
    int q = F.q;
    std::vector<DicksonWord> edges;
    if (m >= 2) edges.emplace_back(3, std::vector<int>{0, 0, static_cast<int>(q_integer(m - 2, q))});
    for (int l3 = 0; l3 <= m - 3; ++l3) {
        long long a = (int_pow(q, m - 2) - int_pow(q, l3)) / (q - 1);
        edges.emplace_back(3, std::vector<int>{0, static_cast<int>(a), static_cast<int>(q_integer(l3, q))});
    }
    for (int l2 = 0; l2 <= m - 3; ++l2)
        for (int l3 = 0; l3 <= l2; ++l3) {
            long long a = (int_pow(q, m - 2) - int_pow(q, l2)) / (q - 1);
            long long b = (int_pow(q, l2) - int_pow(q, l3)) / (q - 1);
            edges.emplace_back(3, std::vector<int>{static_cast<int>(a), static_cast<int>(b),
                                                   static_cast<int>(q_integer(l3, q))});
        }

    auto elems = build({3}, m, F);
    long long cap = int_pow(q, m);
    bool ok = true;
    for (const auto& w : edges) {
        Poly p = expand(w, F, 3).truncated(m);
        if (p.is_zero()) continue;  // already zero in Q_m
        long long d = *p.degree();
        auto mons = monomials_of_degree(3, d, cap);
        std::map<Monomial, int> index;
        for (size_t j = 0; j < mons.size(); ++j) index[mons[j]] = static_cast<int>(j);
        std::vector<const BasisElement*> rows;
        for (const auto& el : elems)
            if (el.degree == d) rows.push_back(&el);
        MatrixGF mat(std::max<int>(1, static_cast<int>(rows.size())),
                     static_cast<int>(mons.size()), F);
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [mon, c] : rows[r]->value.terms)
                mat.at(static_cast<int>(r), index.at(mon)) = c;
        std::vector<int> v(mons.size(), 0);
        for (const auto& [mon, c] : p.terms) v[index.at(mon)] = c;
        if (!row_space_contains(mat, v)) {
            ok = false;
            if (failures) {
                std::ostringstream os;
                os << "edge word not in span, degree " << d;
                failures->push_back(os.str());
            }
        }
    }
    return ok;
}

}  // namespace trinv
