// Sparse multivariate polynomials over F_q and exact dense linear algebra.
//
// A Poly is a finite map from exponent vectors to nonzero field elements,
// canonical by construction.  Monomial order is lexicographic with
// x1 > x2 > ... (std::vector's lexicographic compare on exponent vectors);
// the leading term is the map's largest key.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinv/gfq.hpp"

namespace trinv {

using Monomial = std::vector<int>;

inline long long total_degree(const Monomial& m) {
    long long d = 0;
    for (int e : m) d += e;
    return d;
}

class Poly {
  public:
    std::map<Monomial, int> terms;  // exponent vector -> nonzero coefficient
    int nvars = 0;
    const Gf* F = nullptr;

    Poly() = default;
    Poly(int nvars_, const Gf& F_) : nvars(nvars_), F(&F_) {}

    static Poly zero(int nvars, const Gf& F) { return Poly(nvars, F); }
    /// Constant polynomial from an integer lift (reduced mod p).
    static Poly constant(long long c, int nvars, const Gf& F) {
        Poly p(nvars, F);
        int v = F.from_int(c);
        if (v != 0) p.terms[Monomial(nvars, 0)] = v;
        return p;
    }
    static Poly one(int nvars, const Gf& F) {
        Poly p(nvars, F);
        p.terms[Monomial(nvars, 0)] = 1;
        return p;
    }
    static Poly variable(int i, int nvars, const Gf& F) {
        Poly p(nvars, F);
        Monomial m(nvars, 0);
        m.at(i) = 1;
        p.terms[m] = 1;
        return p;
    }
    static Poly monomial(Monomial m, int coeff, const Gf& F) {
        Poly p(static_cast<int>(m.size()), F);
        if (coeff != 0) p.terms[std::move(m)] = coeff;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    /// Total degree; nullopt for the zero polynomial.
    std::optional<long long> degree() const {
        if (terms.empty()) return std::nullopt;
        long long d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, total_degree(m));
        return d;
    }

    bool homogeneous() const {
        if (terms.empty()) return true;
        long long d = total_degree(terms.begin()->first);
        for (const auto& [m, c] : terms)
            if (total_degree(m) != d) return false;
        return true;
    }

    void add_term(const Monomial& m, int c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms[m] = c;
        } else {
            it->second = F->add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    static void check_compatible(const Poly& a, const Poly& b) {
        if (a.F != b.F || a.nvars != b.nvars)
            throw std::invalid_argument("Poly: mismatched ambient ring");
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, a.F->neg(c));
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms) c = F->neg(c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        Poly r(a.nvars, *a.F);
        Monomial m(a.nvars);
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, a.F->mul(ca, cb));
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.F == b.F && a.nvars == b.nvars && a.terms == b.terms;
    }

    Poly scaled(int c) const {
        Poly r(nvars, *F);
        if (c == 0) return r;
        for (const auto& [m, cc] : terms) r.terms[m] = F->mul(cc, c);
        return r;
    }

    Poly pow(long long k) const {
        Poly r = one(nvars, *F);
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    /// Normal form modulo the Frobenius power ideal (x_i^{q^m}): drop every
    /// monomial with some exponent >= q^m.
    Poly truncated(int m) const {
        long long cap = 1;
        for (int i = 0; i < m; ++i) cap *= F->q;
        Poly r(nvars, *F);
        for (const auto& [mon, c] : terms) {
            bool keep = true;
            for (int e : mon)
                if (e >= cap) {
                    keep = false;
                    break;
                }
            if (keep) r.terms[mon] = c;
        }
        return r;
    }

    /// Same polynomial viewed in a ring with more variables.
    Poly extended(int new_nvars) const {
        if (new_nvars < nvars) throw std::invalid_argument("extended: fewer variables");
        Poly r(new_nvars, *F);
        for (const auto& [m, c] : terms) {
            Monomial mm = m;
            mm.resize(new_nvars, 0);
            r.terms[std::move(mm)] = c;
        }
        return r;
    }

    /// Substitute variable i -> the given polynomials (all in the same target ring).
    Poly substituted(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars)
            throw std::invalid_argument("substituted: wrong image count");
        int tv = images.empty() ? nvars : images[0].nvars;
        const Gf& FF = *F;
        Poly r(tv, FF);
        for (const auto& [m, c] : terms) {
            Poly t = Poly::one(tv, FF).scaled(c);
            for (int i = 0; i < nvars; ++i)
                if (m[i] > 0) t = t * images[i].pow(m[i]);
            r = r + t;
        }
        return r;
    }

    std::string str() const;
};

// ---------------------------------------------------------------------------
// text format: sum of terms `c*x1^e1*x2^e2*...`, unit coefficients/exponents
// omitted; coefficients are canonical field indices.

inline std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading (lex-largest) terms first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool any = false;
        std::ostringstream vars;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) vars << "*";
            vars << "x" << (i + 1);
            if (m[i] != 1) vars << "^" << m[i];
            any = true;
        }
        if (!any) {
            os << c;
        } else if (c == 1) {
            os << vars.str();
        } else {
            os << c << "*" << vars.str();
        }
    }
    return os.str();
}

/// Parse the text format back into a Poly (round-trips with str()).
inline Poly parse_poly(const std::string& s, int nvars, const Gf& F) {
    Poly r(nvars, F);
    std::string t;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty() || t == "0") return r;
    // split on '+' (also accept '-' as +(q-1)*)
    size_t pos = 0;
    bool neg = false;
    if (t[0] == '-') {
        neg = true;
        pos = 1;
    }
    while (pos < t.size()) {
        size_t next = t.find_first_of("+-", pos);
        std::string term = t.substr(pos, next == std::string::npos ? next : next - pos);
        int coeff = 1;
        Monomial m(nvars, 0);
        size_t i = 0;
        if (i < term.size() && isdigit(static_cast<unsigned char>(term[i]))) {
            size_t j = i;
            while (j < term.size() && isdigit(static_cast<unsigned char>(term[j]))) ++j;
            coeff = std::stoi(term.substr(i, j - i)) % F.q;
            i = j;
            if (i < term.size() && term[i] == '*') ++i;
        }
        while (i < term.size()) {
            if (term[i] != 'x') throw std::invalid_argument("parse_poly: expected variable");
            ++i;
            size_t j = i;
            while (j < term.size() && isdigit(static_cast<unsigned char>(term[j]))) ++j;
            int var = std::stoi(term.substr(i, j - i)) - 1;
            if (var < 0 || var >= nvars) throw std::invalid_argument("parse_poly: variable out of range");
            i = j;
            int exp = 1;
            if (i < term.size() && term[i] == '^') {
                ++i;
                j = i;
                while (j < term.size() && isdigit(static_cast<unsigned char>(term[j]))) ++j;
                exp = std::stoi(term.substr(i, j - i));
                i = j;
            }
            m[var] += exp;
            if (i < term.size() && term[i] == '*') ++i;
        }
        r.add_term(m, neg ? F.neg(coeff) : coeff);
        if (next == std::string::npos) break;
        neg = (t[next] == '-');
        pos = next + 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// exact division

struct DivisionResult {
    Poly quotient;
    Poly remainder;  // zero iff division was exact
    bool exact() const { return remainder.is_zero(); }
};

/// Divide f by g (g != 0) with remainder under lex order.  f = q*g + r and no
/// term of r is divisible by the leading monomial of g.
inline DivisionResult divide(const Poly& f, const Poly& g) {
    Poly::check_compatible(f, g);
    if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    const Gf& F = *f.F;
    const auto& [lg, cg] = *g.terms.rbegin();
    int cg_inv = F.inv(cg);
    DivisionResult res{Poly(f.nvars, F), Poly(f.nvars, F)};
    Poly r = f;
    Monomial t(f.nvars);
    while (!r.is_zero()) {
        const auto& [lr, cr] = *r.terms.rbegin();
        bool divides = true;
        for (int i = 0; i < f.nvars; ++i) {
            t[i] = lr[i] - lg[i];
            if (t[i] < 0) {
                divides = false;
                break;
            }
        }
        if (divides) {
            int c = F.mul(cr, cg_inv);
            res.quotient.add_term(t, c);
            // r -= c * t * g
            Monomial prod(f.nvars);
            for (const auto& [mg, cgg] : g.terms) {
                for (int i = 0; i < f.nvars; ++i) prod[i] = t[i] + mg[i];
                r.add_term(prod, F.neg(F.mul(c, cgg)));
            }
        } else {
            res.remainder.add_term(lr, cr);
            r.terms.erase(std::prev(r.terms.end()));
        }
    }
    return res;
}

/// Exact quotient f/g; throws if g does not divide f.
inline Poly exact_div(const Poly& f, const Poly& g) {
    auto res = divide(f, g);
    if (!res.exact()) throw std::domain_error("exact_div: not divisible");
    return res.quotient;
}

// ---------------------------------------------------------------------------
// dense matrices over F_q with exact Gaussian elimination

class MatrixGF {
  public:
    int rows = 0, cols = 0;
    std::vector<int> a;  // row-major field indices
    const Gf* F = nullptr;

    MatrixGF() = default;
    MatrixGF(int r, int c, const Gf& F_) : rows(r), cols(c), a(r * c, 0), F(&F_) {}

    int& at(int i, int j) { return a[i * cols + j]; }
    int at(int i, int j) const { return a[i * cols + j]; }

    static MatrixGF identity(int n, const Gf& F) {
        MatrixGF m(n, n, F);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend MatrixGF operator*(const MatrixGF& x, const MatrixGF& y) {
        if (x.F != y.F || x.cols != y.rows) throw std::invalid_argument("MatrixGF: shape/field mismatch");
        const Gf& F = *x.F;
        MatrixGF r(x.rows, y.cols, F);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                int v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
            }
        return r;
    }
    friend bool operator==(const MatrixGF& x, const MatrixGF& y) {
        return x.F == y.F && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    bool operator<(const MatrixGF& o) const { return a < o.a; }

    /// In-place reduction to row echelon form; returns pivot column list.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int sel = -1;
            for (int i = r; i < rows; ++i)
                if (at(i, c) != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r)
                for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
            int inv = F->inv(at(r, c));
            if (inv != 1)
                for (int j = c; j < cols; ++j) at(r, j) = F->mul(at(r, j), inv);
            for (int i = 0; i < rows; ++i) {
                if (i == r) continue;
                int v = at(i, c);
                if (v == 0) continue;
                int nv = F->neg(v);
                for (int j = c; j < cols; ++j)
                    at(i, j) = F->add(at(i, j), F->mul(nv, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        MatrixGF m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Kernel basis in the canonical rref-derived form (one vector per free column).
    std::vector<std::vector<int>> kernel() const {
        MatrixGF m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<int>> basis;
        for (int c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            std::vector<int> v(cols, 0);
            v[c] = 1;
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = F->neg(m.at(static_cast<int>(r), c));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    bool invertible() const { return rows == cols && rank() == rows; }

    MatrixGF inverse() const {
        if (rows != cols) throw std::invalid_argument("inverse: non-square");
        MatrixGF aug(rows, 2 * cols, *F);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols + i) = 1;
        }
        auto piv = aug.rref();
        if (static_cast<int>(piv.size()) != rows || piv.back() >= cols)
            throw std::domain_error("inverse: singular matrix");
        MatrixGF r(rows, cols, *F);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(i, j) = aug.at(i, cols + j);
        return r;
    }
};

/// Row-space membership support: a matrix kept in rref once, queried many times.
class RowSpace {
  public:
    explicit RowSpace(MatrixGF m) : m_(std::move(m)) { pivots_ = m_.rref(); }

    int rank() const { return static_cast<int>(pivots_.size()); }

    bool contains(std::vector<int> v) const {
        const Gf& F = *m_.F;
        for (size_t r = 0; r < pivots_.size(); ++r) {
            int c = pivots_[r];
            int val = v[c];
            if (val == 0) continue;
            int nv = F.neg(val);
            for (int j = 0; j < m_.cols; ++j)
                v[j] = F.add(v[j], F.mul(nv, m_.at(static_cast<int>(r), j)));
        }
        for (int x : v)
            if (x != 0) return false;
        return true;
    }

  private:
    MatrixGF m_;
    std::vector<int> pivots_;
};

inline bool row_space_contains(const MatrixGF& m, const std::vector<int>& v) {
    MatrixGF c = m;
    return RowSpace(std::move(c)).contains(v);
}

// ---------------------------------------------------------------------------
// group action on polynomials

/// The substitution x_j -> sum_i g_{ij} x_i, expanded to canonical form.
/// A monomial exponent e is decomposed in base q, e = sum a_j q^j, and the
/// linear image l of the variable contributes prod_j (l^(q^j))^{a_j} where
/// l^(q^j) is l with coefficients and variables raised to the q^j-th power.
/// Large exponents are never expanded binomially.
inline Poly act(const MatrixGF& g, const Poly& f) {
    if (g.rows != g.cols || g.rows != f.nvars)
        throw std::invalid_argument("act: dimension mismatch");
    if (g.F != f.F) throw std::invalid_argument("act: field mismatch");
    const Gf& F = *f.F;
    int n = f.nvars;
    if (!g.invertible()) throw std::invalid_argument("act: singular matrix");

    // frob_image[v][j]: image of x_{v+1}^(q^j) under g, a linear form in x_i^(q^j)
    // built lazily up to the needed Frobenius height
    std::vector<std::vector<Poly>> frob_image(n);
    auto image_at = [&](int v, int j) -> const Poly& {
        auto& vec = frob_image[v];
        while (static_cast<int>(vec.size()) <= j) {
            int jj = static_cast<int>(vec.size());
            long long qj = 1;
            for (int i = 0; i < jj; ++i) qj *= F.q;
            Poly l(n, F);
            for (int i = 0; i < n; ++i) {
                int c = g.at(i, v);
                if (c == 0) continue;
                Monomial m(n, 0);
                m[i] = static_cast<int>(qj);
                l.add_term(m, c);  // c in F_q is Frobenius-fixed
            }
            vec.push_back(std::move(l));
        }
        return vec[j];
    };

    Poly result(n, F);
    for (const auto& [mon, coeff] : f.terms) {
        Poly t = Poly::one(n, F).scaled(coeff);
        for (int v = 0; v < n; ++v) {
            int e = mon[v];
            int j = 0;
            while (e > 0) {
                int digit = e % F.q;
                if (digit > 0) t = t * image_at(v, j).pow(digit);
                e /= F.q;
                ++j;
            }
        }
        result = result + t;
    }
    return result;
}

/// Laplace-expansion determinant of a small square array of polynomials.
inline Poly poly_det(const std::vector<std::vector<Poly>>& mat) {
    size_t n = mat.size();
    for (const auto& row : mat)
        if (row.size() != n) throw std::invalid_argument("poly_det: non-square input");
    if (n == 0) throw std::invalid_argument("poly_det: empty");
    if (n == 1) return mat[0][0];
    const Poly& probe = mat[0][0];
    Poly r = Poly::zero(probe.nvars, *probe.F);
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(mat[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = mat[0][j] * poly_det(minor);
        r = (j % 2 == 0) ? r + term : r - term;
    }
    return r;
}

}  // namespace trinv
