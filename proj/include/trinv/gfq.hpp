// Exact arithmetic in small finite fields F_q, q = p^e.
//
// Elements are canonical indices 0..q-1 encoding coefficient vectors over
// F_p in base p (for e = 1 this is just the integer mod p).  Full add/mul/inv
// tables are precomputed at construction, so every hot loop is a lookup.

#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinv {

/// Lucas's theorem: C(n, k) mod p.
inline int binom_mod_p(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd, kd < p
        long long c = 1;
        for (long long i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
        r = (r * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(r);
}

/// Parameters and operation tables for F_q, q = p^e.  Immutable after
/// construction; freely shareable across threads.
class Gf {
  public:
    int p;       // characteristic
    int e;       // extension degree over F_p
    int q;       // p^e
    int base_q;  // the subfield this field is viewed as an extension of
    std::vector<int> modulus;  // monic irreducible of degree e over F_p (incl. leading 1)

    static constexpr int kMaxQ = 256;

    Gf(int p_, int e_, std::vector<int> modulus_ = {}, int base_q_ = 0)
        : p(p_), e(e_), base_q(base_q_ ? base_q_ : p_), modulus(std::move(modulus_)) {
        if (!is_prime(p)) throw std::invalid_argument("Gf: p must be prime");
        q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (q > kMaxQ) throw std::invalid_argument("Gf: q exceeds desk-scale cap");
        if (e > 1) {
            if (modulus.empty()) modulus = find_irreducible(p, e);
            if (static_cast<int>(modulus.size()) != e + 1 || modulus[e] != 1)
                throw std::invalid_argument("Gf: modulus must be monic of degree e");
            if (!poly_irreducible(modulus, p))
                throw std::invalid_argument("Gf: modulus is reducible");
        } else {
            modulus.clear();
        }
        build_tables();
    }

    int add(int a, int b) const { return add_tab[a * q + b]; }
    int sub(int a, int b) const { return add_tab[a * q + neg_tab[b]]; }
    int neg(int a) const { return neg_tab[a]; }
    int mul(int a, int b) const { return mul_tab[a * q + b]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("Gf: inversion of zero");
        return inv_tab[a];
    }
    int pow(int a, long long k) const {
        if (k < 0) return pow(inv(a), -k);
        int r = 1, base = a;
        while (k > 0) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }
    /// a^(base_q^j): identity on the base subfield, Frobenius iterate above it.
    int frobenius(int a, int j) const {
        int r = a;
        for (int i = 0; i < j; ++i) r = pow(r, base_q);
        return r;
    }

    /// A multiplicative generator (primitive element).
    int primitive_element() const { return prim; }

    /// Integer 0..p-1 lifted into this field (constants live in every rep).
    int from_int(long long v) const {
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<int>(r);
    }

    bool same_field(const Gf& other) const { return this == &other; }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    /// Exhaustive search for a monic irreducible of degree d over F_p.
    static std::vector<int> find_irreducible(int p, int d) {
        std::vector<int> f(d + 1, 0);
        f[d] = 1;
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            for (int i = 0; i < d; ++i) {
                f[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (poly_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

  private:
    std::vector<int> add_tab, mul_tab, inv_tab, neg_tab;
    int prim = 0;

    // index <-> coefficient vector over F_p, base-p digits
    std::vector<int> decode(int a) const {
        std::vector<int> c(e);
        for (int i = 0; i < e; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    }
    int encode(const std::vector<int>& c) const {
        int a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + c[i];
        return a;
    }

    void build_tables() {
        add_tab.assign(q * q, 0);
        mul_tab.assign(q * q, 0);
        inv_tab.assign(q, 0);
        neg_tab.assign(q, 0);
        for (int a = 0; a < q; ++a) {
            auto ca = decode(a);
            std::vector<int> cn(e);
            for (int i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
            neg_tab[a] = encode(cn);
            for (int b = 0; b < q; ++b) {
                auto cb = decode(b);
                std::vector<int> cs(e);
                for (int i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
                add_tab[a * q + b] = encode(cs);
                // multiply then reduce mod modulus
                std::vector<int> cm(2 * e - 1, 0);
                for (int i = 0; i < e; ++i)
                    for (int j = 0; j < e; ++j) cm[i + j] = (cm[i + j] + ca[i] * cb[j]) % p;
                if (e > 1) {
                    for (int d = 2 * e - 2; d >= e; --d) {
                        int c = cm[d];
                        if (c == 0) continue;
                        for (int i = 0; i <= e; ++i) {
                            int& t = cm[d - e + i];
                            t = ((t - c * modulus[i]) % p + p) % p;
                        }
                    }
                }
                cm.resize(e);
                mul_tab[a * q + b] = encode(cm);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul_tab[a * q + b] == 1) inv_tab[a] = b;
        // primitive element: smallest of multiplicative order q-1
        for (int a = 2; a < q; ++a) {
            int x = a, ord = 1;
            while (x != 1) {
                x = mul_tab[x * q + a];
                ++ord;
            }
            if (ord == q - 1) {
                prim = a;
                break;
            }
        }
        if (q == 2) prim = 1;

        if (e > 1) build_embedding();
    }

    // embed_tab[a] for a in 0..base_q-1 is filled lazily by make_extension; see below
  public:
    std::vector<int> embed_tab;

  private:
    void build_embedding() {}

    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
        int dm = static_cast<int>(m.size()) - 1;
        for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
            int c = a[d];
            if (c == 0) continue;
            for (int i = 0; i <= dm; ++i) {
                int& t = a[d - dm + i];
                t = ((t - c * m[i]) % p + p) % p;
            }
        }
        a.resize(dm);
        return a;
    }

  public:
    /// Irreducibility over F_p by trial division against all monic polys of
    /// degree <= deg/2 (fine at desk scale).
    static bool poly_irreducible(const std::vector<int>& f, int p) {
        int d = static_cast<int>(f.size()) - 1;
        if (d <= 0) return false;
        if (d == 1) return true;
        for (int dd = 1; dd <= d / 2; ++dd) {
            long long total = 1;
            for (int i = 0; i < dd; ++i) total *= p;
            std::vector<int> g(dd + 1, 0);
            g[dd] = 1;
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                for (int i = 0; i < dd; ++i) {
                    g[i] = static_cast<int>(c % p);
                    c /= p;
                }
                if (poly_mod(f, g, p) == std::vector<int>(dd, 0)) return false;
            }
        }
        return true;
    }
};

/// Flyweight cache keyed by (p, e): repeated requests return the same Gf
/// instance, so pointer identity doubles as field identity.
inline const Gf& field(int p, int e = 1) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Gf>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Gf>(p, e)).first;
    return *it->second;
}

/// Field of size q (q a prime power).
inline const Gf& field_of_size(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!Gf::is_prime(p)) continue;
        int e = 0, t = q;
        while (t % p == 0) {
            t /= p;
            ++e;
        }
        if (t == 1) return field(p, e);
    }
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

/// F_{q^m} together with an embedding of F_q.  The embedding sends the base
/// generator to a root of the base modulus, found by exhaustive search.
struct Extension {
    const Gf* big;              // F_{q^m}
    std::vector<int> embed;     // embed[a] for a in 0..q-1
};

inline Extension make_extension(const Gf& base, int m) {
    if (m < 1) throw std::invalid_argument("make_extension: m >= 1 required");
    const Gf& big = field(base.p, base.e * m);
    Extension ext;
    ext.big = &big;
    ext.embed.assign(base.q, 0);
    if (base.e == 1) {
        for (int a = 0; a < base.q; ++a) ext.embed[a] = a;  // constants
        return ext;
    }
    // find a root of the base modulus inside the big field
    for (int r = 0; r < big.q; ++r) {
        int acc = 0;
        for (int i = static_cast<int>(base.modulus.size()) - 1; i >= 0; --i)
            acc = big.add(big.mul(acc, r), big.from_int(base.modulus[i]));
        if (acc != 0) continue;
        for (int a = 0; a < base.q; ++a) {
            // a's coefficient vector over F_p, evaluated at the root
            int v = 0, t = a;
            std::vector<int> c(base.e);
            for (int i = 0; i < base.e; ++i) {
                c[i] = t % base.p;
                t /= base.p;
            }
            for (int i = base.e - 1; i >= 0; --i)
                v = big.add(big.mul(v, r), big.from_int(c[i]));
            ext.embed[a] = v;
        }
        return ext;
    }
    throw std::logic_error("make_extension: no root of base modulus found");
}

/// An element of F_q carrying its field; plain value, checked arithmetic.
struct Scalar {
    int v = 0;
    const Gf* F = nullptr;

    Scalar() = default;
    Scalar(int v_, const Gf& F_) : v(v_), F(&F_) {}

    static void check(const Scalar& a, const Scalar& b) {
        if (a.F != b.F) throw std::invalid_argument("Scalar: mismatched fields");
    }
    friend Scalar operator+(Scalar a, Scalar b) {
        check(a, b);
        return {a.F->add(a.v, b.v), *a.F};
    }
    friend Scalar operator-(Scalar a, Scalar b) {
        check(a, b);
        return {a.F->sub(a.v, b.v), *a.F};
    }
    friend Scalar operator*(Scalar a, Scalar b) {
        check(a, b);
        return {a.F->mul(a.v, b.v), *a.F};
    }
    friend bool operator==(Scalar a, Scalar b) { return a.F == b.F && a.v == b.v; }
    Scalar inverse() const { return {F->inv(v), *F}; }
    Scalar pow(long long k) const { return {F->pow(v, k), *F}; }
    Scalar frobenius(int j) const { return {F->frobenius(v, j), *F}; }
    bool is_zero() const { return v == 0; }
};

}  // namespace trinv
