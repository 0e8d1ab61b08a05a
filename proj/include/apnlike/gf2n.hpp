// Arithmetic in GF(2^n) for 2 <= n <= 24: carryless multiplication with
// modular reduction, log/antilog tables for fast paths, trace machinery,
// and Artin-Schreier quadratic solving.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace apnlike {

// Field element, encoded with bit i = coefficient of x^i.
using Elem = std::uint32_t;

inline constexpr int min_degree = 2;
inline constexpr int max_degree = 24;
inline constexpr int table_degree_limit = 20;

namespace detail {

// Lazily built solver state for y^2 + y = c (see solve_quadratic).
struct QuadSolver {
    std::once_flag once;
    std::array<Elem, 32> image{};     // echelon basis of the image of y -> y^2 + y
    std::array<Elem, 32> preimage{};  // one preimage per basis vector
};

// Product of two polynomials over GF(2), no reduction. Degrees <= 31.
inline std::uint64_t clmul(std::uint64_t a, std::uint32_t b) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

inline int poly_degree(std::uint64_t v) {
    return v ? 63 - __builtin_clzll(v) : -1;
}

// v mod p over GF(2)[x].
inline std::uint64_t poly_mod(std::uint64_t v, std::uint64_t p) {
    const int dp = poly_degree(p);
    for (int i = poly_degree(v); i >= dp; i = poly_degree(v))
        v ^= p << (i - dp);
    return v;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

inline std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a = poly_mod(a << 1, p);
        b >>= 1;
    }
    return poly_mod(acc, p);
}

// x^(2^k) mod p by repeated squaring.
inline std::uint64_t poly_frobenius(int k, std::uint64_t p) {
    std::uint64_t v = poly_mod(2, p);  // the polynomial x
    for (int i = 0; i < k; ++i) v = poly_mulmod(v, v, p);
    return v;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t m) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace detail

// Irreducibility over GF(2) via the Frobenius criterion:
// x^(2^n) = x (mod p) and gcd(x^(2^(n/q)) + x mod p, p) = 1 for every prime q | n.
inline bool is_irreducible(Elem poly, int n) {
    if (n < 1 || detail::poly_degree(poly) != n) return false;
    if ((poly & 1) == 0) return n == 1 && poly == 2;  // divisible by x
    if (detail::poly_frobenius(n, poly) != detail::poly_mod(2, poly)) return false;
    for (std::uint32_t q : detail::prime_factors(std::uint32_t(n))) {
        std::uint64_t v = detail::poly_frobenius(n / int(q), poly) ^ detail::poly_mod(2, poly);
        if (detail::poly_gcd(poly, v) != 1) return false;
    }
    return true;
}

// Lexicographically smallest irreducible polynomial of each degree,
// compared as integers with bit n set. Re-verified at field construction.
inline Elem default_modulus(int n) {
    static constexpr std::array<Elem, 25> table = {
        0,        0,        0x7,      0xB,      0x13,      0x25,      0x43,
        0x83,     0x11B,    0x203,    0x409,    0x805,     0x1009,    0x201B,
        0x4021,   0x8003,   0x1002B,  0x20009,  0x40009,   0x80027,   0x100009,
        0x200005, 0x400003, 0x800021, 0x100001B};
    if (n < min_degree || n > max_degree)
        throw std::invalid_argument("degree out of range (need 2 <= n <= 24)");
    return table[std::size_t(n)];
}

struct Field {
    int n = 0;
    Elem modulus = 0;                       // irreducible, bit n set
    std::vector<Elem> exp_of;               // exp_of[i] = g^i for a generator g; empty when n > 20
    std::vector<std::uint32_t> log_of;      // inverse of exp_of on nonzero elements
    std::shared_ptr<detail::QuadSolver> quad = std::make_shared<detail::QuadSolver>();

    Elem mask() const { return (Elem(1) << n) - 1; }
    std::uint64_t size() const { return std::uint64_t(1) << n; }
    std::uint32_t group_order() const { return mask(); }
    bool has_tables() const { return !exp_of.empty(); }
};

// Multiply by carryless product + reduction, independent of the tables.
inline Elem mul_carryless(const Field& f, Elem a, Elem b) {
    std::uint64_t acc = detail::clmul(a, b);
    const std::uint64_t mod = f.modulus;
    for (int i = 2 * f.n - 2; i >= f.n; --i)
        if (acc >> i & 1) acc ^= mod << (i - f.n);
    return Elem(acc);
}

inline Elem mul(const Field& f, Elem a, Elem b) {
    if (!f.has_tables() || a == 0 || b == 0) return mul_carryless(f, a, b);
    std::uint32_t s = f.log_of[a] + f.log_of[b];
    const std::uint32_t order = f.group_order();
    if (s >= order) s -= order;
    return f.exp_of[s];
}

inline Elem square(const Field& f, Elem a) { return mul(f, a, a); }

// Exponents act on power maps modulo 2^n - 1; d = 0 (mod 2^n - 1) with d >= 1
// maps to the exponent 2^n - 1 itself.
inline std::uint32_t reduce_exponent(const Field& f, long long d) {
    if (d <= 0) throw std::invalid_argument("exponent must be >= 1");
    std::uint32_t r = std::uint32_t(d % f.group_order());
    return r == 0 ? f.group_order() : r;
}

inline Elem pow(const Field& f, Elem a, long long d) {
    const std::uint32_t e = reduce_exponent(f, d);
    if (a == 0) return 0;
    if (f.has_tables()) {
        const std::uint64_t idx = std::uint64_t(f.log_of[a]) * e % f.group_order();
        return f.exp_of[idx];
    }
    Elem result = 1, base = a;
    for (std::uint32_t k = e; k; k >>= 1) {
        if (k & 1) result = mul_carryless(f, result, base);
        base = mul_carryless(f, base, base);
    }
    return result;
}

inline Elem inv(const Field& f, Elem a) {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    if (f.has_tables()) {
        const std::uint32_t l = f.log_of[a];
        return f.exp_of[l == 0 ? 0 : f.group_order() - l];
    }
    return pow(f, a, f.group_order() - 1);
}

namespace detail {

inline Elem find_generator(const Field& f) {
    const std::uint32_t order = f.group_order();
    const auto primes = prime_factors(order);
    auto raw_pow = [&](Elem a, std::uint32_t e) {
        Elem r = 1;
        for (; e; e >>= 1) {
            if (e & 1) r = mul_carryless(f, r, a);
            a = mul_carryless(f, a, a);
        }
        return r;
    };
    for (Elem g = 2; g <= f.mask(); ++g) {
        bool primitive = true;
        for (std::uint32_t q : primes)
            if (raw_pow(g, order / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
    throw std::logic_error("no generator found; modulus not irreducible?");
}

}  // namespace detail

inline Field make_field(int n, Elem modulus) {
    if (n < min_degree || n > max_degree)
        throw std::invalid_argument("degree out of range (need 2 <= n <= 24)");
    if (!is_irreducible(modulus, n))
        throw std::invalid_argument("modulus is not an irreducible polynomial of degree n");
    Field f;
    f.n = n;
    f.modulus = modulus;
    if (n <= table_degree_limit) {
        const std::uint32_t order = f.group_order();
        const Elem g = detail::find_generator(f);
        f.exp_of.resize(order);
        f.log_of.assign(f.size(), 0);
        Elem v = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            f.exp_of[i] = v;
            f.log_of[v] = i;
            v = mul_carryless(f, v, g);
        }
    }
    return f;
}

inline Field make_field(int n) { return make_field(n, default_modulus(n)); }

// Absolute trace a + a^2 + a^4 + ... + a^(2^(n-1)), landing in {0,1}.
inline int abs_trace(const Field& f, Elem a) {
    Elem acc = a, s = a;
    for (int i = 1; i < f.n; ++i) {
        s = square(f, s);
        acc ^= s;
    }
    return int(acc & 1);
}

inline bool in_subfield(const Field& f, int m, Elem a) {
    Elem s = a;
    for (int i = 0; i < m; ++i) s = square(f, s);
    return s == a;
}

// Trace onto GF(2) of a subfield element of GF(2^(2m)).
inline int subfield_trace(const Field& f, int m, Elem a) {
    if (f.n != 2 * m) throw std::invalid_argument("field degree must equal 2m");
    if (!in_subfield(f, m, a)) throw std::invalid_argument("element not in GF(2^m)");
    Elem acc = a, s = a;
    for (int i = 1; i < m; ++i) {
        s = square(f, s);
        acc ^= s;
    }
    return int(acc & 1);
}

namespace detail {

inline void build_quad_solver(const Field& f, QuadSolver& qs) {
    for (int i = 0; i < f.n; ++i) {
        Elem v = mul_carryless(f, Elem(1) << i, Elem(1) << i) ^ (Elem(1) << i);
        Elem pre = Elem(1) << i;
        while (v) {
            const int b = poly_degree(v);
            if (qs.image[b] == 0) {
                qs.image[b] = v;
                qs.preimage[b] = pre;
                break;
            }
            v ^= qs.image[b];
            pre ^= qs.preimage[b];
        }
    }
}

// One root of y^2 + y = c, or false if c is outside the image.
inline bool artin_schreier_root(const Field& f, Elem c, Elem& root) {
    auto& qs = *f.quad;
    std::call_once(qs.once, [&] { build_quad_solver(f, qs); });
    Elem y = 0;
    while (c) {
        const int b = poly_degree(c);
        if (qs.image[b] == 0) return false;
        c ^= qs.image[b];
        y ^= qs.preimage[b];
    }
    root = y;
    return true;
}

}  // namespace detail

// Full solution set of x^2 + alpha*x + beta = 0; empty or {r, r + alpha}.
inline std::vector<Elem> solve_quadratic(const Field& f, Elem alpha, Elem beta) {
    if (alpha == 0) throw std::invalid_argument("alpha must be nonzero");
    // substitute x = alpha*y: y^2 + y = beta / alpha^2
    const Elem c = mul(f, beta, inv(f, square(f, alpha)));
    Elem y = 0;
    if (!detail::artin_schreier_root(f, c, y)) return {};
    Elem r0 = mul(f, alpha, y);
    Elem r1 = r0 ^ alpha;
    if (r0 > r1) std::swap(r0, r1);
    return {r0, r1};
}

inline std::string poly_string(Elem v) {
    if (v == 0) return "0";
    std::string s;
    for (int i = detail::poly_degree(v); i >= 0; --i) {
        if (!(v >> i & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

}  // namespace apnlike
