// Dickson polynomials of the first kind in characteristic 2. Evaluation runs
// the linear recurrence D_k = x*D_{k-1} + a*D_{k-2} with D_0 = 0 (2 = 0 here)
// and D_1 = x; the closed-formula coefficients are kept for cross-checking.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apnlike/gf2n.hpp"

namespace apnlike {

struct DicksonCoeffs {
    int k = 0;
    std::vector<std::pair<int, int>> terms;  // (x-degree, a-power), coefficient 1
};

namespace detail {

inline unsigned __int128 binomial128(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 c = 1;
    for (int i = 1; i <= r; ++i) {
        c *= unsigned(n - r + i);
        c /= unsigned(i);  // exact: c is a binomial coefficient at every step
    }
    return c;
}

}  // namespace detail

// Terms of D_k(x, a) reduced mod 2, from the closed formula
// sum_j k/(k-j) * C(k-j, j) * a^j * x^(k-2j) (the sign on a vanishes in
// characteristic 2). Exact integer arithmetic; k <= 64 keeps it in range.
inline DicksonCoeffs dickson_coeffs(int k) {
    if (k < 1) throw std::invalid_argument("dickson_coeffs requires k >= 1");
    if (k > 64) throw std::invalid_argument("dickson_coeffs supports k <= 64");
    DicksonCoeffs out;
    out.k = k;
    for (int j = 0; 2 * j <= k; ++j) {
        const unsigned __int128 scaled = detail::binomial128(k - j, j) * unsigned(k);
        if (scaled % unsigned(k - j) != 0)
            throw std::logic_error("dickson coefficient k/(k-j)*C(k-j,j) not an integer");
        const unsigned __int128 coeff = scaled / unsigned(k - j);
        if (coeff & 1) out.terms.emplace_back(k - 2 * j, j);
    }
    if (out.terms.empty() || out.terms.front().first != k)
        throw std::logic_error("dickson coefficients lost the monic leading term");
    return out;
}

inline Elem dickson_eval(const Field& f, int k, Elem x, Elem a) {
    if (k < 0) throw std::invalid_argument("dickson_eval requires k >= 0");
    if (k == 0) return 0;
    Elem prev = 0, cur = x;  // D_0, D_1
    for (int i = 2; i <= k; ++i) {
        const Elem next = mul(f, x, cur) ^ mul(f, a, prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

// T_1 = { u != 0 in GF(2^m) : tr(1/u) = 1 }, inside the field itself
// (f.n = m) or inside the subfield of a quadratic extension (f.n = 2m).
inline std::vector<Elem> t1_set(const Field& f, int m) {
    if (f.n != m && f.n != 2 * m)
        throw std::invalid_argument("t1_set requires f.n = m or f.n = 2m");
    std::vector<Elem> out;
    out.reserve(std::size_t(1) << (m - 1));
    if (f.n == m) {
        for (Elem u = 1; u < f.size(); ++u)
            if (abs_trace(f, inv(f, u)) == 1) out.push_back(u);
    } else {
        for (Elem u = 1; u < f.size(); ++u)
            if (in_subfield(f, m, u) && subfield_trace(f, m, inv(f, u)) == 1) out.push_back(u);
    }
    return out;  // ascending by construction
}

// Whether u -> D_j(u, 1) permutes T_1.
inline bool dickson_permutes_t1(const Field& f, int m, int j) {
    if (j < 1) throw std::invalid_argument("dickson_permutes_t1 requires j >= 1");
    const std::vector<Elem> t1 = t1_set(f, m);
    std::vector<Elem> image;
    image.reserve(t1.size());
    for (Elem u : t1) image.push_back(dickson_eval(f, j, u, 1));
    std::sort(image.begin(), image.end());
    return image == t1;
}

// Whether x -> D_k(x, a) is a bijection of the whole field.
inline bool dickson_permutes_field(const Field& f, int k, Elem a) {
    if (k < 1) throw std::invalid_argument("dickson_permutes_field requires k >= 1");
    if (a == 0) throw std::invalid_argument("dickson_permutes_field requires a != 0");
    std::vector<bool> seen(f.size(), false);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        const Elem v = dickson_eval(f, k, Elem(x), a);
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace apnlike
