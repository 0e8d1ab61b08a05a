// Sylvester-matrix resultants with respect to y for bivariate polynomials
// over GF(2). The determinant is computed by Bareiss fraction-free
// elimination, which stays inside GF(2)[x] because every division step is
// exact; cofactor expansion is kept as a cross-check for small orders.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apnlike/gf2poly.hpp"

namespace apnlike {

using UPolyMatrix = std::vector<std::vector<UPoly>>;

// Sylvester matrix of f and g in y, order deg_y(f) + deg_y(g). The first
// deg_y(g) rows carry the coefficients of f, leading coefficient first.
inline UPolyMatrix sylvester(const BPoly& f, const BPoly& g) {
    const int df = f.y_degree(), dg = g.y_degree();
    if (df < 1 || dg < 1)
        throw std::invalid_argument("sylvester requires y-degree >= 1 on both inputs");
    const auto order = std::size_t(df + dg);
    UPolyMatrix m(order, std::vector<UPoly>(order));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[std::size_t(r)][std::size_t(r + k)] = f.coeff(df - k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m[std::size_t(dg + r)][std::size_t(r + k)] = g.coeff(dg - k);
    return m;
}

// Determinant by cofactor expansion along the first row. Exponential; used
// as the oracle for small orders.
inline UPoly det_cofactor(const UPolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return UPoly::one();
    if (n == 1) return m[0][0];
    UPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        UPolyMatrix minor(n - 1, std::vector<UPoly>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        acc ^= m[0][j] * det_cofactor(minor);  // char 2: signs vanish
    }
    return acc;
}

// Determinant by Bareiss fraction-free elimination; entries stay in GF(2)[x].
inline UPoly det_bareiss(UPolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return UPoly::one();
    UPoly prev = UPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return UPoly::zero();
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const UPoly num = m[k][k] * m[i][j] ^ m[i][k] * m[k][j];
                auto [q, r] = divrem(num, prev);
                if (!r.is_zero())
                    throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = std::move(q);
            }
            m[i][k] = UPoly::zero();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

// Res_y(f, g). A y-free nonzero g contributes g^deg_y(f) (usual convention),
// and a zero input gives a zero resultant.
inline UPoly resultant_y(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly::zero();
    const int df = f.y_degree(), dg = g.y_degree();
    if (df == 0 && dg == 0) return UPoly::one();
    if (dg == 0) return g.coeff(0).pow(unsigned(df));
    if (df == 0) return f.coeff(0).pow(unsigned(dg));
    return det_bareiss(sylvester(f, g));
}

struct FactorPower {
    UPoly base;
    unsigned exponent = 1;
};

inline UPoly expand_product(const std::vector<FactorPower>& factors) {
    UPoly acc = UPoly::one();
    for (const auto& fp : factors) acc *= fp.base.pow(fp.exponent);
    return acc;
}

// Parses "(poly)^k * (poly)^k * ..." with univariate bases; ^k optional.
inline std::vector<FactorPower> parse_factored(const std::string& s) {
    std::vector<FactorPower> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= s.size() || s[pos] != '(')
            throw PolyParseError("expected '('", pos);
        const std::size_t open = pos++;
        int depth = 1;
        std::size_t close = pos;
        while (close < s.size() && depth > 0) {
            if (s[close] == '(') ++depth;
            if (s[close] == ')') --depth;
            ++close;
        }
        if (depth != 0) throw PolyParseError("unbalanced parentheses", open);
        FactorPower fp;
        fp.base = parse_upoly(s.substr(pos, close - 1 - pos));
        pos = close;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
                throw PolyParseError("expected a number", pos);
            long long v = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                v = v * 10 + (s[pos] - '0');
                if (v > detail::max_parse_exponent) throw PolyParseError("exponent overflow", pos);
                ++pos;
            }
            fp.exponent = unsigned(v);
        }
        out.push_back(std::move(fp));
        skip_ws();
        if (pos >= s.size()) break;
        if (s[pos] != '*') throw PolyParseError("expected '*'", pos);
        ++pos;
    }
    return out;
}

}  // namespace apnlike
