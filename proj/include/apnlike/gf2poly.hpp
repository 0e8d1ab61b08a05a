// Exact polynomial arithmetic over GF(2) in one and two variables, with a
// small expression parser and a canonical printer for golden-file output.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apnlike/gf2n.hpp"

namespace apnlike {

// Univariate polynomial over GF(2), bit i of the limb array = coefficient of x^i.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::uint64_t low_bits) : limbs_{low_bits} { normalize(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(1); }
    static UPoly x() { return UPoly(2); }
    static UPoly monomial(int deg) {
        UPoly p;
        p.set(deg);
        return p;
    }

    bool is_zero() const { return limbs_.empty(); }

    int degree() const {
        if (limbs_.empty()) return -1;
        const std::uint64_t top = limbs_.back();
        return int(limbs_.size() - 1) * 64 + (63 - __builtin_clzll(top));
    }

    bool get(int i) const {
        const std::size_t w = std::size_t(i) / 64;
        return w < limbs_.size() && (limbs_[w] >> (i % 64) & 1);
    }

    void set(int i) {
        const std::size_t w = std::size_t(i) / 64;
        if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
        limbs_[w] |= std::uint64_t(1) << (i % 64);
    }

    void flip(int i) {
        const std::size_t w = std::size_t(i) / 64;
        if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
        limbs_[w] ^= std::uint64_t(1) << (i % 64);
        normalize();
    }

    UPoly& operator^=(const UPoly& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
        normalize();
        return *this;
    }
    friend UPoly operator^(UPoly a, const UPoly& b) { return a ^= b; }

    // addition and subtraction coincide with XOR
    friend UPoly operator+(const UPoly& a, const UPoly& b) { return a ^ b; }

    UPoly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return {};
        UPoly r;
        r.limbs_.assign(limbs_.size() + std::size_t(k) / 64 + 1, 0);
        const int wk = k / 64, bk = k % 64;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            r.limbs_[i + wk] ^= limbs_[i] << bk;
            if (bk) r.limbs_[i + wk + 1] ^= limbs_[i] >> (64 - bk);
        }
        r.normalize();
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UPoly r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t w = 0; w < a.limbs_.size(); ++w) {
            std::uint64_t bits = a.limbs_[w];
            while (bits) {
                const int bit = __builtin_ctzll(bits);
                bits &= bits - 1;
                const int k = int(w) * 64 + bit;
                const int wk = k / 64, bk = k % 64;
                for (std::size_t i = 0; i < b.limbs_.size(); ++i) {
                    r.limbs_[i + wk] ^= b.limbs_[i] << bk;
                    if (bk) r.limbs_[i + wk + 1] ^= b.limbs_[i] >> (64 - bk);
                }
            }
        }
        r.normalize();
        return r;
    }

    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    // quotient and remainder of long division; q must be nonzero
    friend std::pair<UPoly, UPoly> divrem(const UPoly& p, const UPoly& q) {
        if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
        UPoly quot, rem = p;
        const int dq = q.degree();
        for (int dr = rem.degree(); dr >= dq; dr = rem.degree()) {
            rem ^= q.shifted(dr - dq);
            quot.set(dr - dq);
        }
        return {quot, rem};
    }

    UPoly pow(unsigned k) const {
        UPoly r = one(), base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r *= base;
            base *= base;
        }
        return r;
    }

    // value at a point of GF(2^n), by Horner's rule
    Elem eval(const Field& f, Elem x0) const {
        Elem acc = 0;
        for (int i = degree(); i >= 0; --i) acc = mul(f, acc, x0) ^ Elem(get(i));
        return acc;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.limbs_ == b.limbs_; }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (!get(i)) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += "1";
            else if (i == 1)
                s += var;
            else
                s += var + "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

// Bivariate polynomial over GF(2), stored as coefficients of powers of y.
class BPoly {
  public:
    BPoly() = default;
    explicit BPoly(std::vector<UPoly> y_coeffs) : yc_(std::move(y_coeffs)) { normalize(); }

    bool is_zero() const { return yc_.empty(); }
    int y_degree() const { return int(yc_.size()) - 1; }

    const UPoly& coeff(int ydeg) const {
        static const UPoly kZero;
        return ydeg >= 0 && ydeg < int(yc_.size()) ? yc_[std::size_t(ydeg)] : kZero;
    }

    void add_term(int xdeg, int ydeg) {
        if (ydeg >= int(yc_.size())) yc_.resize(std::size_t(ydeg) + 1);
        yc_[std::size_t(ydeg)].flip(xdeg);
        normalize();
    }

    friend bool operator==(const BPoly& a, const BPoly& b) { return a.yc_ == b.yc_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int yd = y_degree(); yd >= 0; --yd) {
            const UPoly& c = coeff(yd);
            for (int xd = c.degree(); xd >= 0; --xd) {
                if (!c.get(xd)) continue;
                if (!s.empty()) s += " + ";
                std::string term;
                if (xd == 1)
                    term = "x";
                else if (xd > 1)
                    term = "x^" + std::to_string(xd);
                if (yd >= 1) {
                    if (!term.empty()) term += "*";
                    term += yd == 1 ? "y" : "y^" + std::to_string(yd);
                }
                s += term.empty() ? "1" : term;
            }
        }
        return s;
    }

  private:
    void normalize() {
        while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
    }

    std::vector<UPoly> yc_;
};

struct PolyParseError : std::runtime_error {
    PolyParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

namespace detail {

inline constexpr int max_parse_exponent = 1 << 16;

class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    BPoly parse() {
        BPoly out;
        skip_ws();
        if (eof()) throw PolyParseError("empty polynomial", pos_);
        parse_term(out);
        while (true) {
            skip_ws();
            if (eof()) break;
            expect('+');
            parse_term(out);
        }
        return out;
    }

  private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }
    void expect(char c) {
        if (eof() || peek() != c)
            throw PolyParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int parse_uint() {
        skip_ws();
        if (eof() || peek() < '0' || peek() > '9')
            throw PolyParseError("expected a number", pos_);
        long long v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (peek() - '0');
            if (v > max_parse_exponent) throw PolyParseError("exponent overflow", pos_);
            ++pos_;
        }
        return int(v);
    }

    // factor := 'x' ['^' uint] | 'y' ['^' uint] | uint
    void parse_factor(int& xd, int& yd, int& coeff) {
        skip_ws();
        if (eof()) throw PolyParseError("expected a factor", pos_);
        const char c = peek();
        if (c == 'x' || c == 'y') {
            ++pos_;
            int e = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                e = parse_uint();
            }
            (c == 'x' ? xd : yd) += e;
            if (xd > max_parse_exponent || yd > max_parse_exponent)
                throw PolyParseError("exponent overflow", pos_);
        } else if (c >= '0' && c <= '9') {
            coeff = coeff * (parse_uint() & 1) & 1;
        } else {
            throw PolyParseError("unexpected character", pos_);
        }
    }

    void parse_term(BPoly& out) {
        int xd = 0, yd = 0, coeff = 1;
        parse_factor(xd, yd, coeff);
        while (true) {
            skip_ws();
            if (eof() || peek() != '*') break;
            ++pos_;
            parse_factor(xd, yd, coeff);
        }
        if (coeff) out.add_term(xd, yd);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses sums of '*'-joined factors over {x, y, ^, digits}; GF(2) coefficients.
inline BPoly parse_bpoly(const std::string& s) { return detail::PolyParser(s).parse(); }

// Same grammar restricted to univariate input.
inline UPoly parse_upoly(const std::string& s) {
    const BPoly p = parse_bpoly(s);
    if (p.y_degree() > 0)
        throw PolyParseError("expected a univariate polynomial in x", 0);
    return p.coeff(0);
}

}  // namespace apnlike
