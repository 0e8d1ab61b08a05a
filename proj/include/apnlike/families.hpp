// Catalog of exponent families for power maps x^d over GF(2^n): the six
// classical APN families, the five known 0-APN families, the two locally-APN
// families F1/F2, and the six 0-APN constructions split by the parity of n.
// Also the integer machinery they need (cosets, modular inverses).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace apnlike::families {

inline long long group_order(int n) { return (1LL << n) - 1; }

inline long long modinv(long long a, long long m) {
    if (m <= 0) throw std::invalid_argument("modinv: modulus must be positive");
    long long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("modinv: argument is not a unit");
    return ((s0 % m) + m) % m;
}

// Cyclotomic coset {d * 2^i mod 2^n - 1}, ascending.
inline std::vector<long long> coset(long long d, int n) {
    const long long order = group_order(n);
    long long v = ((d % order) + order) % order;
    if (v == 0) throw std::invalid_argument("coset: d must be nonzero mod 2^n - 1");
    std::vector<long long> out;
    const long long start = v;
    do {
        out.push_back(v);
        v = v * 2 % order;
    } while (v != start);
    std::sort(out.begin(), out.end());
    return out;
}

inline long long coset_rep(long long d, int n) { return coset(d, n).front(); }

enum class Claim { apn, zero_apn, locally_apn, bu2 };

inline const char* claim_name(Claim c) {
    switch (c) {
        case Claim::apn: return "apn";
        case Claim::zero_apn: return "zero_apn";
        case Claim::locally_apn: return "locally_apn";
        case Claim::bu2: return "bu2";
    }
    return "?";
}

using Params = std::map<std::string, long long>;

struct FamilyExponent {
    long long d = 0;  // in [1, 2^n - 2]
    Params params;
};

struct FamilySpec {
    std::string name;
    std::vector<Claim> claims;
    std::function<bool(int)> shape_ok;
    // whether the claims are backed by the stated hypotheses at this degree
    // (f1's theorem needs m even; its exponent form exists for all even n)
    std::function<bool(int)> theorem_holds;
    std::function<std::vector<FamilyExponent>(int)> generate_impl;
};

namespace detail {

inline void emit(std::vector<FamilyExponent>& out, int n, long long d, Params params) {
    const long long order = group_order(n);
    d %= order;
    if (d <= 0) return;  // reduces onto the excluded endpoints
    out.push_back({d, std::move(params)});
}

inline void dedupe_by_coset(std::vector<FamilyExponent>& v, int n) {
    std::set<long long> seen;
    std::vector<FamilyExponent> kept;
    for (auto& fe : v)
        if (seen.insert(coset_rep(fe.d, n)).second) kept.push_back(std::move(fe));
    v = std::move(kept);
}

inline bool always(int) { return true; }
inline bool even_n(int n) { return n % 2 == 0; }
inline bool odd_n(int n) { return n % 2 == 1; }

inline std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> cat;

    cat.push_back({"gold", {Claim::apn}, always, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       for (int i = 1; 2 * i <= n; ++i)
                           if (std::gcd(i, n) == 1)
                               emit(out, n, (1LL << i) + 1, {{"i", i}});
                       return out;
                   }});

    cat.push_back({"kasami", {Claim::apn}, always, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       for (int i = 1; i < n; ++i)
                           if (std::gcd(i, n) == 1)
                               emit(out, n, (1LL << (2 * i)) - (1LL << i) + 1, {{"i", i}});
                       dedupe_by_coset(out, n);
                       return out;
                   }});

    cat.push_back({"welch", {Claim::apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int t = (n - 1) / 2;
                       if (t >= 1) emit(out, n, (1LL << t) + 3, {{"t", t}});
                       return out;
                   }});

    cat.push_back({"niho", {Claim::apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int t = (n - 1) / 2;
                       if (t < 1) return out;
                       const long long d = t % 2 == 0
                                               ? (1LL << t) + (1LL << (t / 2)) - 1
                                               : (1LL << t) + (1LL << ((3 * t + 1) / 2)) - 1;
                       emit(out, n, d, {{"t", t}});
                       return out;
                   }});

    cat.push_back({"inverse", {Claim::apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       emit(out, n, (1LL << (n - 1)) - 1, {{"t", (n - 1) / 2}});
                       return out;
                   }});

    cat.push_back({"dobbertin", {Claim::apn}, [](int n) { return n % 5 == 0; }, always,
                   [](int n) {
                       std::vector<FamilyExponent> out;
                       const int i = n / 5;
                       emit(out, n,
                            (1LL << (4 * i)) + (1LL << (3 * i)) + (1LL << (2 * i)) +
                                (1LL << i) - 1,
                            {{"i", i}});
                       return out;
                   }});

    cat.push_back({"c1", {Claim::zero_apn}, always, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       for (int i = 2; i < n; ++i)
                           if (std::gcd(i - 1, n) == 1)
                               emit(out, n, (1LL << i) - 1, {{"i", i}});
                       return out;
                   }});

    cat.push_back({"c2", {Claim::zero_apn}, [](int n) { return n % 6 != 0 && n >= 4; },
                   always, [](int n) {
                       std::vector<FamilyExponent> out;
                       emit(out, n, 21, {});
                       return out;
                   }});

    cat.push_back({"c3", {Claim::zero_apn}, always, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       for (int r = 1; r < n; ++r) {
                           if (std::gcd(r, n) != 1) continue;
                           for (int t = r; t < n; ++t)
                               if (std::gcd(t, n) == 1)
                                   emit(out, n, (1LL << r) + (1LL << t) - 1,
                                        {{"r", r}, {"t", t}});
                       }
                       dedupe_by_coset(out, n);
                       return out;
                   }});

    cat.push_back({"c4", {Claim::zero_apn},
                   [](int n) { return n % 4 == 0 && (n / 4) % 2 == 0; }, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int t = n / 4;
                       emit(out, n, (1LL << (2 * t)) + (1LL << t) + 1, {{"t", t}});
                       return out;
                   }});

    cat.push_back({"c5", {Claim::zero_apn}, always, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       for (int s = 1; s < n; ++s)
                           if (std::gcd(n, s + 1) == 1)
                               emit(out, n, (1LL << n) - (1LL << s), {{"s", s}});
                       return out;
                   }});

    // x^(j(2^m - 1)); the locally-APN/boomerang/0-APN statements hold for m even
    cat.push_back({"f1", {Claim::locally_apn, Claim::bu2, Claim::zero_apn}, even_n,
                   [](int n) { return n % 4 == 0; }, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = n / 2;
                       const long long q = (1LL << m) + 1;
                       for (long long j = 1; j <= (1LL << m); ++j)
                           if (std::gcd(j, q) == 1)
                               emit(out, n, j * ((1LL << m) - 1), {{"m", m}, {"j", j}});
                       return out;
                   }});

    // x^(j(2^m - 1) + 1) with j = (2^m + 2)/3, which is an integer iff m is even
    cat.push_back({"f2", {Claim::locally_apn}, even_n, [](int n) { return n % 4 == 0; },
                   [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = n / 2;
                       if (((1LL << m) + 2) % 3 != 0) return out;
                       const long long j = ((1LL << m) + 2) / 3;
                       emit(out, n, j * ((1LL << m) - 1) + 1, {{"m", m}, {"j", j}});
                       return out;
                   }});

    cat.push_back({"t32_1", {Claim::zero_apn}, even_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = n / 2;
                       if (m % 2 == 0 && m % 3 != 0)
                           emit(out, n, (1LL << (2 * m - 1)) - (1LL << m) - 1, {{"m", m}});
                       return out;
                   }});

    cat.push_back({"t32_2", {Claim::zero_apn}, even_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = n / 2;
                       if (m % 2 == 1)
                           emit(out, n, (1LL << (2 * m - 1)) - (1LL << (m - 1)) - 1, {{"m", m}});
                       return out;
                   }});

    cat.push_back({"t32_3", {Claim::zero_apn}, even_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = n / 2;
                       if (m % 2 != 0 || (m / 2) % 2 != 0) return out;
                       const int k = m / 2;
                       emit(out, n, (1LL << (3 * k)) - (1LL << (2 * k)) + (1LL << k) - 1,
                            {{"k", k}});
                       return out;
                   }});

    cat.push_back({"t33_1", {Claim::zero_apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = (n - 1) / 2;
                       if (m % 3 != 1)
                           emit(out, n, (1LL << (2 * m)) - (1LL << m) - 1, {{"m", m}});
                       return out;
                   }});

    cat.push_back({"t33_2", {Claim::zero_apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = (n - 1) / 2;
                       if (m >= 2)
                           emit(out, n, (1LL << (2 * m - 1)) - (1LL << (m - 1)) - 1, {{"m", m}});
                       return out;
                   }});

    cat.push_back({"t33_3", {Claim::zero_apn}, odd_n, always, [](int n) {
                       std::vector<FamilyExponent> out;
                       const int m = (n - 1) / 2;
                       if (m >= 2)
                           emit(out, n, (1LL << (2 * m - 1)) - (1LL << m) - 1, {{"m", m}});
                       return out;
                   }});

    return cat;
}

}  // namespace detail

inline const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> cat = detail::build_catalog();
    return cat;
}

inline const FamilySpec& family(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown family: " + name);
}

inline std::vector<FamilyExponent> gen_exponents(const FamilySpec& fam, int n) {
    if (!fam.shape_ok(n))
        throw std::invalid_argument("family " + fam.name + " is not defined at n=" +
                                    std::to_string(n));
    return fam.generate_impl(n);
}

// Coset reps of every exponent the family generates at degree n
// (empty when the shape does not fit).
inline std::set<long long> family_coset_reps(const FamilySpec& fam, int n) {
    std::set<long long> reps;
    if (!fam.shape_ok(n)) return reps;
    for (const auto& fe : fam.generate_impl(n)) reps.insert(coset_rep(fe.d, n));
    return reps;
}

inline bool covered_by(const FamilySpec& fam, int n, long long d) {
    if (d < 1 || d > group_order(n) - 1)
        throw std::invalid_argument("covered_by: d out of range");
    const auto reps = family_coset_reps(fam, n);
    return reps.count(coset_rep(d, n)) > 0;
}

inline std::vector<std::string> match_families(int n, long long d) {
    std::vector<std::string> out;
    for (const auto& fam : catalog())
        if (covered_by(fam, n, d)) out.push_back(fam.name);
    return out;
}

// (2^t - 1, 2^(n-t+1) - 1) for t in [2, n-1]; both sides of the locally-APN
// reciprocity statement.
inline std::vector<std::pair<long long, long long>> blondeau_pairs(int n) {
    if (n < 3) throw std::invalid_argument("blondeau_pairs requires n >= 3");
    std::vector<std::pair<long long, long long>> out;
    for (int t = 2; t <= n - 1; ++t)
        out.emplace_back((1LL << t) - 1, (1LL << (n - t + 1)) - 1);
    return out;
}

}  // namespace apnlike::families
