#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "apnlike/gf2n.hpp"

using namespace apnlike;

namespace {

// Independent irreducibility oracle: trial division by every polynomial of
// degree 1..n/2 (plain long division on bit masks).
bool trial_division_irreducible(std::uint32_t poly, int n) {
    auto degree = [](std::uint64_t v) { return v ? 63 - __builtin_clzll(v) : -1; };
    for (std::uint32_t q = 2; degree(q) <= n / 2; ++q) {
        std::uint64_t r = poly;
        const int dq = degree(q);
        while (degree(r) >= dq) r ^= std::uint64_t(q) << (degree(r) - dq);
        if (r == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("default moduli are irreducible and minimal", "[gf2n]") {
    for (int n = min_degree; n <= max_degree; ++n) {
        const Elem m = default_modulus(n);
        REQUIRE((m >> n) == 1u);
        REQUIRE(is_irreducible(m, n));
    }
    // cross-check against the trial-division oracle, and minimality for moderate n
    for (int n = min_degree; n <= 16; ++n) {
        const Elem m = default_modulus(n);
        REQUIRE(trial_division_irreducible(m, n));
        for (Elem cand = Elem(1) << n; cand < m; ++cand)
            REQUIRE_FALSE(trial_division_irreducible(cand, n));
    }
}

TEST_CASE("make_field basics", "[gf2n]") {
    REQUIRE_THROWS_AS(make_field(1), std::invalid_argument);
    REQUIRE_THROWS_AS(make_field(25), std::invalid_argument);
    REQUIRE_THROWS_AS(make_field(8, 0x11C), std::invalid_argument);  // reducible

    const Field f3 = make_field(3);
    REQUIRE(f3.modulus == 0xB);  // x^3 + x + 1
    REQUIRE(f3.has_tables());

    const Field f8 = make_field(8);
    REQUIRE(is_irreducible(f8.modulus, 8));
    REQUIRE(trial_division_irreducible(f8.modulus, 8));
}

TEST_CASE("log/antilog tables are consistent", "[gf2n]") {
    for (int n : {2, 3, 5, 8, 11}) {
        const Field f = make_field(n);
        REQUIRE(f.exp_of.size() == f.group_order());
        std::vector<bool> seen(f.size(), false);
        for (std::uint32_t i = 0; i < f.group_order(); ++i) {
            const Elem a = f.exp_of[i];
            REQUIRE(a != 0);
            REQUIRE_FALSE(seen[a]);  // no repeated entries
            seen[a] = true;
            REQUIRE(f.log_of[a] == i);
        }
    }
}

TEST_CASE("multiplication in GF(2^3)", "[gf2n]") {
    const Field f = make_field(3);
    REQUIRE(mul(f, 0b010, 0b010) == 0b100);  // x * x = x^2
    REQUIRE(mul(f, 0b100, 0b010) == 0b011);  // x^2 * x = x + 1
    for (Elem a = 0; a < 8; ++a) REQUIRE(mul(f, a, 1) == a);
}

TEST_CASE("field axioms", "[gf2n]") {
    for (int n : {2, 3, 4, 5, 6}) {
        const Field f = make_field(n);
        for (Elem a = 0; a < f.size(); ++a)
            for (Elem b = 0; b < f.size(); ++b) {
                REQUIRE(mul(f, a, b) == mul(f, b, a));
                for (Elem c = 0; c < f.size(); ++c)
                    REQUIRE(mul(f, a, Elem(b ^ c)) == (mul(f, a, b) ^ mul(f, a, c)));
            }
    }
    // random sampling on a larger field
    const Field f = make_field(13);
    std::mt19937 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const Elem a = rng() & f.mask(), b = rng() & f.mask(), c = rng() & f.mask();
        REQUIRE(mul(f, a, Elem(b ^ c)) == (mul(f, a, b) ^ mul(f, a, c)));
        REQUIRE(mul(f, mul(f, a, b), c) == mul(f, a, mul(f, b, c)));
    }
}

TEST_CASE("table multiplication equals carryless multiplication", "[gf2n]") {
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        const Field f = make_field(n);
        REQUIRE(f.has_tables());
        for (Elem a = 0; a < f.size(); ++a)
            for (Elem b = 0; b < f.size(); ++b)
                REQUIRE(mul(f, a, b) == mul_carryless(f, a, b));
    }
}

TEST_CASE("pow", "[gf2n]") {
    const Field f3 = make_field(3);
    REQUIRE(pow(f3, 0b010, 3) == 0b011);  // x^3 = x + 1
    REQUIRE_THROWS_AS(pow(f3, 2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(pow(f3, 2, -5), std::invalid_argument);

    for (int n : {3, 6, 9}) {
        const Field f = make_field(n);
        for (long long d : {1LL, 2LL, 5LL}) REQUIRE(pow(f, 0, d) == 0);
        std::mt19937 rng(n);
        for (int t = 0; t < 200; ++t) {
            const Elem a = (rng() & f.mask()) | 1;
            REQUIRE(pow(f, a, f.group_order()) == 1);
            const long long d1 = 1 + rng() % 500, d2 = 1 + rng() % 500;
            REQUIRE(pow(f, a, d1 + d2) == mul(f, pow(f, a, d1), pow(f, a, d2)));
            REQUIRE(pow(f, a, d1 + f.group_order()) == pow(f, a, d1));
        }
    }
}

TEST_CASE("pow without tables matches table path", "[gf2n]") {
    const Field f = make_field(8);
    Field bare = f;
    bare.exp_of.clear();
    bare.log_of.clear();
    for (Elem a = 0; a < f.size(); ++a)
        for (long long d : {1LL, 2LL, 3LL, 91LL, 254LL, 255LL, 1000LL})
            REQUIRE(pow(f, a, d) == pow(bare, a, d));
}

TEST_CASE("absolute trace", "[gf2n]") {
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        const Field f = make_field(n);
        REQUIRE(abs_trace(f, 0) == 0);
        REQUIRE(abs_trace(f, 1) == n % 2);
        int zeros = 0;
        for (Elem a = 0; a < f.size(); ++a) {
            const int t = abs_trace(f, a);
            REQUIRE((t == 0 || t == 1));
            zeros += (t == 0);
            REQUIRE(abs_trace(f, square(f, a)) == t);
        }
        REQUIRE(zeros == int(f.size() / 2));
        std::mt19937 rng(n);
        for (int t = 0; t < 300; ++t) {
            const Elem a = rng() & f.mask(), b = rng() & f.mask();
            REQUIRE(abs_trace(f, a ^ b) == (abs_trace(f, a) ^ abs_trace(f, b)));
        }
    }
}

TEST_CASE("subfield trace", "[gf2n]") {
    const Field f8 = make_field(8);
    REQUIRE(subfield_trace(f8, 4, 1) == 0);  // m even
    const Field f6 = make_field(6);
    REQUIRE(subfield_trace(f6, 3, 1) == 1);  // m odd
    REQUIRE_THROWS_AS(subfield_trace(f8, 3, 1), std::invalid_argument);

    // some element outside the subfield
    bool threw = false;
    for (Elem a = 2; a < f8.size(); ++a)
        if (!in_subfield(f8, 4, a)) {
            REQUIRE_THROWS_AS(subfield_trace(f8, 4, a), std::invalid_argument);
            threw = true;
            break;
        }
    REQUIRE(threw);

    // restriction of the absolute trace of GF(2^m) via an isomorphic standalone field
    const Field f4 = make_field(4);
    int ones = 0;
    for (Elem a = 0; a < f8.size(); ++a)
        if (in_subfield(f8, 4, a)) ones += subfield_trace(f8, 4, a);
    int ones_direct = 0;
    for (Elem a = 0; a < f4.size(); ++a) ones_direct += abs_trace(f4, a);
    REQUIRE(ones == ones_direct);  // both count 2^(m-1) trace-1 elements
}

TEST_CASE("solve_quadratic", "[gf2n]") {
    const Field f5 = make_field(5);
    REQUIRE_THROWS_AS(solve_quadratic(f5, 0, 3), std::invalid_argument);
    REQUIRE(solve_quadratic(f5, 1, 0) == std::vector<Elem>{0, 1});

    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10}) {
        const Field f = make_field(n);
        std::mt19937 rng(n * 31);
        for (int t = 0; t < 150; ++t) {
            const Elem alpha = (rng() & f.mask()) | 1;
            const Elem beta = rng() & f.mask();
            const auto sols = solve_quadratic(f, alpha, beta);

            // exhaustive root-search oracle
            std::vector<Elem> expect;
            for (Elem x = 0; x < f.size(); ++x)
                if ((mul(f, x, x) ^ mul(f, alpha, x) ^ beta) == 0) expect.push_back(x);
            std::sort(expect.begin(), expect.end());
            REQUIRE(sols == expect);

            REQUIRE((sols.size() == 0 || sols.size() == 2));
            const int tr = abs_trace(f, mul(f, beta, inv(f, square(f, alpha))));
            REQUIRE((sols.size() == 2) == (tr == 0));
            if (sols.size() == 2) REQUIRE((sols[0] ^ sols[1]) == alpha);
        }
    }
}
