// Differential and boomerang analysis of power maps x^d. Power maps reduce
// to the a = 1 row: substituting x = a*y turns (x+a)^d + x^d = b into
// a^d((y+1)^d + y^d) = b, a relabeling of the a = 1 row, and likewise for
// the two-equation boomerang system. The full_* oracles recompute the
// definitions over every a to test exactly that reduction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "apnlike/families.hpp"
#include "apnlike/gf2n.hpp"

namespace apnlike {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x^d for every x, one table per (field, d).
inline std::vector<Elem> power_table(const Field& f, long long d) {
    const std::uint32_t e = reduce_exponent(f, d);
    std::vector<Elem> pw(f.size());
    if (f.has_tables()) {
        const std::uint32_t order = f.group_order();
        pw[0] = 0;
        for (std::uint64_t x = 1; x < f.size(); ++x)
            pw[x] = f.exp_of[std::uint64_t(f.log_of[x]) * e % order];
    } else {
        for (std::uint64_t x = 0; x < f.size(); ++x) pw[x] = pow(f, Elem(x), e);
    }
    return pw;
}

struct DiffRow {
    int n = 0;
    long long d = 0;
    std::vector<std::uint32_t> counts;  // counts[b] = #{x : (x+1)^d + x^d = b}
};

inline DiffRow ddt_row(const Field& f, long long d) {
    const auto pw = power_table(f, d);
    DiffRow row{f.n, d, std::vector<std::uint32_t>(f.size(), 0)};
    for (std::uint64_t x = 0; x < f.size(); ++x) ++row.counts[pw[x ^ 1] ^ pw[x]];
    return row;
}

inline int du_of(const DiffRow& row) {
    return int(*std::max_element(row.counts.begin(), row.counts.end()));
}

inline bool apn_of(const DiffRow& row) { return du_of(row) <= 2; }

inline bool locally_apn_of(const DiffRow& row) {
    for (std::size_t b = 2; b < row.counts.size(); ++b)
        if (row.counts[b] > 2) return false;
    return true;
}

inline bool zero_apn_of(const DiffRow& row) { return row.counts[1] == 2; }

inline int differential_uniformity(const Field& f, long long d) { return du_of(ddt_row(f, d)); }
inline bool is_apn(const Field& f, long long d) { return apn_of(ddt_row(f, d)); }
inline bool is_locally_apn(const Field& f, long long d) { return locally_apn_of(ddt_row(f, d)); }
inline bool is_zero_apn(const Field& f, long long d) { return zero_apn_of(ddt_row(f, d)); }

namespace detail {

inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace detail

// Max over b != 0 of the solution count of { x^d + y^d = b, (x+1)^d + (y+1)^d = b }.
// One pass over (x, y), sharded by x-stripes; each worker merges its per-b
// counters by addition, so the result is identical for any worker count.
inline std::int64_t boomerang_uniformity(const Field& f, long long d, unsigned threads = 0) {
    const auto pw = power_table(f, d);
    const std::uint64_t size = f.size();
    std::vector<Elem> der(size);
    for (std::uint64_t x = 0; x < size; ++x) der[x] = pw[x ^ 1] ^ pw[x];

    const unsigned workers = std::min<std::uint64_t>(detail::resolve_workers(threads), size);
    std::vector<std::vector<std::int64_t>> partial(workers);
    auto run = [&](unsigned w) {
        auto& cnt = partial[w];
        cnt.assign(size, 0);
        for (std::uint64_t x = w; x < size; x += workers) {
            const Elem ex = der[x], px = pw[x];
            for (std::uint64_t y = 0; y < size; ++y)
                if (der[y] == ex) ++cnt[px ^ pw[y]];
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();

    std::int64_t best = 0;
    for (std::uint64_t b = 1; b < size; ++b) {
        std::int64_t total = 0;
        for (unsigned w = 0; w < workers; ++w) total += partial[w][b];
        best = std::max(best, total);
    }
    return best;
}

inline constexpr int oracle_degree_limit = 8;

// Differential uniformity straight from the definition: max over all a != 0.
inline int full_ddt_max(const Field& f, long long d) {
    if (f.n > oracle_degree_limit)
        throw budget_error("full_ddt_max supports n <= " + std::to_string(oracle_degree_limit));
    const auto pw = power_table(f, d);
    const std::uint64_t size = f.size();
    int best = 0;
    std::vector<std::uint32_t> cnt(size);
    for (std::uint64_t a = 1; a < size; ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint64_t x = 0; x < size; ++x) ++cnt[pw[x ^ a] ^ pw[x]];
        best = std::max(best, int(*std::max_element(cnt.begin(), cnt.end())));
    }
    return best;
}

// Boomerang uniformity straight from the definition: max over all a, b != 0.
inline std::int64_t full_bct_max(const Field& f, long long d) {
    if (f.n > oracle_degree_limit)
        throw budget_error("full_bct_max supports n <= " + std::to_string(oracle_degree_limit));
    const auto pw = power_table(f, d);
    const std::uint64_t size = f.size();
    std::int64_t best = 0;
    std::vector<std::int64_t> cnt(size);
    for (std::uint64_t a = 1; a < size; ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint64_t x = 0; x < size; ++x)
            for (std::uint64_t y = 0; y < size; ++y)
                if ((pw[x ^ a] ^ pw[y ^ a]) == (pw[x] ^ pw[y])) ++cnt[pw[x] ^ pw[y]];
        for (std::uint64_t b = 1; b < size; ++b) best = std::max(best, cnt[b]);
    }
    return best;
}

struct ClassificationRecord {
    int n = 0;
    long long d = 0;
    long long coset_rep = 0;
    int coset_size = 0;
    int du = 0;
    std::optional<std::int64_t> bu;
    bool is_apn = false;
    bool is_locally_apn = false;
    bool is_zero_apn = false;
    bool is_permutation = false;
    std::vector<std::string> matched_families;

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

inline ClassificationRecord classify(const Field& f, long long d, bool with_bu,
                                     unsigned threads = 0) {
    const DiffRow row = ddt_row(f, d);
    ClassificationRecord rec;
    rec.n = f.n;
    rec.d = reduce_exponent(f, d);
    const auto cs = families::coset(rec.d, f.n);
    rec.coset_rep = cs.front();
    rec.coset_size = int(cs.size());
    rec.du = du_of(row);
    rec.is_apn = apn_of(row);
    rec.is_locally_apn = locally_apn_of(row);
    rec.is_zero_apn = zero_apn_of(row);
    rec.is_permutation = std::gcd((long long)rec.d, families::group_order(f.n)) == 1;
    if (with_bu) rec.bu = boomerang_uniformity(f, d, threads);
    rec.matched_families = families::match_families(f.n, rec.d);
    return rec;
}

}  // namespace apnlike
