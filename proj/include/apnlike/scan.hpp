// Exhaustive per-coset classification of power maps over GF(2^n), coverage
// analysis against the family catalog, and JSON/CSV report emission.
//
// Coverage conventions: the linear coset (rep 1, constant derivative) is not
// counted as an instance; for the locally-APN claim an exponent 2^t - 1 also
// counts as explained when its reciprocity partner 2^(n-t+1) - 1 lies in an
// APN coset or in a covering family (locally-APN transfers between the two).
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "apnlike/families.hpp"
#include "apnlike/spectra.hpp"

namespace apnlike {

inline constexpr int scan_degree_limit_bu = 12;
inline constexpr int scan_degree_limit = 14;

// Sorted minimal representatives of the cyclotomic cosets mod 2^n - 1, 0 excluded.
inline std::vector<long long> coset_reps(int n) {
    if (n < min_degree || n > scan_degree_limit)
        throw std::invalid_argument("coset_reps requires 2 <= n <= 14");
    const long long order = families::group_order(n);
    std::vector<bool> seen(std::size_t(order), false);
    std::vector<long long> reps;
    for (long long d = 1; d < order; ++d) {
        if (seen[std::size_t(d)]) continue;
        reps.push_back(d);
        long long v = d;
        do {
            seen[std::size_t(v)] = true;
            v = v * 2 % order;
        } while (v != d);
    }
    return reps;
}

struct ScanSummary {
    long long cosets = 0;
    long long apn = 0;
    long long locally_apn = 0;
    long long zero_apn = 0;
    long long permutation = 0;
    long long locally_apn_not_apn = 0;
    long long zero_apn_not_apn = 0;
    std::optional<long long> bu2_not_apn;

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanReport {
    int schema_version = 1;
    int n = 0;
    bool with_bu = false;
    std::vector<ClassificationRecord> rows;  // sorted by coset_rep
    ScanSummary summary;
    std::map<std::string, std::vector<long long>> unexplained;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct CoverageResult {
    std::string claim;
    std::vector<long long> matching;
    std::map<long long, std::string> explained;  // rep -> reason
    std::vector<long long> unexplained;
};

namespace detail {

inline const ClassificationRecord* find_row(const ScanReport& r, long long rep) {
    for (const auto& row : r.rows)
        if (row.coset_rep == rep) return &row;
    return nullptr;
}

inline bool family_has_claim(const std::string& name, families::Claim c) {
    const auto& fam = families::family(name);
    return std::find(fam.claims.begin(), fam.claims.end(), c) != fam.claims.end();
}

}  // namespace detail

// Partition of the claim-satisfying cosets into explained and unexplained.
// Claims: locally_apn_not_apn, bu2_not_apn, zero_apn_not_apn.
inline CoverageResult coverage(const ScanReport& report, const std::string& claim) {
    families::Claim kind;
    if (claim == "locally_apn_not_apn")
        kind = families::Claim::locally_apn;
    else if (claim == "bu2_not_apn")
        kind = families::Claim::bu2;
    else if (claim == "zero_apn_not_apn")
        kind = families::Claim::zero_apn;
    else
        throw std::invalid_argument("unknown claim: " + claim);
    if (kind == families::Claim::bu2 && !report.with_bu)
        throw std::invalid_argument("claim " + claim + " needs a report with boomerang data");

    CoverageResult out;
    out.claim = claim;
    for (const auto& row : report.rows) {
        if (row.coset_rep == 1 || row.is_apn) continue;  // linear coset is not an instance
        const bool matches = kind == families::Claim::locally_apn ? row.is_locally_apn
                             : kind == families::Claim::bu2       ? row.bu == 2
                                                                  : row.is_zero_apn;
        if (!matches) continue;
        out.matching.push_back(row.coset_rep);
        for (const auto& name : row.matched_families)
            if (detail::family_has_claim(name, kind)) {
                out.explained.emplace(row.coset_rep, name);
                break;
            }
    }

    // reciprocity hop for the locally-APN claim
    if (kind == families::Claim::locally_apn && report.n >= 3) {
        for (const auto& [lhs, rhs] : families::blondeau_pairs(report.n)) {
            const long long rep = families::coset_rep(lhs, report.n);
            if (out.explained.count(rep)) continue;
            if (std::find(out.matching.begin(), out.matching.end(), rep) == out.matching.end())
                continue;
            const long long partner = families::coset_rep(rhs, report.n);
            const ClassificationRecord* prow = detail::find_row(report, partner);
            if (prow == nullptr) continue;
            bool partner_ok = prow->is_apn;
            for (const auto& name : prow->matched_families)
                partner_ok = partner_ok || detail::family_has_claim(name, kind);
            if (partner_ok)
                out.explained.emplace(rep, "reciprocal of " + std::to_string(partner));
        }
    }

    for (long long rep : out.matching)
        if (!out.explained.count(rep)) out.unexplained.push_back(rep);
    return out;
}

inline ScanReport scan(int n, bool with_bu, unsigned threads = 0) {
    if (n < min_degree) throw std::invalid_argument("scan requires n >= 2");
    if (with_bu && n > scan_degree_limit_bu)
        throw budget_error("scan with the boomerang pass supports n <= 12; rerun without --bu");
    if (n > scan_degree_limit)
        throw budget_error("scan supports n <= 14");

    const Field f = make_field(n);
    const auto reps = coset_reps(n);

    ScanReport report;
    report.n = n;
    report.with_bu = with_bu;
    report.rows.resize(reps.size());

    const unsigned workers =
        std::min<std::size_t>(detail::resolve_workers(threads), reps.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < reps.size(); i = next.fetch_add(1))
            report.rows[i] = classify(f, reps[i], with_bu, 1);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    auto& s = report.summary;
    s.cosets = (long long)report.rows.size();
    if (with_bu) s.bu2_not_apn = 0;
    for (const auto& row : report.rows) {
        s.apn += row.is_apn;
        s.locally_apn += row.is_locally_apn;
        s.zero_apn += row.is_zero_apn;
        s.permutation += row.is_permutation;
        s.locally_apn_not_apn += row.is_locally_apn && !row.is_apn;
        s.zero_apn_not_apn += row.is_zero_apn && !row.is_apn;
        if (with_bu && row.bu == 2 && !row.is_apn) ++*s.bu2_not_apn;
    }

    for (const char* claim : {"locally_apn_not_apn", "zero_apn_not_apn"})
        report.unexplained[claim] = coverage(report, claim).unexplained;
    if (with_bu) report.unexplained["bu2_not_apn"] = coverage(report, "bu2_not_apn").unexplained;
    return report;
}

// --- serialization ---

inline void to_json(nlohmann::json& j, const ClassificationRecord& r) {
    j = {{"rep", r.coset_rep},   {"coset_size", r.coset_size},
         {"du", r.du},           {"bu", nullptr},
         {"apn", r.is_apn},      {"locally_apn", r.is_locally_apn},
         {"zero_apn", r.is_zero_apn}, {"permutation", r.is_permutation},
         {"families", r.matched_families}};
    if (r.bu) j["bu"] = *r.bu;
}

inline void to_json(nlohmann::json& j, const ScanSummary& s) {
    j = {{"cosets", s.cosets},
         {"apn", s.apn},
         {"locally_apn", s.locally_apn},
         {"zero_apn", s.zero_apn},
         {"permutation", s.permutation},
         {"locally_apn_not_apn", s.locally_apn_not_apn},
         {"zero_apn_not_apn", s.zero_apn_not_apn},
         {"bu2_not_apn", nullptr}};
    if (s.bu2_not_apn) j["bu2_not_apn"] = *s.bu2_not_apn;
}

inline void to_json(nlohmann::json& j, const ScanReport& r) {
    j = {{"schema_version", r.schema_version},
         {"n", r.n},
         {"with_bu", r.with_bu},
         {"rows", r.rows},
         {"summary", r.summary},
         {"unexplained", r.unexplained}};
}

inline ScanReport report_from_json(const nlohmann::json& j) {
    ScanReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.n = j.at("n").get<int>();
    r.with_bu = j.at("with_bu").get<bool>();
    for (const auto& row : j.at("rows")) {
        ClassificationRecord rec;
        rec.n = r.n;
        rec.coset_rep = row.at("rep").get<long long>();
        rec.d = rec.coset_rep;
        rec.coset_size = row.at("coset_size").get<int>();
        rec.du = row.at("du").get<int>();
        if (!row.at("bu").is_null()) rec.bu = row.at("bu").get<std::int64_t>();
        rec.is_apn = row.at("apn").get<bool>();
        rec.is_locally_apn = row.at("locally_apn").get<bool>();
        rec.is_zero_apn = row.at("zero_apn").get<bool>();
        rec.is_permutation = row.at("permutation").get<bool>();
        rec.matched_families = row.at("families").get<std::vector<std::string>>();
        r.rows.push_back(std::move(rec));
    }
    const auto& s = j.at("summary");
    r.summary.cosets = s.at("cosets").get<long long>();
    r.summary.apn = s.at("apn").get<long long>();
    r.summary.locally_apn = s.at("locally_apn").get<long long>();
    r.summary.zero_apn = s.at("zero_apn").get<long long>();
    r.summary.permutation = s.at("permutation").get<long long>();
    r.summary.locally_apn_not_apn = s.at("locally_apn_not_apn").get<long long>();
    r.summary.zero_apn_not_apn = s.at("zero_apn_not_apn").get<long long>();
    if (!s.at("bu2_not_apn").is_null())
        r.summary.bu2_not_apn = s.at("bu2_not_apn").get<long long>();
    r.unexplained =
        j.at("unexplained").get<std::map<std::string, std::vector<long long>>>();
    return r;
}

inline std::string to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "rep,coset_size,du,bu,apn,locally_apn,zero_apn,permutation,families\n";
    for (const auto& row : r.rows) {
        out << row.coset_rep << ',' << row.coset_size << ',' << row.du << ',';
        if (row.bu) out << *row.bu;
        out << ',' << int(row.is_apn) << ',' << int(row.is_locally_apn) << ','
            << int(row.is_zero_apn) << ',' << int(row.is_permutation) << ',';
        for (std::size_t i = 0; i < row.matched_families.size(); ++i) {
            if (i) out << '|';
            out << row.matched_families[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace apnlike
