#include "mist/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "mist/formulas.hpp"
#include "mist/graph6.hpp"
#include "mist/mis.hpp"
#include "mist/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mist {

namespace {

using nlohmann::json;
using steady = std::chrono::steady_clock;

double seconds_since(steady::time_point start) {
    return std::chrono::duration<double>(steady::now() - start).count();
}

void track_extreme(const Count& value, std::size_t index, Count& best,
                   std::vector<std::size_t>& at, bool want_min) {
    if (at.empty() || (want_min ? value < best : value > best)) {
        best = value;
        at.assign(1, index);
    } else if (value == best) {
        at.push_back(index);
    }
}

#ifdef _OPENMP
BucketExtremes scan_bucket_parallel(std::span<const Tree> trees, int jobs) {
    std::vector<BucketExtremes> locals(jobs);
    #pragma omp parallel num_threads(jobs)
    {
        BucketExtremes& mine = locals[omp_get_thread_num()];
        #pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(trees.size()); ++i) {
            const Count value = count_mis(trees[i]);
            track_extreme(value, static_cast<std::size_t>(i), mine.min, mine.argmin, true);
            track_extreme(value, static_cast<std::size_t>(i), mine.max, mine.argmax, false);
        }
    }
    BucketExtremes out;
    for (BucketExtremes& local : locals) {
        if (local.argmin.empty()) {
            continue;
        }
        if (out.argmin.empty() || local.min < out.min) {
            out.min = local.min;
            out.argmin.clear();
        }
        if (local.min == out.min) {
            out.argmin.insert(out.argmin.end(), local.argmin.begin(), local.argmin.end());
        }
        if (out.argmax.empty() || local.max > out.max) {
            out.max = local.max;
            out.argmax.clear();
        }
        if (local.max == out.max) {
            out.argmax.insert(out.argmax.end(), local.argmax.begin(), local.argmax.end());
        }
    }
    std::sort(out.argmin.begin(), out.argmin.end());
    std::sort(out.argmax.begin(), out.argmax.end());
    return out;
}
#endif

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs <= 0 ? omp_get_max_threads() : jobs;
#else
    (void)jobs;
    return 1;
#endif
}

DiameterBuckets fetch_buckets(int n, const ScanOptions& options) {
    if (options.cache_dir) {
        return load_buckets(*options.cache_dir, n, options.cap);
    }
    return enumerate_buckets(n, options.cap);
}

std::vector<CanonKey> sorted_keys(const std::vector<Tree>& bucket,
                                  const std::vector<std::size_t>& indices) {
    std::vector<CanonKey> keys;
    keys.reserve(indices.size());
    for (std::size_t i : indices) {
        keys.push_back(canonical_key(bucket[i]));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

VerificationRow build_row(int n, int d, const std::vector<Tree>& bucket,
                          const VerifyOptions& options) {
    VerificationRow row;
    row.n = n;
    row.d = d;
    row.tree_count = bucket.size();
    const BucketExtremes extremes = scan_bucket(bucket, options.jobs);
    row.min_mis = extremes.min;
    row.max_mis = extremes.max;
    const std::vector<CanonKey> argmin_keys = sorted_keys(bucket, extremes.argmin);
    const std::vector<CanonKey> argmax_keys = sorted_keys(bucket, extremes.argmax);
    row.argmin_count = argmin_keys.size();
    row.argmax_count = argmax_keys.size();

    if (d >= 3) {
        Count expected_min =
            options.expected_min_override ? options.expected_min_override(n, d) : psi(d + 1);
        std::vector<CanonKey> family_keys;
        for (const Tree& t : minimizer_family(n, d)) {
            family_keys.push_back(canonical_key(t));
        }
        std::sort(family_keys.begin(), family_keys.end());
        row.min_ok = row.min_mis == expected_min && argmin_keys == family_keys;
        row.psi_expected = std::move(expected_min);
    } else {
        row.min_ok = row.min_mis == Count(2);
    }

    Count expected_max;
    if (d >= 4) {
        expected_max =
            options.expected_max_override ? options.expected_max_override(n, d) : big_m(n, d);
    } else {
        expected_max = Count(d == 3 ? 3 : 2);
    }
    row.max_ok = row.max_mis == expected_max;
    if (d == 3) {
        row.max_ok = row.max_ok && row.min_mis == Count(3);
    }
    row.m_expected = std::move(expected_max);

    if (d >= 4) {
        for (std::size_t i : extremes.argmax) {
            if (has_double_leaf_neighbor(bucket[i])) {
                row.lemma2_ok = false;
                break;
            }
        }
        const std::unordered_set<CanonKey> argmax_set(argmax_keys.begin(), argmax_keys.end());
        std::set<std::string> hits;
        for (const MaximizerCandidate& candidate : candidate_maximizers(n, d)) {
            if (argmax_set.contains(canonical_key(candidate.tree))) {
                hits.insert(family_name(candidate.family));
            }
        }
        row.hit_families.assign(hits.begin(), hits.end());
        row.candidates_hit = !row.hit_families.empty();
    }
    return row;
}

VerificationReport run_verification(const char* kind, int n_max, int d_min,
                                    const VerifyOptions& options,
                                    bool (*row_passes)(const VerificationRow&)) {
    const auto start = steady::now();
    VerificationReport report;
    report.kind = kind;
    report.n_max = n_max;
    report.d_min = d_min;
    report.tool_version = kToolVersion;
    if (n_max > options.cap) {
        throw std::invalid_argument(std::string(kind) + ": n_max exceeds the enumeration cap");
    }
    bool pass = true;
    for (int n = 2; n <= n_max; ++n) {
        const DiameterBuckets buckets = fetch_buckets(n, options);
        for (const auto& [d, bucket] : buckets.by_diameter) {
            if (d < d_min || bucket.empty()) {
                continue;
            }
            VerificationRow row = build_row(n, d, bucket, options);
            pass = pass && row_passes(row);
            report.rows.push_back(std::move(row));
        }
    }
    report.pass = pass;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::string csv_bool(bool value) {
    return value ? "true" : "false";
}

std::string csv_count(const std::optional<Count>& value) {
    return value ? value->to_decimal() : std::string();
}

}  // namespace

BucketExtremes scan_bucket_serial(std::span<const Tree> trees) {
    BucketExtremes out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const Count value = count_mis(trees[i]);
        track_extreme(value, i, out.min, out.argmin, true);
        track_extreme(value, i, out.max, out.argmax, false);
    }
    return out;
}

BucketExtremes scan_bucket(std::span<const Tree> trees, int jobs) {
    jobs = resolve_jobs(jobs);
#ifdef _OPENMP
    if (jobs > 1 && trees.size() > 1) {
        return scan_bucket_parallel(trees, jobs);
    }
#endif
    return scan_bucket_serial(trees);
}

ExtremalRecord extremal_scan(int n, int d, const ScanOptions& options) {
    if (n < 1 || d < 1 || d >= n || n > options.cap) {
        throw std::invalid_argument("extremal_scan: need 1 <= d < n <= cap");
    }
    const DiameterBuckets buckets = fetch_buckets(n, options);
    static const std::vector<Tree> kEmpty;
    const auto it = buckets.by_diameter.find(d);
    const std::vector<Tree>& bucket = it == buckets.by_diameter.end() ? kEmpty : it->second;
    ExtremalRecord record;
    record.n = n;
    record.d = d;
    record.tree_count = bucket.size();
    if (!bucket.empty()) {
        const BucketExtremes extremes = scan_bucket(bucket, options.jobs);
        record.min_count = extremes.min;
        record.max_count = extremes.max;
        record.argmin_keys = sorted_keys(bucket, extremes.argmin);
        record.argmax_keys = sorted_keys(bucket, extremes.argmax);
    }
    return record;
}

VerificationReport verify_min_theorem(int n_max, const VerifyOptions& options) {
    return run_verification("verify-min", n_max, 3, options,
                            [](const VerificationRow& row) { return row.min_ok; });
}

VerificationReport verify_max_theorem(int n_max, const VerifyOptions& options) {
    return run_verification("verify-max", n_max, 1, options, [](const VerificationRow& row) {
        return row.max_ok && row.lemma2_ok;
    });
}

LemmaReport verify_m_lemmas(int n_limit) {
    if (n_limit < 8) {
        throw std::invalid_argument("verify_m_lemmas: need n_limit >= 8");
    }
    const auto start = steady::now();
    LemmaReport report;
    report.n_limit = n_limit;
    report.tool_version = kToolVersion;

    std::vector<std::vector<Count>> m_table(n_limit + 1);
    for (int n = 5; n <= n_limit; ++n) {
        m_table[n].resize(n);
        for (int d = 4; d <= n - 1; ++d) {
            m_table[n][d] = big_m(n, d);
        }
    }
    auto spot = [](int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); };

    LemmaCheck drop_odd{"max_drop_when_gap_odd", 0, {}};
    LemmaCheck rise_even{"max_rise_when_gap_even", 0, {}};
    LemmaCheck two_step{"two_step_monotone", 0, {}};
    for (int n = 6; n <= n_limit; ++n) {
        for (int d = 4; d <= n - 2; ++d) {
            const int gap = n - d;
            if (gap % 2 == 1 && gap >= 3) {
                ++drop_odd.cases_checked;
                if (!(m_table[n][d] > m_table[n][d + 1])) {
                    drop_odd.violations.push_back(spot(n, d) + ": no strict drop");
                }
            }
            if (gap % 2 == 0) {
                ++rise_even.cases_checked;
                if (m_table[n][d] > m_table[n][d + 1]) {
                    rise_even.violations.push_back(spot(n, d) + ": value decreased");
                } else if ((m_table[n][d] == m_table[n][d + 1]) != (d == 4)) {
                    rise_even.violations.push_back(spot(n, d) + ": equality case mismatch");
                }
            }
            if (d + 2 <= n - 1) {
                ++two_step.cases_checked;
                if (m_table[n][d] < m_table[n][d + 2]) {
                    two_step.violations.push_back(spot(n, d) + ": two-step increase");
                } else if ((m_table[n][d] == m_table[n][d + 2]) !=
                           (d == 5 && n % 2 == 0)) {
                    two_step.violations.push_back(spot(n, d) + ": equality case mismatch");
                }
            }
        }
    }

    LemmaCheck argmax_cases{"argmax_window_cases", 0, {}};
    LemmaCheck window_max{"window_max_formula", 0, {}};
    for (int n = 6; n <= n_limit; ++n) {
        for (int d_lo = 4; d_lo <= n - 2; ++d_lo) {
            Count best;
            std::set<int> best_at;
            for (int d_hi = d_lo; d_hi <= n - 1; ++d_hi) {
                const Count& value = m_table[n][d_hi];
                if (best_at.empty() || value > best) {
                    best = value;
                    best_at = {d_hi};
                } else if (value == best) {
                    best_at.insert(d_hi);
                }
                if (d_hi == d_lo) {
                    continue;
                }
                ++argmax_cases.cases_checked;
                std::set<int> expected;
                if (d_lo >= 5 && (n - d_lo) % 2 == 0) {
                    expected = {d_lo + 1};
                } else if (d_lo <= 5 && n % 2 == 0) {
                    for (int x : {4, 5, 7}) {
                        if (d_lo <= x && x <= d_hi) {
                            expected.insert(x);
                        }
                    }
                } else {
                    expected = {d_lo};
                }
                if (best_at != expected) {
                    argmax_cases.violations.push_back(spot(n, d_lo) + " dhi=" +
                                                      std::to_string(d_hi) + ": argmax mismatch");
                }
                ++window_max.cases_checked;
                const Count& predicted =
                    (n - d_lo) % 2 == 0 ? m_table[n][d_lo + 1] : m_table[n][d_lo];
                if (best != predicted) {
                    window_max.violations.push_back(spot(n, d_lo) + " dhi=" +
                                                    std::to_string(d_hi) + ": max mismatch");
                }
            }
        }
    }

    LemmaCheck cap4{"diameter4_dominates", 0, {}};
    for (int n = 6; n <= n_limit; ++n) {
        Count suffix_max;
        for (int d = n - 1; d >= 4; --d) {
            if (d == n - 1 || m_table[n][d] > suffix_max) {
                suffix_max = m_table[n][d];
            }
            ++cap4.cases_checked;
            if (suffix_max > m_table[n][4]) {
                cap4.violations.push_back(spot(n, d) + ": suffix max exceeds the d=4 value");
            }
        }
    }

    report.checks = {std::move(drop_odd), std::move(rise_even), std::move(two_step),
                     std::move(argmax_cases), std::move(window_max), std::move(cap4)};
    report.pass = true;
    for (const LemmaCheck& check : report.checks) {
        report.pass = report.pass && check.violations.empty();
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

void write_report_csv(const VerificationReport& report, std::ostream& out) {
    out << "n,d,tree_count,min_mis,max_mis,psi_expected,m_expected,min_ok,max_ok,"
           "argmin_count,argmax_count,lemma2_ok,candidates_hit\n";
    for (const VerificationRow& row : report.rows) {
        out << row.n << ',' << row.d << ',' << row.tree_count << ','
            << row.min_mis.to_decimal() << ',' << row.max_mis.to_decimal() << ','
            << csv_count(row.psi_expected) << ',' << csv_count(row.m_expected) << ','
            << csv_bool(row.min_ok) << ',' << csv_bool(row.max_ok) << ',' << row.argmin_count
            << ',' << row.argmax_count << ',' << csv_bool(row.lemma2_ok) << ','
            << csv_bool(row.candidates_hit) << '\n';
    }
}

void write_report_json(const VerificationReport& report, std::ostream& out) {
    json rows = json::array();
    for (const VerificationRow& row : report.rows) {
        json r = {
            {"n", row.n},
            {"d", row.d},
            {"tree_count", row.tree_count},
            {"min_mis", row.min_mis.to_decimal()},
            {"max_mis", row.max_mis.to_decimal()},
            {"psi_expected", row.psi_expected ? json(row.psi_expected->to_decimal()) : json()},
            {"m_expected", row.m_expected ? json(row.m_expected->to_decimal()) : json()},
            {"min_ok", row.min_ok},
            {"max_ok", row.max_ok},
            {"argmin_count", row.argmin_count},
            {"argmax_count", row.argmax_count},
            {"lemma2_ok", row.lemma2_ok},
            {"candidates_hit", row.candidates_hit},
            {"hit_families", row.hit_families},
        };
        rows.push_back(std::move(r));
    }
    json doc = {
        {"kind", report.kind},
        {"tool_version", report.tool_version},
        {"scope", {{"n_max", report.n_max}, {"d_min", report.d_min}}},
        {"pass", report.pass},
        {"elapsed_seconds", report.elapsed_seconds},
        {"rows", std::move(rows)},
    };
    out << doc.dump(2) << '\n';
}

void write_report_csv(const LemmaReport& report, std::ostream& out) {
    out << "check,cases_checked,violations,pass\n";
    for (const LemmaCheck& check : report.checks) {
        out << check.name << ',' << check.cases_checked << ',' << check.violations.size() << ','
            << csv_bool(check.violations.empty()) << '\n';
    }
}

void write_report_json(const LemmaReport& report, std::ostream& out) {
    json checks = json::array();
    for (const LemmaCheck& check : report.checks) {
        checks.push_back({{"name", check.name},
                          {"cases_checked", check.cases_checked},
                          {"violations", check.violations},
                          {"pass", check.violations.empty()}});
    }
    json doc = {
        {"kind", "verify-lemmas"},
        {"tool_version", report.tool_version},
        {"scope", {{"n_limit", report.n_limit}}},
        {"pass", report.pass},
        {"elapsed_seconds", report.elapsed_seconds},
        {"checks", std::move(checks)},
    };
    out << doc.dump(2) << '\n';
}

std::size_t export_extremal(int n, int d, Extreme which,
                            const std::filesystem::path& destination,
                            const ScanOptions& options) {
    if (n < 1 || d < 1 || d >= n || n > options.cap) {
        throw std::invalid_argument("export_extremal: need 1 <= d < n <= cap");
    }
    const DiameterBuckets buckets = fetch_buckets(n, options);
    const auto it = buckets.by_diameter.find(d);
    std::vector<std::pair<CanonKey, std::string>> lines;
    if (it != buckets.by_diameter.end() && !it->second.empty()) {
        const std::vector<Tree>& bucket = it->second;
        const BucketExtremes extremes = scan_bucket(bucket, options.jobs);
        const auto& indices = which == Extreme::kMin ? extremes.argmin : extremes.argmax;
        for (std::size_t i : indices) {
            lines.emplace_back(canonical_key(bucket[i]), graph6_encode(bucket[i]));
        }
        std::sort(lines.begin(), lines.end());
    }
    std::ofstream out(destination, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("export_extremal: cannot write " + destination.string());
    }
    for (const auto& [key, line] : lines) {
        out << line << '\n';
    }
    out.close();
    if (!out) {
        throw std::runtime_error("export_extremal: short write to " + destination.string());
    }
    return lines.size();
}

}  // namespace mist
