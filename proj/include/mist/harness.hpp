#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mist/bigint.hpp"
#include "mist/canonical.hpp"
#include "mist/forest_cache.hpp"

namespace mist {

struct ScanOptions {
    int jobs = 0;  // 0: all hardware threads; 1: the serial reference path
    int cap = kDefaultOrderCap;
    std::optional<std::filesystem::path> cache_dir;
};

// Extremes of the m.i.s. count over one list of trees. The kernel of every
// verification run: counting is fanned out across trees, the reduction is
// order-independent, and index lists come back sorted, so results do not
// depend on scheduling.
struct BucketExtremes {
    Count min, max;
    std::vector<std::size_t> argmin, argmax;  // indices into the bucket, ascending
};

BucketExtremes scan_bucket(std::span<const Tree> trees, int jobs = 0);
BucketExtremes scan_bucket_serial(std::span<const Tree> trees);  // reference implementation

// Exact extremes over every tree with n vertices and diameter d.
struct ExtremalRecord {
    int n = 0, d = 0;
    std::uint64_t tree_count = 0;
    Count min_count, max_count;
    std::vector<CanonKey> argmin_keys, argmax_keys;  // sorted
};

ExtremalRecord extremal_scan(int n, int d, const ScanOptions& options = {});

// One verdict per (n, d) class. Field meanings:
//   min_ok:  observed minimum equals psi(d+1) and the minimizer classes are
//            exactly the double brooms (d >= 3); minimum equals 2 below that.
//   max_ok:  observed maximum equals big_m(n, d) (d >= 4) or the constants
//            2, 2, 3 for d = 1, 2, 3 (with min = max = 3 at d = 3).
//   lemma2_ok: no maximizer has a vertex with two or more leaf neighbors
//            (d >= 4; vacuously true below).
//   candidates_hit: at least one candidate family attains the maximum.
struct VerificationRow {
    int n = 0, d = 0;
    std::uint64_t tree_count = 0;
    Count min_mis, max_mis;
    std::optional<Count> psi_expected;
    std::optional<Count> m_expected;
    bool min_ok = false;
    bool max_ok = false;
    std::size_t argmin_count = 0, argmax_count = 0;
    bool lemma2_ok = true;
    bool candidates_hit = false;
    std::vector<std::string> hit_families;
};

struct VerificationReport {
    std::string kind;
    int n_max = 0;
    int d_min = 1;
    std::vector<VerificationRow> rows;  // sorted by (n, d)
    bool pass = false;
    double elapsed_seconds = 0.0;
    std::string tool_version;
};

struct VerifyOptions : ScanOptions {
    // Test hooks: replace the expected extremes to fault-inject a failing run.
    std::function<Count(int n, int d)> expected_min_override;
    std::function<Count(int n, int d)> expected_max_override;
};

// Lower bound: for every 3 <= d < n <= n_max, the enumerated minimum equals
// psi(d+1) and the minimizer key set equals the double-broom key set.
// Failures become report rows, never exceptions.
VerificationReport verify_min_theorem(int n_max, const VerifyOptions& options = {});

// Upper bound: for every 1 <= d < n <= n_max, the enumerated maximum equals
// its closed form, maximizers pass the structural law, and candidate-family
// hits are recorded.
VerificationReport verify_max_theorem(int n_max, const VerifyOptions& options = {});

// Closed-form comparisons only (no enumeration): monotonicity and equality
// cases of big_m in d, plus the windowed argmax/max case analysis.
struct LemmaCheck {
    std::string name;
    std::uint64_t cases_checked = 0;
    std::vector<std::string> violations;
};

struct LemmaReport {
    int n_limit = 0;
    std::vector<LemmaCheck> checks;
    bool pass = false;
    double elapsed_seconds = 0.0;
    std::string tool_version;
};

LemmaReport verify_m_lemmas(int n_limit);

void write_report_csv(const VerificationReport& report, std::ostream& out);
void write_report_json(const VerificationReport& report, std::ostream& out);
void write_report_csv(const LemmaReport& report, std::ostream& out);
void write_report_json(const LemmaReport& report, std::ostream& out);

enum class Extreme { kMin, kMax };

// Writes the argmin or argmax trees as graph6 lines sorted by canonical key;
// returns how many lines were written.
std::size_t export_extremal(int n, int d, Extreme which,
                            const std::filesystem::path& destination,
                            const ScanOptions& options = {});

}  // namespace mist
