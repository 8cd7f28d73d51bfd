#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mist/formulas.hpp"
#include "mist/graph6.hpp"
#include "mist/harness.hpp"
#include "mist/mis.hpp"
#include "test_support.hpp"

using namespace mist;
using namespace mist::test;
namespace fs = std::filesystem;

namespace {

fs::path fresh_temp_dir(const char* tag) {
    static std::mt19937_64 rng(std::random_device{}());
    fs::path dir =
        fs::temp_directory_path() / ("mist-test-" + std::string(tag) + "-" + std::to_string(rng()));
    fs::create_directories(dir);
    return dir;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag) : path(fresh_temp_dir(tag)) {}
    ~TempDir() { fs::remove_all(path); }
};

std::string csv_of(const VerificationReport& report) {
    std::ostringstream out;
    write_report_csv(report, out);
    return out.str();
}

}  // namespace

TEST_CASE("parallel scan kernel agrees with the serial reference") {
    for (int n = 2; n <= 10; ++n) {
        const auto buckets = enumerate_buckets(n);
        for (const auto& [d, bucket] : buckets.by_diameter) {
            const BucketExtremes serial = scan_bucket_serial(bucket);
            const BucketExtremes parallel = scan_bucket(bucket, 4);
            CHECK(serial.min == parallel.min);
            CHECK(serial.max == parallel.max);
            CHECK(serial.argmin == parallel.argmin);
            CHECK(serial.argmax == parallel.argmax);
        }
    }
}

TEST_CASE("extremal scan on known classes") {
    const ExtremalRecord r96 = extremal_scan(9, 6);
    CHECK(r96.tree_count > 0);
    CHECK(r96.min_count == Count(7));
    CHECK(r96.max_count == Count(13));
    REQUIRE(r96.argmin_keys.size() == 2);
    std::vector<CanonKey> family_keys = {canonical_key(construct_b(6, 1, 3)),
                                         canonical_key(construct_b(6, 2, 2))};
    std::sort(family_keys.begin(), family_keys.end());
    CHECK(r96.argmin_keys == family_keys);

    const ExtremalRecord r63 = extremal_scan(6, 3);
    CHECK(r63.min_count == Count(3));
    CHECK(r63.max_count == Count(3));

    const ExtremalRecord r87 = extremal_scan(8, 7);
    CHECK(r87.tree_count == 1);
    CHECK(r87.min_count == psi(8));
    CHECK(r87.max_count == psi(8));

    CHECK_THROWS_AS(extremal_scan(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(extremal_scan(17, 4), std::invalid_argument);
}

TEST_CASE("verify-min passes at desk scale and rows carry the family sizes") {
    const VerificationReport report = verify_min_theorem(12);
    CHECK(report.pass);
    CHECK(report.kind == "verify-min");
    std::size_t expected_rows = 0;
    for (int n = 4; n <= 12; ++n) {
        expected_rows += static_cast<std::size_t>(n - 3);
    }
    CHECK(report.rows.size() == expected_rows);
    for (const VerificationRow& row : report.rows) {
        CHECK(row.min_ok);
        if (row.n == 9 && row.d == 6) {
            CHECK(row.argmin_count == 2);
            CHECK(row.min_mis == Count(7));
        }
    }
}

TEST_CASE("fault-injected expectations fail every row") {
    VerifyOptions options;
    options.expected_min_override = [](int, int d) { return psi(d + 1) + Count(1); };
    const VerificationReport report = verify_min_theorem(9, options);
    CHECK_FALSE(report.pass);
    for (const VerificationRow& row : report.rows) {
        CHECK_FALSE(row.min_ok);
    }

    VerifyOptions max_options;
    max_options.expected_max_override = [](int, int) { return Count(1); };
    const VerificationReport max_report = verify_max_theorem(9, max_options);
    CHECK_FALSE(max_report.pass);
}

TEST_CASE("verify-max passes at desk scale with the structural law") {
    const VerificationReport report = verify_max_theorem(12);
    CHECK(report.pass);
    for (const VerificationRow& row : report.rows) {
        CHECK(row.max_ok);
        CHECK(row.lemma2_ok);
        if (row.n == 9 && row.d == 4) {
            CHECK(row.max_mis == Count(16));
            CHECK(row.candidates_hit);
        }
        if (row.n == 10 && row.d == 4) {
            CHECK(row.candidates_hit);
        }
        if (row.n == 8 && row.d == 6) {
            CHECK(row.max_mis == Count(8));
        }
        if (row.d == 3) {
            CHECK(row.min_mis == Count(3));
            CHECK(row.max_mis == Count(3));
        }
    }
}

TEST_CASE("closed-form lemma checks pass and count their cases") {
    const LemmaReport report = verify_m_lemmas(60);
    CHECK(report.pass);
    REQUIRE(report.checks.size() == 6);
    for (const LemmaCheck& check : report.checks) {
        CHECK(check.cases_checked > 0);
        CHECK(check.violations.empty());
    }
    CHECK_THROWS_AS(verify_m_lemmas(7), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::string first = csv_of(verify_max_theorem(10));
    const std::string second = csv_of(verify_max_theorem(10));
    CHECK(first == second);
    CHECK(first.find("n,d,tree_count,min_mis,max_mis,psi_expected,m_expected,min_ok,max_ok,"
                     "argmin_count,argmax_count,lemma2_ok,candidates_hit") == 0);
}

TEST_CASE("report JSON carries the same verdicts") {
    const VerificationReport report = verify_max_theorem(8);
    std::ostringstream out;
    write_report_json(report, out);
    const std::string text = out.str();
    CHECK(text.find("\"kind\": \"verify-max\"") != std::string::npos);
    CHECK(text.find("\"pass\": true") != std::string::npos);

    const LemmaReport lemmas = verify_m_lemmas(20);
    std::ostringstream out2;
    write_report_json(lemmas, out2);
    CHECK(out2.str().find("\"verify-lemmas\"") != std::string::npos);
}

TEST_CASE("cold and warm cache scans agree") {
    TempDir cache("cache");
    VerifyOptions cached;
    cached.cache_dir = cache.path;
    const std::string cold = csv_of(verify_max_theorem(9, cached));
    const std::string warm = csv_of(verify_max_theorem(9, cached));
    const std::string uncached = csv_of(verify_max_theorem(9));
    CHECK(cold == warm);
    CHECK(cold == uncached);
    CHECK(fs::exists(cache.path / "n9" / "manifest.json"));

    const DiameterBuckets direct = enumerate_buckets(9);
    const DiameterBuckets loaded = load_buckets(cache.path, 9);
    REQUIRE(direct.by_diameter.size() == loaded.by_diameter.size());
    for (const auto& [d, bucket] : direct.by_diameter) {
        REQUIRE(loaded.by_diameter.contains(d));
        CHECK(loaded.by_diameter.at(d).size() == bucket.size());
    }
}

TEST_CASE("a stale manifest triggers regeneration, not failure") {
    TempDir cache("stale");
    load_buckets(cache.path, 7);
    std::ofstream(cache.path / "n7" / "manifest.json") << "{\"format\": 999}";
    const DiameterBuckets reloaded = load_buckets(cache.path, 7);
    CHECK(reloaded.total() == 11);
}

TEST_CASE("a corrupted bucket file triggers regeneration, not failure") {
    TempDir cache("corrupt");
    const DiameterBuckets fresh = load_buckets(cache.path, 8);
    std::ofstream(cache.path / "n8" / "d4.g6") << "not graph6 at all\n";
    const DiameterBuckets reloaded = load_buckets(cache.path, 8);
    CHECK(reloaded.total() == fresh.total());
    CHECK(reloaded.by_diameter.at(4).size() == fresh.by_diameter.at(4).size());
    // and the repaired cache now loads clean
    CHECK(load_buckets(cache.path, 8).total() == fresh.total());
}

TEST_CASE("extremal export writes sorted graph6 lines") {
    TempDir dir("export");
    const fs::path out = dir.path / "min.g6";
    CHECK(export_extremal(9, 6, Extreme::kMin, out) == 2);

    std::ifstream in(out);
    std::string line;
    std::vector<Tree> trees;
    while (std::getline(in, line)) {
        trees.push_back(graph6_decode(line));
    }
    REQUIRE(trees.size() == 2);
    for (const Tree& t : trees) {
        CHECK(t.n == 9);
        CHECK(diameter(t) == 6);
        CHECK(count_mis(t) == Count(7));
    }

    const fs::path single = dir.path / "single.g6";
    CHECK(export_extremal(7, 6, Extreme::kMin, single) == 1);
    CHECK(export_extremal(8, 7, Extreme::kMax, dir.path / "path.g6") == 1);

    CHECK_THROWS_WITH_AS(export_extremal(7, 6, Extreme::kMin, dir.path / "missing" / "x.g6"),
                         doctest::Contains("missing"), std::runtime_error);
}
