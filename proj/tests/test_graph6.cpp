#include <doctest.h>

#include <stdexcept>

#include <random>

#include "mist/canonical.hpp"
#include "mist/formulas.hpp"
#include "mist/graph6.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mist;
using namespace mist::test;

TEST_CASE("frozen encodings") {
    CHECK(graph6_encode(make_path(4)) == "Ch");
    CHECK(graph6_encode(make_path(7)) == "FhCGG");
    CHECK(graph6_encode(make_path(1)) == "@");

    const Tree decoded = graph6_decode("Ch");
    CHECK(decoded.adj == make_path(4).adj);
    CHECK(graph6_decode("FhCGG").adj == make_path(7).adj);
    CHECK(graph6_decode("@").n == 1);
}

TEST_CASE("round trip over enumerated and random trees") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            const Tree back = graph6_decode(graph6_encode(t));
            CHECK(back.n == t.n);
            CHECK(back.adj == t.adj);
        }
    }
    std::mt19937 rng(99);
    for (int round = 0; round < 100; ++round) {
        const Tree t = random_tree(11 + round % 10, rng);
        CHECK(graph6_decode(graph6_encode(t)).adj == t.adj);
    }
}

TEST_CASE("encode rejects orders beyond the short form") {
    CHECK_THROWS_AS(graph6_encode(construct_b(2, 31, 31)), std::invalid_argument);  // n = 63
    CHECK(graph6_encode(construct_b(2, 31, 30)).size() > 1);                        // n = 62 fits
}

TEST_CASE("decode rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("C"), std::invalid_argument);      // truncated
    CHECK_THROWS_AS(graph6_decode("Chh"), std::invalid_argument);    // too long
    CHECK_THROWS_AS(graph6_decode("C h"), std::invalid_argument);    // char below 63
    CHECK_THROWS_AS(graph6_decode("?"), std::invalid_argument);      // order 0
    CHECK_THROWS_AS(graph6_decode("Bw"), std::invalid_argument);     // triangle, not a tree
    CHECK_THROWS_AS(graph6_decode("C`"), std::invalid_argument);     // disconnected
    CHECK_THROWS_AS(graph6_decode("Bh"), std::invalid_argument);     // nonzero padding
    CHECK(graph6_decode("Bg").adj == make_path(3).adj);              // same bits, clean padding
}

TEST_CASE("random byte strings either decode to a valid tree or throw") {
    std::mt19937 rng(2025);
    int decoded = 0;
    for (int round = 0; round < 20000; ++round) {
        std::string line(1 + rng() % 8, '\0');
        for (char& c : line) {
            c = static_cast<char>(rng() % 96 + 32);  // printable-ish, includes bad bytes
        }
        try {
            const Tree t = graph6_decode(line);
            CHECK(is_valid_tree(t));
            ++decoded;
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(decoded > 0);  // some short strings are honest trees
}

TEST_CASE("decoding is label-exact, not just isomorphism-exact") {
    const Tree star = make_star(4);
    const Tree back = graph6_decode(graph6_encode(star));
    CHECK(back.adj == star.adj);
    CHECK(canonical_key(back) == canonical_key(star));
}
