#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "mist/canonical.hpp"
#include "mist/formulas.hpp"
#include "mist/mis.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mist;
using namespace mist::test;

TEST_CASE("counts on fixed shapes") {
    CHECK(count_mis(make_path(7)) == Count(7));
    CHECK(count_mis(make_star(4)) == Count(2));
    CHECK(count_mis(construct_b(6, 2, 2)) == Count(7));
    CHECK(count_mis(make_path(1)) == Count(1));
}

TEST_CASE("enumerate_mis lists exactly the maximal independent sets") {
    const auto p4_sets = enumerate_mis(make_path(4));
    const std::set<VertexSet> got(p4_sets.begin(), p4_sets.end());
    const std::set<VertexSet> want = {{0, 2}, {1, 3}, {0, 3}};
    CHECK(got == want);

    const auto p2_sets = enumerate_mis(make_path(2));
    CHECK(std::set<VertexSet>(p2_sets.begin(), p2_sets.end()) ==
          std::set<VertexSet>{{0}, {1}});

    const auto star_sets = enumerate_mis(make_star(3));
    CHECK(std::set<VertexSet>(star_sets.begin(), star_sets.end()) ==
          std::set<VertexSet>{{0}, {1, 2, 3}});
}

TEST_CASE("members of enumerate_mis are independent and maximal") {
    for (int n = 2; n <= 9; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            for (const VertexSet& members : enumerate_mis(t)) {
                std::vector<char> in(t.n, 0);
                for (int v : members) {
                    in[v] = 1;
                }
                for (int v : members) {
                    for (int u : t.adj[v]) {
                        CHECK_FALSE(in[u]);
                    }
                }
                for (int v = 0; v < t.n; ++v) {
                    if (in[v]) {
                        continue;
                    }
                    bool blocked = false;
                    for (int u : t.adj[v]) {
                        blocked = blocked || in[u];
                    }
                    CHECK(blocked);
                }
            }
        }
    }
}

TEST_CASE("enumeration length equals the counted value") {
    for (int n = 1; n <= 10; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            CHECK(Count(enumerate_mis(t).size()) == count_mis(t));
        }
    }
}

TEST_CASE("brute-force counter on fixed shapes") {
    CHECK(count_mis_bruteforce(make_path(5)) == Count(4));
    CHECK(count_mis_bruteforce(make_star(5)) == Count(2));
    CHECK(count_mis_bruteforce(make_path(1)) == Count(1));
}

TEST_CASE("subset-scan guard rejects large trees") {
    const Tree big = make_star(20);  // 21 vertices
    CHECK_THROWS_AS(enumerate_mis(big), std::invalid_argument);
    CHECK_THROWS_AS(count_mis_bruteforce(big), std::invalid_argument);
    CHECK(count_mis(big) == Count(2));  // the dynamic program has no such cap
}

TEST_CASE("dynamic program matches the brute-force oracle") {
    for (int n = 1; n <= 11; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            CHECK(count_mis(t) == count_mis_bruteforce(t));
        }
    }
    std::mt19937 rng(20250808);
    for (int round = 0; round < 60; ++round) {
        const Tree t = random_tree(12 + round % 7, rng);
        CHECK(count_mis(t) == count_mis_bruteforce(t));
    }
}

TEST_CASE("count is independent of the root") {
    for (int n = 1; n <= 9; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            const Count reference = count_mis(t);
            for (int root = 1; root < t.n; ++root) {
                CHECK(count_mis_rooted(t, root) == reference);
            }
        }
    }
    CHECK_THROWS_AS(count_mis_rooted(make_path(3), 3), std::invalid_argument);
}

TEST_CASE("path law: the path count is psi") {
    for (int n = 1; n <= 30; ++n) {
        CHECK(count_mis(make_path(n)) == psi(n));
    }
}

TEST_CASE("double-broom law: every B(d,p,q) counts like the path of its diameter") {
    for (int d = 2; d <= 12; ++d) {
        for (int p = 1; p <= 4; ++p) {
            for (int q = 1; q <= 4; ++q) {
                CHECK(count_mis(construct_b(d, p, q)) == psi(d + 1));
            }
        }
    }
}

TEST_CASE("diameter-class constants") {
    for (int n = 2; n <= 12; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            const int d = diameter(t);
            if (d == 1 || d == 2) {
                CHECK(count_mis(t) == Count(2));
            } else if (d == 3) {
                CHECK(count_mis(t) == Count(3));
            }
        }
    }
}

TEST_CASE("lower-bound law: no tree beats the path of its diameter") {
    for (int n = 4; n <= 13; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            const int d = diameter(t);
            if (d >= 3) {
                CHECK(count_mis(t) >= psi(d + 1));
            }
        }
    }
}

TEST_CASE("pruning duplicate leaves preserves the count") {
    for (int n = 2; n <= 11; ++n) {
        for (const Tree& t : all_free_trees(n)) {
            const Tree pruned = prune_duplicate_leaves(t);
            CHECK(is_valid_tree(pruned));
            CHECK(count_mis(pruned) == count_mis(t));
            if (diameter(t) >= 3) {
                CHECK(diameter(pruned) == diameter(t));
            }
            CHECK_FALSE(has_double_leaf_neighbor(pruned));
        }
    }
}

TEST_CASE("pruning on fixed shapes") {
    const Tree from_star = prune_duplicate_leaves(make_star(3));
    CHECK(from_star.n == 2);  // stars may shrink below diameter 2

    const Tree from_broom = prune_duplicate_leaves(construct_b(6, 3, 2));
    CHECK(canonical_key(from_broom) == canonical_key(make_path(7)));
    CHECK(count_mis(from_broom) == Count(7));

    const Tree p6 = prune_duplicate_leaves(make_path(6));
    CHECK(p6.adj == make_path(6).adj);  // fixed point

    CHECK_THROWS_AS(prune_duplicate_leaves(make_path(1)), std::invalid_argument);
}
