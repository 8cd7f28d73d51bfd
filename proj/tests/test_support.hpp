#pragma once

#include <random>
#include <utility>
#include <vector>

#include "mist/tree.hpp"
#include "mist/treegen.hpp"

namespace mist::test {

inline Tree make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return tree_from_edge_list(n, edges);
}

// Star with vertex 0 in the middle.
inline Tree make_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, i);
    }
    return tree_from_edge_list(leaves + 1, edges);
}

inline std::vector<Tree> all_free_trees(int n) {
    return collect(free_trees(n, kOrderCapLimit));
}

// Relabels t by a uniformly random permutation.
inline Tree shuffle_labels(const Tree& t, std::mt19937& rng) {
    std::vector<int> perm(t.n);
    for (int i = 0; i < t.n; ++i) {
        perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < t.n; ++v) {
        for (int u : t.adj[v]) {
            if (v < u) {
                edges.emplace_back(perm[v], perm[u]);
            }
        }
    }
    return tree_from_edge_list(t.n, edges);
}

}  // namespace mist::test
