#pragma once

#include <utility>
#include <vector>

namespace mist {

// Undirected labelled tree on vertices 0..n-1, adjacency-list based.
// Invariants: exactly n-1 edges, connected, no loops or duplicate edges,
// neighbor lists sorted ascending and symmetric.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj;
};

// Builds a Tree and enforces every invariant; throws std::invalid_argument
// on loops, duplicates, out-of-range endpoints, wrong edge count, or a
// disconnected edge set. Vertex ids must be dense 0..n-1 (gaps are rejected,
// not compacted).
Tree tree_from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Re-checks the invariants on an already-built object.
bool is_valid_tree(const Tree& t);

std::vector<int> tree_degrees(const Tree& t);

// True when some vertex has two or more leaf neighbors.
bool has_double_leaf_neighbor(const Tree& t);

// Number of edges on a longest path (0 for the single vertex). Double BFS:
// farthest vertex from 0, then farthest from that.
int diameter(const Tree& t);

// One path realizing diameter(t); deterministic, lowest-id tie-breaking at
// both sweep steps.
std::vector<int> diametrical_path(const Tree& t);

// The 1 or 2 middle vertices of any diametrical path, by leaf stripping;
// one center exactly when the diameter is even.
std::vector<int> centers(const Tree& t);

}  // namespace mist
