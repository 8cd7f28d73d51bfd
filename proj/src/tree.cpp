#include "mist/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mist {

namespace {

// BFS from src filling dist (and parent when given); returns the lowest-id
// vertex at maximum distance.
int bfs_farthest(const Tree& t, int src, std::vector<int>& dist, std::vector<int>* parent) {
    dist.assign(t.n, -1);
    if (parent != nullptr) {
        parent->assign(t.n, -1);
    }
    std::vector<int> queue;
    queue.reserve(t.n);
    queue.push_back(src);
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : t.adj[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                if (parent != nullptr) {
                    (*parent)[u] = v;
                }
                queue.push_back(u);
            }
        }
    }
    int best = src;
    for (int v = 0; v < t.n; ++v) {
        if (dist[v] > dist[best]) {
            best = v;
        }
    }
    return best;
}

}  // namespace

Tree tree_from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) {
        throw std::invalid_argument("tree_from_edge_list: vertex count must be >= 1");
    }
    if (static_cast<int>(edges.size()) != n - 1) {
        throw std::invalid_argument("tree_from_edge_list: expected " + std::to_string(n - 1) +
                                    " edges, got " + std::to_string(edges.size()));
    }
    Tree t;
    t.n = n;
    t.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("tree_from_edge_list: edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("tree_from_edge_list: self-loop at vertex " +
                                        std::to_string(u));
        }
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (auto& row : t.adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            throw std::invalid_argument("tree_from_edge_list: duplicate edge");
        }
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : t.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    if (visited != n) {
        throw std::invalid_argument("tree_from_edge_list: edge set is disconnected");
    }
    return t;
}

bool is_valid_tree(const Tree& t) {
    if (t.n < 1 || static_cast<int>(t.adj.size()) != t.n) {
        return false;
    }
    std::size_t degree_sum = 0;
    for (int v = 0; v < t.n; ++v) {
        const auto& row = t.adj[v];
        degree_sum += row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            int u = row[i];
            if (u < 0 || u >= t.n || u == v) {
                return false;
            }
            if (i > 0 && row[i - 1] >= u) {
                return false;  // unsorted or duplicate
            }
            if (!std::binary_search(t.adj[u].begin(), t.adj[u].end(), v)) {
                return false;  // asymmetric
            }
        }
    }
    if (degree_sum != 2 * static_cast<std::size_t>(t.n - 1)) {
        return false;
    }
    std::vector<char> seen(t.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : t.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == t.n;
}

std::vector<int> tree_degrees(const Tree& t) {
    std::vector<int> out(t.n);
    for (int v = 0; v < t.n; ++v) {
        out[v] = static_cast<int>(t.adj[v].size());
    }
    return out;
}

bool has_double_leaf_neighbor(const Tree& t) {
    if (t.n < 3) {
        return false;
    }
    for (int v = 0; v < t.n; ++v) {
        int leaf_neighbors = 0;
        for (int u : t.adj[v]) {
            if (t.adj[u].size() == 1 && ++leaf_neighbors >= 2) {
                return true;
            }
        }
    }
    return false;
}

int diameter(const Tree& t) {
    if (t.n == 1) {
        return 0;
    }
    std::vector<int> dist;
    int a = bfs_farthest(t, 0, dist, nullptr);
    int b = bfs_farthest(t, a, dist, nullptr);
    return dist[b];
}

std::vector<int> diametrical_path(const Tree& t) {
    if (t.n == 1) {
        return {0};
    }
    std::vector<int> dist, parent;
    int a = bfs_farthest(t, 0, dist, nullptr);
    int b = bfs_farthest(t, a, dist, &parent);
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) {
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());  // runs from a to b
    return path;
}

std::vector<int> centers(const Tree& t) {
    if (t.n == 1) {
        return {0};
    }
    std::vector<int> degree(t.n);
    std::vector<int> layer, next;
    for (int v = 0; v < t.n; ++v) {
        degree[v] = static_cast<int>(t.adj[v].size());
        if (degree[v] == 1) {
            layer.push_back(v);
        }
    }
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer) {
            for (int u : t.adj[v]) {
                if (--degree[u] == 1) {
                    next.push_back(u);
                }
            }
        }
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace mist
