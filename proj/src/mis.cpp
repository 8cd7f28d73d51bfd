#include "mist/mis.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mist {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Tree& t) {
    std::vector<std::uint32_t> mask(t.n, 0);
    for (int v = 0; v < t.n; ++v) {
        for (int u : t.adj[v]) {
            mask[v] |= std::uint32_t{1} << u;
        }
    }
    return mask;
}

// Maximal independent set test on a subset bitmask: every member sees no
// other member, every non-member sees at least one.
bool is_maximal_independent(const std::vector<std::uint32_t>& mask, int n, std::uint32_t subset) {
    for (int v = 0; v < n; ++v) {
        const bool covered = (mask[v] & subset) != 0;
        if (((subset >> v) & 1) ? covered : !covered) {
            return false;
        }
    }
    return true;
}

void require_subset_scan_size(const Tree& t, const char* who) {
    if (t.n > kSubsetScanCap) {
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(t.n) +
                                    " exceeds the subset-scan cap of " +
                                    std::to_string(kSubsetScanCap));
    }
}

}  // namespace

Count count_mis_rooted(const Tree& t, int root) {
    if (root < 0 || root >= t.n) {
        throw std::invalid_argument("count_mis_rooted: root out of range");
    }
    std::vector<int> parent(t.n, -2);
    std::vector<int> order;
    order.reserve(t.n);
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int u : t.adj[v]) {
            if (parent[u] == -2) {
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    // Per vertex: in the set / out, dominated by a child / out, waiting for
    // the parent. A leaf contributes (1, 0, 1).
    std::vector<Count> in_set(t.n), by_child(t.n), waiting(t.n);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        Count prod_bc(1), prod_ab(1), prod_b(1);
        for (int u : t.adj[v]) {
            if (u == parent[v]) {
                continue;
            }
            prod_bc *= by_child[u] + waiting[u];
            prod_ab *= in_set[u] + by_child[u];
            prod_b *= by_child[u];
        }
        in_set[v] = prod_bc;
        by_child[v] = prod_ab - prod_b;
        waiting[v] = std::move(prod_b);
    }
    return in_set[root] + by_child[root];
}

Count count_mis(const Tree& t) {
    return count_mis_rooted(t, 0);
}

std::vector<VertexSet> enumerate_mis(const Tree& t) {
    require_subset_scan_size(t, "enumerate_mis");
    const auto mask = adjacency_masks(t);
    std::vector<VertexSet> out;
    const std::uint32_t limit = std::uint32_t{1} << t.n;
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
        if (is_maximal_independent(mask, t.n, subset)) {
            VertexSet members;
            for (int v = 0; v < t.n; ++v) {
                if ((subset >> v) & 1) {
                    members.push_back(v);
                }
            }
            out.push_back(std::move(members));
        }
    }
    return out;
}

Count count_mis_bruteforce(const Tree& t) {
    require_subset_scan_size(t, "count_mis_bruteforce");
    const auto mask = adjacency_masks(t);
    std::uint64_t found = 0;
    const std::uint32_t limit = std::uint32_t{1} << t.n;
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
        found += is_maximal_independent(mask, t.n, subset);
    }
    return Count(found);
}

Tree prune_duplicate_leaves(const Tree& t) {
    if (t.n < 2) {
        throw std::invalid_argument("prune_duplicate_leaves: need n >= 2");
    }
    std::vector<char> alive(t.n, 1);
    std::vector<int> degree = tree_degrees(t);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < t.n && !changed; ++v) {
            if (!alive[v]) {
                continue;
            }
            // Kill all but the lowest-id leaf neighbor of v.
            int kept = -1;
            for (int u : t.adj[v]) {
                if (!alive[u] || degree[u] != 1) {
                    continue;
                }
                if (kept < 0) {
                    kept = u;
                    continue;
                }
                alive[u] = 0;
                --degree[v];
                changed = true;
            }
        }
    }
    std::vector<int> new_id(t.n, -1);
    int next = 0;
    for (int v = 0; v < t.n; ++v) {
        if (alive[v]) {
            new_id[v] = next++;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < t.n; ++v) {
        if (!alive[v]) {
            continue;
        }
        for (int u : t.adj[v]) {
            if (alive[u] && v < u) {
                edges.emplace_back(new_id[v], new_id[u]);
            }
        }
    }
    return tree_from_edge_list(next, edges);
}

}  // namespace mist
