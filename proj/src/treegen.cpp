#include "mist/treegen.hpp"

#include <stdexcept>
#include <string>

namespace mist {

namespace {

void check_order(int n, int cap) {
    if (cap < 1 || cap > kOrderCapLimit) {
        throw std::invalid_argument("tree enumeration: cap " + std::to_string(cap) +
                                    " outside 1.." + std::to_string(kOrderCapLimit));
    }
    if (n < 1 || n > cap) {
        throw std::invalid_argument("tree enumeration: order " + std::to_string(n) +
                                    " outside 1..cap (" + std::to_string(cap) + ")");
    }
}

// Rooted tree from a level sequence (levels[0] = 0): the parent of vertex i
// is the most recent j < i with levels[j] == levels[i] - 1. Neighbor lists
// come out sorted because parents precede children and children of one
// vertex appear in increasing id order.
Tree tree_from_levels(const std::vector<int>& levels) {
    Tree t;
    t.n = static_cast<int>(levels.size());
    t.adj.assign(t.n, {});
    std::vector<int> last_at(levels.size() + 1, -1);
    last_at[0] = 0;
    for (int i = 1; i < t.n; ++i) {
        int p = last_at[levels[i] - 1];
        t.adj[p].push_back(i);
        t.adj[i].push_back(p);
        last_at[levels[i]] = i;
    }
    return t;
}

// Successor in the lexicographically decreasing enumeration of canonical
// rooted level sequences: find the last vertex below level 2 or deeper,
// re-parent it one level up, and refill the tail by cycling the segment
// starting at the new parent. Returns false after the star [0,1,...,1].
bool advance_levels(std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    int p = -1;
    for (int i = n - 1; i >= 1; --i) {
        if (levels[i] > 1) {
            p = i;
            break;
        }
    }
    if (p < 0) {
        return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (levels[i] == levels[p] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n; ++i) {
        levels[i] = levels[i - (p - q)];
    }
    return true;
}

}  // namespace

TreeStream::TreeStream(int n, int want_diameter) : n_(n), want_diameter_(want_diameter) {
    levels_.resize(n);
    for (int i = 0; i < n; ++i) {
        levels_[i] = i;  // the rooted path, lexicographically largest
    }
}

std::optional<Tree> TreeStream::next() {
    while (!done_) {
        Tree t = tree_from_levels(levels_);
        if (!advance_levels(levels_)) {
            done_ = true;
        }
        if (!seen_.insert(canonical_key(t)).second) {
            continue;  // another rooting of a class seen before
        }
        if (want_diameter_ >= 0 && diameter(t) != want_diameter_) {
            continue;
        }
        return t;
    }
    return std::nullopt;
}

TreeStream free_trees(int n, int cap) {
    check_order(n, cap);
    return TreeStream(n, -1);
}

TreeStream trees_with_diameter(int n, int d, int cap) {
    check_order(n, cap);
    if (d < 1 || d >= n) {
        throw std::invalid_argument("trees_with_diameter: need 1 <= d < n, got d = " +
                                    std::to_string(d) + ", n = " + std::to_string(n));
    }
    return TreeStream(n, d);
}

int count_free_trees(int n, int cap) {
    TreeStream stream = free_trees(n, cap);
    int count = 0;
    while (stream.next()) {
        ++count;
    }
    return count;
}

std::vector<Tree> collect(TreeStream stream) {
    std::vector<Tree> out;
    while (auto t = stream.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

}  // namespace mist
