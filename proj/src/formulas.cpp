#include "mist/formulas.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "mist/canonical.hpp"

namespace mist {

namespace {

// Path v_0..v_d plus t1 pendant 2-paths at v_2 and t2 at v_{d-2}.
Tree path_with_pendant_paths(int d, int t1, int t2) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d; ++i) {
        edges.emplace_back(i, i + 1);
    }
    int next = d + 1;
    auto attach_2path = [&](int at) {
        edges.emplace_back(at, next);
        edges.emplace_back(next, next + 1);
        next += 2;
    };
    for (int i = 0; i < t1; ++i) {
        attach_2path(2);
    }
    for (int i = 0; i < t2; ++i) {
        attach_2path(d - 2);
    }
    return tree_from_edge_list(next, edges);
}

// Center with t pendant 2-paths, optionally one extra leaf at the center.
Tree spider_with_2paths(int t, bool extra_leaf) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < t; ++i) {
        edges.emplace_back(0, next);
        edges.emplace_back(next, next + 1);
        next += 2;
    }
    if (extra_leaf) {
        edges.emplace_back(0, next);
        ++next;
    }
    return tree_from_edge_list(next, edges);
}

}  // namespace

Count psi(int n) {
    if (n < 0) {
        throw std::invalid_argument("psi: negative index");
    }
    if (n == 0 || n == 1) {
        return Count(1);
    }
    if (n == 2) {
        return Count(2);
    }
    Count a(1), b(1), c(2);  // psi(k-3), psi(k-2), psi(k-1)
    for (int k = 3; k <= n; ++k) {
        Count value = b + a;
        a = std::move(b);
        b = std::move(c);
        c = std::move(value);
    }
    return c;
}

Count big_m(int n, int d) {
    if (d < 4 || d > n - 1) {
        throw std::invalid_argument("big_m: need 4 <= d <= n-1, got n = " + std::to_string(n) +
                                    ", d = " + std::to_string(d));
    }
    const int gap = n - d;
    if (gap % 2 == 1) {
        return psi(d - 1) + (Count::pow2((gap + 1) / 2) - Count(1)) * psi(d - 2);
    }
    if (gap == 2) {
        return psi(d - 2) + psi(d);
    }
    Count value = Count::pow2(gap / 2) * psi(d - 1);
    if (d == 4 || d == 7) {
        value += Count(1);
    }
    return value;
}

Tree construct_b(const BParams& params) {
    return construct_b(params.d, params.p, params.q);
}

Tree construct_b(int d, int p, int q) {
    if (d < 2) {
        throw std::invalid_argument("construct_b: need d >= 2");
    }
    if (p < 1 || q < 1) {
        throw std::invalid_argument("construct_b: need p, q >= 1 (the diameter would shrink)");
    }
    // Spine 0..d-2 (d-1 vertices), p leaves on vertex 0, q on vertex d-2.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 <= d - 2; ++i) {
        edges.emplace_back(i, i + 1);
    }
    int next = d - 1;
    for (int i = 0; i < p; ++i) {
        edges.emplace_back(0, next++);
    }
    for (int i = 0; i < q; ++i) {
        edges.emplace_back(d - 2, next++);
    }
    return tree_from_edge_list(next, edges);
}

std::vector<Tree> minimizer_family(int n, int d) {
    if (d < 3 || d >= n) {
        throw std::invalid_argument("minimizer_family: need 3 <= d < n");
    }
    const int total = n - d + 1;  // p + q
    std::vector<Tree> out;
    std::unordered_set<CanonKey> seen;
    for (int p = 1; p < total; ++p) {
        Tree t = construct_b(d, p, total - p);
        if (seen.insert(canonical_key(t)).second) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::set<int> argmax_m(int n, int d_lo, int d_hi) {
    if (d_lo < 4 || d_lo > d_hi || d_hi > n - 1) {
        throw std::invalid_argument("argmax_m: need 4 <= d_lo <= d_hi <= n-1");
    }
    std::set<int> best_at;
    Count best;
    for (int d = d_lo; d <= d_hi; ++d) {
        Count value = big_m(n, d);
        if (best_at.empty() || value > best) {
            best = std::move(value);
            best_at = {d};
        } else if (value == best) {
            best_at.insert(d);
        }
    }
    return best_at;
}

const char* family_name(MaximizerFamily family) {
    switch (family) {
        case MaximizerFamily::kSpider:
            return "spider";
        case MaximizerFamily::kSpiderPlusLeaf:
            return "spider-plus-leaf";
        case MaximizerFamily::kPendantPathsOneEnd:
            return "pendant-2-paths";
        case MaximizerFamily::kPendantPathsSplit:
            return "pendant-2-paths-split";
        case MaximizerFamily::kDoubleBroom:
            return "double-broom";
    }
    return "unknown";
}

std::vector<MaximizerCandidate> candidate_maximizers(int n, int d) {
    if (d < 4 || d > n - 1) {
        throw std::invalid_argument("candidate_maximizers: need 4 <= d <= n-1");
    }
    std::vector<MaximizerCandidate> out;
    if (d == 4) {
        if (n % 2 == 1 && n >= 5) {
            out.push_back({MaximizerFamily::kSpider, spider_with_2paths((n - 1) / 2, false)});
        }
        if (n % 2 == 0 && n >= 6) {
            out.push_back(
                {MaximizerFamily::kSpiderPlusLeaf, spider_with_2paths((n - 2) / 2, true)});
        }
    }
    const int spare = n - d - 1;  // vertices beyond the bare path, in pendant 2-paths
    if (spare >= 2 && spare % 2 == 0) {
        const int t = spare / 2;
        out.push_back({MaximizerFamily::kPendantPathsOneEnd, path_with_pendant_paths(d, t, 0)});
        if (d >= 5) {
            for (int t1 = 1; t1 <= t - t1; ++t1) {  // mirror splits collapse
                out.push_back(
                    {MaximizerFamily::kPendantPathsSplit, path_with_pendant_paths(d, t1, t - t1)});
            }
        }
    }
    for (Tree& t : minimizer_family(n, d)) {
        out.push_back({MaximizerFamily::kDoubleBroom, std::move(t)});
    }
    return out;
}

}  // namespace mist
