#pragma once

#include <vector>

#include "mist/bigint.hpp"
#include "mist/tree.hpp"

namespace mist {

using VertexSet = std::vector<int>;  // sorted ascending

// Subset-scan routines refuse anything larger than this.
inline constexpr int kSubsetScanCap = 20;

// Exact number of maximal independent sets, by a three-state dynamic program
// over the tree rooted at vertex 0: each vertex is either in the set, out
// and already dominated by a child in the set, or out and waiting for its
// parent to dominate it. The result does not depend on the root.
Count count_mis(const Tree& t);
Count count_mis_rooted(const Tree& t, int root);

// Every maximal independent set, listed explicitly. n <= 20 only.
std::vector<VertexSet> enumerate_mis(const Tree& t);

// Independent oracle: full subset scan with a maximality test, sharing no
// code with count_mis. n <= 20 only.
Count count_mis_bruteforce(const Tree& t);

// Repeatedly removes a leaf whose neighbor has another leaf neighbor, until
// no vertex has two leaf neighbors. The m.i.s. count is unchanged; the
// diameter is unchanged whenever it is >= 3 (stars may shrink to an edge).
// Surviving vertices are relabelled densely in increasing old-id order.
Tree prune_duplicate_leaves(const Tree& t);

}  // namespace mist
