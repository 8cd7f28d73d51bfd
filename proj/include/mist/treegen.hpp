#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "mist/canonical.hpp"
#include "mist/tree.hpp"

namespace mist {

// Guard against runaway enumeration: the default order cap, and the hard
// limit the cap itself may be raised to.
inline constexpr int kDefaultOrderCap = 16;
inline constexpr int kOrderCapLimit = 18;

// Yields every free tree of one order exactly once up to isomorphism, in a
// deterministic order: canonical rooted level sequences are enumerated in
// lexicographically decreasing order and deduplicated by free canonical key.
// Optionally filtered to one diameter.
class TreeStream {
  public:
    std::optional<Tree> next();

  private:
    friend TreeStream free_trees(int n, int cap);
    friend TreeStream trees_with_diameter(int n, int d, int cap);

    TreeStream(int n, int want_diameter);

    int n_;
    int want_diameter_;  // -1: no filter
    bool done_ = false;
    std::vector<int> levels_;
    std::unordered_set<CanonKey> seen_;
};

TreeStream free_trees(int n, int cap = kDefaultOrderCap);
TreeStream trees_with_diameter(int n, int d, int cap = kDefaultOrderCap);

// Number of isomorphism classes (the stream length).
int count_free_trees(int n, int cap = kDefaultOrderCap);

std::vector<Tree> collect(TreeStream stream);

}  // namespace mist
