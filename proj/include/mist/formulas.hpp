#pragma once

#include <set>
#include <vector>

#include "mist/bigint.hpp"
#include "mist/tree.hpp"

namespace mist {

// psi(n) = psi(n-2) + psi(n-3) with psi(0) = psi(1) = 1, psi(2) = 2:
// the m.i.s. count of the n-vertex path, and the sharp lower bound
// (as psi(d+1)) over trees of diameter d >= 3.
Count psi(int n);

// Piecewise closed form for the maximum m.i.s. count over trees with n
// vertices and diameter d. Defined for 4 <= d <= n-1 only; the d <= 3
// maxima are the constants 2, 2, 3.
Count big_m(int n, int d);

// Double broom: a path on d-1 vertices with p extra leaves on one end and
// q on the other. Order d-1+p+q, diameter exactly d.
struct BParams {
    int d;
    int p;
    int q;
};
Tree construct_b(const BParams& params);
Tree construct_b(int d, int p, int q);

// All double brooms of order n and diameter d (p+q = n-d+1), mirror pairs
// collapsed via canonical keys: the predicted exact set of minimizers.
std::vector<Tree> minimizer_family(int n, int d);

// The set of d in [d_lo, d_hi] maximizing big_m(n, .), by direct evaluation.
std::set<int> argmax_m(int n, int d_lo, int d_hi);

// Parametric shapes that may attain big_m(n, d). These are hypotheses, not
// claims: the harness records which of them reach the enumerated maximum.
enum class MaximizerFamily {
    kSpider,              // center with t pendant 2-paths (d = 4, odd n)
    kSpiderPlusLeaf,      // spider plus one extra leaf at the center (d = 4, even n)
    kPendantPathsOneEnd,  // path v_0..v_d with t pendant 2-paths at v_2
    kPendantPathsSplit,   // pendant 2-paths at both v_2 and v_{d-2}
    kDoubleBroom,
};

const char* family_name(MaximizerFamily family);

struct MaximizerCandidate {
    MaximizerFamily family;
    Tree tree;
};

// Candidates of order n and diameter d; families whose parameter constraints
// cannot meet (n, d) are skipped.
std::vector<MaximizerCandidate> candidate_maximizers(int n, int d);

}  // namespace mist
