#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reductions/tucker.hpp"

namespace reductions {

// One fold step's replay data: the axis permutation applied beforehand, the
// padding added on each side of axis 1, and the pre-fold axis-1 length
// (a multiple of 3) the six-case map was applied to.
struct FoldStep {
  std::vector<int> axis_perm;  // output axis j of the permuted grid = input axis axis_perm[j]
  int pad_low = 0;
  int pad_high = 0;
  int m1 = 0;  // folded axis length after padding
};

struct FoldTrace {
  int original_m = 0;           // 2D side before the 3m x m extension
  bool extended_3m = false;     // FG17 pre-step applied
  bool swapped_12 = false;      // colours 1 and 2 exchanged during the pre-step
  std::vector<FoldStep> steps;  // innermost-first
};

// Pads the named axis (1-based) to a multiple of 3 by duplicating boundary
// layers: l=1 duplicates the high side once; l=2 duplicates both sides.
TuckerGridND pad_to_multiple_of_3(const TuckerGridND& g, int axis);

// Symmetric padding by `per_side` duplicated layers on each side of axis 1.
TuckerGridND pad_axis1_symmetric(const TuckerGridND& g, int per_side);

// Requires m_1 divisible by 3; returns the (m_1/3 + 2) x ... x 7 grid with
// fold-point duplicates and the two flood-filled +-(k+1) regions.
TuckerGridND fold_once(const TuckerGridND& g);

// Full pipeline: 3m x m extension, then symmetric-pad + permute + fold until
// every side <= 7. Output satisfies the small-box conditions.
std::pair<TuckerGridND, FoldTrace> compose_folds(const TuckerGrid2D& g);

// Maps a complementary adjacent pair of the folded grid back to one of the
// original 2D grid. Throws if the pair does not verify upstream.
std::pair<std::pair<int, int>, std::pair<int, int>> pull_back_solution(
    const TuckerGrid2D& original, const FoldTrace& trace,
    const std::vector<int>& p1, const std::vector<int>& p2);

// Stretches every (odd) side to exactly 7 by symmetric boundary duplication,
// then reinterprets grid cells as cubelets. Even sides are rejected: stretching
// them to 7 cannot preserve the antipodal pairing.
NVHDTInstance grid_to_cubelets(const TuckerGridND& g);

}  // namespace reductions
