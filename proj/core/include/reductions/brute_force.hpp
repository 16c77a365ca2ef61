#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reductions/instances.hpp"
#include "reductions/tucker.hpp"
#include "reductions/verify.hpp"

namespace reductions {

// Exhaustive 2-thief search; lexicographically smallest valid split
// (cut count, then gap indices, then leading owner). Default bound 24 beads.
std::optional<NecklaceSplit> brute_force_necklace(const NecklaceInstance& inst,
                                                  int max_beads = 24);

struct HamSandwichSolution {
  Hyperplane plane;
  std::vector<OnPlaneAssignment> on_plane;
};

// Exact search over candidate hyperplanes through <= n input points
// (n <= 3, <= 12 points per set by default). Throws if nothing verifies.
HamSandwichSolution brute_force_ham_sandwich(const HamSandwichInstance& inst,
                                             int max_points_per_set = 12);

// Lexicographically first complementary adjacent pair. Default bound 10^6 cells.
std::optional<std::pair<std::vector<int>, std::vector<int>>> brute_force_tucker(
    const TuckerGridND& inst, long long max_cells = 1000000);

std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> brute_force_tucker_2d(
    const TuckerGrid2D& inst, long long max_cells = 1000000);

// All complementary adjacent pairs, lexicographic order (for soundness sweeps).
std::vector<std::pair<std::vector<int>, std::vector<int>>> all_tucker_pairs(
    const TuckerGridND& inst, long long max_cells = 1000000);

}  // namespace reductions
