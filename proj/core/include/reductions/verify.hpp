#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reductions/instances.hpp"
#include "reductions/tucker.hpp"

namespace reductions {

struct DiscrepancyReport {
  std::vector<Rational> per_agent;  // mu_i(A+) - mu_i(A-)
  Rational max_abs;
  bool is_epsilon_solution = false;
};

DiscrepancyReport eval_ch(const CHInstance& inst, const LabelledCutSet& cuts);

bool verify_necklace(const NecklaceInstance& inst, const NecklaceSplit& split);

// side_assignment_for_on_plane: one entry (set_index, point_index, side +1/-1)
// for each point lying exactly on h.
struct OnPlaneAssignment {
  int set = 0;
  int point = 0;
  int side = 1;
};

bool verify_ham_sandwich(const HamSandwichInstance& inst, const Hyperplane& h,
                         const std::vector<OnPlaneAssignment>& side_assignment);

bool verify_tucker2d(const TuckerGrid2D& inst, std::pair<int, int> p1, std::pair<int, int> p2);

bool verify_tucker_nd(const TuckerGridND& inst, const std::vector<int>& p1,
                      const std::vector<int>& p2);

bool verify_nvhdt(const NVHDTInstance& inst, const std::vector<std::vector<Rational>>& points,
                  int p_C);

}  // namespace reductions
