#pragma once

#include <functional>
#include <vector>

#include "reductions/brute_force.hpp"
#include "reductions/instances.hpp"
#include "reductions/verify.hpp"

namespace reductions {

struct MomentEmbedding {
  int n = 0;                             // number of colours = dimension
  std::vector<Rational> bead_positions;  // strictly increasing in (0,1)
  std::vector<int> bead_colours;
};

struct SandwichReduction {
  HamSandwichInstance instance;
  MomentEmbedding embedding;
};

// k = 2 only; bead j of B at alpha_j = j/(B+1) becomes the point
// (alpha, alpha^2, ..., alpha^n) in the set of its colour.
SandwichReduction necklace_to_sandwich(const NecklaceInstance& inst);

// Signs of h at the bead points (on-plane beads resolved by the verifier's
// side assignment) turn sign changes into necklace cuts.
NecklaceSplit sandwich_to_necklace_solution(const MomentEmbedding& embedding,
                                            const NecklaceInstance& inst, const Hyperplane& h,
                                            const std::vector<OnPlaneAssignment>& on_plane);

// Median-gap midpoint over the union's projections onto g.
Rational find_bisecting_offset(const HamSandwichInstance& inst, const std::vector<Rational>& g);

// Appendix-style membership labelling: the most unevenly split set's signed
// index, ties lexicographic, sign by which side of the bisecting hyperplane
// holds more of it (the reference point p = (1/2N, 1, ..., 1) fixes the
// positive side).
int candidate_hyperplane_label(const HamSandwichInstance& inst, const std::vector<Rational>& g,
                               int N);

using TwoThiefSolver = std::function<NecklaceSplit(const NecklaceInstance&)>;

// k a power of two: solve 2-thief, glue each thief's pieces into a child
// necklace, recurse. <= (k-1)*n cuts total.
NecklaceSplit solve_power_of_two(const NecklaceInstance& inst, const TwoThiefSolver& solver);

}  // namespace reductions
