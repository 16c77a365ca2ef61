#pragma once

#include "reductions/instances.hpp"
#include "reductions/rng.hpp"
#include "reductions/tucker.hpp"

namespace reductions {

// Uniform interior labels; boundary filled in antipodal pairs.
TuckerGrid2D random_tucker2d(int m, Rng& rng);

// beads_per_colour beads of each colour (even for 2-thief solvability), shuffled.
NecklaceInstance random_necklace(int num_colours, int beads_per_colour, Rng& rng);

// n sets of points_per_set points with coordinates a/denom, a in [-denom, denom].
HamSandwichInstance random_sandwich(int n, int points_per_set, long long denom, Rng& rng);

// Agents assembled from random disjoint uniform blocks over [0, L].
CHInstance random_ch_instance(int num_agents, int blocks_per_agent, const Rational& L,
                              const Rational& epsilon, Rng& rng);

}  // namespace reductions
