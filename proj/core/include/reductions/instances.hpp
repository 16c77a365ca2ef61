#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reductions/rational.hpp"
#include "reductions/step_measure.hpp"

namespace reductions {

// Consensus-halving: n_cuts = agents.size() cuts allowed, alternating labels
// starting with A+ on the leftmost piece. The prefix [0, ce_region_length]
// is the coordinate-encoding region for constructed instances (0 for ad hoc ones).
struct CHInstance {
  Rational L;
  std::vector<StepMeasure> agents;
  Rational epsilon;
  int ce_region_length = 0;

  void validate() const;
};

struct LabelledCutSet {
  std::vector<Rational> cuts;  // ascending, inside [0, L]

  void validate(const Rational& L) const;
  // Label of the piece containing t (pieces are [c_i, c_{i+1}); piece 0 is A+).
  // +1 = A+, -1 = A-.
  int label_at(const Rational& t) const;
};

struct NecklaceInstance {
  std::vector<int> beads;  // colour indices 1..n
  int thieves = 2;

  int num_colours() const;
  std::vector<int> colour_counts() const;
  void validate() const;
};

struct NecklaceSplit {
  std::vector<int> cut_gaps;     // ascending gap indices g: cut between bead g and g+1 (1-based beads)
  std::vector<int> piece_owner;  // thief index per piece, cut_gaps.size() + 1 entries

  void validate(const NecklaceInstance& inst) const;
};

struct HamSandwichInstance {
  int n = 0;
  std::vector<std::vector<std::vector<Rational>>> point_sets;  // n sets of n-dim points

  void validate() const;
};

struct Hyperplane {
  std::vector<Rational> normal;  // L1 norm exactly 1
  Rational offset;

  void validate() const;
  Rational eval(const std::vector<Rational>& point) const;  // <normal, point> - offset
};

}  // namespace reductions
