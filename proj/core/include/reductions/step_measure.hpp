#pragma once

#include <vector>

#include "reductions/rational.hpp"

namespace reductions {

// A nonnegative step density on [0, L] integrating to exactly 1.
// values has breakpoints.size() + 1 entries: values[i] is the density on the
// i-th interval of the partition 0 = b_0 < breakpoints... < L.
struct StepMeasure {
  Rational L;
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  StepMeasure() : L(1) { values.push_back(Rational(1)); }
  StepMeasure(Rational domain_length, std::vector<Rational> bps, std::vector<Rational> vals);

  // Throws ValidationError on any invariant violation.
  void validate() const;

  Rational integral(const Rational& a, const Rational& b) const;
  Rational total() const { return integral(Rational(0), L); }
};

// One uniform block of the given mass on [lo, hi].
struct MassBlock {
  Rational lo;
  Rational hi;
  Rational mass;
};

// Assemble a measure from disjoint uniform blocks (any order); masses must sum to 1.
StepMeasure measure_from_blocks(const Rational& L, std::vector<MassBlock> blocks);

// Exposed for the CLI's verify path and tests; same semantics as m.integral.
Rational measure_integral(const StepMeasure& m, const Rational& a, const Rational& b);

}  // namespace reductions
