#pragma once

#include "reductions/rational.hpp"

namespace reductions {

// Scale knobs for the consensus-halving construction. Only relative
// magnitudes are forced; desk defaults keep everything computable.
struct ReductionParams {
  int n = 2;
  Rational delta_tiny;  // sensor pitch / coordinate quantum
  Rational delta_T;     // twisted-tunnel half-width
  Rational delta_w;     // significant-region radius
  long long p_large = 0;  // blanket activation threshold (comb block imbalance)
  long long p_C = 0;      // circuit-encoder count
  int frac_bits = 8;      // fixed-point fractional bits in the compiled preprocessing

  Rational epsilon() const { return delta_tiny / 10; }
  long long p_huge() const;  // n / delta_tiny (validated integral)

  // delta_tiny < delta_T < delta_w < 1/(2n), p_large < p_huge, p_C >= 2n^2,
  // p_huge integral and divisible by n.
  void validate() const;

  static ReductionParams desk_defaults(int n);
};

}  // namespace reductions
