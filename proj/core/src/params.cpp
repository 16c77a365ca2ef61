#include "reductions/params.hpp"

#include <string>

namespace reductions {

long long ReductionParams::p_huge() const {
  const Rational q = Rational(n) / delta_tiny;
  if (boost::multiprecision::denominator(q) != 1) {
    throw ValidationError("n / delta_tiny must be an integer");
  }
  return static_cast<long long>(boost::multiprecision::numerator(q));
}

void ReductionParams::validate() const {
  if (n < 2) throw ValidationError("construction needs n >= 2");
  if (delta_tiny <= 0 || delta_tiny >= delta_T) {
    throw ValidationError("need 0 < delta_tiny < delta_T");
  }
  if (delta_T >= delta_w) throw ValidationError("need delta_T < delta_w");
  if (delta_w >= Rational(1, 2 * n)) throw ValidationError("need delta_w < 1/(2n)");
  const long long ph = p_huge();
  if (ph % n != 0) throw ValidationError("p_huge must be divisible by n");
  if (p_large < 1 || p_large >= ph) throw ValidationError("need 1 <= p_large < p_huge");
  if (p_C < 2LL * n * n) throw ValidationError("need p_C >= 2n^2");
  if (frac_bits < 4 || frac_bits > 24) throw ValidationError("frac_bits outside [4, 24]");
}

ReductionParams ReductionParams::desk_defaults(int n) {
  ReductionParams p;
  p.n = n;
  p.delta_tiny = Rational(1, 100LL * n * n);
  p.delta_T = Rational(1, 10LL * n * n);
  p.delta_w = Rational(1, 4LL * n);
  // Comb imbalance at |alpha_j| = delta_w is ~ 2n*delta_w/delta_tiny = 50n^2,
  // so blankets activate right at the configured Significant-Region radius.
  p.p_large = 50LL * n * n;
  p.p_C = 2LL * n * n;
  p.frac_bits = 8;
  p.validate();
  return p;
}

}  // namespace reductions
