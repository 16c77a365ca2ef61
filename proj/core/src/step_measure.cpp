#include "reductions/step_measure.hpp"

#include <algorithm>
#include <utility>

namespace reductions {

StepMeasure::StepMeasure(Rational domain_length, std::vector<Rational> bps,
                         std::vector<Rational> vals)
    : L(std::move(domain_length)), breakpoints(std::move(bps)), values(std::move(vals)) {
  validate();
}

void StepMeasure::validate() const {
  if (L <= 0) throw ValidationError("measure domain length must be positive");
  if (values.size() != breakpoints.size() + 1) {
    throw ValidationError("step measure needs exactly one more value than breakpoints");
  }
  Rational prev(0);
  for (const Rational& b : breakpoints) {
    if (b <= prev || b >= L) throw ValidationError("breakpoints must be strictly increasing inside (0, L)");
    prev = b;
  }
  for (const Rational& v : values) {
    if (v < 0) throw ValidationError("step density must be nonnegative");
  }
  Rational mass(0);
  Rational lo(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rational hi = i < breakpoints.size() ? breakpoints[i] : L;
    mass += values[i] * (hi - lo);
    lo = hi;
  }
  if (mass != 1) throw ValidationError("step measure must integrate to 1, got " + rat_str(mass));
}

Rational StepMeasure::integral(const Rational& a, const Rational& b) const {
  if (a > b) throw ValidationError("integral bounds out of order");
  const Rational lo = std::max(a, Rational(0));
  const Rational hi = std::min(b, L);
  if (lo >= hi) return Rational(0);
  Rational acc(0);
  Rational seg_lo(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rational seg_hi = i < breakpoints.size() ? breakpoints[i] : L;
    const Rational cl = std::max(seg_lo, lo);
    const Rational ch = std::min(seg_hi, hi);
    if (cl < ch) acc += values[i] * (ch - cl);
    seg_lo = seg_hi;
    if (seg_lo >= hi) break;
  }
  return acc;
}

StepMeasure measure_from_blocks(const Rational& L, std::vector<MassBlock> blocks) {
  if (blocks.empty()) throw ValidationError("measure needs at least one block");
  std::sort(blocks.begin(), blocks.end(),
            [](const MassBlock& a, const MassBlock& b) { return a.lo < b.lo; });
  Rational cursor(0);
  Rational mass(0);
  for (const MassBlock& blk : blocks) {
    if (blk.lo < cursor) throw ValidationError("blocks must be pairwise disjoint");
    if (blk.hi <= blk.lo) throw ValidationError("block interval is empty");
    if (blk.hi > L) throw ValidationError("block exceeds domain");
    if (blk.mass <= 0) throw ValidationError("block mass must be positive");
    mass += blk.mass;
    cursor = blk.hi;
  }
  if (mass != 1) throw ValidationError("block masses must sum to 1, got " + rat_str(mass));

  std::vector<Rational> bps;
  std::vector<Rational> vals;
  cursor = 0;
  for (const MassBlock& blk : blocks) {
    if (blk.lo > cursor) {
      vals.push_back(Rational(0));
      bps.push_back(blk.lo);
    }
    vals.push_back(blk.mass / (blk.hi - blk.lo));
    if (blk.hi < L) bps.push_back(blk.hi);
    cursor = blk.hi;
  }
  if (cursor < L) vals.push_back(Rational(0));
  return StepMeasure(L, std::move(bps), std::move(vals));
}

Rational measure_integral(const StepMeasure& m, const Rational& a, const Rational& b) {
  return m.integral(a, b);
}

}  // namespace reductions
