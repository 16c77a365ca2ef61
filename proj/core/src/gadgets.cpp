#include "reductions/gadgets.hpp"

#include <algorithm>
#include <utility>

namespace reductions {

namespace {

// Read window inside a producer slot: strictly between the two possible cut
// positions (cuts land in [0.1, 0.2] or [0.8, 0.9] of the slot), with margin.
const Rational kWindowLo(1, 4);
const Rational kWindowHi(3, 4);

GadgetBlock block(const Rational& lo, const Rational& hi, const Rational& mass, BlockKind kind) {
  GadgetBlock b;
  b.lo = lo;
  b.hi = hi;
  b.mass = mass;
  b.kind = kind;
  return b;
}

// Input block spanning the middle half of the given window.
GadgetBlock input_block(const Interval& window, const Rational& mass) {
  const Rational len = window.hi - window.lo;
  if (len <= 0) throw ValidationError("gate input window is empty");
  return block(window.lo + len / 4, window.hi - len / 4, mass, BlockKind::CENTRAL);
}

void check_disjoint(const std::vector<GadgetBlock>& blocks) {
  std::vector<std::pair<Rational, Rational>> spans;
  spans.reserve(blocks.size());
  for (const auto& b : blocks) spans.emplace_back(b.lo, b.hi);
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
    if (spans[i].second > spans[i + 1].first) {
      throw ValidationError("gate gadget blocks overlap");
    }
  }
}

int label_before(const std::vector<Rational>& sorted_cuts, const Rational& t) {
  const auto it = std::upper_bound(sorted_cuts.begin(), sorted_cuts.end(), t);
  return (it - sorted_cuts.begin()) % 2 == 0 ? 1 : -1;
}

// A+ mass of m when a cut at c is added to sorted_cuts is
//   A(c) = integral over [0,c] of 1{label=A+} dm + integral over [c,L] of 1{label=A-} dm
// with labels induced by sorted_cuts alone (everything right of c flips).
// A is piecewise linear; its slope only changes at m's breakpoints and at cuts
// inside m's support, so zero-density stretches need no subdivision.
Rational solve_cut_sorted(const StepMeasure& m, const std::vector<Rational>& sorted_cuts) {
  std::vector<Rational> edges;
  edges.reserve(m.breakpoints.size() + 8);
  edges.push_back(Rational(0));
  for (std::size_t p = 0; p < m.values.size(); ++p) {
    const Rational lo = p == 0 ? Rational(0) : m.breakpoints[p - 1];
    const Rational hi = p == m.breakpoints.size() ? m.L : m.breakpoints[p];
    if (m.values[p] != 0) {
      auto it = std::upper_bound(sorted_cuts.begin(), sorted_cuts.end(), lo);
      for (; it != sorted_cuts.end() && *it < hi; ++it) {
        if (*it > edges.back()) edges.push_back(*it);
      }
    }
    if (hi > edges.back()) edges.push_back(hi);
  }

  std::vector<Rational> density;
  std::vector<int> label;
  Rational acc(0);  // A(0) == base A- mass
  std::size_t piece = 0;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    while (piece < m.breakpoints.size() && m.breakpoints[piece] <= edges[s]) ++piece;
    density.push_back(m.values[piece]);
    label.push_back(label_before(sorted_cuts, edges[s]));
    if (label.back() == -1) acc += m.values[piece] * (edges[s + 1] - edges[s]);
  }

  const Rational target = m.total() / 2;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    if (acc == target) return edges[s];
    const Rational slope = Rational(label[s]) * density[s];
    const Rational next = acc + slope * (edges[s + 1] - edges[s]);
    if (slope != 0 && ((acc < target && next >= target) || (acc > target && next <= target))) {
      return edges[s] + (target - acc) / slope;
    }
    acc = next;
  }
  if (acc == target) return edges.back();
  throw ValidationError("no balancing cut for agent");
}

}  // namespace

StepMeasure measure_from_gadget(const Rational& L, std::vector<GadgetBlock> blocks) {
  std::vector<MassBlock> plain;
  plain.reserve(blocks.size());
  for (const auto& b : blocks) plain.push_back(MassBlock{b.lo, b.hi, b.mass});
  return measure_from_blocks(L, std::move(plain));
}

std::vector<GadgetBlock> build_gate_gadget(GateKind kind, const std::vector<Interval>& in_intervals,
                                           const Interval& out_interval) {
  const std::size_t want_inputs = kind == GateKind::NOT ? 1 : 2;
  if (in_intervals.size() != want_inputs) {
    throw ValidationError("gate gadget: wrong input arity");
  }
  if (out_interval.hi - out_interval.lo != 1) {
    throw ValidationError("gate gadget: output slot must have unit length");
  }

  Rational in_mass, out_left, out_right;
  switch (kind) {
    case GateKind::NOT:
      in_mass = rat(1, 4);
      out_left = rat(3, 8);
      out_right = rat(3, 8);
      break;
    case GateKind::OR:
      in_mass = rat(1, 8);
      out_left = rat(5, 16);
      out_right = rat(7, 16);
      break;
    case GateKind::AND:
      in_mass = rat(1, 8);
      out_left = rat(7, 16);
      out_right = rat(5, 16);
      break;
  }

  std::vector<GadgetBlock> blocks;
  for (const auto& in : in_intervals) blocks.push_back(input_block(in, in_mass));
  blocks.push_back(block(out_interval.lo + rat(1, 10), out_interval.lo + rat(2, 10), out_left,
                         BlockKind::THIN_DENSE));
  blocks.push_back(block(out_interval.lo + rat(8, 10), out_interval.lo + rat(9, 10), out_right,
                         BlockKind::THIN_DENSE));
  check_disjoint(blocks);
  return blocks;
}

Rational solve_balancing_cut(const StepMeasure& m, std::vector<Rational> other_cuts) {
  m.validate();
  std::sort(other_cuts.begin(), other_cuts.end());
  if (!other_cuts.empty() && (other_cuts.front() < 0 || other_cuts.back() > m.L)) {
    throw ValidationError("balancing cut: existing cuts outside the domain");
  }
  return solve_cut_sorted(m, other_cuts);
}

std::vector<Rational> simulate_forward_cuts(const std::vector<StepMeasure>& agents,
                                            std::vector<Rational> seed_cuts) {
  std::sort(seed_cuts.begin(), seed_cuts.end());
  std::vector<Rational> cuts = std::move(seed_cuts);
  for (const StepMeasure& agent : agents) {
    const Rational c = solve_cut_sorted(agent, cuts);
    cuts.insert(std::upper_bound(cuts.begin(), cuts.end(), c), c);
  }
  return cuts;
}

std::pair<bool, bool> output_gate_transform(bool g_j, bool g_minus_j, bool x_ref) {
  if (g_j && g_minus_j) {
    throw ValidationError("output transform: a colour component cannot be both signs");
  }
  if (!g_j && !g_minus_j) return {true, false};
  const bool v = g_j ? !x_ref : x_ref;  // TRUE/FALSE xor the reference bit
  return {v, v};
}

Rational EncoderLayout::region_lo(int i) const {
  if (i < 1 || i > p_C) throw ValidationError("encoder index out of range");
  return Rational(n) + Rational(i - 1) * slots_per_encoder;
}

Rational EncoderLayout::slot_lo(int i, long long slot) const {
  if (slot < 0 || slot >= slots_per_encoder) throw ValidationError("slot index out of range");
  return region_lo(i) + slot;
}

Rational EncoderLayout::shift(int i) const {
  if (i < 1 || i > p_C) throw ValidationError("encoder index out of range");
  return Rational(i - 1) * sensor_block_width;
}

Rational EncoderLayout::domain_length() const {
  return Rational(n) + Rational(p_C) * slots_per_encoder;
}

void EncoderLayout::validate() const {
  if (n < 2) throw ValidationError("layout: need n >= 2");
  if (p_C < 1) throw ValidationError("layout: need at least one encoder");
  if (slots_per_encoder < 1) throw ValidationError("layout: empty encoder region");
  // Equal slot parity across encoders keeps one circuit valid for all of them.
  if (slots_per_encoder % 2 != 0) throw ValidationError("layout: slot count must be even");
  if (sensor_block_width <= 0) throw ValidationError("layout: sensor block width must be positive");
}

StepMeasure build_sensor_agent(int i, long long j, const ReductionParams& params,
                               const EncoderLayout& layout, long long slot) {
  params.validate();
  layout.validate();
  if (i < 1 || i > params.p_C) throw ValidationError("sensor: encoder index out of range");
  if (j < 1 || j > params.p_huge()) throw ValidationError("sensor: sensor index out of range");

  const Rational lo = Rational(j - 1) * params.delta_tiny + layout.shift(i);
  const Rational slot0 = layout.slot_lo(i, slot);
  std::vector<GadgetBlock> blocks;
  blocks.push_back(block(lo, lo + layout.sensor_block_width, rat(1, 10), BlockKind::SENSOR));
  blocks.push_back(
      block(slot0 + rat(1, 10), slot0 + rat(2, 10), rat(9, 20), BlockKind::THIN_DENSE));
  blocks.push_back(
      block(slot0 + rat(8, 10), slot0 + rat(9, 10), rat(9, 20), BlockKind::THIN_DENSE));
  return measure_from_gadget(layout.domain_length(), std::move(blocks));
}

StepMeasure build_blanket_sensor(int i, int j, const ReductionParams& params,
                                 const EncoderLayout& layout, long long slot) {
  params.validate();
  layout.validate();
  if (i < 1 || i > params.p_C) throw ValidationError("blanket: encoder index out of range");
  if (j < 2 || j > params.n) throw ValidationError("blanket: index must be in 2..n");

  const long long comb_blocks = 2 * params.p_huge() / params.n;
  const Rational per_block = params.delta_tiny / 20;
  const Rational width = layout.sensor_block_width;
  const Rational shift = layout.shift(i);
  std::vector<GadgetBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(comb_blocks) + 3);
  for (long long t = 0; t < comb_blocks; ++t) {
    const Rational lo = Rational(j - 2) + Rational(t) * params.delta_tiny + shift;
    blocks.push_back(block(lo, lo + width, per_block, BlockKind::SENSOR));
  }

  const Rational kappa = Rational(params.p_large) * params.delta_tiny / 20;
  const Rational side = Rational(9) * (1 - kappa) / 20;
  const Rational middle = Rational(9) * kappa / 10;
  const Rational slot0 = layout.slot_lo(i, slot);
  blocks.push_back(block(slot0 + rat(1, 10), slot0 + rat(2, 10), side, BlockKind::THIN_DENSE));
  blocks.push_back(block(slot0 + rat(9, 20), slot0 + rat(11, 20), middle, BlockKind::THIN_DENSE));
  blocks.push_back(block(slot0 + rat(8, 10), slot0 + rat(9, 10), side, BlockKind::THIN_DENSE));
  return measure_from_gadget(layout.domain_length(), std::move(blocks));
}

}  // namespace reductions
