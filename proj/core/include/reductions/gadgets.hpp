#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reductions/circuit.hpp"
#include "reductions/instances.hpp"
#include "reductions/mobius.hpp"
#include "reductions/params.hpp"
#include "reductions/step_measure.hpp"
#include "reductions/tucker.hpp"

namespace reductions {

// ---------------------------------------------------------------------------
// Building blocks

enum class BlockKind { THIN_DENSE, CENTRAL, FEEDBACK, SENSOR, PARITY };

struct GadgetBlock {
  Rational lo;
  Rational hi;
  Rational mass;
  BlockKind kind = BlockKind::CENTRAL;
};

struct Interval {
  Rational lo;
  Rational hi;
};

// Assemble a step measure over [0, L] from pairwise disjoint blocks.
StepMeasure measure_from_gadget(const Rational& L, std::vector<GadgetBlock> blocks);

enum class GateKind { NOT, OR, AND };

// Gate blocks relative to unit slots. Input blocks sit inside the producers'
// transmission gaps; output blocks occupy [0.1,0.2] and [0.8,0.9] of the
// output slot. Masses: NOT 1/4 | 3/8, 3/8; OR 1/8,1/8 | 5/16, 7/16;
// AND 1/8,1/8 | 7/16, 5/16. NOT slots read A+ immediately left of their cut
// region, OR/AND slots read A-.
std::vector<GadgetBlock> build_gate_gadget(GateKind kind,
                                           const std::vector<Interval>& in_intervals,
                                           const Interval& out_interval);

// Exact balancing cut position for one agent: the leftmost c such that the
// cut set other_cuts + {c} splits m into halves of weight 1/2 each. Throws
// ValidationError when no position balances m.
Rational solve_balancing_cut(const StepMeasure& m, std::vector<Rational> other_cuts);

// Feed-forward physical run. Agents must be listed in slot order with each
// agent's balancing cut inside its own slot (gate/sensor agents); every
// agent's input blocks may only read slots to its left. seed_cuts are the
// externally fixed cuts (the c-e agents'). Returns all cuts, sorted.
std::vector<Rational> simulate_forward_cuts(const std::vector<StepMeasure>& agents,
                                            std::vector<Rational> seed_cuts);

// The output rewiring between circuit outputs and feedback drivers:
// (F,F) -> (T,F) un-XORed; otherwise the winning side's pair is
// (TRUE xor x_ref, TRUE xor x_ref) / (FALSE xor x_ref, FALSE xor x_ref).
std::pair<bool, bool> output_gate_transform(bool g_j, bool g_minus_j, bool x_ref);

// ---------------------------------------------------------------------------
// Layout

enum class AgentRole { CE, SENSOR, BLANKET, PARITY, GATE_NOT, GATE_AND, GATE_OR, CONST, DRIVER };

struct AgentInfo {
  AgentRole role = AgentRole::CE;
  int encoder = 0;      // 1-based; 0 for c-e agents
  long long slot = -1;  // slot within the encoder region; -1 for c-e agents
  long long index = 0;  // c-e/driver: signed colour; sensor/blanket: j; gate: circuit gate id
};

struct EncoderLayout {
  int n = 0;
  long long p_C = 0;
  long long slots_per_encoder = 0;
  Rational sensor_block_width;  // delta_tiny / p_C

  Rational region_lo(int i) const;                 // R_i start (i 1-based)
  Rational slot_lo(int i, long long slot) const;   // absolute slot origin
  Rational shift(int i) const;                     // sigma_i
  Rational domain_length() const;
  void validate() const;
};

struct FeedbackBlock {
  int agent = 0;    // index into CHInstance::agents (a c-e agent)
  int encoder = 0;  // 1-based
  long long output = 0;  // signed colour the driving gate represents
  Rational lo;
  Rational hi;
};

struct FeedbackSpec {
  std::vector<FeedbackBlock> blocks;
};

// Sensor s_{i,j}: c-e block of mass 1/10 on
// [(j-1) delta_tiny + sigma_i, + delta_tiny/p_C] plus a 9/20 + 9/20 detector
// pair in its slot of R_i.
StepMeasure build_sensor_agent(int i, long long j, const ReductionParams& params,
                               const EncoderLayout& layout, long long slot);

// Blanket sensor b_{i,j} (j in 2..n): comb of 2 p_huge / n micro-blocks over
// [j-2, j] shifted by sigma_i, plus the three detector blocks
// 9(1-kappa)/20, 9 kappa/10, 9(1-kappa)/20 in its slot.
StepMeasure build_blanket_sensor(int i, int j, const ReductionParams& params,
                                 const EncoderLayout& layout, long long slot);

// ---------------------------------------------------------------------------
// Full construction

struct BuiltReduction {
  CHInstance instance;
  EncoderLayout layout;
  FeedbackSpec feedback;
  std::vector<AgentInfo> roles;  // aligned with instance.agents
  // One copy of the per-encoder logic (identical across encoders). Inputs:
  // per window w = 1..n the sensor gap bits with in-window offset in
  // [band_lo, band_hi) at stride D, then (bit_L, bit_R) per blanket j = 2..n,
  // then x_REF (= sensor 1's gap). Outputs: driver values +1,-1,...,+n,-n.
  BooleanCircuit encoder_logic;
  long long read_stride = 1;
  long long band_lo = 0;  // sensors outside the band are constant on the
  long long band_hi = 0;  // significant region and are not wired up
};

// Per-encoder logic as a plain circuit, for direct evaluation in tests.
BooleanCircuit build_encoder_logic(const NVHDTInstance& inst, const ReductionParams& params,
                                   long long* read_stride = nullptr,
                                   long long* band_lo = nullptr, long long* band_hi = nullptr);

// The bits an encoder reads off a clean c-e cut configuration, in
// encoder-logic input order: banded sensor gap bits per window, blanket
// detector gap pairs for the given states, then x_REF. "Clean" means every
// sensor block lies wholly on one side of some cut, so the gap bit is the
// parity of the cuts at or left of the block. shift positions the blocks for
// a specific encoder (sigma_i); zero reads encoder 1.
std::vector<bool> encoder_input_bits(const std::vector<Rational>& ce_cuts,
                                     const std::vector<BlanketState>& blanket_states,
                                     const ReductionParams& params, long long band_lo,
                                     long long band_hi, const Rational& shift = Rational(0));

BuiltReduction build_reduction(const NVHDTInstance& inst, const ReductionParams& params);

// ---------------------------------------------------------------------------
// Backward direction

struct ExtractedSolution {
  bool ok = false;
  std::string diagnostic;                     // empty when ok
  std::vector<std::vector<Rational>> points;  // p_C points in [-1,1]^n
  std::vector<bool> reliable;                 // per encoder
  SimplexPoint decoded;                       // point read off the c-e cuts
  TransformedPoint transformed;               // after tau clamping
};

ExtractedSolution extract_solution(const NVHDTInstance& inst, const CHInstance& ch,
                                   const LabelledCutSet& sol, const ReductionParams& params);

}  // namespace reductions
