#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "reductions/brute_force.hpp"
#include "reductions/circuit.hpp"
#include "reductions/gadgets.hpp"
#include "reductions/instances.hpp"
#include "reductions/mobius.hpp"
#include "reductions/moment.hpp"
#include "reductions/params.hpp"
#include "reductions/snake.hpp"
#include "reductions/step_measure.hpp"
#include "reductions/tucker.hpp"
#include "reductions/verify.hpp"

namespace reductions {

using Json = nlohmann::ordered_json;

// Filesystem-level failures (open/read/write), as opposed to malformed content.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals travel as canonical "p/q" strings ("p" when q = 1).
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const StepMeasure& m);
Json to_json(const CHInstance& inst);
Json to_json(const LabelledCutSet& cuts);
Json to_json(const NecklaceInstance& inst);
Json to_json(const NecklaceSplit& split);
Json to_json(const HamSandwichInstance& inst);
Json to_json(const Hyperplane& h);
Json to_json(const OnPlaneAssignment& a);
Json to_json(const HamSandwichSolution& sol);
Json to_json(const TuckerGrid2D& g);
Json to_json(const TuckerGridND& g);
Json to_json(const NVHDTInstance& inst);
Json to_json(const BooleanCircuit& c);
Json to_json(const DiscrepancyReport& r);
Json to_json(const FoldStep& s);
Json to_json(const FoldTrace& t);
Json to_json(const MomentEmbedding& e);
Json to_json(const SandwichReduction& r);
Json to_json(const SimplexPoint& p);
Json to_json(const TransformedPoint& p);
Json to_json(const ReductionParams& p);
Json to_json(const EncoderLayout& l);
Json to_json(const FeedbackSpec& f);
Json to_json(const AgentInfo& a);
Json to_json(const BuiltReduction& b);
Json to_json(const ExtractedSolution& s);

StepMeasure step_measure_from_json(const Json& j);
CHInstance ch_from_json(const Json& j);
LabelledCutSet cut_set_from_json(const Json& j);
NecklaceInstance necklace_from_json(const Json& j);
NecklaceSplit split_from_json(const Json& j);
HamSandwichInstance sandwich_from_json(const Json& j);
Hyperplane hyperplane_from_json(const Json& j);
HamSandwichSolution sandwich_solution_from_json(const Json& j);
TuckerGrid2D tucker2d_from_json(const Json& j);
TuckerGridND tuckernd_from_json(const Json& j);
NVHDTInstance nvhdt_from_json(const Json& j);
BooleanCircuit circuit_from_json(const Json& j);
FoldTrace fold_trace_from_json(const Json& j);
MomentEmbedding embedding_from_json(const Json& j);
SandwichReduction sandwich_reduction_from_json(const Json& j);
SimplexPoint simplex_point_from_json(const Json& j);
TransformedPoint transformed_point_from_json(const Json& j);
ReductionParams params_from_json(const Json& j);
EncoderLayout layout_from_json(const Json& j);
FeedbackSpec feedback_from_json(const Json& j);

// Canonical file form: 2-space indent, trailing newline.
void save_json(const std::string& path, const Json& j);
Json load_json(const std::string& path);
std::string dump_json(const Json& j);

// Applies overrides from a JSON object onto params (fields mirror to_json).
ReductionParams apply_param_overrides(ReductionParams base, const Json& overrides);

}  // namespace reductions
