#include "reductions/json_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace reductions {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

long long as_int(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + name + "' must be an integer");
  return v.get<long long>();
}

bool as_bool(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_boolean()) throw ValidationError(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

std::string as_string(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw ValidationError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw ValidationError(std::string("field '") + name + "' must be an array");
  return v;
}

void check_type_tag(const Json& j, const char* expected) {
  if (j.is_object() && j.contains("type")) {
    const Json& t = j.at("type");
    if (!t.is_string() || t.get<std::string>() != expected) {
      throw ValidationError(std::string("type tag is not '") + expected + "'");
    }
  }
}

Json rat_array(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(rational_json(x));
  return a;
}

std::vector<Rational> rat_vector(const Json& j, const char* name) {
  const Json& a = as_array(j, name);
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(rational_from_json(e));
  return out;
}

Json int_array(const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(x);
  return a;
}

std::vector<int> int_vector(const Json& j, const char* name) {
  const Json& a = as_array(j, name);
  std::vector<int> out;
  out.reserve(a.size());
  for (const auto& e : a) {
    if (!e.is_number_integer()) throw ValidationError(std::string("field '") + name + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// Grid labels nest one array level per axis, outermost axis first.
Json nest_labels(const TuckerGridND& g, int axis, std::vector<int>& coord) {
  if (axis == g.k()) return Json(g.label(coord));
  Json a = Json::array();
  for (int v = 1; v <= g.dims[axis]; ++v) {
    coord[axis] = v;
    a.push_back(nest_labels(g, axis + 1, coord));
  }
  return a;
}

void unnest_labels(const Json& j, const std::vector<int>& dims, int axis, std::vector<int>& coord,
                   TuckerGridND& g) {
  if (axis == static_cast<int>(dims.size())) {
    if (!j.is_number_integer()) throw ValidationError("grid labels must be integers");
    g.set_label(coord, j.get<int>());
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dims[axis]) {
    throw ValidationError("label nesting does not match dims");
  }
  for (int v = 1; v <= dims[axis]; ++v) {
    coord[axis] = v;
    unnest_labels(j[static_cast<size_t>(v - 1)], dims, axis + 1, coord, g);
  }
}

const char* role_name(AgentRole r) {
  switch (r) {
    case AgentRole::CE: return "ce";
    case AgentRole::SENSOR: return "sensor";
    case AgentRole::BLANKET: return "blanket";
    case AgentRole::PARITY: return "parity";
    case AgentRole::GATE_NOT: return "gate_not";
    case AgentRole::GATE_AND: return "gate_and";
    case AgentRole::GATE_OR: return "gate_or";
    case AgentRole::CONST: return "const";
    case AgentRole::DRIVER: return "driver";
  }
  throw ValidationError("unknown agent role");
}

AgentRole role_from_name(const std::string& s) {
  if (s == "ce") return AgentRole::CE;
  if (s == "sensor") return AgentRole::SENSOR;
  if (s == "blanket") return AgentRole::BLANKET;
  if (s == "parity") return AgentRole::PARITY;
  if (s == "gate_not") return AgentRole::GATE_NOT;
  if (s == "gate_and") return AgentRole::GATE_AND;
  if (s == "gate_or") return AgentRole::GATE_OR;
  if (s == "const") return AgentRole::CONST;
  if (s == "driver") return AgentRole::DRIVER;
  throw ValidationError("unknown agent role '" + s + "'");
}

}  // namespace

Json rational_json(const Rational& r) { return Json(rat_str(r)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ValidationError("rational must be a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

Json to_json(const StepMeasure& m) {
  Json j;
  j["L"] = rational_json(m.L);
  j["breakpoints"] = rat_array(m.breakpoints);
  j["values"] = rat_array(m.values);
  return j;
}

StepMeasure step_measure_from_json(const Json& j) {
  return StepMeasure(rational_from_json(field(j, "L")), rat_vector(j, "breakpoints"),
                     rat_vector(j, "values"));
}

Json to_json(const CHInstance& inst) {
  Json j;
  j["type"] = "ch";
  j["L"] = rational_json(inst.L);
  j["epsilon"] = rational_json(inst.epsilon);
  j["ce_region_length"] = inst.ce_region_length;
  Json agents = Json::array();
  for (const auto& a : inst.agents) agents.push_back(to_json(a));
  j["agents"] = std::move(agents);
  return j;
}

CHInstance ch_from_json(const Json& j) {
  check_type_tag(j, "ch");
  CHInstance inst;
  inst.L = rational_from_json(field(j, "L"));
  inst.epsilon = rational_from_json(field(j, "epsilon"));
  inst.ce_region_length = static_cast<int>(as_int(j, "ce_region_length"));
  for (const auto& a : as_array(j, "agents")) inst.agents.push_back(step_measure_from_json(a));
  inst.validate();
  return inst;
}

Json to_json(const LabelledCutSet& cuts) {
  Json j;
  j["cuts"] = rat_array(cuts.cuts);
  return j;
}

LabelledCutSet cut_set_from_json(const Json& j) {
  LabelledCutSet c;
  c.cuts = rat_vector(j, "cuts");
  return c;
}

Json to_json(const NecklaceInstance& inst) {
  Json j;
  j["type"] = "necklace";
  j["beads"] = int_array(inst.beads);
  j["thieves"] = inst.thieves;
  return j;
}

NecklaceInstance necklace_from_json(const Json& j) {
  check_type_tag(j, "necklace");
  NecklaceInstance inst;
  inst.beads = int_vector(j, "beads");
  inst.thieves = static_cast<int>(as_int(j, "thieves"));
  inst.validate();
  return inst;
}

Json to_json(const NecklaceSplit& split) {
  Json j;
  j["cut_gaps"] = int_array(split.cut_gaps);
  j["piece_owner"] = int_array(split.piece_owner);
  return j;
}

NecklaceSplit split_from_json(const Json& j) {
  NecklaceSplit s;
  s.cut_gaps = int_vector(j, "cut_gaps");
  s.piece_owner = int_vector(j, "piece_owner");
  return s;
}

Json to_json(const HamSandwichInstance& inst) {
  Json j;
  j["type"] = "sandwich";
  j["n"] = inst.n;
  Json sets = Json::array();
  for (const auto& set : inst.point_sets) {
    Json points = Json::array();
    for (const auto& p : set) points.push_back(rat_array(p));
    sets.push_back(std::move(points));
  }
  j["point_sets"] = std::move(sets);
  return j;
}

HamSandwichInstance sandwich_from_json(const Json& j) {
  check_type_tag(j, "sandwich");
  HamSandwichInstance inst;
  inst.n = static_cast<int>(as_int(j, "n"));
  for (const auto& set : as_array(j, "point_sets")) {
    if (!set.is_array()) throw ValidationError("point set must be an array");
    std::vector<std::vector<Rational>> points;
    for (const auto& p : set) {
      if (!p.is_array()) throw ValidationError("point must be an array");
      std::vector<Rational> coords;
      for (const auto& c : p) coords.push_back(rational_from_json(c));
      points.push_back(std::move(coords));
    }
    inst.point_sets.push_back(std::move(points));
  }
  inst.validate();
  return inst;
}

Json to_json(const Hyperplane& h) {
  Json j;
  j["normal"] = rat_array(h.normal);
  j["offset"] = rational_json(h.offset);
  return j;
}

Hyperplane hyperplane_from_json(const Json& j) {
  Hyperplane h;
  h.normal = rat_vector(j, "normal");
  h.offset = rational_from_json(field(j, "offset"));
  h.validate();
  return h;
}

Json to_json(const OnPlaneAssignment& a) {
  Json j;
  j["set"] = a.set;
  j["point"] = a.point;
  j["side"] = a.side;
  return j;
}

Json to_json(const HamSandwichSolution& sol) {
  Json j;
  j["plane"] = to_json(sol.plane);
  Json on = Json::array();
  for (const auto& a : sol.on_plane) on.push_back(to_json(a));
  j["on_plane"] = std::move(on);
  return j;
}

HamSandwichSolution sandwich_solution_from_json(const Json& j) {
  HamSandwichSolution sol;
  sol.plane = hyperplane_from_json(field(j, "plane"));
  for (const auto& a : as_array(j, "on_plane")) {
    OnPlaneAssignment asg;
    asg.set = static_cast<int>(as_int(a, "set"));
    asg.point = static_cast<int>(as_int(a, "point"));
    asg.side = static_cast<int>(as_int(a, "side"));
    sol.on_plane.push_back(asg);
  }
  return sol;
}

Json to_json(const TuckerGrid2D& g) {
  Json j;
  j["type"] = "tucker2d";
  j["m"] = g.m;
  Json rows = Json::array();
  for (int x = 1; x <= g.m; ++x) {
    Json row = Json::array();
    for (int y = 1; y <= g.m; ++y) row.push_back(g.label(x, y));
    rows.push_back(std::move(row));
  }
  j["labels"] = std::move(rows);
  return j;
}

TuckerGrid2D tucker2d_from_json(const Json& j) {
  check_type_tag(j, "tucker2d");
  const int m = static_cast<int>(as_int(j, "m"));
  const Json& rows = as_array(j, "labels");
  if (static_cast<int>(rows.size()) != m) throw ValidationError("label rows do not match m");
  std::vector<int> labels;
  labels.reserve(static_cast<size_t>(m) * m);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      throw ValidationError("label row length does not match m");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ValidationError("grid labels must be integers");
      labels.push_back(v.get<int>());
    }
  }
  return TuckerGrid2D(m, std::move(labels));
}

Json to_json(const TuckerGridND& g) {
  Json j;
  j["type"] = "tuckernd";
  j["dims"] = int_array(g.dims);
  std::vector<int> coord(g.dims.size(), 1);
  j["labels"] = nest_labels(g, 0, coord);
  j["facet_low"] = int_array(g.facet_low);
  j["facet_high"] = int_array(g.facet_high);
  return j;
}

TuckerGridND tuckernd_from_json(const Json& j) {
  check_type_tag(j, "tuckernd");
  TuckerGridND g;
  g.dims = int_vector(j, "dims");
  for (int d : g.dims) {
    if (d < 1) throw ValidationError("dims must be positive");
  }
  long long cells = 1;
  for (int d : g.dims) cells *= d;
  g.labels.assign(static_cast<size_t>(cells), 0);
  std::vector<int> coord(g.dims.size(), 1);
  unnest_labels(field(j, "labels"), g.dims, 0, coord, g);
  g.facet_low = int_vector(j, "facet_low");
  g.facet_high = int_vector(j, "facet_high");
  g.validate_shape();
  return g;
}

Json to_json(const NVHDTInstance& inst) {
  Json j;
  j["type"] = "nvhdt";
  j["n"] = inst.n;
  j["cubelet_labels"] = int_array(inst.cubelet_labels);
  if (inst.circuit) j["circuit"] = to_json(*inst.circuit);
  j["facet_low"] = int_array(inst.facet_low);
  j["facet_high"] = int_array(inst.facet_high);
  return j;
}

NVHDTInstance nvhdt_from_json(const Json& j) {
  check_type_tag(j, "nvhdt");
  NVHDTInstance inst;
  inst.n = static_cast<int>(as_int(j, "n"));
  inst.cubelet_labels = int_vector(j, "cubelet_labels");
  if (j.contains("circuit") && !j.at("circuit").is_null()) {
    inst.circuit = circuit_from_json(j.at("circuit"));
  }
  inst.facet_low = int_vector(j, "facet_low");
  inst.facet_high = int_vector(j, "facet_high");
  inst.validate();
  return inst;
}

Json to_json(const BooleanCircuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    Json e;
    switch (g.op) {
      case GateOp::INPUT:
        e["op"] = "input";
        break;
      case GateOp::NOT:
        e["op"] = "not";
        e["inputs"] = Json::array({g.a});
        break;
      case GateOp::AND:
        e["op"] = "and";
        e["inputs"] = Json::array({g.a, g.b});
        break;
      case GateOp::OR:
        e["op"] = "or";
        e["inputs"] = Json::array({g.a, g.b});
        break;
      case GateOp::CONST:
        e["op"] = "const";
        e["value"] = g.value;
        break;
    }
    gates.push_back(std::move(e));
  }
  Json j;
  j["gates"] = std::move(gates);
  j["outputs"] = int_array(c.outputs);
  return j;
}

BooleanCircuit circuit_from_json(const Json& j) {
  BooleanCircuit c;
  for (const auto& e : as_array(j, "gates")) {
    const std::string op = as_string(e, "op");
    Gate g;
    if (op == "input") {
      g.op = GateOp::INPUT;
    } else if (op == "const") {
      g.op = GateOp::CONST;
      g.value = as_bool(e, "value");
    } else {
      const std::vector<int> in = int_vector(e, "inputs");
      if (op == "not") {
        if (in.size() != 1) throw ValidationError("not gate needs 1 input");
        g.op = GateOp::NOT;
        g.a = in[0];
      } else if (op == "and" || op == "or") {
        if (in.size() != 2) throw ValidationError(op + " gate needs 2 inputs");
        g.op = op == "and" ? GateOp::AND : GateOp::OR;
        g.a = in[0];
        g.b = in[1];
      } else {
        throw ValidationError("unknown gate op '" + op + "'");
      }
    }
    c.gates.push_back(g);
  }
  c.outputs = int_vector(j, "outputs");
  c.validate();
  return c;
}

Json to_json(const DiscrepancyReport& r) {
  Json j;
  j["per_agent"] = rat_array(r.per_agent);
  j["max_abs"] = rational_json(r.max_abs);
  j["is_epsilon_solution"] = r.is_epsilon_solution;
  return j;
}

Json to_json(const FoldStep& s) {
  Json j;
  j["axis_perm"] = int_array(s.axis_perm);
  j["pad_low"] = s.pad_low;
  j["pad_high"] = s.pad_high;
  j["m1"] = s.m1;
  return j;
}

Json to_json(const FoldTrace& t) {
  Json j;
  j["original_m"] = t.original_m;
  j["extended_3m"] = t.extended_3m;
  j["swapped_12"] = t.swapped_12;
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

FoldTrace fold_trace_from_json(const Json& j) {
  FoldTrace t;
  t.original_m = static_cast<int>(as_int(j, "original_m"));
  t.extended_3m = as_bool(j, "extended_3m");
  t.swapped_12 = as_bool(j, "swapped_12");
  for (const auto& e : as_array(j, "steps")) {
    FoldStep s;
    s.axis_perm = int_vector(e, "axis_perm");
    s.pad_low = static_cast<int>(as_int(e, "pad_low"));
    s.pad_high = static_cast<int>(as_int(e, "pad_high"));
    s.m1 = static_cast<int>(as_int(e, "m1"));
    t.steps.push_back(std::move(s));
  }
  return t;
}

Json to_json(const MomentEmbedding& e) {
  Json j;
  j["n"] = e.n;
  j["bead_positions"] = rat_array(e.bead_positions);
  j["bead_colours"] = int_array(e.bead_colours);
  return j;
}

MomentEmbedding embedding_from_json(const Json& j) {
  MomentEmbedding e;
  e.n = static_cast<int>(as_int(j, "n"));
  e.bead_positions = rat_vector(j, "bead_positions");
  e.bead_colours = int_vector(j, "bead_colours");
  return e;
}

Json to_json(const SandwichReduction& r) {
  Json j;
  j["instance"] = to_json(r.instance);
  j["embedding"] = to_json(r.embedding);
  return j;
}

SandwichReduction sandwich_reduction_from_json(const Json& j) {
  SandwichReduction r;
  r.instance = sandwich_from_json(field(j, "instance"));
  r.embedding = embedding_from_json(field(j, "embedding"));
  return r;
}

Json to_json(const SimplexPoint& p) {
  Json j;
  j["x"] = rat_array(p.x);
  return j;
}

SimplexPoint simplex_point_from_json(const Json& j) {
  SimplexPoint p;
  p.x = rat_vector(j, "x");
  p.validate();
  return p;
}

Json to_json(const TransformedPoint& p) {
  Json j;
  j["tau"] = rational_json(p.tau);
  j["alphas"] = rat_array(p.alphas);
  return j;
}

TransformedPoint transformed_point_from_json(const Json& j) {
  TransformedPoint p;
  p.tau = rational_from_json(field(j, "tau"));
  p.alphas = rat_vector(j, "alphas");
  return p;
}

Json to_json(const ReductionParams& p) {
  Json j;
  j["n"] = p.n;
  j["delta_tiny"] = rational_json(p.delta_tiny);
  j["delta_T"] = rational_json(p.delta_T);
  j["delta_w"] = rational_json(p.delta_w);
  j["p_large"] = p.p_large;
  j["p_C"] = p.p_C;
  j["frac_bits"] = p.frac_bits;
  return j;
}

ReductionParams params_from_json(const Json& j) {
  ReductionParams p;
  p.n = static_cast<int>(as_int(j, "n"));
  p.delta_tiny = rational_from_json(field(j, "delta_tiny"));
  p.delta_T = rational_from_json(field(j, "delta_T"));
  p.delta_w = rational_from_json(field(j, "delta_w"));
  p.p_large = as_int(j, "p_large");
  p.p_C = as_int(j, "p_C");
  p.frac_bits = static_cast<int>(as_int(j, "frac_bits"));
  return p;
}

Json to_json(const EncoderLayout& l) {
  Json j;
  j["n"] = l.n;
  j["p_C"] = l.p_C;
  j["slots_per_encoder"] = l.slots_per_encoder;
  j["sensor_block_width"] = rational_json(l.sensor_block_width);
  return j;
}

EncoderLayout layout_from_json(const Json& j) {
  EncoderLayout l;
  l.n = static_cast<int>(as_int(j, "n"));
  l.p_C = as_int(j, "p_C");
  l.slots_per_encoder = as_int(j, "slots_per_encoder");
  l.sensor_block_width = rational_from_json(field(j, "sensor_block_width"));
  l.validate();
  return l;
}

Json to_json(const FeedbackSpec& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks) {
    Json e;
    e["agent"] = b.agent;
    e["encoder"] = b.encoder;
    e["output"] = b.output;
    e["lo"] = rational_json(b.lo);
    e["hi"] = rational_json(b.hi);
    blocks.push_back(std::move(e));
  }
  Json j;
  j["blocks"] = std::move(blocks);
  return j;
}

FeedbackSpec feedback_from_json(const Json& j) {
  FeedbackSpec f;
  for (const auto& e : as_array(j, "blocks")) {
    FeedbackBlock b;
    b.agent = static_cast<int>(as_int(e, "agent"));
    b.encoder = static_cast<int>(as_int(e, "encoder"));
    b.output = as_int(e, "output");
    b.lo = rational_from_json(field(e, "lo"));
    b.hi = rational_from_json(field(e, "hi"));
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Json to_json(const AgentInfo& a) {
  Json j;
  j["role"] = role_name(a.role);
  j["encoder"] = a.encoder;
  j["slot"] = a.slot;
  j["index"] = a.index;
  return j;
}

Json to_json(const BuiltReduction& b) {
  Json j;
  j["instance"] = to_json(b.instance);
  j["layout"] = to_json(b.layout);
  j["feedback"] = to_json(b.feedback);
  Json roles = Json::array();
  for (const auto& r : b.roles) roles.push_back(to_json(r));
  j["roles"] = std::move(roles);
  j["encoder_logic"] = to_json(b.encoder_logic);
  j["read_stride"] = b.read_stride;
  return j;
}

Json to_json(const ExtractedSolution& s) {
  Json j;
  j["ok"] = s.ok;
  j["diagnostic"] = s.diagnostic;
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(rat_array(p));
  j["points"] = std::move(points);
  Json rel = Json::array();
  for (bool r : s.reliable) rel.push_back(r);
  j["reliable"] = std::move(rel);
  j["decoded"] = to_json(s.decoded);
  j["transformed"] = to_json(s.transformed);
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return Json::parse(in);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

ReductionParams apply_param_overrides(ReductionParams base, const Json& overrides) {
  if (!overrides.is_object()) throw ValidationError("parameter overrides must be a JSON object");
  for (const auto& [key, value] : overrides.items()) {
    if (key == "n") {
      base.n = static_cast<int>(as_int(overrides, "n"));
    } else if (key == "delta_tiny") {
      base.delta_tiny = rational_from_json(value);
    } else if (key == "delta_T") {
      base.delta_T = rational_from_json(value);
    } else if (key == "delta_w") {
      base.delta_w = rational_from_json(value);
    } else if (key == "p_large") {
      base.p_large = as_int(overrides, "p_large");
    } else if (key == "p_C") {
      base.p_C = as_int(overrides, "p_C");
    } else if (key == "frac_bits") {
      base.frac_bits = static_cast<int>(as_int(overrides, "frac_bits"));
    } else {
      throw ValidationError("unknown parameter '" + key + "'");
    }
  }
  return base;
}

}  // namespace reductions
