#include "reductions/circuit.hpp"

namespace reductions {

int BooleanCircuit::num_inputs() const {
  int n = 0;
  for (const Gate& g : gates) {
    if (g.op == GateOp::INPUT) ++n;
  }
  return n;
}

void BooleanCircuit::validate() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    auto check_operand = [&](int idx) {
      if (idx < 0 || idx >= static_cast<int>(i)) {
        throw ValidationError("gate operand must reference an earlier gate");
      }
    };
    switch (g.op) {
      case GateOp::INPUT:
      case GateOp::CONST:
        break;
      case GateOp::NOT:
        check_operand(g.a);
        break;
      case GateOp::AND:
      case GateOp::OR:
        check_operand(g.a);
        check_operand(g.b);
        break;
    }
  }
  for (int o : outputs) {
    if (o < 0 || o >= static_cast<int>(gates.size())) {
      throw ValidationError("output references a missing gate");
    }
  }
}

std::vector<bool> BooleanCircuit::eval(const std::vector<bool>& inputs) const {
  std::vector<bool> wire(gates.size(), false);
  std::size_t next_input = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.op) {
      case GateOp::INPUT:
        if (next_input >= inputs.size()) throw ValidationError("too few circuit inputs");
        wire[i] = inputs[next_input++];
        break;
      case GateOp::CONST:
        wire[i] = g.value;
        break;
      case GateOp::NOT:
        wire[i] = !wire[static_cast<std::size_t>(g.a)];
        break;
      case GateOp::AND:
        wire[i] = wire[static_cast<std::size_t>(g.a)] && wire[static_cast<std::size_t>(g.b)];
        break;
      case GateOp::OR:
        wire[i] = wire[static_cast<std::size_t>(g.a)] || wire[static_cast<std::size_t>(g.b)];
        break;
    }
  }
  if (next_input != inputs.size()) throw ValidationError("too many circuit inputs");
  std::vector<bool> out;
  out.reserve(outputs.size());
  for (int o : outputs) out.push_back(wire[static_cast<std::size_t>(o)]);
  return out;
}

int BooleanCircuit::add_input() {
  gates.push_back(Gate{GateOp::INPUT, -1, -1, false});
  return static_cast<int>(gates.size()) - 1;
}

int BooleanCircuit::add_const(bool v) {
  gates.push_back(Gate{GateOp::CONST, -1, -1, v});
  return static_cast<int>(gates.size()) - 1;
}

int BooleanCircuit::add_not(int a) {
  gates.push_back(Gate{GateOp::NOT, a, -1, false});
  return static_cast<int>(gates.size()) - 1;
}

int BooleanCircuit::add_and(int a, int b) {
  gates.push_back(Gate{GateOp::AND, a, b, false});
  return static_cast<int>(gates.size()) - 1;
}

int BooleanCircuit::add_or(int a, int b) {
  gates.push_back(Gate{GateOp::OR, a, b, false});
  return static_cast<int>(gates.size()) - 1;
}

}  // namespace reductions
