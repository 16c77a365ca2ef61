#pragma once

#include <vector>

#include "reductions/rational.hpp"

namespace reductions {

enum class GateOp { INPUT, NOT, AND, OR, CONST };

struct Gate {
  GateOp op;
  int a = -1;  // operand indices into the gate list (earlier gates only)
  int b = -1;
  bool value = false;  // CONST only
};

// Topologically ordered gate list; INPUT gates consume external bits in order
// of appearance.
struct BooleanCircuit {
  std::vector<Gate> gates;
  std::vector<int> outputs;

  int num_inputs() const;
  void validate() const;
  std::vector<bool> eval(const std::vector<bool>& inputs) const;

  // Builder helpers; each returns the new gate's index.
  int add_input();
  int add_const(bool v);
  int add_not(int a);
  int add_and(int a, int b);
  int add_or(int a, int b);
};

}  // namespace reductions
