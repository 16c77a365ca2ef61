#pragma once

// Table-backed colouring oracles shared by the chart and reduction suites.

#include "reductions/tucker.hpp"

namespace reductions::testing {

// Axis-nested oracle: the first off-centre coordinate decides the colour, so
// every cubelet column doubles as a readable fixture. Antipodal by mirroring.
inline NVHDTInstance nested_axis_table(int n) {
  NVHDTInstance inst;
  inst.n = n;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 7;
  inst.cubelet_labels.resize(static_cast<size_t>(total));
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> c(static_cast<size_t>(n));
    long long rem = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[static_cast<size_t>(i)] = static_cast<int>(rem % 7);
      rem /= 7;
    }
    int label = n;  // all-centre fallback
    for (int i = 0; i < n; ++i) {
      if (c[static_cast<size_t>(i)] < 3) {
        label = i + 1;
        break;
      }
      if (c[static_cast<size_t>(i)] > 3) {
        label = -(i + 1);
        break;
      }
    }
    inst.cubelet_labels[static_cast<size_t>(idx)] = label;
  }
  inst.validate();
  return inst;
}

// n=2 oracle split along the second axis, with the centre row split along the
// first: puts a +1/-1 face right next to the centre for averaging tests.
inline NVHDTInstance axis2_table() {
  NVHDTInstance inst;
  inst.n = 2;
  inst.cubelet_labels.resize(49);
  for (int c1 = 0; c1 <= 6; ++c1) {
    for (int c2 = 0; c2 <= 6; ++c2) {
      int label;
      if (c2 < 3) {
        label = -2;
      } else if (c2 > 3) {
        label = 2;
      } else {
        label = c1 < 3 ? -1 : 1;
      }
      inst.cubelet_labels[static_cast<size_t>(c1 * 7 + c2)] = label;
    }
  }
  inst.validate();
  return inst;
}

}  // namespace reductions::testing
