#include "reductions/snake.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reductions/verify.hpp"

namespace reductions {

namespace {

// Pads `axis` (1-based) with lo copies of its first layer below and hi copies
// of its last layer above.
TuckerGridND pad_layers(const TuckerGridND& g, int axis, int lo, int hi) {
  const int ax = axis - 1;
  TuckerGridND out;
  out.dims = g.dims;
  out.dims[static_cast<size_t>(ax)] += lo + hi;
  out.facet_low = g.facet_low;
  out.facet_high = g.facet_high;
  out.labels.assign(static_cast<size_t>(out.cell_count()), 0);
  std::vector<int> src(g.dims.size());
  const long long total = out.cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    src = out.coords(idx);
    src[static_cast<size_t>(ax)] =
        std::clamp(src[static_cast<size_t>(ax)] - lo, 1, g.dims[static_cast<size_t>(ax)]);
    out.labels[static_cast<size_t>(idx)] = g.label(src);
  }
  return out;
}

// 3m x m extension: the middle band keeps the input, the two caps repeat the
// first/last row along bent diagonals so the short sides become monochromatic
// (and hence valid +-2 facets). Swaps colours 1 and 2 first when the corner
// label has absolute value 1.
TuckerGridND extend_3m(const TuckerGrid2D& g, bool& swapped_12) {
  const int m = g.m;
  swapped_12 = std::abs(g.label(1, m)) == 1;
  auto relabel = [&](int lab) {
    if (!swapped_12) return lab;
    const int s = lab > 0 ? 1 : -1;
    return s * (std::abs(lab) == 1 ? 2 : 1);
  };
  const auto a = [&](int j) { return relabel(g.label(1, j)); };
  const auto b = [&](int j) { return relabel(g.label(m, j)); };

  TuckerGridND out;
  out.dims = {3 * m, m};
  out.labels.assign(static_cast<size_t>(3 * m) * m, 0);
  std::vector<int> c(2);
  for (int x = 1; x <= 3 * m; ++x) {
    for (int y = 1; y <= m; ++y) {
      int lab;
      if (x <= m) {
        lab = (x + y >= m + 1) ? a(y) : a(m + 1 - x);
      } else if (x <= 2 * m) {
        lab = relabel(g.label(x - m, y));
      } else {
        lab = (3 * m + 1 - x >= y) ? b(y) : b(3 * m + 1 - x);
      }
      c[0] = x;
      c[1] = y;
      out.set_label(c, lab);
    }
  }
  // x = 1 is the constant-a(m) side, x = 3m the constant -a(m) side; the long
  // sides keep the unrestricted +-1 colours.
  out.facet_low = {-a(m), 1};
  out.facet_high = {a(m), -1};
  return out;
}

// Permutes axes so output axis j reads input axis perm[j] (0-based).
TuckerGridND permute_axes(const TuckerGridND& g, const std::vector<int>& perm) {
  const int k = g.k();
  TuckerGridND out;
  out.dims.resize(static_cast<size_t>(k));
  out.facet_low.resize(static_cast<size_t>(k));
  out.facet_high.resize(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    out.dims[static_cast<size_t>(j)] = g.dims[static_cast<size_t>(perm[static_cast<size_t>(j)])];
    out.facet_low[static_cast<size_t>(j)] =
        g.facet_low[static_cast<size_t>(perm[static_cast<size_t>(j)])];
    out.facet_high[static_cast<size_t>(j)] =
        g.facet_high[static_cast<size_t>(perm[static_cast<size_t>(j)])];
  }
  out.labels.assign(g.labels.size(), 0);
  std::vector<int> cin(static_cast<size_t>(k)), cout(static_cast<size_t>(k));
  const long long total = g.cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    cin = g.coords(idx);
    for (int j = 0; j < k; ++j) {
      cout[static_cast<size_t>(j)] = cin[static_cast<size_t>(perm[static_cast<size_t>(j)])];
    }
    out.set_label(cout, g.labels[static_cast<size_t>(idx)]);
  }
  return out;
}

}  // namespace

TuckerGridND pad_to_multiple_of_3(const TuckerGridND& g, int axis) {
  switch (g.dims[static_cast<size_t>(axis - 1)] % 3) {
    case 0:
      return g;
    case 2:
      return pad_layers(g, axis, 0, 1);
    default:
      return pad_layers(g, axis, 1, 1);
  }
}

TuckerGridND pad_axis1_symmetric(const TuckerGridND& g, int per_side) {
  return pad_layers(g, 1, per_side, per_side);
}

TuckerGridND fold_once(const TuckerGridND& g) {
  const int k = g.k();
  const int m1 = g.dims[0];
  if (m1 % 3 != 0) throw ValidationError("fold_once needs axis-1 length divisible by 3");
  const int t = m1 / 3;

  TuckerGridND out;
  out.dims.assign(g.dims.begin() + 1, g.dims.end());
  out.dims.insert(out.dims.begin(), t + 2);
  out.dims.push_back(7);
  out.labels.assign(static_cast<size_t>(out.cell_count()), 0);

  // Axis-1 facets keep their colours (the boundary layers carry the same cell
  // labels as before, plus flood cells); the new last axis takes +-(k+1).
  out.facet_low = g.facet_low;
  out.facet_high = g.facet_high;
  out.facet_low.push_back(k + 1);
  out.facet_high.push_back(-(k + 1));

  std::vector<char> assigned(out.labels.size(), 0);
  std::vector<int> dst(out.dims.size());
  auto place = [&](const std::vector<int>& d, int lab) {
    const long long idx = out.index(d);
    out.labels[static_cast<size_t>(idx)] = lab;
    assigned[static_cast<size_t>(idx)] = 1;
  };

  std::vector<int> src(g.dims.size());
  const long long total = g.cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    src = g.coords(idx);
    const int lab = g.labels[static_cast<size_t>(idx)];
    const int x1 = src[0];
    std::copy(src.begin() + 1, src.end(), dst.begin() + 1);
    if (x1 <= t) {
      dst[0] = x1;
      dst.back() = 2;
      place(dst, lab);
    } else if (x1 == t + 1) {
      dst[0] = t + 1;
      for (int layer : {2, 3, 4}) {
        dst.back() = layer;
        place(dst, lab);
      }
    } else if (x1 <= 2 * t - 1) {
      dst[0] = 2 * t + 2 - x1;
      dst.back() = 4;
      place(dst, lab);
    } else if (x1 == 2 * t) {
      dst[0] = 2;
      for (int layer : {4, 5, 6}) {
        dst.back() = layer;
        place(dst, lab);
      }
    } else {
      dst[0] = x1 + 2 - 2 * t;
      dst.back() = 6;
      place(dst, lab);
    }
  }

  // Flood the two snake-free regions from the outer corners with -+(k+1).
  const int new_k = out.k();
  auto flood = [&](const std::vector<int>& seed, int lab) {
    const long long seed_idx = out.index(seed);
    if (assigned[static_cast<size_t>(seed_idx)]) {
      throw ValidationError("flood seed already labelled");
    }
    std::deque<long long> queue{seed_idx};
    out.labels[static_cast<size_t>(seed_idx)] = lab;
    assigned[static_cast<size_t>(seed_idx)] = 1;
    std::vector<int> c;
    while (!queue.empty()) {
      const long long cur = queue.front();
      queue.pop_front();
      c = out.coords(cur);
      for (int ax = 0; ax < new_k; ++ax) {
        for (int step : {-1, 1}) {
          const int v = c[static_cast<size_t>(ax)] + step;
          if (v < 1 || v > out.dims[static_cast<size_t>(ax)]) continue;
          c[static_cast<size_t>(ax)] = v;
          const long long nxt = out.index(c);
          c[static_cast<size_t>(ax)] -= step;
          if (assigned[static_cast<size_t>(nxt)]) continue;
          out.labels[static_cast<size_t>(nxt)] = lab;
          assigned[static_cast<size_t>(nxt)] = 1;
          queue.push_back(nxt);
        }
      }
    }
  };
  flood(std::vector<int>(out.dims.size(), 1), -(k + 1));
  std::vector<int> seed_hi = out.dims;
  seed_hi[0] = t + 2;
  flood(seed_hi, k + 1);

  for (char a : assigned) {
    if (!a) throw ValidationError("fold left an unlabelled cell");
  }
  return out;
}

std::pair<TuckerGridND, FoldTrace> compose_folds(const TuckerGrid2D& g) {
  FoldTrace trace;
  trace.original_m = g.m;
  trace.extended_3m = true;
  TuckerGridND cur = extend_3m(g, trace.swapped_12);

  while (true) {
    const int k = cur.k();
    int widest = 0;
    for (int j = 1; j < k; ++j) {
      if (cur.dims[static_cast<size_t>(j)] > cur.dims[static_cast<size_t>(widest)]) widest = j;
    }
    if (cur.dims[static_cast<size_t>(widest)] <= 7) break;

    FoldStep step;
    step.axis_perm.resize(static_cast<size_t>(k));
    std::iota(step.axis_perm.begin(), step.axis_perm.end(), 0);
    std::swap(step.axis_perm[0], step.axis_perm[static_cast<size_t>(widest)]);
    cur = permute_axes(cur, step.axis_perm);

    const int rem = cur.dims[0] % 3;
    const int per_side = rem == 0 ? 0 : (rem == 1 ? 1 : 2);
    if (per_side > 0) cur = pad_axis1_symmetric(cur, per_side);
    step.pad_low = per_side;
    step.pad_high = per_side;
    step.m1 = cur.dims[0];
    cur = fold_once(cur);
    trace.steps.push_back(std::move(step));
  }
  return {cur, trace};
}

namespace {

// Inverse of one fold for a single point; empty when the cell lies in a
// flooded region with no preimage.
std::optional<std::vector<int>> unfold_point(const std::vector<int>& p, const FoldStep& step) {
  const int t = step.m1 / 3;
  const int x1p = p.front();
  const int layer = p.back();
  int x1;
  switch (layer) {
    case 2:
      if (x1p > t + 1) return std::nullopt;
      x1 = x1p;
      break;
    case 3:
      if (x1p != t + 1) return std::nullopt;
      x1 = t + 1;
      break;
    case 4:
      if (x1p == t + 1) {
        x1 = t + 1;
      } else if (x1p == 2) {
        x1 = 2 * t;
      } else if (x1p >= 3 && x1p <= t) {
        x1 = 2 * t + 2 - x1p;
      } else {
        return std::nullopt;
      }
      break;
    case 5:
      if (x1p != 2) return std::nullopt;
      x1 = 2 * t;
      break;
    case 6:
      if (x1p < 2 || x1p > t + 2) return std::nullopt;
      x1 = x1p - 2 + 2 * t;
      break;
    default:
      return std::nullopt;  // layers 1 and 7 are flood-filled
  }

  std::vector<int> padded(p.begin(), p.end() - 1);
  padded[0] = std::clamp(x1 - step.pad_low, 1, step.m1 - step.pad_low - step.pad_high);
  std::vector<int> orig(padded.size());
  for (size_t j = 0; j < padded.size(); ++j) {
    orig[static_cast<size_t>(step.axis_perm[j])] = padded[j];
  }
  return orig;
}

std::pair<int, int> unextend_point(int m, const std::vector<int>& p) {
  const int x = p[0];
  const int y = p[1];
  if (x <= m) {
    return (x + y >= m + 1) ? std::make_pair(1, y) : std::make_pair(1, m + 1 - x);
  }
  if (x <= 2 * m) return {x - m, y};
  return (3 * m + 1 - x >= y) ? std::make_pair(m, y) : std::make_pair(m, 3 * m + 1 - x);
}

}  // namespace

std::pair<std::pair<int, int>, std::pair<int, int>> pull_back_solution(
    const TuckerGrid2D& original, const FoldTrace& trace, const std::vector<int>& p1,
    const std::vector<int>& p2) {
  std::vector<int> a = p1;
  std::vector<int> b = p2;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    auto ua = unfold_point(a, *it);
    auto ub = unfold_point(b, *it);
    if (!ua || !ub) throw ValidationError("pair touches a flood-filled region");
    a = std::move(*ua);
    b = std::move(*ub);
  }
  std::pair<int, int> qa{a[0], a[1]};
  std::pair<int, int> qb{b[0], b[1]};
  if (trace.extended_3m) {
    qa = unextend_point(original.m, a);
    qb = unextend_point(original.m, b);
  }
  if (!verify_tucker2d(original, qa, qb)) {
    throw ValidationError("pulled-back pair does not verify on the original grid");
  }
  return {qa, qb};
}

NVHDTInstance grid_to_cubelets(const TuckerGridND& g) {
  g.validate_small_box();
  const int k = g.k();
  for (int d : g.dims) {
    if (d % 2 == 0) {
      throw ValidationError("even side cannot stretch to 7 cubelets antipodally");
    }
  }
  NVHDTInstance inst;
  inst.n = k;
  inst.facet_low = g.facet_low;
  inst.facet_high = g.facet_high;
  inst.cubelet_labels.assign(static_cast<size_t>(inst.cubelet_count()), 0);
  std::vector<int> c(static_cast<size_t>(k)), src(static_cast<size_t>(k));
  const long long total = inst.cubelet_count();
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (int j = k - 1; j >= 0; --j) {
      c[static_cast<size_t>(j)] = static_cast<int>(rem % 7);
      rem /= 7;
    }
    for (int j = 0; j < k; ++j) {
      const int pad = (7 - g.dims[static_cast<size_t>(j)]) / 2;
      src[static_cast<size_t>(j)] =
          std::clamp(c[static_cast<size_t>(j)] + 1 - pad, 1, g.dims[static_cast<size_t>(j)]);
    }
    inst.cubelet_labels[static_cast<size_t>(idx)] = g.label(src);
  }
  inst.validate();
  return inst;
}

}  // namespace reductions
