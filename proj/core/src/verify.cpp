#include "reductions/verify.hpp"

#include <algorithm>
#include <map>

namespace reductions {

DiscrepancyReport eval_ch(const CHInstance& inst, const LabelledCutSet& cuts) {
  inst.validate();
  cuts.validate(inst.L);
  if (cuts.cuts.size() > inst.agents.size()) {
    throw ValidationError("more cuts than agents");
  }
  std::vector<Rational> edges;
  edges.push_back(Rational(0));
  for (const Rational& c : cuts.cuts) edges.push_back(c);
  edges.push_back(inst.L);

  // Prefix signed lengths at the edges let each agent pay only for its own
  // breakpoints instead of every cut piece.
  std::vector<Rational> prefix(edges.size());
  prefix[0] = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    prefix[i + 1] = prefix[i] + Rational(sign) * (edges[i + 1] - edges[i]);
  }
  const auto signed_upto = [&](const Rational& t) {
    const std::size_t i =
        static_cast<std::size_t>(std::upper_bound(edges.begin() + 1, edges.end(), t) -
                                 (edges.begin() + 1));
    const int sign = i % 2 == 0 ? 1 : -1;
    return prefix[i] + Rational(sign) * (t - edges[i]);
  };

  DiscrepancyReport report;
  report.max_abs = 0;
  for (const StepMeasure& agent : inst.agents) {
    Rational disc(0);
    Rational seg_lo(0);
    for (std::size_t p = 0; p < agent.values.size(); ++p) {
      const Rational seg_hi = p < agent.breakpoints.size() ? agent.breakpoints[p] : agent.L;
      if (agent.values[p] != 0 && seg_lo < seg_hi) {
        disc += agent.values[p] * (signed_upto(seg_hi) - signed_upto(seg_lo));
      }
      seg_lo = seg_hi;
    }
    report.per_agent.push_back(disc);
    report.max_abs = std::max(report.max_abs, rat_abs(disc));
  }
  report.is_epsilon_solution = report.max_abs <= inst.epsilon;
  return report;
}

bool verify_necklace(const NecklaceInstance& inst, const NecklaceSplit& split) {
  inst.validate();
  try {
    split.validate(inst);
  } catch (const ValidationError&) {
    return false;
  }
  const int n = inst.num_colours();
  const int B = static_cast<int>(inst.beads.size());
  // counts[t][c]: beads of colour c handed to thief t.
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(inst.thieves),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
  std::size_t piece = 0;
  for (int bead = 1; bead <= B; ++bead) {
    while (piece < split.cut_gaps.size() && bead > split.cut_gaps[piece]) ++piece;
    const int owner = split.piece_owner[piece];
    counts[static_cast<std::size_t>(owner - 1)]
          [static_cast<std::size_t>(inst.beads[static_cast<std::size_t>(bead - 1)] - 1)]++;
  }
  const std::vector<int> totals = inst.colour_counts();
  for (int t = 0; t < inst.thieves; ++t) {
    for (int c = 0; c < n; ++c) {
      if (counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)] * inst.thieves !=
          totals[static_cast<std::size_t>(c)]) {
        return false;
      }
    }
  }
  return true;
}

bool verify_ham_sandwich(const HamSandwichInstance& inst, const Hyperplane& h,
                         const std::vector<OnPlaneAssignment>& side_assignment) {
  inst.validate();
  h.validate();
  if (static_cast<int>(h.normal.size()) != inst.n) {
    throw ValidationError("hyperplane dimension mismatch");
  }

  std::map<std::pair<int, int>, int> assignment;
  for (const OnPlaneAssignment& a : side_assignment) {
    if (a.side != 1 && a.side != -1) throw ValidationError("on-plane side must be +-1");
    if (a.set < 0 || a.set >= static_cast<int>(inst.point_sets.size())) {
      throw ValidationError("on-plane assignment references a missing set");
    }
    const auto& set = inst.point_sets[static_cast<std::size_t>(a.set)];
    if (a.point < 0 || a.point >= static_cast<int>(set.size())) {
      throw ValidationError("on-plane assignment references a missing point");
    }
    if (h.eval(set[static_cast<std::size_t>(a.point)]) != 0) {
      throw ValidationError("on-plane assignment references a point not on the plane");
    }
    if (!assignment.emplace(std::make_pair(a.set, a.point), a.side).second) {
      throw ValidationError("duplicate on-plane assignment");
    }
  }

  for (int s = 0; s < static_cast<int>(inst.point_sets.size()); ++s) {
    const auto& set = inst.point_sets[static_cast<std::size_t>(s)];
    int pos = 0;
    int neg = 0;
    for (int p = 0; p < static_cast<int>(set.size()); ++p) {
      const Rational v = h.eval(set[static_cast<std::size_t>(p)]);
      int side;
      if (v > 0) {
        side = 1;
      } else if (v < 0) {
        side = -1;
      } else {
        auto it = assignment.find(std::make_pair(s, p));
        if (it == assignment.end()) {
          throw ValidationError("point on the plane lacks a side assignment");
        }
        side = it->second;
      }
      (side == 1 ? pos : neg)++;
    }
    const int total = pos + neg;
    const int cap = (total + 1) / 2;
    if (pos > cap || neg > cap) return false;
  }
  return true;
}

namespace {

bool complementary(int a, int b) { return a == -b && a != 0; }

}  // namespace

bool verify_tucker2d(const TuckerGrid2D& inst, std::pair<int, int> p1, std::pair<int, int> p2) {
  inst.validate();
  auto in_range = [&](std::pair<int, int> p) {
    return p.first >= 1 && p.first <= inst.m && p.second >= 1 && p.second <= inst.m;
  };
  if (!in_range(p1) || !in_range(p2)) return false;
  const int dx = p1.first - p2.first;
  const int dy = p1.second - p2.second;
  if (std::max(std::abs(dx), std::abs(dy)) > 1) return false;
  return complementary(inst.label(p1.first, p1.second), inst.label(p2.first, p2.second));
}

bool verify_tucker_nd(const TuckerGridND& inst, const std::vector<int>& p1,
                      const std::vector<int>& p2) {
  inst.validate_shape();
  if (static_cast<int>(p1.size()) != inst.k() || static_cast<int>(p2.size()) != inst.k()) {
    return false;
  }
  for (int i = 0; i < inst.k(); ++i) {
    const int a = p1[static_cast<std::size_t>(i)];
    const int b = p2[static_cast<std::size_t>(i)];
    if (a < 1 || a > inst.dims[static_cast<std::size_t>(i)]) return false;
    if (b < 1 || b > inst.dims[static_cast<std::size_t>(i)]) return false;
    if (std::abs(a - b) > 1) return false;
  }
  return complementary(inst.label(p1), inst.label(p2));
}

bool verify_nvhdt(const NVHDTInstance& inst, const std::vector<std::vector<Rational>>& points,
                  int p_C) {
  inst.validate();
  if (p_C < 2 || static_cast<int>(points.size()) != p_C) return false;
  const Rational bound = Rational(1, 100 * inst.n);
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != inst.n) return false;
    for (const Rational& c : p) {
      if (c < -1 || c > 1) return false;
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Rational linf(0);
      for (int d = 0; d < inst.n; ++d) {
        linf = std::max(linf, rat_abs(points[i][static_cast<std::size_t>(d)] -
                                      points[j][static_cast<std::size_t>(d)]));
      }
      if (linf > bound) return false;
    }
  }
  std::vector<int> colours;
  colours.reserve(points.size());
  for (const auto& p : points) colours.push_back(inst.colour_at_point(p));
  for (int a : colours) {
    for (int b : colours) {
      if (complementary(a, b)) return true;
    }
  }
  return false;
}

}  // namespace reductions
