#include "reductions/moment.hpp"

#include <algorithm>
#include <array>

#include "reductions/brute_force.hpp"

namespace reductions {

SandwichReduction necklace_to_sandwich(const NecklaceInstance& inst) {
  // No divisibility requirement: the embedding itself is total; only the
  // back-mapping needs balanced colour counts.
  if (inst.thieves != 2) throw ValidationError("moment embedding needs exactly 2 thieves");
  if (inst.beads.empty()) throw ValidationError("necklace has no beads");
  for (int b : inst.beads) {
    if (b < 1) throw ValidationError("bead colours start at 1");
  }
  const int n = inst.num_colours();
  const int B = static_cast<int>(inst.beads.size());

  SandwichReduction red;
  red.embedding.n = n;
  red.instance.n = n;
  red.instance.point_sets.assign(static_cast<size_t>(n), {});
  for (int j = 1; j <= B; ++j) {
    const Rational alpha = rat(j, B + 1);
    red.embedding.bead_positions.push_back(alpha);
    red.embedding.bead_colours.push_back(inst.beads[static_cast<size_t>(j - 1)]);
    std::vector<Rational> point;
    Rational power = alpha;
    for (int d = 0; d < n; ++d) {
      point.push_back(power);
      power *= alpha;
    }
    red.instance.point_sets[static_cast<size_t>(inst.beads[static_cast<size_t>(j - 1)] - 1)]
        .push_back(std::move(point));
  }
  return red;
}

NecklaceSplit sandwich_to_necklace_solution(const MomentEmbedding& embedding,
                                            const NecklaceInstance& inst, const Hyperplane& h,
                                            const std::vector<OnPlaneAssignment>& on_plane) {
  const int B = static_cast<int>(embedding.bead_positions.size());
  if (static_cast<int>(inst.beads.size()) != B) {
    throw ValidationError("embedding does not match the necklace");
  }

  // Recover each bead's side; exact zeros take the provided assignment.
  std::vector<int> per_set_seen(static_cast<size_t>(embedding.n), 0);
  std::vector<int> side(static_cast<size_t>(B), 0);
  for (int j = 0; j < B; ++j) {
    const Rational& alpha = embedding.bead_positions[static_cast<size_t>(j)];
    std::vector<Rational> point;
    Rational power = alpha;
    for (int d = 0; d < embedding.n; ++d) {
      point.push_back(power);
      power *= alpha;
    }
    const int set = embedding.bead_colours[static_cast<size_t>(j)] - 1;
    const int point_idx = per_set_seen[static_cast<size_t>(set)]++;
    const Rational v = h.eval(point);
    if (v > 0) {
      side[static_cast<size_t>(j)] = 1;
    } else if (v < 0) {
      side[static_cast<size_t>(j)] = -1;
    } else {
      side[static_cast<size_t>(j)] = 0;
      for (const auto& a : on_plane) {
        if (a.set == set && a.point == point_idx) {
          side[static_cast<size_t>(j)] = a.side;
          break;
        }
      }
      if (side[static_cast<size_t>(j)] == 0) {
        throw ValidationError("bead on the hyperplane without a side assignment");
      }
    }
  }

  NecklaceSplit split;
  split.piece_owner.push_back(side[0] > 0 ? 1 : 2);
  for (int j = 1; j < B; ++j) {
    if (side[static_cast<size_t>(j)] != side[static_cast<size_t>(j - 1)]) {
      split.cut_gaps.push_back(j);
      split.piece_owner.push_back(side[static_cast<size_t>(j)] > 0 ? 1 : 2);
    }
  }
  split.validate(inst);
  return split;
}

Rational find_bisecting_offset(const HamSandwichInstance& inst, const std::vector<Rational>& g) {
  std::vector<Rational> proj;
  for (const auto& set : inst.point_sets) {
    for (const auto& p : set) {
      Rational dot = 0;
      for (size_t d = 0; d < g.size(); ++d) dot += g[d] * p[d];
      proj.push_back(dot);
    }
  }
  if (proj.empty()) throw ValidationError("no points to bisect");
  std::sort(proj.begin(), proj.end());
  const size_t s = proj.size();
  if (s % 2 == 1) return proj[s / 2];
  return (proj[s / 2 - 1] + proj[s / 2]) / 2;
}

int candidate_hyperplane_label(const HamSandwichInstance& inst, const std::vector<Rational>& g,
                               int N) {
  if (static_cast<int>(g.size()) != inst.n) throw ValidationError("gradient dimension mismatch");
  bool nonzero = false;
  for (const auto& v : g) nonzero = nonzero || v != 0;
  if (!nonzero) throw ValidationError("zero gradient");

  Hyperplane h;
  h.normal = g;
  h.offset = find_bisecting_offset(inst, g);

  // Most unevenly split set, ties lexicographic. The sign follows the
  // gradient's own halfspaces (that is what makes antipodal gradients receive
  // opposite labels); an exact tie is resolved by which side holds the
  // reference point (1/2N, 1, ..., 1), which lies on no candidate hyperplane.
  int best_set = -1;
  long long best_imbalance = -1;
  int best_sign = 1;
  for (size_t s = 0; s < inst.point_sets.size(); ++s) {
    long long pos = 0, neg = 0;
    for (const auto& p : inst.point_sets[s]) {
      const Rational v = h.eval(p);
      if (v > 0) ++pos;
      if (v < 0) ++neg;
    }
    const long long imbalance = pos > neg ? pos - neg : neg - pos;
    if (imbalance > best_imbalance) {
      best_imbalance = imbalance;
      best_set = static_cast<int>(s);
      if (pos != neg) {
        best_sign = pos > neg ? 1 : -1;
      } else {
        std::vector<Rational> ref;
        ref.push_back(Rational(1, 2LL * N));
        for (int d = 1; d < inst.n; ++d) ref.push_back(Rational(1));
        best_sign = h.eval(ref) > 0 ? 1 : -1;
      }
    }
  }
  return best_sign * (best_set + 1);
}

namespace {

struct PieceRange {
  int first_bead = 0;  // 0-based, inclusive
  int last_bead = 0;   // inclusive
};

// Splits the bead interval [0, B) into the split's pieces.
std::vector<PieceRange> piece_ranges(int B, const NecklaceSplit& split) {
  std::vector<PieceRange> out;
  int start = 0;
  for (int gap : split.cut_gaps) {
    out.push_back({start, gap - 1});
    start = gap;
  }
  out.push_back({start, B - 1});
  return out;
}

}  // namespace

NecklaceSplit solve_power_of_two(const NecklaceInstance& inst, const TwoThiefSolver& solver) {
  inst.validate();
  const int k = inst.thieves;
  if (k < 1 || (k & (k - 1)) != 0) throw ValidationError("thief count must be a power of two");

  const int B = static_cast<int>(inst.beads.size());
  if (k == 1) {
    NecklaceSplit split;
    split.piece_owner.push_back(1);
    split.validate(inst);
    return split;
  }

  NecklaceInstance half = inst;
  half.thieves = 2;
  // A k-thief split needs counts divisible by k; halving keeps them even.
  const NecklaceSplit top = solver(half);

  // Partition beads between the two halves, preserving order.
  const auto ranges = piece_ranges(B, top);
  std::vector<int> owner_of_bead(static_cast<size_t>(B), 0);
  for (size_t p = 0; p < ranges.size(); ++p) {
    for (int j = ranges[p].first_bead; j <= ranges[p].last_bead; ++j) {
      owner_of_bead[static_cast<size_t>(j)] = top.piece_owner[p];
    }
  }

  NecklaceSplit result;
  if (k == 2) {
    result = top;
    result.validate(inst);
    return result;
  }

  std::array<std::vector<int>, 2> child_beads;       // glued child necklaces
  std::array<std::vector<int>, 2> child_positions;   // original bead index per child bead
  for (int j = 0; j < B; ++j) {
    const int t = owner_of_bead[static_cast<size_t>(j)] - 1;
    child_beads[static_cast<size_t>(t)].push_back(inst.beads[static_cast<size_t>(j)]);
    child_positions[static_cast<size_t>(t)].push_back(j);
  }

  // Recurse on each half with k/2 thieves; thief t of child c becomes
  // thief c * k/2 + t overall.
  std::vector<int> final_owner(static_cast<size_t>(B), 0);
  for (int c = 0; c < 2; ++c) {
    NecklaceInstance child;
    child.beads = child_beads[static_cast<size_t>(c)];
    child.thieves = k / 2;
    const NecklaceSplit sub = solve_power_of_two(child, solver);
    const auto sub_ranges = piece_ranges(static_cast<int>(child.beads.size()), sub);
    for (size_t p = 0; p < sub_ranges.size(); ++p) {
      for (int j = sub_ranges[p].first_bead; j <= sub_ranges[p].last_bead; ++j) {
        const int orig = child_positions[static_cast<size_t>(c)][static_cast<size_t>(j)];
        final_owner[static_cast<size_t>(orig)] = c * (k / 2) + sub.piece_owner[p];
      }
    }
  }

  for (int j = 0; j < B; ++j) {
    if (j == 0 || final_owner[static_cast<size_t>(j)] != final_owner[static_cast<size_t>(j - 1)]) {
      if (j > 0) result.cut_gaps.push_back(j);
      result.piece_owner.push_back(final_owner[static_cast<size_t>(j)]);
    }
  }
  result.validate(inst);
  return result;
}

}  // namespace reductions
