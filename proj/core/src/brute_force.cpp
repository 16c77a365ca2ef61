#include "reductions/brute_force.hpp"

#include <algorithm>
#include <numeric>

namespace reductions {

namespace {

// Next k-combination of {0..limit-1} in lexicographic order; false when done.
bool next_combination(std::vector<int>& comb, int limit) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < limit - (k - i)) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<NecklaceSplit> brute_force_necklace(const NecklaceInstance& inst, int max_beads) {
  inst.validate();
  if (inst.thieves != 2) throw ValidationError("exhaustive search handles two thieves only");
  const int B = static_cast<int>(inst.beads.size());
  if (B > max_beads) throw ValidationError("bead count exceeds search bound");
  const int n = inst.num_colours();

  const int max_cuts = std::min(n, B - 1);
  for (int k = 0; k <= max_cuts; ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);
    bool more = k <= B - 1;
    while (more) {
      NecklaceSplit split;
      for (int g : comb) split.cut_gaps.push_back(g + 1);
      const int pieces = k + 1;
      for (long long owners = 0; owners < (1LL << pieces); ++owners) {
        split.piece_owner.clear();
        for (int p = 0; p < pieces; ++p) {
          split.piece_owner.push_back(((owners >> (pieces - 1 - p)) & 1) != 0 ? 2 : 1);
        }
        if (verify_necklace(inst, split)) return split;
      }
      more = next_combination(comb, B - 1);
    }
  }
  return std::nullopt;
}

namespace {

// Null vector of the (n-1) x n system v . rows[i] = 0 via exact elimination;
// empty when the null space is not one-dimensional.
std::vector<Rational> hyperplane_normal(std::vector<std::vector<Rational>> rows, int n) {
  const int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i) {
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pr)]);
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const Rational f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                         rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < n; ++j) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != n - 1) return {};  // degenerate subset

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_col = c;
      break;
    }
  }
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(free_col)] = 1;
  for (int i = r - 1; i >= 0; --i) {
    const int pc = pivot_col[static_cast<std::size_t>(i)];
    Rational acc(0);
    for (int j = pc + 1; j < n; ++j) {
      acc += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             v[static_cast<std::size_t>(j)];
    }
    v[static_cast<std::size_t>(pc)] =
        -acc / rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
  }
  return v;
}

bool canonicalize_normal(std::vector<Rational>& v) {
  Rational l1(0);
  for (const Rational& c : v) l1 += rat_abs(c);
  if (l1 == 0) return false;
  int sign = 0;
  for (const Rational& c : v) {
    if (c != 0) {
      sign = rat_sign(c);
      break;
    }
  }
  for (Rational& c : v) c = c * sign / l1;
  return true;
}

// Lexicographically first valid on-plane assignment (+1 as early as
// possible); sets are independent, so each is solved directly.
std::optional<std::vector<OnPlaneAssignment>> assign_on_plane(const HamSandwichInstance& inst,
                                                              const Hyperplane& h) {
  std::vector<OnPlaneAssignment> assignment;
  for (int s = 0; s < static_cast<int>(inst.point_sets.size()); ++s) {
    const auto& set = inst.point_sets[static_cast<std::size_t>(s)];
    std::vector<int> on_plane;
    int strict_pos = 0;
    int strict_neg = 0;
    for (int p = 0; p < static_cast<int>(set.size()); ++p) {
      const Rational v = h.eval(set[static_cast<std::size_t>(p)]);
      if (v > 0) {
        ++strict_pos;
      } else if (v < 0) {
        ++strict_neg;
      } else {
        on_plane.push_back(p);
      }
    }
    const int k = static_cast<int>(on_plane.size());
    const int total = static_cast<int>(set.size());
    const int cap = (total + 1) / 2;
    const int lo = std::max(0, k + strict_neg - cap);
    const int hi = std::min(k, cap - strict_pos);
    if (lo > hi) return std::nullopt;
    const int plus = hi;  // +1 before -1: take as many positives as allowed
    for (int i = 0; i < k; ++i) {
      OnPlaneAssignment a;
      a.set = s;
      a.point = on_plane[static_cast<std::size_t>(i)];
      a.side = i < plus ? 1 : -1;
      assignment.push_back(a);
    }
  }
  if (!verify_ham_sandwich(inst, h, assignment)) return std::nullopt;
  return assignment;
}

// Union median: odd count puts the median point on the plane, even count
// takes the middle-gap midpoint.
Rational union_median_offset(const HamSandwichInstance& inst, const std::vector<Rational>& g) {
  std::vector<Rational> proj;
  for (const auto& set : inst.point_sets) {
    for (const auto& p : set) {
      Rational v(0);
      for (std::size_t i = 0; i < g.size(); ++i) v += g[i] * p[i];
      proj.push_back(v);
    }
  }
  std::sort(proj.begin(), proj.end());
  const std::size_t s = proj.size();
  if (s % 2 == 1) return proj[s / 2];
  return (proj[s / 2 - 1] + proj[s / 2]) / 2;
}

}  // namespace

HamSandwichSolution brute_force_ham_sandwich(const HamSandwichInstance& inst,
                                             int max_points_per_set) {
  inst.validate();
  if (inst.n > 3) throw ValidationError("exhaustive search bounded to n <= 3");
  for (const auto& set : inst.point_sets) {
    if (static_cast<int>(set.size()) > max_points_per_set) {
      throw ValidationError("point set exceeds search bound");
    }
  }

  std::vector<std::vector<Rational>> all;
  for (const auto& set : inst.point_sets) {
    for (const auto& p : set) all.push_back(p);
  }

  if (inst.n == 1) {
    // Median sweep: canonical midpoint first, then every candidate offset.
    std::vector<Rational> g{Rational(1)};
    std::vector<Rational> candidates{union_median_offset(inst, g)};
    std::vector<Rational> proj;
    for (const auto& p : all) proj.push_back(p[0]);
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    for (std::size_t i = 0; i < proj.size(); ++i) {
      candidates.push_back(proj[i]);
      if (i + 1 < proj.size()) candidates.push_back((proj[i] + proj[i + 1]) / 2);
    }
    for (const Rational& off : candidates) {
      Hyperplane h;
      h.normal = g;
      h.offset = off;
      auto assignment = assign_on_plane(inst, h);
      if (assignment.has_value()) return HamSandwichSolution{h, *assignment};
    }
    throw ValidationError("no bisecting point found");
  }

  // Degenerate case: the whole union lies in a hyperplane. Extend a rank-
  // deficient difference space with standard basis vectors for a canonical
  // choice.
  {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < all.size(); ++i) {
      std::vector<Rational> d(static_cast<std::size_t>(inst.n));
      for (int c = 0; c < inst.n; ++c) {
        d[static_cast<std::size_t>(c)] =
            all[i][static_cast<std::size_t>(c)] - all[0][static_cast<std::size_t>(c)];
      }
      rows.push_back(d);
    }
    std::vector<Rational> v = hyperplane_normal(rows, inst.n);
    if (v.empty()) {
      for (int e = 0; e < inst.n && v.empty(); ++e) {
        std::vector<std::vector<Rational>> extended = rows;
        std::vector<Rational> unit(static_cast<std::size_t>(inst.n), Rational(0));
        unit[static_cast<std::size_t>(e)] = 1;
        extended.push_back(unit);
        v = hyperplane_normal(extended, inst.n);
        if (!v.empty()) rows = extended;
      }
    }
    if (!v.empty() && canonicalize_normal(v)) {
      bool contains_all = true;
      Rational off(0);
      for (int c = 0; c < inst.n; ++c) {
        off += v[static_cast<std::size_t>(c)] * all[0][static_cast<std::size_t>(c)];
      }
      Hyperplane h;
      h.normal = v;
      h.offset = off;
      for (const auto& p : all) {
        if (h.eval(p) != 0) {
          contains_all = false;
          break;
        }
      }
      if (contains_all) {
        auto assignment = assign_on_plane(inst, h);
        if (assignment.has_value()) return HamSandwichSolution{h, *assignment};
      }
    }
  }

  // Hyperplanes through n affinely independent input points, lexicographic.
  std::vector<int> comb(static_cast<std::size_t>(inst.n));
  std::iota(comb.begin(), comb.end(), 0);
  if (all.size() >= static_cast<std::size_t>(inst.n)) {
    bool more = true;
    while (more) {
      std::vector<std::vector<Rational>> diffs;
      for (int i = 1; i < inst.n; ++i) {
        std::vector<Rational> d(static_cast<std::size_t>(inst.n));
        for (int c = 0; c < inst.n; ++c) {
          d[static_cast<std::size_t>(c)] =
              all[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])][static_cast<std::size_t>(c)] -
              all[static_cast<std::size_t>(comb[0])][static_cast<std::size_t>(c)];
        }
        diffs.push_back(d);
      }
      std::vector<Rational> v = hyperplane_normal(diffs, inst.n);
      if (!v.empty() && canonicalize_normal(v)) {
        Hyperplane h;
        h.normal = v;
        h.offset = 0;
        for (int c = 0; c < inst.n; ++c) {
          h.offset += v[static_cast<std::size_t>(c)] *
                      all[static_cast<std::size_t>(comb[0])][static_cast<std::size_t>(c)];
        }
        auto assignment = assign_on_plane(inst, h);
        if (assignment.has_value()) return HamSandwichSolution{h, *assignment};
      }
      more = next_combination(comb, static_cast<int>(all.size()));
    }
  }
  throw ValidationError("no bisecting hyperplane found");
}

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> tucker_pairs_impl(
    const TuckerGridND& inst, long long max_cells, bool first_only) {
  inst.validate_shape();
  if (inst.cell_count() > max_cells) throw ValidationError("grid exceeds search bound");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
  const int k = inst.k();
  const long long total = inst.cell_count();
  std::vector<int> offsets_count(static_cast<std::size_t>(k), 3);
  for (long long idx = 0; idx < total; ++idx) {
    const std::vector<int> x = inst.coords(idx);
    const int lab = inst.labels[static_cast<std::size_t>(idx)];
    // Enumerate L-infinity neighbours with larger index, in index order.
    std::vector<long long> nbrs;
    long long combos = 1;
    for (int i = 0; i < k; ++i) combos *= 3;
    for (long long w = 0; w < combos; ++w) {
      long long rem = w;
      std::vector<int> y(x);
      bool ok = true;
      for (int i = k - 1; i >= 0; --i) {
        const int d = static_cast<int>(rem % 3) - 1;
        rem /= 3;
        y[static_cast<std::size_t>(i)] += d;
        if (y[static_cast<std::size_t>(i)] < 1 ||
            y[static_cast<std::size_t>(i)] > inst.dims[static_cast<std::size_t>(i)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const long long idx2 = inst.index(y);
      if (idx2 > idx) nbrs.push_back(idx2);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (long long idx2 : nbrs) {
      if (inst.labels[static_cast<std::size_t>(idx2)] == -lab) {
        found.emplace_back(x, inst.coords(idx2));
        if (first_only) return found;
      }
    }
  }
  return found;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> brute_force_tucker(
    const TuckerGridND& inst, long long max_cells) {
  auto found = tucker_pairs_impl(inst, max_cells, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> brute_force_tucker_2d(
    const TuckerGrid2D& inst, long long max_cells) {
  auto pair = brute_force_tucker(grid_from_2d(inst), max_cells);
  if (!pair.has_value()) return std::nullopt;
  return std::make_pair(std::make_pair(pair->first[0], pair->first[1]),
                        std::make_pair(pair->second[0], pair->second[1]));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> all_tucker_pairs(
    const TuckerGridND& inst, long long max_cells) {
  return tucker_pairs_impl(inst, max_cells, false);
}

}  // namespace reductions
