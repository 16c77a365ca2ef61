#include "reductions/mobius.hpp"

#include <algorithm>
#include <string>

#include "reductions/instances.hpp"

namespace reductions {

namespace {

Rational clamp_rat(const Rational& v, const Rational& lo, const Rational& hi) {
  if (v < lo) return lo;
  if (v > hi) return hi;
  return v;
}

void check_dimension(int have, int want, const char* what) {
  if (have != want) {
    throw ValidationError(std::string(what) + ": dimension " + std::to_string(have) +
                          " does not match n = " + std::to_string(want));
  }
}

// alpha_j with the boundary convention alpha_1 = alpha_{n+1} = 0.
Rational alpha_of(const TransformedPoint& p, int j) {
  if (j < 2 || j > p.n()) return Rational(0);
  return p.alphas[static_cast<size_t>(j) - 2];
}

// One-way detour through the identified facets: travel from a to some boundary
// point (z_1..z_n, 0), re-enter as (0, z_1..z_n), continue to b. Minimising
// over z in closed form, the unconstrained optimum pays sum |a_k - b_{k+1}|;
// forcing sum z = 1 adds twice the distance from 1 to the feasible mass window.
Rational seam_detour(const SimplexPoint& a, const SimplexPoint& b) {
  const int n = a.n();
  Rational total = a.x[static_cast<size_t>(n)] + b.x[0];
  Rational mass_lo = 0;
  Rational mass_hi = 0;
  for (int k = 1; k <= n; ++k) {
    const Rational& u = a.x[static_cast<size_t>(k) - 1];
    const Rational& v = b.x[static_cast<size_t>(k)];
    total += rat_abs(u - v);
    mass_lo += std::min(u, v);
    mass_hi += std::max(u, v);
  }
  if (mass_lo > 1) total += 2 * (mass_lo - 1);
  if (mass_hi < 1) total += 2 * (1 - mass_hi);
  return total;
}

// Length of [lo, hi] carrying the wanted label under the piecewise labelling.
Rational label_measure(const LabelledCutSet& labelling, const Rational& lo, const Rational& hi,
                       int want) {
  Rational total = 0;
  Rational prev = lo;
  for (const auto& c : labelling.cuts) {
    if (c <= lo) continue;
    if (c >= hi) break;
    if (labelling.label_at((prev + c) / 2) == want) total += c - prev;
    prev = c;
  }
  if (prev < hi && labelling.label_at((prev + hi) / 2) == want) total += hi - prev;
  return total;
}

// A_j: the label whose share of [|j|-2, |j|] grows when alpha_|j| moves in j's
// direction. The moving pair of cuts bounds the middle piece (index |j|-1,
// label A+ iff |j| odd); increasing alpha_|j| widens it, decreasing shrinks it.
int blanket_label(int j) {
  const bool middle_is_plus = (std::abs(j) % 2 == 1);
  const bool middle_grows = j > 0;
  return (middle_is_plus == middle_grows) ? 1 : -1;
}

}  // namespace

void SimplexPoint::validate() const {
  if (x.size() < 3) throw ValidationError("simplex point needs at least 3 coordinates");
  Rational sum = 0;
  for (const auto& c : x) {
    if (c < 0) throw ValidationError("simplex coordinate is negative");
    sum += c;
  }
  if (sum != 1) throw ValidationError("simplex coordinates must sum to 1");
}

ColourVector colour_to_vector(int colour, int n) {
  const int a = std::abs(colour);
  if (a < 1 || a > n) throw ValidationError("colour out of range");
  ColourVector v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(a) - 1] = colour > 0 ? 1 : -1;
  return v;
}

std::vector<Rational> direction_vector(int n, const Rational& tau, int i) {
  const int a = std::abs(i);
  if (a < 2 || a > n) throw ValidationError("direction index out of range");
  std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(0));
  v[static_cast<size_t>(a) - 2] = -tau;
  v[static_cast<size_t>(a) - 1] = 1;
  v[static_cast<size_t>(a)] = -(1 - tau);
  if (i < 0) {
    for (auto& c : v) c = -c;
  }
  return v;
}

SimplexPoint from_transformed(const TransformedPoint& p) {
  const int n = p.n();
  if (n < 2) throw ValidationError("transformed point needs n >= 2");
  const Rational& tau = p.tau;
  SimplexPoint out;
  out.x.resize(static_cast<size_t>(n) + 1);
  out.x[0] = tau * (Rational(1, n) - alpha_of(p, 2));
  for (int j = 2; j <= n; ++j) {
    out.x[static_cast<size_t>(j) - 1] =
        Rational(1, n) + alpha_of(p, j) - (1 - tau) * alpha_of(p, j - 1) - tau * alpha_of(p, j + 1);
  }
  out.x[static_cast<size_t>(n)] = (1 - tau) * (Rational(1, n) - alpha_of(p, n));
  out.validate();
  return out;
}

TransformResult to_transformed(const SimplexPoint& x) {
  x.validate();
  const int n = x.n();
  const Rational denom = x.x[0] + x.x[static_cast<size_t>(n)];
  if (denom == 0) throw ValidationError("tau undefined: point lies on F_0");
  const Rational tau = x.x[0] / denom;

  std::vector<Rational> partial(static_cast<size_t>(n) + 1, Rational(0));  // partial[j] = x_1+..+x_j
  for (int j = 1; j <= n; ++j) {
    partial[static_cast<size_t>(j)] = partial[static_cast<size_t>(j) - 1] + x.x[static_cast<size_t>(j) - 1];
  }

  std::vector<Rational> al(static_cast<size_t>(n) + 2, Rational(0));  // al[j] = alpha_j
  if (tau >= Rational(1, 2)) {
    for (int j = 1; j + 1 <= n; ++j) {
      al[static_cast<size_t>(j) + 1] =
          (Rational(j - 1, n) + Rational(1, n) * tau + (1 - tau) * al[static_cast<size_t>(j)] -
           partial[static_cast<size_t>(j)]) /
          tau;
    }
  } else {
    for (int j = n; j >= 2; --j) {
      al[static_cast<size_t>(j)] =
          (partial[static_cast<size_t>(j)] - Rational(j - 1, n) - Rational(1, n) * tau +
           tau * al[static_cast<size_t>(j) + 1]) /
          (1 - tau);
    }
  }

  TransformResult result;
  result.point.tau = tau;
  result.point.alphas.assign(al.begin() + 2, al.begin() + 2 + (n - 1));

  // Nearest axis point 0_t minimises the squared Euclidean distance at
  // t = (n(x_1 - x_{n+1}) + 1)/2, clamped into [0, 1].
  Rational t = clamp_rat((Rational(n) * (x.x[0] - x.x[static_cast<size_t>(n)]) + 1) / 2,
                         Rational(0), Rational(1));
  Rational dist_sq = (x.x[0] - t / n) * (x.x[0] - t / n);
  for (int j = 2; j <= n; ++j) {
    const Rational d = x.x[static_cast<size_t>(j) - 1] - Rational(1, n);
    dist_sq += d * d;
  }
  const Rational dn = x.x[static_cast<size_t>(n)] - (1 - t) / n;
  dist_sq += dn * dn;
  const Rational tube = Rational(1, 10 * n * n);
  result.reliable = dist_sq <= tube * tube;
  return result;
}

Rational metric_d(const SimplexPoint& a, const SimplexPoint& b) {
  a.validate();
  b.validate();
  check_dimension(b.n(), a.n(), "metric_d");
  Rational direct = 0;
  for (size_t k = 0; k < a.x.size(); ++k) direct += rat_abs(a.x[k] - b.x[k]);
  return std::min({direct, seam_detour(a, b), seam_detour(b, a)});
}

Rational metric_dtilde(const TransformedPoint& a, const TransformedPoint& b) {
  check_dimension(b.n(), a.n(), "metric_dtilde");
  Rational direct = rat_abs(a.tau - b.tau);
  Rational folded = 0;
  for (size_t k = 0; k < a.alphas.size(); ++k) {
    direct += rat_abs(a.alphas[k] - b.alphas[k]);
    folded += rat_abs(a.alphas[k] + b.alphas[k]);
  }
  const Rational through_ab = a.tau + (1 - b.tau) + folded;
  const Rational through_ba = b.tau + (1 - a.tau) + folded;
  return std::min({direct, through_ab, through_ba});
}

RegionClass classify_region(const TransformedPoint& p, const ReductionParams& params) {
  check_dimension(p.n(), params.n, "classify_region");
  bool tunnel = true;
  bool significant = true;
  for (const auto& a : p.alphas) {
    const Rational mag = rat_abs(a);
    if (mag > params.delta_T) tunnel = false;
    if (mag > params.delta_w) significant = false;
  }
  RegionClass out;
  if (tunnel) {
    out.kind = RegionKind::TWISTED_TUNNEL;
  } else if (significant) {
    out.kind = RegionKind::OUTER;
    for (int j = 2; j <= p.n(); ++j) {
      const Rational a = alpha_of(p, j);
      if (a > params.delta_T) out.outer_colours.push_back(-j);
      if (a < -params.delta_T) out.outer_colours.push_back(j);
    }
  } else {
    out.kind = RegionKind::OUTSIDE_SIGNIFICANT;
  }
  return out;
}

ColourVector colour_f(const TransformedPoint& p, const NVHDTInstance& inst,
                      const ReductionParams& params) {
  check_dimension(p.n(), params.n, "colour_f");
  check_dimension(inst.n, params.n, "colour_f instance");
  const RegionClass region = classify_region(p, params);
  const int n = p.n();
  if (region.kind == RegionKind::OUTSIDE_SIGNIFICANT) {
    throw ValidationError("colour_f undefined outside the significant region");
  }
  if (region.kind == RegionKind::TWISTED_TUNNEL) {
    // Pull back through the central embedding of B, clamping tau so that the
    // tunnel beyond the embedded cube reads the nearest facet of B.
    const Rational half = Rational(1, 2);
    const Rational tau_c = clamp_rat(p.tau, half - params.delta_T, half + params.delta_T);
    std::vector<Rational> q(static_cast<size_t>(n));
    q[0] = (tau_c - half) / params.delta_T;
    for (int j = 2; j <= n; ++j) {
      q[static_cast<size_t>(j) - 1] = alpha_of(p, j) / params.delta_T;
    }
    return colour_to_vector(inst.colour_at_cubelet(inst.cubelet_of_point(q)), n);
  }
  ColourVector v(static_cast<size_t>(n), 0);
  for (int c : region.outer_colours) {
    v[static_cast<size_t>(std::abs(c)) - 1] = c > 0 ? 1 : -1;
  }
  return v;
}

ColourVector f_prime(const TransformedPoint& p, const std::vector<BlanketState>& blanket_state,
                     const NVHDTInstance& inst, const ReductionParams& params) {
  check_dimension(p.n(), params.n, "f_prime");
  const int n = p.n();
  if (blanket_state.size() != static_cast<size_t>(n) - 1) {
    throw ValidationError("f_prime: blanket_state needs one entry per blanket sensor 2..n");
  }
  ColourVector v;
  if (classify_region(p, params).kind == RegionKind::OUTSIDE_SIGNIFICANT) {
    v.assign(static_cast<size_t>(n), 0);
  } else {
    v = colour_f(p, inst, params);
  }
  for (int j = 2; j <= n; ++j) {
    const BlanketState s = blanket_state[static_cast<size_t>(j) - 2];
    if (s == BlanketState::INACTIVE) continue;
    const int toward_plus = (j % 2 == 1) ? 1 : -1;
    v[static_cast<size_t>(j) - 1] = (s == BlanketState::ACTIVE_PLUS) ? toward_plus : -toward_plus;
  }
  return v;
}

std::vector<Rational> borsuk_F(const SimplexPoint& x, const NVHDTInstance& inst,
                               const ReductionParams& params) {
  check_dimension(x.n(), params.n, "borsuk_F");
  const int n = params.n;
  const std::vector<Rational> cuts = cuts_from_simplex(x);
  LabelledCutSet labelling;
  labelling.cuts = cuts;

  std::vector<Rational> total(static_cast<size_t>(n), Rational(0));
  for (long long i = 1; i <= params.p_C; ++i) {
    const Rational shift = Rational(i - 1) * params.delta_tiny / params.p_C;
    std::vector<Rational> shifted;
    shifted.reserve(cuts.size());
    for (const auto& y : cuts) {
      Rational moved = y - shift;
      if (moved < 0) moved += n;  // wraps through the identified facets
      shifted.push_back(moved);
    }
    std::sort(shifted.begin(), shifted.end());
    const SimplexPoint sample = simplex_from_cuts(shifted, n);

    std::vector<BlanketState> states;
    states.reserve(static_cast<size_t>(n) - 1);
    for (int j = 2; j <= n; ++j) {
      states.push_back(blanket_active(labelling, j, static_cast<int>(i), params));
    }
    const ColourVector v = f_prime(to_transformed(sample).point, states, inst, params);
    for (int k = 0; k < n; ++k) total[static_cast<size_t>(k)] += v[static_cast<size_t>(k)];
  }
  for (auto& c : total) c /= params.p_C;
  return total;
}

int blanket_comb_imbalance(const LabelledCutSet& labelling, int j, int i,
                           const ReductionParams& params) {
  if (j < 2 || j > params.n) throw ValidationError("blanket sensor index out of range");
  if (i < 1 || i > params.p_C) throw ValidationError("encoder index out of range");
  const Rational width = params.delta_tiny / params.p_C;
  const Rational shift = Rational(i - 1) * width;
  const long long blocks = 2 * params.p_huge() / params.n;  // comb over [j-2, j]
  int imbalance = 0;
  for (long long t = 0; t < blocks; ++t) {
    const Rational lo = Rational(j - 2) + Rational(t) * params.delta_tiny + shift;
    const Rational hi = lo + width;
    // A block split by a cut carries neither label.
    const auto split = std::upper_bound(labelling.cuts.begin(), labelling.cuts.end(), lo);
    if (split != labelling.cuts.end() && *split < hi) continue;
    imbalance += labelling.label_at(lo + width / 2);
  }
  return imbalance;
}

BlanketState blanket_active(const LabelledCutSet& labelling, int j, int i,
                            const ReductionParams& params) {
  const int imbalance = blanket_comb_imbalance(labelling, j, i, params);
  if (imbalance >= params.p_large) return BlanketState::ACTIVE_PLUS;
  if (imbalance <= -params.p_large) return BlanketState::ACTIVE_MINUS;
  return BlanketState::INACTIVE;
}

std::optional<int> consistent_colour(const TransformedPoint& p, const LabelledCutSet& labelling,
                                     const ReductionParams& params) {
  check_dimension(p.n(), params.n, "consistent_colour");
  const Rational threshold = 2 * params.delta_T;
  const Rational needed = 1 - Rational(params.p_large) / params.p_huge();
  for (int a = 2; a <= p.n(); ++a) {
    for (int j : {a, -a}) {
      const Rational al = alpha_of(p, a);
      const bool far_enough = j > 0 ? al > threshold : al < -threshold;
      if (!far_enough) continue;
      if (label_measure(labelling, Rational(a - 2), Rational(a), blanket_label(j)) >= needed) {
        return j;
      }
    }
  }
  return std::nullopt;
}

std::vector<Rational> cuts_from_simplex(const SimplexPoint& x) {
  x.validate();
  const int n = x.n();
  std::vector<Rational> cuts(static_cast<size_t>(n));
  Rational run = 0;
  for (int j = 1; j <= n; ++j) {
    run += x.x[static_cast<size_t>(j) - 1];
    cuts[static_cast<size_t>(j) - 1] = Rational(n) * run;
  }
  return cuts;
}

SimplexPoint simplex_from_cuts(const std::vector<Rational>& cuts, int n) {
  if (n < 2) throw ValidationError("simplex_from_cuts needs n >= 2");
  const size_t have = cuts.size();
  if (have != static_cast<size_t>(n) && have != static_cast<size_t>(n) - 1) {
    throw ValidationError("simplex_from_cuts: expected n or n-1 cuts");
  }
  std::vector<Rational> ys(cuts);
  if (have == static_cast<size_t>(n) - 1) ys.push_back(Rational(n));
  for (size_t k = 0; k < ys.size(); ++k) {
    if (ys[k] < 0 || ys[k] > n) throw ValidationError("cut outside the c-e region");
    if (k > 0 && ys[k] < ys[k - 1]) throw ValidationError("cuts must be ascending");
  }
  SimplexPoint out;
  out.x.resize(static_cast<size_t>(n) + 1);
  out.x[0] = ys[0] / n;
  for (int j = 2; j <= n; ++j) {
    out.x[static_cast<size_t>(j) - 1] = (ys[static_cast<size_t>(j) - 1] - ys[static_cast<size_t>(j) - 2]) / n;
  }
  out.x[static_cast<size_t>(n)] = (Rational(n) - ys[static_cast<size_t>(n) - 1]) / n;
  out.validate();
  return out;
}

}  // namespace reductions
