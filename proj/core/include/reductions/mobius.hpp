#pragma once

#include <optional>
#include <vector>

#include "reductions/instances.hpp"
#include "reductions/params.hpp"
#include "reductions/tucker.hpp"

namespace reductions {

// Point of the Mobius-simplex: nonnegative coordinates x_1..x_{n+1} summing to
// 1. The facet identification (x_1,...,x_n,0) == (0,x_1,...,x_n) lives in the
// metric, not in a normal form.
struct SimplexPoint {
  std::vector<Rational> x;

  int n() const { return static_cast<int>(x.size()) - 1; }
  void validate() const;
};

struct TransformedPoint {
  Rational tau;
  std::vector<Rational> alphas;  // alpha_2..alpha_n (n-1 entries)

  int n() const { return static_cast<int>(alphas.size()) + 1; }
};

// Entries e_1..e_n in {-1,0,1}.
using ColourVector = std::vector<int>;

ColourVector colour_to_vector(int colour, int n);  // e_i / -e_|i|

// d^tau_i for i in +-{2..n}; (n+1) entries.
std::vector<Rational> direction_vector(int n, const Rational& tau, int i);

SimplexPoint from_transformed(const TransformedPoint& p);

struct TransformResult {
  TransformedPoint point;
  bool reliable = true;  // false outside the 1/(10 n^2) axis tube
};

// Throws ValidationError when x_1 = x_{n+1} = 0 (tau undefined).
TransformResult to_transformed(const SimplexPoint& x);

Rational metric_d(const SimplexPoint& a, const SimplexPoint& b);

Rational metric_dtilde(const TransformedPoint& a, const TransformedPoint& b);

enum class RegionKind { TWISTED_TUNNEL, OUTER, OUTSIDE_SIGNIFICANT };

struct RegionClass {
  RegionKind kind = RegionKind::TWISTED_TUNNEL;
  std::vector<int> outer_colours;  // nonempty iff kind == OUTER; ascending by |c| then sign
};

RegionClass classify_region(const TransformedPoint& p, const ReductionParams& params);

// Three-stage colouring over the significant region; throws outside it.
ColourVector colour_f(const TransformedPoint& p, const NVHDTInstance& inst,
                      const ReductionParams& params);

enum class BlanketState { INACTIVE, ACTIVE_PLUS, ACTIVE_MINUS };

// blanket_state entry j-2 describes blanket sensor j (j = 2..n). Active
// blankets override entry |j|; remaining entries follow colour_f when p is
// inside the significant region and stay 0 otherwise.
ColourVector f_prime(const TransformedPoint& p, const std::vector<BlanketState>& blanket_state,
                     const NVHDTInstance& inst, const ReductionParams& params);

// Average of f_prime over the p^C shift-sampled points induced by x's cut set
// (sample i shifts the cuts left by (i-1) * delta_tiny / p^C, wrapping through
// the Mobius identification). Blanket states are read off each sample's own
// c-e labelling.
std::vector<Rational> borsuk_F(const SimplexPoint& x, const NVHDTInstance& inst,
                               const ReductionParams& params);

// Cut set describing the c-e region labelling, for blanket/consistency logic:
// cuts inside [0, n], labels alternate from A+ at 0. Encoder i reads comb
// blocks shifted right by (i-1) * delta_tiny / p_C.
int blanket_comb_imbalance(const LabelledCutSet& labelling, int j, int i,
                           const ReductionParams& params);

BlanketState blanket_active(const LabelledCutSet& labelling, int j, int i,
                            const ReductionParams& params);

// Consistent colour: j in +-{2..n} with alpha_|j| beyond 2 delta_T on the
// matching side and label share of A_j over [|j|-2, |j|] at least
// 1 - p_large/p_huge of the interval; smallest |j| first, positive sign first.
std::optional<int> consistent_colour(const TransformedPoint& p, const LabelledCutSet& labelling,
                                     const ReductionParams& params);

// Cut positions encoding x (n cuts y_1..y_n over [0, n]); inverse of the
// cut-gap reading. simplex_from_cuts accepts n or n-1 cuts (a missing cut is
// pinned to the right endpoint; either pinning gives the same identified
// point).
std::vector<Rational> cuts_from_simplex(const SimplexPoint& x);
SimplexPoint simplex_from_cuts(const std::vector<Rational>& cuts, int n);

}  // namespace reductions
