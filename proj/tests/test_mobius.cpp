#include <doctest.h>

#include <vector>

#include "reductions/gen.hpp"
#include "reductions/mobius.hpp"
#include "reductions/snake.hpp"

#include "table_fixture.hpp"

using namespace reductions;

namespace {

TransformedPoint tp(Rational tau, std::vector<Rational> alphas) {
  TransformedPoint p;
  p.tau = std::move(tau);
  p.alphas = std::move(alphas);
  return p;
}

SimplexPoint sp(std::vector<Rational> xs) {
  SimplexPoint x;
  x.x = std::move(xs);
  return x;
}

LabelledCutSet cut_set(std::vector<Rational> cuts) {
  LabelledCutSet s;
  s.cuts = std::move(cuts);
  return s;
}

Rational random_alpha(Rng& rng, long long scale_den) {
  return rng.rational(-1000, 1000, 1000 * scale_den);
}

// Valid chart points: alpha_2 = alpha_n keeps tau recoverable from the ends.
TransformedPoint random_valid_point(Rng& rng, int n, long long alpha_den) {
  TransformedPoint p;
  p.tau = rng.rational(0, 1000, 1000);
  p.alphas.resize(static_cast<size_t>(n) - 1);
  for (auto& a : p.alphas) a = random_alpha(rng, alpha_den);
  if (n >= 3) p.alphas.back() = p.alphas.front();
  return p;
}

}  // namespace

TEST_CASE("direction vectors take the pinned three-entry form") {
  const Rational half(1, 2);
  CHECK(direction_vector(4, half, 3) ==
        std::vector<Rational>{0, -half, 1, -half, 0});
  CHECK(direction_vector(4, Rational(0), 2) == std::vector<Rational>{0, 1, -1, 0, 0});
  CHECK(direction_vector(2, Rational(1, 3), 2) ==
        std::vector<Rational>{Rational(-1, 3), 1, Rational(-2, 3)});

  const auto plus = direction_vector(4, Rational(1, 5), 3);
  const auto minus = direction_vector(4, Rational(1, 5), -3);
  for (size_t k = 0; k < plus.size(); ++k) CHECK(minus[k] == -plus[k]);

  CHECK_THROWS_AS(direction_vector(4, half, 1), ValidationError);
  CHECK_THROWS_AS(direction_vector(4, half, 0), ValidationError);
  CHECK_THROWS_AS(direction_vector(4, half, 5), ValidationError);
}

TEST_CASE("colour vectors are signed basis vectors") {
  CHECK(colour_to_vector(2, 3) == ColourVector{0, 1, 0});
  CHECK(colour_to_vector(-3, 3) == ColourVector{0, 0, -1});
  CHECK(colour_to_vector(1, 2) == ColourVector{1, 0});
  CHECK_THROWS_AS(colour_to_vector(0, 3), ValidationError);
  CHECK_THROWS_AS(colour_to_vector(4, 3), ValidationError);
}

TEST_CASE("forward transform matches hand fixtures") {
  const SimplexPoint a = from_transformed(tp(Rational(1, 2), {0, 0}));
  CHECK(a.x == std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 3),
                                     Rational(1, 6)});

  const SimplexPoint b = from_transformed(tp(Rational(1, 2), {Rational(1, 10)}));
  CHECK(b.x == std::vector<Rational>{Rational(1, 5), Rational(3, 5), Rational(1, 5)});

  // alpha = 0 lands on the axis point 0_tau for any tau.
  for (int n = 2; n <= 5; ++n) {
    const Rational tau(3, 7);
    const SimplexPoint axis = from_transformed(tp(tau, std::vector<Rational>(n - 1, 0)));
    CHECK(axis.x.front() == tau / n);
    CHECK(axis.x.back() == (1 - tau) / n);
    for (int j = 2; j <= n; ++j) CHECK(axis.x[static_cast<size_t>(j) - 1] == Rational(1, n));
  }

  CHECK_THROWS_AS(from_transformed(tp(Rational(1, 2), {10})), ValidationError);
}

TEST_CASE("forward transform is the axis point plus the direction span") {
  Rng rng(71);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      TransformedPoint p;
      p.tau = rng.rational(0, 100, 100);
      for (int j = 2; j <= n; ++j) p.alphas.push_back(rng.rational(-50, 50, 1000 * n));

      std::vector<Rational> expect(static_cast<size_t>(n) + 1);
      expect.front() = p.tau / n;
      expect.back() = (1 - p.tau) / n;
      for (int j = 2; j <= n; ++j) expect[static_cast<size_t>(j) - 1] = Rational(1, n);
      for (int j = 2; j <= n; ++j) {
        const auto d = direction_vector(n, p.tau, j);
        for (size_t k = 0; k < expect.size(); ++k) {
          expect[k] += p.alphas[static_cast<size_t>(j) - 2] * d[k];
        }
      }
      CHECK(from_transformed(p).x == expect);
    }
  }
}

TEST_CASE("transform round-trips exactly on chart points") {
  Rng rng(73);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 60; ++rep) {
      const TransformedPoint p = random_valid_point(rng, n, 4LL * n);
      const TransformResult back = to_transformed(from_transformed(p));
      CHECK(back.point.tau == p.tau);
      CHECK(back.point.alphas == p.alphas);
    }
  }
}

TEST_CASE("reliable flag marks the axis tube") {
  for (int n = 2; n <= 5; ++n) {
    Rng rng(80 + n);
    for (int rep = 0; rep < 25; ++rep) {
      const TransformedPoint p = random_valid_point(rng, n, 40LL * n * n * n);
      CHECK(to_transformed(from_transformed(p)).reliable);
    }
  }
  // Far off axis: x_2 sits 1/6 away from every axis point's 1/3.
  const TransformResult far = to_transformed(sp({Rational(1, 2), Rational(1, 6),
                                                 Rational(1, 6), Rational(1, 6)}));
  CHECK_FALSE(far.reliable);
  CHECK(to_transformed(from_transformed(tp(Rational(2, 7), {0, 0, 0}))).reliable);
}

TEST_CASE("to_transformed needs tau to be defined") {
  CHECK_THROWS_AS(to_transformed(sp({0, Rational(1, 2), Rational(1, 2), 0})),
                  ValidationError);
  CHECK_THROWS_AS(to_transformed(sp({Rational(1, 2), Rational(1, 2)})), ValidationError);
}

TEST_CASE("seam transforms land on tau 0 and 1 with negated alphas") {
  Rng rng(91);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Rational> z(static_cast<size_t>(n));
      Rational sum = 0;
      for (auto& c : z) {
        c = Rational(rng.range(1, 60), 1);
        sum += c;
      }
      for (auto& c : z) c /= sum;

      std::vector<Rational> exit_side(z);
      exit_side.push_back(0);
      std::vector<Rational> entry_side(1, Rational(0));
      entry_side.insert(entry_side.end(), z.begin(), z.end());

      const TransformResult exit_t = to_transformed(sp(exit_side));
      const TransformResult entry_t = to_transformed(sp(entry_side));
      CHECK(exit_t.point.tau == 1);
      CHECK(entry_t.point.tau == 0);
      for (size_t k = 0; k < exit_t.point.alphas.size(); ++k) {
        CHECK(entry_t.point.alphas[k] == -exit_t.point.alphas[k]);
      }
      CHECK(metric_d(sp(exit_side), sp(entry_side)) == 0);
    }
  }
}

TEST_CASE("metric_d matches hand fixtures") {
  const SimplexPoint a = sp({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  const SimplexPoint b = sp({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(metric_d(a, a) == 0);
  CHECK(metric_d(a, b) == Rational(1, 2));  // interior pair: plain L1

  // Near the seam the detour undercuts the direct path.
  const SimplexPoint c = sp({Rational(9, 10), Rational(2, 25), Rational(1, 50)});
  const SimplexPoint d = sp({Rational(1, 50), Rational(22, 25), Rational(1, 10)});
  CHECK(metric_d(c, d) == Rational(2, 25));
  CHECK(metric_d(d, c) == Rational(2, 25));
}

TEST_CASE("metric_d is a symmetric near-axis metric") {
  Rng rng(97);
  std::vector<SimplexPoint> pts;
  for (int rep = 0; rep < 12; ++rep) {
    pts.push_back(from_transformed(random_valid_point(rng, 3, 12)));
  }
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const Rational ab = metric_d(a, b);
      CHECK(ab == metric_d(b, a));
      CHECK((ab == 0) == (a.x == b.x || ab == 0));  // zero on coincident points
      for (const auto& c : pts) {
        CHECK(ab <= metric_d(a, c) + metric_d(c, b));
      }
    }
  }
}

TEST_CASE("metric_dtilde folds through the seam") {
  const TransformedPoint a = tp(Rational(3, 10), {Rational(1, 10)});
  const TransformedPoint b = tp(Rational(1, 2), {Rational(-1, 5)});
  CHECK(metric_dtilde(a, a) == 0);
  CHECK(metric_dtilde(a, b) == Rational(1, 2));  // direct branch

  // Identified seam pair at distance zero.
  const TransformedPoint lo = tp(Rational(0), {Rational(1, 8), Rational(-1, 12)});
  const TransformedPoint hi = tp(Rational(1), {Rational(-1, 8), Rational(1, 12)});
  CHECK(metric_dtilde(lo, hi) == 0);

  // Near-seam pair: folded branch beats the direct one.
  const TransformedPoint p = tp(Rational(1, 20), {Rational(1, 10)});
  const TransformedPoint q = tp(Rational(19, 20), {Rational(-1, 10)});
  CHECK(metric_dtilde(p, q) == Rational(1, 10));
}

TEST_CASE("metric_dtilde is a symmetric bounded-alpha metric") {
  Rng rng(103);
  std::vector<TransformedPoint> pts;
  for (int rep = 0; rep < 12; ++rep) {
    TransformedPoint p;
    p.tau = rng.rational(0, 100, 100);
    p.alphas = {random_alpha(rng, 8), random_alpha(rng, 8)};
    pts.push_back(p);
  }
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const Rational ab = metric_dtilde(a, b);
      CHECK(ab == metric_dtilde(b, a));
      for (const auto& c : pts) {
        CHECK(ab <= metric_dtilde(a, c) + metric_dtilde(c, b));
      }
    }
  }
}

TEST_CASE("metric ratio stays within the polynomial window near the axis") {
  Rng rng(109);
  for (int n : {2, 3}) {
    const Rational lo = Rational(1, 10 * n * n);
    const Rational hi = Rational(10 * n * n);
    for (int rep = 0; rep < 100; ++rep) {
      const TransformedPoint p = random_valid_point(rng, n, 20LL * n * n);
      const TransformedPoint q = random_valid_point(rng, n, 20LL * n * n);
      const Rational dt = metric_dtilde(p, q);
      if (dt == 0) continue;
      const Rational dd = metric_d(from_transformed(p), from_transformed(q));
      CHECK(dd >= lo * dt);
      CHECK(dd <= hi * dt);
    }
  }
}

TEST_CASE("classify_region separates tunnel, outer strips and the rest") {
  const ReductionParams params = ReductionParams::desk_defaults(3);
  const Rational dT = params.delta_T;

  CHECK(classify_region(tp(Rational(1, 2), {0, 0}), params).kind ==
        RegionKind::TWISTED_TUNNEL);
  CHECK(classify_region(tp(Rational(9, 10), {dT, -dT}), params).kind ==
        RegionKind::TWISTED_TUNNEL);  // boundary belongs to the tunnel

  const RegionClass one = classify_region(tp(Rational(1, 2), {2 * dT, 0}), params);
  CHECK(one.kind == RegionKind::OUTER);
  CHECK(one.outer_colours == std::vector<int>{-2});

  const RegionClass two = classify_region(tp(Rational(1, 3), {2 * dT, -2 * dT}), params);
  CHECK(two.kind == RegionKind::OUTER);
  CHECK(two.outer_colours == std::vector<int>{-2, 3});

  CHECK(classify_region(tp(Rational(1, 2), {Rational(1, 10), 0}), params).kind ==
        RegionKind::OUTSIDE_SIGNIFICANT);
  CHECK(classify_region(tp(Rational(0), {0, Rational(-1, 10)}), params).kind ==
        RegionKind::OUTSIDE_SIGNIFICANT);

  CHECK_THROWS_AS(classify_region(tp(Rational(1, 2), {0}), params), ValidationError);
}

TEST_CASE("colour_f reads the oracle through the central embedding") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const Rational dT = params.delta_T;

  CHECK(colour_f(tp(Rational(1, 2), {0}), inst, params) == ColourVector{0, 1});
  CHECK(colour_f(tp(Rational(1, 2) + dT * Rational(5, 7), {0}), inst, params) ==
        ColourVector{-1, 0});
  CHECK(colour_f(tp(Rational(1, 2) - dT * Rational(5, 7), {0}), inst, params) ==
        ColourVector{1, 0});

  // Outside the embedded cube the tunnel reads the nearest facet of B.
  const ColourVector clamped = colour_f(tp(Rational(1, 4), {0}), inst, params);
  CHECK(clamped == colour_f(tp(Rational(1, 2) - dT, {0}), inst, params));
  CHECK(clamped == ColourVector{1, 0});

  Rng rng(113);
  for (int rep = 0; rep < 50; ++rep) {
    const Rational a = dT * Rational(rng.range(-500, 500), 1000);
    CHECK(colour_f(tp(Rational(1, 5), {a}), inst, params) ==
          colour_f(tp(Rational(1, 2) - dT, {a}), inst, params));
  }
}

TEST_CASE("colour_f outer strips give signed basis colours") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const Rational dT = params.delta_T;

  CHECK(colour_f(tp(Rational(1, 3), {2 * dT}), inst, params) == ColourVector{0, -1});
  CHECK(colour_f(tp(Rational(1, 3), {-2 * dT}), inst, params) == ColourVector{0, 1});
  CHECK_THROWS_AS(colour_f(tp(Rational(1, 3), {Rational(1, 7)}), inst, params),
                  ValidationError);
}

TEST_CASE("colour_f negates across the identified strips") {
  Rng rng(127);
  const TuckerGrid2D g = random_tucker2d(9, rng);
  auto [nd, trace] = compose_folds(g);
  (void)trace;
  const NVHDTInstance inst = grid_to_cubelets(nd);
  const ReductionParams params = ReductionParams::desk_defaults(inst.n);
  const int n = inst.n;
  const Rational dT = params.delta_T;

  for (int rep = 0; rep < 120; ++rep) {
    // Strictly below the tunnel window, so clamping hits the -1 facet exactly.
    const Rational tau = (Rational(1, 2) - dT) * Rational(rng.range(0, 999), 1000);
    TransformedPoint p;
    TransformedPoint q;
    p.tau = tau;
    q.tau = 1 - tau;
    const bool tunnel_case = rep % 2 == 0;
    for (int j = 2; j <= n; ++j) {
      Rational a;
      if (tunnel_case) {
        // Odd numerators over a power of two cannot hit cubelet walls.
        a = dT * Rational(2 * rng.range(-(1 << 19), (1 << 19) - 1) + 1, 1 << 20);
      } else {
        a = (rng.flip() ? 2 : -2) * dT;
      }
      p.alphas.push_back(a);
      q.alphas.push_back(-a);
    }
    const ColourVector cp = colour_f(p, inst, params);
    const ColourVector cq = colour_f(q, inst, params);
    for (int k = 0; k < n; ++k) {
      CHECK(cp[static_cast<size_t>(k)] == -cq[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("f_prime applies blanket overrides on top of the colouring") {
  const NVHDTInstance inst = testing::nested_axis_table(3);
  const ReductionParams params = ReductionParams::desk_defaults(3);
  const Rational dT = params.delta_T;
  const auto I = BlanketState::INACTIVE;
  const auto P = BlanketState::ACTIVE_PLUS;
  const auto M = BlanketState::ACTIVE_MINUS;

  const TransformedPoint centre = tp(Rational(1, 2), {0, 0});
  CHECK(f_prime(centre, {I, I}, inst, params) == ColourVector{0, 0, 1});

  // Odd sensors push entry |j| to +1 when active towards A+, even ones to -1.
  CHECK(f_prime(centre, {I, P}, inst, params) == ColourVector{0, 0, 1});
  CHECK(f_prime(centre, {I, M}, inst, params) == ColourVector{0, 0, -1});
  CHECK(f_prime(centre, {P, I}, inst, params) == ColourVector{0, -1, 1});
  CHECK(f_prime(centre, {M, I}, inst, params) == ColourVector{0, 1, 1});
  CHECK(f_prime(centre, {M, P}, inst, params) == ColourVector{0, 1, 1});

  // The override wins even when the base colouring disagrees.
  const TransformedPoint strip = tp(Rational(1, 2), {0, 2 * dT});
  CHECK(f_prime(strip, {I, I}, inst, params) == ColourVector{0, 0, -1});
  CHECK(f_prime(strip, {I, P}, inst, params) == ColourVector{0, 0, 1});

  // Outside the significant region only overrides speak.
  const TransformedPoint outside = tp(Rational(1, 2), {Rational(1, 6), 0});
  CHECK(f_prime(outside, {I, I}, inst, params) == ColourVector{0, 0, 0});
  CHECK(f_prime(outside, {I, M}, inst, params) == ColourVector{0, 0, -1});

  CHECK_THROWS_AS(f_prime(centre, {I}, inst, params), ValidationError);
}

TEST_CASE("blanket imbalance counts whole blocks only") {
  const ReductionParams params = ReductionParams::desk_defaults(2);
  REQUIRE(params.p_large == 200);
  const Rational pitch = params.delta_tiny;           // 1/400
  const Rational width = pitch / params.p_C;          // 1/3200

  // No cuts: all 800 blocks of [0,2] read the leading label.
  CHECK(blanket_comb_imbalance(cut_set({}), 2, 1, params) == 800);
  CHECK(blanket_active(cut_set({}), 2, 1, params) == BlanketState::ACTIVE_PLUS);

  // Alternating unit pieces balance out.
  CHECK(blanket_comb_imbalance(cut_set({1}), 2, 1, params) == 0);
  CHECK(blanket_active(cut_set({1}), 2, 1, params) == BlanketState::INACTIVE);

  // A cut on a block edge keeps both neighbours whole.
  CHECK(blanket_comb_imbalance(cut_set({Rational(5, 4)}), 2, 1, params) == 200);
  // A cut inside a block voids exactly that block.
  CHECK(blanket_comb_imbalance(cut_set({499 * pitch + width / 2}), 2, 1, params) == 199);
  CHECK(blanket_comb_imbalance(cut_set({502 * pitch + width / 2}), 2, 1, params) == 205);

  CHECK_THROWS_AS(blanket_comb_imbalance(cut_set({}), 1, 1, params), ValidationError);
  CHECK_THROWS_AS(blanket_comb_imbalance(cut_set({}), 2, 9, params), ValidationError);
}

TEST_CASE("blanket activation flips exactly at the threshold") {
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const Rational pitch = params.delta_tiny;
  const Rational width = pitch / params.p_C;

  CHECK(blanket_active(cut_set({499 * pitch + width / 2}), 2, 1, params) ==
        BlanketState::INACTIVE);  // imbalance p_large - 1
  CHECK(blanket_active(cut_set({Rational(5, 4)}), 2, 1, params) ==
        BlanketState::ACTIVE_PLUS);  // imbalance p_large
  CHECK(blanket_active(cut_set({502 * pitch + width / 2}), 2, 1, params) ==
        BlanketState::ACTIVE_PLUS);  // imbalance p_large + 5
  CHECK(blanket_active(cut_set({Rational(3, 4)}), 2, 1, params) ==
        BlanketState::ACTIVE_MINUS);  // 300 vs 500 blocks

  // The shifted comb of a later encoder sees the same picture.
  CHECK(blanket_active(cut_set({Rational(5, 4)}), 2, 3, params) ==
        BlanketState::ACTIVE_PLUS);
  CHECK(blanket_active(cut_set({1}), 2, 5, params) == BlanketState::INACTIVE);
}

TEST_CASE("consistent_colour demands both distance and label share") {
  const ReductionParams params = ReductionParams::desk_defaults(2);

  // Tunnel points never have a consistent colour.
  CHECK_FALSE(consistent_colour(tp(Rational(1, 2), {0}), cut_set({1}), params).has_value());

  // alpha_2 beyond 2 delta_T with a dominant middle label: +2.
  const TransformedPoint wide = tp(Rational(1, 2), {Rational(1, 10)});
  const auto cuts_wide = cut_set({Rational(2, 5), Rational(8, 5)});
  CHECK(consistent_colour(wide, cuts_wide, params) == 2);

  // Mirrored point and labelling: -2.
  const TransformedPoint narrow = tp(Rational(1, 2), {Rational(-1, 10)});
  const auto cuts_narrow = cut_set({Rational(3, 5), Rational(7, 5)});
  CHECK(consistent_colour(narrow, cuts_narrow, params) == -2);

  // Distance holds but the labelling contradicts the direction: none.
  const auto cuts_contra = cut_set({Rational(9, 10), Rational(11, 10)});
  CHECK_FALSE(consistent_colour(wide, cuts_contra, params).has_value());
}

TEST_CASE("consistent_colour prefers the smallest axis positive first") {
  const ReductionParams params = ReductionParams::desk_defaults(3);
  REQUIRE(1 - Rational(params.p_large) / params.p_huge() == Rational(5, 6));
  const Rational a(1, 22);  // beyond 2 delta_T = 1/45

  // A- dominates both [0,2] (share 9/10) and [1,3] (share 19/20).
  const auto cuts = cut_set({Rational(1, 10), Rational(19, 10), Rational(2)});
  CHECK(consistent_colour(tp(Rational(1, 2), {a, -a}), cuts, params) == 2);
  CHECK(consistent_colour(tp(Rational(1, 2), {-a, -a}), cuts, params) == -3);
  CHECK_FALSE(consistent_colour(tp(Rational(1, 2), {-a, a}), cuts, params).has_value());
}

TEST_CASE("cut encoding round-trips simplex points") {
  const SimplexPoint x = sp({Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)});
  const auto cuts = cuts_from_simplex(x);
  CHECK(cuts == std::vector<Rational>{Rational(1, 2), Rational(3, 2), Rational(5, 2)});
  CHECK(simplex_from_cuts(cuts, 3).x == x.x);

  // n-1 cuts pin the missing one to the right endpoint.
  const SimplexPoint pinned = simplex_from_cuts({Rational(1, 2), Rational(3, 2)}, 3);
  CHECK(pinned.x == std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2), 0});

  Rng rng(131);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const SimplexPoint p = from_transformed(random_valid_point(rng, n, 4LL * n));
      const SimplexPoint back = simplex_from_cuts(cuts_from_simplex(p), n);
      CHECK(back.x == p.x);
    }
  }

  CHECK_THROWS_AS(simplex_from_cuts({Rational(1, 2)}, 3), ValidationError);
  CHECK_THROWS_AS(simplex_from_cuts({Rational(-1, 2), 1, 2}, 3), ValidationError);
  CHECK_THROWS_AS(simplex_from_cuts({2, 1, Rational(5, 2)}, 3), ValidationError);
}

TEST_CASE("borsuk_F is the plain colour deep inside a cubelet") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const SimplexPoint x = from_transformed(tp(Rational(1, 2), {0}));
  CHECK(borsuk_F(x, inst, params) == std::vector<Rational>{0, 1});
}

TEST_CASE("borsuk_F averages across a shared cubelet face") {
  const NVHDTInstance inst = testing::axis2_table();
  const ReductionParams params = ReductionParams::desk_defaults(2);
  // Five shift samples stay right of the q_1 = -1/7 wall, three cross it,
  // mixing the +1 and -1 labels of the straddled cubelet pair.
  const Rational tau = Rational(1, 2) + params.delta_T * (Rational(-1, 7) + Rational(11, 200));
  const SimplexPoint x = from_transformed(tp(tau, {0}));
  CHECK(borsuk_F(x, inst, params) == std::vector<Rational>{Rational(1, 4), 0});
}

TEST_CASE("borsuk_F keeps magnitude one on an outer strip") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const SimplexPoint x = from_transformed(tp(Rational(1, 2), {Rational(1, 20)}));
  CHECK(borsuk_F(x, inst, params) == std::vector<Rational>{0, -1});
}

TEST_CASE("borsuk_F relies on blanket overrides beyond the significant region") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  const TransformedPoint p = tp(Rational(1, 2), {Rational(3, 20)});
  const SimplexPoint x = from_transformed(p);

  LabelledCutSet labelling;
  labelling.cuts = cuts_from_simplex(x);
  CHECK(blanket_active(labelling, 2, 1, params) == BlanketState::ACTIVE_MINUS);
  CHECK(borsuk_F(x, inst, params) == std::vector<Rational>{0, 1});
}

TEST_CASE("borsuk_F wraps shifted cuts through the seam") {
  const NVHDTInstance inst = testing::nested_axis_table(2);
  const ReductionParams params = ReductionParams::desk_defaults(2);
  // On the seam itself the shift samples split between the identified sheets,
  // whose tunnel colours are negated: 1 sample at +e_1, 7 at -e_1.
  const SimplexPoint x = sp({0, Rational(1, 2), Rational(1, 2)});
  CHECK(borsuk_F(x, inst, params) == std::vector<Rational>{Rational(-3, 4), 0});
}

TEST_CASE("direction vectors: exact rank is n-1 for any tau") {
  for (int n = 2; n <= 6; ++n) {
    for (const Rational& tau : {Rational(0), rat(1, 2), rat(3, 10), Rational(1)}) {
      // Rows d^tau_i, i = 2..n; exact Gaussian elimination.
      std::vector<std::vector<Rational>> rows;
      for (int i = 2; i <= n; ++i) rows.push_back(direction_vector(n, tau, i));
      int rank = 0;
      std::size_t col = 0;
      while (rank < static_cast<int>(rows.size()) && col < rows[0].size()) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) {
          ++col;
          continue;
        }
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
          if (rows[r][col] == 0) continue;
          const Rational f = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
          for (std::size_t c = col; c < rows[r].size(); ++c) {
            rows[r][c] -= f * rows[static_cast<std::size_t>(rank)][c];
          }
        }
        ++rank;
        ++col;
      }
      CHECK(rank == n - 1);
    }
  }
}

TEST_CASE("explicit seam pairs are identified points") {
  Rng rng(0x5ea31234);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<Rational> alphas;
      for (int i = 2; i <= n; ++i) {
        alphas.push_back(rat(static_cast<long long>(rng.below(41)) - 20, 1000));
      }
      std::vector<Rational> neg;
      for (const auto& a : alphas) neg.push_back(-a);

      const SimplexPoint zero_side = from_transformed(tp(Rational(0), alphas));
      const SimplexPoint one_side = from_transformed(tp(Rational(1), neg));
      // (0; a) and (1; -a) are the same point up to the facet rotation.
      REQUIRE(zero_side.x.front() == 0);
      REQUIRE(one_side.x.back() == 0);
      for (int j = 1; j <= n; ++j) {
        CHECK(one_side.x[static_cast<std::size_t>(j) - 1] == zero_side.x[static_cast<std::size_t>(j)]);
      }
      CHECK(metric_d(zero_side, one_side) == 0);
    }
  }
}
