#include <doctest.h>

#include "reductions/brute_force.hpp"
#include "reductions/gen.hpp"
#include "reductions/moment.hpp"
#include "reductions/verify.hpp"

using namespace reductions;

namespace {

NecklaceInstance necklace(std::initializer_list<int> beads) {
  NecklaceInstance inst;
  inst.beads = beads;
  inst.thieves = 2;
  return inst;
}

}  // namespace

TEST_CASE("moment embedding spaces beads along the curve") {
  const SandwichReduction red = necklace_to_sandwich(necklace({1, 2}));
  CHECK(red.instance.n == 2);
  REQUIRE(red.instance.point_sets.size() == 2);
  REQUIRE(red.instance.point_sets[0].size() == 1);
  REQUIRE(red.instance.point_sets[1].size() == 1);
  CHECK(red.instance.point_sets[0][0] == std::vector<Rational>{rat(1, 3), rat(1, 9)});
  CHECK(red.instance.point_sets[1][0] == std::vector<Rational>{rat(2, 3), rat(4, 9)});
  CHECK(red.embedding.bead_positions == std::vector<Rational>{rat(1, 3), rat(2, 3)});
  CHECK(red.embedding.bead_colours == std::vector<int>{1, 2});
}

TEST_CASE("embedding rejects more than two thieves") {
  NecklaceInstance inst = necklace({1, 1, 1, 1});
  inst.thieves = 4;
  CHECK_THROWS_AS(necklace_to_sandwich(inst), ValidationError);
}

TEST_CASE("sandwich solutions map back to necklace splits") {
  const NecklaceInstance inst = necklace({1, 2, 1, 2});
  const SandwichReduction red = necklace_to_sandwich(inst);
  const HamSandwichSolution sol = brute_force_ham_sandwich(red.instance);
  REQUIRE(verify_ham_sandwich(red.instance, sol.plane, sol.on_plane));
  const NecklaceSplit split =
      sandwich_to_necklace_solution(red.embedding, inst, sol.plane, sol.on_plane);
  CHECK(verify_necklace(inst, split));
  CHECK(split.cut_gaps.size() <= 2);
}

TEST_CASE("random two-colour necklaces round-trip through the sandwich") {
  Rng rng(101);
  for (int rep = 0; rep < 12; ++rep) {
    const NecklaceInstance inst = random_necklace(2, 2 + 2 * static_cast<int>(rng.below(2)), rng);
    const SandwichReduction red = necklace_to_sandwich(inst);
    const HamSandwichSolution sol = brute_force_ham_sandwich(red.instance);
    const NecklaceSplit split =
        sandwich_to_necklace_solution(red.embedding, inst, sol.plane, sol.on_plane);
    CHECK(verify_necklace(inst, split));
    CHECK(static_cast<int>(split.cut_gaps.size()) <= inst.num_colours());
  }
}

TEST_CASE("bisecting offset takes the union median") {
  HamSandwichInstance inst;
  inst.n = 1;
  inst.point_sets = {{{Rational(0)}, {Rational(2)}}, {{Rational(1)}, {Rational(5)}}};
  // Even union: middle gap between 1 and 2.
  CHECK(find_bisecting_offset(inst, {Rational(1)}) == rat(3, 2));
  inst.point_sets[1].push_back({Rational(3)});
  // Odd union 0,1,2,3,5: median point 2.
  CHECK(find_bisecting_offset(inst, {Rational(1)}) == Rational(2));
  // Negated gradient mirrors the projections.
  CHECK(find_bisecting_offset(inst, {Rational(-1)}) == Rational(-2));
}

TEST_CASE("candidate labels are antipodal") {
  Rng rng(211);
  const int N = 64;
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 40; ++rep) {
      const HamSandwichInstance inst = random_sandwich(n, 3 + static_cast<int>(rng.below(3)), 16, rng);
      std::vector<Rational> g;
      Rational norm = 0;
      for (int d = 0; d < n; ++d) {
        g.push_back(rng.rational(-N, N, N));
        norm += rat_abs(g.back());
      }
      if (norm == 0) g[0] = Rational(1);
      std::vector<Rational> neg;
      for (const auto& v : g) neg.push_back(-v);
      const int l1 = candidate_hyperplane_label(inst, g, N);
      const int l2 = candidate_hyperplane_label(inst, neg, N);
      CHECK(l1 == -l2);
    }
  }
}

TEST_CASE("power-of-two recursion splits four thieves") {
  NecklaceInstance inst;
  inst.beads = {1, 2, 1, 2, 2, 1, 2, 1};
  inst.thieves = 4;
  const TwoThiefSolver solver = [](const NecklaceInstance& sub) {
    auto split = brute_force_necklace(sub);
    REQUIRE(split.has_value());
    return *split;
  };
  const NecklaceSplit split = solve_power_of_two(inst, solver);
  CHECK(verify_necklace(inst, split));
  CHECK(static_cast<int>(split.cut_gaps.size()) <= 3 * inst.num_colours());
}

TEST_CASE("power-of-two recursion on a monochrome necklace") {
  NecklaceInstance inst;
  inst.beads = {1, 1, 1, 1};
  inst.thieves = 4;
  const TwoThiefSolver solver = [](const NecklaceInstance& sub) {
    auto split = brute_force_necklace(sub);
    REQUIRE(split.has_value());
    return *split;
  };
  const NecklaceSplit split = solve_power_of_two(inst, solver);
  CHECK(verify_necklace(inst, split));
  // One bead each: exactly 3 cuts.
  CHECK(split.cut_gaps.size() == 3);
}

TEST_CASE("power-of-two recursion rejects other thief counts") {
  NecklaceInstance inst;
  inst.beads = {1, 1, 1, 1, 1, 1};
  inst.thieves = 3;
  const TwoThiefSolver solver = [](const NecklaceInstance& sub) {
    return *brute_force_necklace(sub);
  };
  CHECK_THROWS_AS(solve_power_of_two(inst, solver), ValidationError);
}

TEST_CASE("random power-of-two splits verify") {
  Rng rng(307);
  const TwoThiefSolver solver = [](const NecklaceInstance& sub) {
    auto split = brute_force_necklace(sub);
    REQUIRE(split.has_value());
    return *split;
  };
  for (int rep = 0; rep < 10; ++rep) {
    NecklaceInstance inst = random_necklace(2, 8, rng);
    inst.thieves = 4;
    const NecklaceSplit split = solve_power_of_two(inst, solver);
    CHECK(verify_necklace(inst, split));
    CHECK(static_cast<int>(split.cut_gaps.size()) <= 3 * inst.num_colours());
  }
}
