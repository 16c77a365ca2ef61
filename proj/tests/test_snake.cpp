#include <doctest.h>

#include "reductions/brute_force.hpp"
#include "reductions/gen.hpp"
#include "reductions/snake.hpp"
#include "reductions/verify.hpp"

using namespace reductions;

namespace {

TuckerGrid2D tiny_grid() { return TuckerGrid2D(2, {1, 2, -2, -1}); }

// 4x4 with a hand-made antipodal boundary.
TuckerGrid2D small_grid() {
  return TuckerGrid2D(4, {
                             1, 2, 1, 2,    // x = 1
                             2, -1, 1, -2,  // x = 2
                             2, -1, 1, -2,  // x = 3
                             -2, -1, -2, -1 // x = 4
                         });
}

}  // namespace

TEST_CASE("pad_to_multiple_of_3 leaves multiples alone") {
  auto [nd, trace] = compose_folds(small_grid());
  (void)trace;
  TuckerGridND g = grid_from_2d(tiny_grid());  // dims 2x2
  TuckerGridND padded = pad_to_multiple_of_3(g, 1);  // 2 % 3 = 2: one high layer
  CHECK(padded.dims == std::vector<int>{3, 2});
  // New top layer copies the old boundary layer.
  CHECK(padded.label({3, 1}) == g.label({2, 1}));
  CHECK(padded.label({3, 2}) == g.label({2, 2}));
  CHECK(padded.label({1, 1}) == g.label({1, 1}));

  TuckerGridND same = pad_to_multiple_of_3(padded, 1);
  CHECK(same.dims == padded.dims);
  CHECK(same.labels == padded.labels);
}

TEST_CASE("pad_to_multiple_of_3 adds one layer per side when two are missing") {
  TuckerGridND g = grid_from_2d(small_grid());  // dims 4x4: 4 % 3 = 1
  TuckerGridND padded = pad_to_multiple_of_3(g, 1);
  CHECK(padded.dims == std::vector<int>{6, 4});
  for (int y = 1; y <= 4; ++y) {
    CHECK(padded.label({1, y}) == g.label({1, y}));   // duplicated low layer
    CHECK(padded.label({2, y}) == g.label({1, y}));
    CHECK(padded.label({5, y}) == g.label({4, y}));
    CHECK(padded.label({6, y}) == g.label({4, y}));   // duplicated high layer
  }
}

TEST_CASE("3m x m extension is antipodal with monochromatic short sides") {
  bool swapped = false;
  const TuckerGrid2D g = small_grid();
  auto [nd, trace] = compose_folds(g);
  (void)nd;
  CHECK(trace.extended_3m);

  // Reproduce the extension through fold-free inspection: m = 2 gives 6 x 2.
  const TuckerGrid2D t = tiny_grid();
  auto [ext, trace2] = compose_folds(t);
  CHECK(trace2.steps.empty());
  CHECK(ext.dims == std::vector<int>{6, 2});
  ext.validate_shape();
  ext.validate_antipodal();
  ext.validate_small_box();
  // Corner label a(m) = label(1, m) = 2: no colour swap, short sides constant.
  CHECK_FALSE(trace2.swapped_12);
  for (int y = 1; y <= 2; ++y) {
    CHECK(ext.label({1, y}) == 2);
    CHECK(ext.label({6, y}) == -2);
  }
  CHECK(ext.facet_low == std::vector<int>{-2, 1});
  CHECK(ext.facet_high == std::vector<int>{2, -1});
  // Middle band is the original.
  for (int x = 1; x <= 2; ++x) {
    for (int y = 1; y <= 2; ++y) {
      CHECK(ext.label({x + 2, y}) == t.label(x, y));
    }
  }
  (void)swapped;
}

TEST_CASE("extension swaps colours when the corner has absolute value 1") {
  // Rotated variant of the tiny grid: corner label(1, 2) = -1.
  const TuckerGrid2D t(2, {2, -1, 1, -2});
  auto [ext, trace] = compose_folds(t);
  CHECK(trace.swapped_12);
  ext.validate_antipodal();
  ext.validate_small_box();
  // Swapped corner: a(m) = -2 after the exchange.
  for (int y = 1; y <= 2; ++y) {
    CHECK(ext.label({1, y}) == -2);
    CHECK(ext.label({6, y}) == 2);
  }
  // Middle band carries swapped labels: original (1,1) = 2 becomes 1.
  CHECK(ext.label({3, 1}) == 1);
  CHECK(ext.label({3, 2}) == -2);
  CHECK(ext.label({4, 1}) == 2);
  CHECK(ext.label({4, 2}) == -1);
}

TEST_CASE("fold_once applies the six-case map") {
  // 6 x 2 grid from the tiny extension: t = 2, output dims (4, 2, 7).
  auto [g, trace] = compose_folds(tiny_grid());
  (void)trace;
  const TuckerGridND folded = fold_once(g);
  CHECK(folded.dims == std::vector<int>{4, 2, 7});
  folded.validate_shape();
  folded.validate_antipodal();

  for (int y = 1; y <= 2; ++y) {
    // x1 <= t: same x1, layer 2.
    CHECK(folded.label({2, y, 2}) == g.label({2, y}));
    // Fold point t+1 = 3: copies at layers 2, 3, 4.
    for (int layer : {2, 3, 4}) {
      CHECK(folded.label({3, y, layer}) == g.label({3, y}));
    }
    // Second fold point 2t = 4: copies at (2, y, {4,5,6}).
    for (int layer : {4, 5, 6}) {
      CHECK(folded.label({2, y, layer}) == g.label({4, y}));
    }
    // Tail: x1 = 5, 6 -> (3, y, 6), (4, y, 6).
    CHECK(folded.label({3, y, 6}) == g.label({5, y}));
    CHECK(folded.label({4, y, 6}) == g.label({6, y}));
    // Flood labels fill layers 1 and 7.
    for (int x = 1; x <= 4; ++x) {
      CHECK(folded.label({x, y, 1}) == -3);
      CHECK(folded.label({x, y, 7}) == 3);
    }
  }
  CHECK(folded.facet_low == std::vector<int>{-2, 1, 3});
  CHECK(folded.facet_high == std::vector<int>{2, -1, -3});
}

TEST_CASE("fold_once rejects non-multiples of 3") {
  TuckerGridND g = grid_from_2d(small_grid());
  CHECK_THROWS_AS(fold_once(g), ValidationError);
}

TEST_CASE("compose_folds shrinks every side to at most 7") {
  Rng rng(11);
  for (int m : {4, 5, 6, 7, 8, 9}) {
    const TuckerGrid2D g = random_tucker2d(m, rng);
    auto [nd, trace] = compose_folds(g);
    nd.validate_shape();
    nd.validate_antipodal();
    nd.validate_small_box();
    CHECK(trace.original_m == m);
    for (int d : nd.dims) CHECK(d <= 7);
  }
}

TEST_CASE("every folded pair avoids flood colours and pulls back") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const int m = 4 + static_cast<int>(rng.below(6));
    const TuckerGrid2D g = random_tucker2d(m, rng);
    auto [nd, trace] = compose_folds(g);
    const auto pairs = all_tucker_pairs(nd);
    REQUIRE_FALSE(pairs.empty());
    for (const auto& [p1, p2] : pairs) {
      // Flood colours (any fold level) never participate in a pair.
      CHECK(std::abs(nd.label(p1)) <= 2);
      auto [q1, q2] = pull_back_solution(g, trace, p1, p2);
      CHECK(verify_tucker2d(g, q1, q2));
    }
  }
}

TEST_CASE("grid_to_cubelets stretches odd grids and rejects even ones") {
  Rng rng(47);
  const TuckerGrid2D g = random_tucker2d(9, rng);
  auto [nd, trace] = compose_folds(g);
  (void)trace;
  const NVHDTInstance inst = grid_to_cubelets(nd);
  CHECK(inst.n == nd.k());
  CHECK(inst.cubelet_count() == static_cast<long long>(inst.cubelet_labels.size()));
  CHECK(inst.facet_low == nd.facet_low);

  // Centre cubelets reproduce centre cells.
  std::vector<int> centre_cub(static_cast<size_t>(nd.k()), 3);
  std::vector<int> centre_cell(static_cast<size_t>(nd.k()));
  for (int j = 0; j < nd.k(); ++j) {
    centre_cell[static_cast<size_t>(j)] = (nd.dims[static_cast<size_t>(j)] + 1) / 2;
  }
  CHECK(inst.colour_at_cubelet(centre_cub) == nd.label(centre_cell));

  const TuckerGrid2D even = random_tucker2d(4, rng);
  auto [nd_even, trace_even] = compose_folds(even);
  (void)trace_even;
  CHECK_THROWS_AS(grid_to_cubelets(nd_even), ValidationError);
}

TEST_CASE("odd grids stay odd through the whole fold pipeline") {
  Rng rng(53);
  for (int m : {5, 7, 9}) {
    const TuckerGrid2D g = random_tucker2d(m, rng);
    auto [nd, trace] = compose_folds(g);
    (void)trace;
    for (int d : nd.dims) CHECK(d % 2 == 1);
    const NVHDTInstance inst = grid_to_cubelets(nd);
    inst.validate();
  }
}
