#include "reductions/gen.hpp"

#include <algorithm>

namespace reductions {

namespace {

int random_label(Rng& rng) {
  const int v = static_cast<int>(rng.below(4));
  return (v % 2 == 1 ? -1 : 1) * (v / 2 + 1);
}

}  // namespace

TuckerGrid2D random_tucker2d(int m, Rng& rng) {
  std::vector<int> labels(static_cast<size_t>(m) * m, 0);
  auto at = [&](int x, int y) -> int& { return labels[static_cast<size_t>(x - 1) * m + (y - 1)]; };
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      const bool boundary = x == 1 || x == m || y == 1 || y == m;
      if (!boundary) {
        at(x, y) = random_label(rng);
        continue;
      }
      if (at(x, y) != 0) continue;
      const int lab = random_label(rng);
      at(x, y) = lab;
      at(m + 1 - x, m + 1 - y) = -lab;
    }
  }
  return TuckerGrid2D(m, std::move(labels));
}

NecklaceInstance random_necklace(int num_colours, int beads_per_colour, Rng& rng) {
  NecklaceInstance inst;
  for (int c = 1; c <= num_colours; ++c) {
    inst.beads.insert(inst.beads.end(), static_cast<size_t>(beads_per_colour), c);
  }
  for (size_t i = inst.beads.size(); i > 1; --i) {
    std::swap(inst.beads[i - 1], inst.beads[rng.below(i)]);
  }
  inst.validate();
  return inst;
}

HamSandwichInstance random_sandwich(int n, int points_per_set, long long denom, Rng& rng) {
  HamSandwichInstance inst;
  inst.n = n;
  inst.point_sets.assign(static_cast<size_t>(n), {});
  for (auto& set : inst.point_sets) {
    for (int p = 0; p < points_per_set; ++p) {
      std::vector<Rational> point;
      for (int d = 0; d < n; ++d) {
        point.push_back(rng.rational(-denom, denom, denom));
      }
      set.push_back(std::move(point));
    }
  }
  inst.validate();
  return inst;
}

CHInstance random_ch_instance(int num_agents, int blocks_per_agent, const Rational& L,
                              const Rational& epsilon, Rng& rng) {
  CHInstance inst;
  inst.L = L;
  inst.epsilon = epsilon;
  const long long grid = 4LL * blocks_per_agent;
  for (int a = 0; a < num_agents; ++a) {
    // Pick 2*blocks distinct grid breakpoints, pair them up as [lo, hi).
    std::vector<long long> ticks;
    while (static_cast<int>(ticks.size()) < 2 * blocks_per_agent) {
      const long long t = static_cast<long long>(rng.below(static_cast<unsigned long long>(grid + 1)));
      if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
    }
    std::sort(ticks.begin(), ticks.end());
    std::vector<MassBlock> blocks;
    for (int b = 0; b < blocks_per_agent; ++b) {
      MassBlock blk;
      blk.lo = L * ticks[static_cast<size_t>(2 * b)] / grid;
      blk.hi = L * ticks[static_cast<size_t>(2 * b + 1)] / grid;
      blk.mass = Rational(1, blocks_per_agent);
      blocks.push_back(std::move(blk));
    }
    inst.agents.push_back(measure_from_blocks(L, std::move(blocks)));
  }
  inst.validate();
  return inst;
}

}  // namespace reductions
