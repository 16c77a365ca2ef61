#include "reductions/instances.hpp"

#include <algorithm>

namespace reductions {

void CHInstance::validate() const {
  if (L <= 0) throw ValidationError("domain length must be positive");
  if (agents.empty()) throw ValidationError("instance needs at least one agent");
  if (epsilon < 0) throw ValidationError("epsilon must be nonnegative");
  if (ce_region_length < 0 || Rational(ce_region_length) > L) {
    throw ValidationError("c-e region must fit in the domain");
  }
  for (const StepMeasure& m : agents) {
    if (m.L != L) throw ValidationError("agent domain mismatch");
    m.validate();
  }
}

void LabelledCutSet::validate(const Rational& L) const {
  Rational prev(-1);
  for (const Rational& c : cuts) {
    if (c < 0 || c > L) throw ValidationError("cut outside domain");
    if (c < prev) throw ValidationError("cuts must be ascending");
    prev = c;
  }
}

int LabelledCutSet::label_at(const Rational& t) const {
  std::size_t k = 0;
  while (k < cuts.size() && cuts[k] <= t) ++k;
  return k % 2 == 0 ? 1 : -1;
}

int NecklaceInstance::num_colours() const {
  int n = 0;
  for (int b : beads) n = std::max(n, b);
  return n;
}

std::vector<int> NecklaceInstance::colour_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(num_colours()), 0);
  for (int b : beads) counts[static_cast<std::size_t>(b - 1)]++;
  return counts;
}

void NecklaceInstance::validate() const {
  if (beads.empty()) throw ValidationError("necklace needs beads");
  if (thieves < 2) throw ValidationError("need at least two thieves");
  for (int b : beads) {
    if (b < 1) throw ValidationError("bead colours are 1-based positive");
  }
  const std::vector<int> counts = colour_counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw ValidationError("colour " + std::to_string(i + 1) + " unused");
    if (counts[i] % thieves != 0) {
      throw ValidationError("colour " + std::to_string(i + 1) + " count not divisible by thieves");
    }
  }
}

void NecklaceSplit::validate(const NecklaceInstance& inst) const {
  const int B = static_cast<int>(inst.beads.size());
  if (piece_owner.size() != cut_gaps.size() + 1) {
    throw ValidationError("piece count must be cut count + 1");
  }
  int prev = 0;
  for (int g : cut_gaps) {
    if (g < 1 || g >= B) throw ValidationError("cut gap out of range");
    if (g <= prev) throw ValidationError("cut gaps must be strictly ascending");
    prev = g;
  }
  for (int t : piece_owner) {
    if (t < 1 || t > inst.thieves) throw ValidationError("piece owner out of range");
  }
}

void HamSandwichInstance::validate() const {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (point_sets.empty()) throw ValidationError("need at least one point set");
  for (const auto& set : point_sets) {
    if (set.empty()) throw ValidationError("point set is empty");
    for (const auto& p : set) {
      if (static_cast<int>(p.size()) != n) throw ValidationError("point dimension mismatch");
    }
  }
}

void Hyperplane::validate() const {
  if (normal.empty()) throw ValidationError("hyperplane needs a normal");
  Rational l1(0);
  for (const Rational& c : normal) l1 += rat_abs(c);
  if (l1 != 1) throw ValidationError("normal must have L1 norm 1");
}

Rational Hyperplane::eval(const std::vector<Rational>& point) const {
  if (point.size() != normal.size()) throw ValidationError("point dimension mismatch");
  Rational acc = -offset;
  for (std::size_t i = 0; i < normal.size(); ++i) acc += normal[i] * point[i];
  return acc;
}

}  // namespace reductions
