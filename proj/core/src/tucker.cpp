#include "reductions/tucker.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace reductions {

TuckerGrid2D::TuckerGrid2D(int side, std::vector<int> lab) : m(side), labels(std::move(lab)) {
  validate();
}

void TuckerGrid2D::validate() const {
  if (m < 2) throw ValidationError("grid side must be at least 2");
  if (labels.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    throw ValidationError("label table size mismatch");
  }
  for (int v : labels) {
    if (v == 0 || std::abs(v) > 2) throw ValidationError("2D labels must lie in {+-1, +-2}");
  }
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (x != 1 && x != m && y != 1 && y != m) continue;
      if (label(m + 1 - x, m + 1 - y) != -label(x, y)) {
        throw ValidationError("boundary labelling is not antipodal");
      }
    }
  }
}

long long TuckerGridND::cell_count() const {
  long long c = 1;
  for (int d : dims) c *= d;
  return c;
}

long long TuckerGridND::index(const std::vector<int>& x) const {
  if (x.size() != dims.size()) throw ValidationError("coordinate arity mismatch");
  long long idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (x[i] < 1 || x[i] > dims[i]) throw ValidationError("coordinate out of range");
    idx = idx * dims[i] + (x[i] - 1);
  }
  return idx;
}

std::vector<int> TuckerGridND::coords(long long idx) const {
  std::vector<int> x(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    x[i] = static_cast<int>(idx % dims[i]) + 1;
    idx /= dims[i];
  }
  return x;
}

bool TuckerGridND::is_boundary(const std::vector<int>& x) const {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (x[i] == 1 || x[i] == dims[i]) return true;
  }
  return false;
}

std::vector<int> TuckerGridND::antipode(const std::vector<int>& x) const {
  std::vector<int> a(x.size());
  for (std::size_t i = 0; i < dims.size(); ++i) a[i] = dims[i] + 1 - x[i];
  return a;
}

void TuckerGridND::validate_shape() const {
  if (dims.empty()) throw ValidationError("grid needs at least one axis");
  for (int d : dims) {
    if (d < 1) throw ValidationError("axis length must be positive");
  }
  if (labels.size() != static_cast<std::size_t>(cell_count())) {
    throw ValidationError("label table size mismatch");
  }
  const int kk = k();
  for (int v : labels) {
    if (v == 0 || std::abs(v) > kk) throw ValidationError("label outside +-[k]");
  }
  if (facet_low.size() != dims.size() || facet_high.size() != dims.size()) {
    throw ValidationError("facet colour arity mismatch");
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (facet_low[i] == 0 || std::abs(facet_low[i]) > kk) {
      throw ValidationError("facet colour outside +-[k]");
    }
    if (facet_high[i] != -facet_low[i]) {
      throw ValidationError("opposite facets must have opposite colours");
    }
  }
}

void TuckerGridND::validate_antipodal() const {
  validate_shape();
  const long long total = cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    const std::vector<int> x = coords(idx);
    if (!is_boundary(x)) continue;
    if (labels[static_cast<std::size_t>(index(antipode(x)))] !=
        -labels[static_cast<std::size_t>(idx)]) {
      throw ValidationError("boundary labelling is not antipodal");
    }
  }
}

void TuckerGridND::validate_small_box() const {
  validate_shape();
  const int kk = k();
  for (int d : dims) {
    if (d > 7) throw ValidationError("axis length exceeds 7");
  }
  std::set<int> used;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    used.insert(facet_low[i]);
    used.insert(facet_high[i]);
  }
  if (static_cast<int>(used.size()) != 2 * kk) {
    throw ValidationError("facet colours must use every label in +-[k] exactly once");
  }
  const long long total = cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    const std::vector<int> x = coords(idx);
    const int lab = labels[static_cast<std::size_t>(idx)];
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (x[i] == 1 && facet_low[i] == lab && std::abs(lab) >= 2) {
        throw ValidationError("facet carries a grid point of its own colour");
      }
      if (x[i] == dims[i] && facet_high[i] == lab && std::abs(lab) >= 2) {
        throw ValidationError("facet carries a grid point of its own colour");
      }
    }
  }
}

TuckerGridND grid_from_2d(const TuckerGrid2D& g) {
  g.validate();
  TuckerGridND out;
  out.dims = {g.m, g.m};
  out.labels = g.labels;
  out.facet_low = {2, 1};
  out.facet_high = {-2, -1};
  return out;
}

long long NVHDTInstance::cubelet_count() const {
  long long c = 1;
  for (int i = 0; i < n; ++i) c *= 7;
  return c;
}

long long NVHDTInstance::cubelet_index(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != n) throw ValidationError("cubelet arity mismatch");
  long long idx = 0;
  for (int i = 0; i < n; ++i) {
    if (c[static_cast<std::size_t>(i)] < 0 || c[static_cast<std::size_t>(i)] > 6) {
      throw ValidationError("cubelet coordinate out of range");
    }
    idx = idx * 7 + c[static_cast<std::size_t>(i)];
  }
  return idx;
}

int NVHDTInstance::colour_at_cubelet(const std::vector<int>& c) const {
  if (!cubelet_labels.empty()) {
    return cubelet_labels[static_cast<std::size_t>(cubelet_index(c))];
  }
  if (!circuit.has_value()) throw ValidationError("instance has neither table nor circuit");
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) {
    const int ci = c[static_cast<std::size_t>(i)];
    bits.push_back((ci & 1) != 0);
    bits.push_back((ci & 2) != 0);
    bits.push_back((ci & 4) != 0);
  }
  const std::vector<bool> out = circuit->eval(bits);
  if (static_cast<int>(out.size()) != 2 * n) throw ValidationError("oracle output arity mismatch");
  int colour = 0;
  for (int i = 0; i < 2 * n; ++i) {
    if (!out[static_cast<std::size_t>(i)]) continue;
    if (colour != 0) throw ValidationError("oracle asserted two colours at once");
    const int mag = i / 2 + 1;
    colour = (i % 2 == 0) ? mag : -mag;
  }
  if (colour == 0) throw ValidationError("oracle asserted no colour");
  return colour;
}

std::vector<int> NVHDTInstance::cubelet_of_point(const std::vector<Rational>& p) const {
  if (static_cast<int>(p.size()) != n) throw ValidationError("point arity mismatch");
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational& v = p[static_cast<std::size_t>(i)];
    if (v < -1 || v > 1) throw ValidationError("point outside the hypercube");
    // cubelet k covers (-1 + 2k/7, -1 + 2(k+1)/7]; ties resolve downward,
    // which picks the lexicographically smallest adjacent cubelet.
    Int idx = rat_ceil((v + 1) * 7 / 2) - 1;
    if (idx < 0) idx = 0;
    c[static_cast<std::size_t>(i)] = static_cast<int>(idx);
  }
  return c;
}

int NVHDTInstance::colour_at_point(const std::vector<Rational>& p) const {
  return colour_at_cubelet(cubelet_of_point(p));
}

void NVHDTInstance::validate() const {
  if (n < 1) throw ValidationError("dimension must be positive");
  const bool table = !cubelet_labels.empty();
  if (table && cubelet_labels.size() != static_cast<std::size_t>(cubelet_count())) {
    throw ValidationError("cubelet table size mismatch");
  }
  if (!table && !circuit.has_value()) {
    throw ValidationError("instance needs a cubelet table or a circuit");
  }
  if (circuit.has_value()) {
    circuit->validate();
    if (circuit->num_inputs() != 3 * n) throw ValidationError("oracle input arity mismatch");
    if (static_cast<int>(circuit->outputs.size()) != 2 * n) {
      throw ValidationError("oracle output arity mismatch");
    }
  }
  if (!facet_low.empty() || !facet_high.empty()) {
    if (static_cast<int>(facet_low.size()) != n || static_cast<int>(facet_high.size()) != n) {
      throw ValidationError("facet colour arity mismatch");
    }
    for (int i = 0; i < n; ++i) {
      const int c = facet_low[static_cast<std::size_t>(i)];
      if (c == 0 || std::abs(c) > n) throw ValidationError("facet colour outside +-[n]");
      if (facet_high[static_cast<std::size_t>(i)] != -c) {
        throw ValidationError("opposite facets must have opposite colours");
      }
    }
  }
  if (table) {
    for (int v : cubelet_labels) {
      if (v == 0 || std::abs(v) > n) throw ValidationError("cubelet label outside +-[n]");
    }
    // Antipodal boundary cubelets must carry opposite labels.
    const long long total = cubelet_count();
    for (long long idx = 0; idx < total; ++idx) {
      long long rem = idx;
      bool boundary = false;
      long long anti = 0;
      for (int i = n - 1; i >= 0; --i) {
        const int ci = static_cast<int>(rem % 7);
        rem /= 7;
        if (ci == 0 || ci == 6) boundary = true;
        long long place = 1;
        for (int j = i + 1; j < n; ++j) place *= 7;
        anti += static_cast<long long>(6 - ci) * place;
      }
      if (boundary && cubelet_labels[static_cast<std::size_t>(anti)] !=
                          -cubelet_labels[static_cast<std::size_t>(idx)]) {
        throw ValidationError("boundary cubelet labelling is not antipodal");
      }
    }
  }
}

}  // namespace reductions
