#pragma once

#include <optional>
#include <vector>

#include "reductions/circuit.hpp"
#include "reductions/rational.hpp"

namespace reductions {

// 2D Tucker grid, labels in {+-1, +-2}, 1-based coordinates (x, y).
struct TuckerGrid2D {
  int m = 0;
  std::vector<int> labels;  // (x-1)*m + (y-1)

  TuckerGrid2D() = default;
  TuckerGrid2D(int side, std::vector<int> lab);  // validates

  int label(int x, int y) const { return labels[static_cast<size_t>(x - 1) * m + (y - 1)]; }
  void set_label(int x, int y, int v) { labels[static_cast<size_t>(x - 1) * m + (y - 1)] = v; }
  void validate() const;
};

// k-dimensional Tucker grid with per-facet colours. Coordinates 1-based.
// Cell index is lexicographic with the last axis contiguous.
struct TuckerGridND {
  std::vector<int> dims;
  std::vector<int> labels;
  std::vector<int> facet_low;   // colour of facet x_i = 1
  std::vector<int> facet_high;  // colour of facet x_i = m_i

  int k() const { return static_cast<int>(dims.size()); }
  long long cell_count() const;
  long long index(const std::vector<int>& x) const;
  std::vector<int> coords(long long idx) const;
  int label(const std::vector<int>& x) const { return labels[index(x)]; }
  void set_label(const std::vector<int>& x, int v) { labels[index(x)] = v; }

  bool is_boundary(const std::vector<int>& x) const;
  std::vector<int> antipode(const std::vector<int>& x) const;

  // Structural sanity: sizes, label range, facet colour pairing.
  void validate_shape() const;
  // Antipodal boundary condition: lambda(antipode) = -lambda for every boundary cell.
  void validate_antipodal() const;
  // Small-box conditions: every side <= 7, facet colours use all 2k signed
  // colours with opposite facets opposite, and for |c| >= 2 the facet coloured
  // c carries no grid point labelled c.
  void validate_small_box() const;
};

TuckerGridND grid_from_2d(const TuckerGrid2D& g);

// New-variant instance over B = [-1,1]^n: 7^n cubelets of edge 2/7, each with
// one label; the oracle may be an explicit table or a circuit over the 3n-bit
// cubelet index (outputs ordered +1, -1, +2, -2, ..., +n, -n with exactly one
// true).
struct NVHDTInstance {
  int n = 0;
  std::vector<int> cubelet_labels;  // size 7^n when table-backed, else empty
  std::optional<BooleanCircuit> circuit;
  std::vector<int> facet_low;
  std::vector<int> facet_high;

  long long cubelet_count() const;
  long long cubelet_index(const std::vector<int>& c) const;  // c_i in 0..6
  int colour_at_cubelet(const std::vector<int>& c) const;
  // p in [-1,1]^n; points on cubelet boundaries take the lexicographically
  // smallest adjacent cubelet.
  std::vector<int> cubelet_of_point(const std::vector<Rational>& p) const;
  int colour_at_point(const std::vector<Rational>& p) const;

  void validate() const;
};

}  // namespace reductions
