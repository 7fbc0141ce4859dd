#pragma once

// Brute-force ground truth on expanded grids. Nothing in the classification
// path depends on this module.

#include <cstdint>
#include <optional>
#include <vector>

#include "fsq/digit_set.hpp"
#include "fsq/lattice.hpp"
#include "fsq/line_detect.hpp"

namespace fsq {

/// Rectangle [x0, x1] x [y0, y1] of the plane with integer corners, i.e. the
/// unit squares z with x0 <= z.x < x1 and y0 <= z.y < y1.
struct Window {
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  std::int64_t x1 = 1;
  std::int64_t y1 = 1;

  std::int64_t width() const { return x1 - x0; }
  std::int64_t height() const { return y1 - y0; }
};

/// H_k restricted to a window, with some integer translates of F_k removed.
/// Sub-cells are addressed by global indices at resolution 1/n^k.
class WindowGrid {
 public:
  WindowGrid(const DigitSet& d, int k, Window window, std::vector<LatticeVec> removed = {},
             std::int64_t max_cells = std::int64_t{1} << 26);

  int level() const { return grid_.level(); }
  std::int64_t cells_per_unit() const { return grid_.side(); }
  const Window& window() const { return window_; }
  std::int64_t width() const { return window_.width() * grid_.side(); }
  std::int64_t height() const { return window_.height() * grid_.side(); }

  /// Local indices 0 <= i < width(), 0 <= j < height().
  bool present(std::int64_t i, std::int64_t j) const;
  /// Local index range of the unit square z.
  std::int64_t local_x(std::int64_t unit_x) const { return (unit_x - window_.x0) * grid_.side(); }
  std::int64_t local_y(std::int64_t unit_y) const { return (unit_y - window_.y0) * grid_.side(); }

 private:
  CellGrid grid_;
  Window window_;
  std::vector<LatticeVec> removed_;
};

struct ComponentStats {
  std::int64_t count = 0;
  std::int64_t max_size = 0;
  /// Largest bounding-box side, in cells.
  std::int64_t max_extent = 0;
  std::int64_t total_cells = 0;
  /// Components meeting the outer frame of the region.
  std::int64_t touching_border = 0;
  std::vector<std::int64_t> sizes;  // per component, in discovery order
};

/// Component label per cell (-1 for cells outside the labelled set), row-major
/// with row 0 at the bottom.
struct LabelledGrid {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<std::int32_t> labels;
  ComponentStats stats;
};

/// Components of the present cells of F_k under 8-adjacency.
LabelledGrid label_Fk(const DigitSet& d, int k);
ComponentStats components_Fk(const DigitSet& d, int k);

/// Components of the absent cells of H_k in the window under 4-adjacency.
LabelledGrid label_complement(const DigitSet& d, int k, const Window& window);
ComponentStats complement_components(const DigitSet& d, int k, const Window& window);

/// ceil(2 sqrt(2) (n^2 + 1)^2 / n) + |q|_inf + 2.
std::int64_t default_margin(int n, const LatticeVec& q);
/// ceil(sqrt(2) (n^2 + 1)^2 / n), the diameter bound for bounded complements.
std::int64_t diameter_bound(int n);

enum class Admissibility { kConnected, kNotWithinWindow };

/// Whether I and q + I are joined in the complement of F_k + (Z^2 \ {0, q}),
/// searched inside a window padded by `margin` unit squares.
Admissibility oracle_admissible(const DigitSet& d, int k, const LatticeVec& q,
                                std::optional<std::int64_t> margin = std::nullopt);

/// {q : |q|_inf <= bound, oracle_admissible = connected} plus 0, sorted.
std::vector<LatticeVec> oracle_Q(const DigitSet& d, int k, std::int64_t bound,
                                 std::optional<std::int64_t> margin = std::nullopt);

/// Whether the open 1/n-squares du/n and b + dv/n are joined in H_k^c
/// (both cells must lie in D^c), searched inside a padded window.
bool squares_joined(const DigitSet& d, int k, Cell du, Cell dv, const LatticeVec& b,
                    std::optional<std::int64_t> margin = std::nullopt);

/// Whether I \ F_k has a 4-connected path of absent cells between opposite
/// sides of the unit square.
bool crossing_path_exists(const DigitSet& d, int k);

/// Whether the line lies in the closed set H_k, by testing closed-cell
/// membership of points sampled finely enough to land inside every open piece
/// of the line between grid crossings.
bool line_in_Hk(const DigitSet& d, const Slope& slope, const Rational& omega, int k);

}  // namespace fsq
