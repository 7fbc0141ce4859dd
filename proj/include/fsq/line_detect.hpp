#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsq/digit_set.hpp"

namespace fsq {

/// Exact rational number with positive denominator, in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& q);

/// Direction of a line. For r != 0 the lines are x = omega + (r/s) y, so
/// the direction vector is (r, s); r = 0 stands for horizontal lines and the
/// vertical marker is encoded as r = 1, s = 0. Always s >= 1 and
/// gcd(|r|, s) = 1 otherwise.
struct Slope {
  std::int64_t r = 0;
  std::int64_t s = 1;

  static Slope rational(std::int64_t r, std::int64_t s);
  static Slope vertical() { return {1, 0}; }
  /// Slope with direction vector +-(dx, dy).
  static Slope of_direction(std::int64_t dx, std::int64_t dy);

  bool is_vertical() const { return s == 0; }
  bool is_horizontal() const { return s != 0 && r == 0; }

  friend auto operator<=>(const Slope&, const Slope&) = default;
};

std::string to_string(const Slope& slope);
/// (r, s), (1, 0) for horizontal, (0, 1) for vertical.
std::array<std::int64_t, 2> direction_vector(const Slope& slope);
/// Image of the direction under the linear part of g.
Slope map_direction(Symmetry g, const Slope& slope);

/// Rational slopes r/s with |r| + s <= n in scan order (increasing |r| + s,
/// then r ascending), followed by the vertical marker.
std::vector<Slope> candidate_slopes(int n);

std::optional<int> full_row(const DigitSet& d);
/// A full row (or column) j forces the line y = j/(n-1) (resp. x = j/(n-1))
/// into F: the fixed point of t -> (t + j)/n.
Rational band_intercept(int j, int n);
std::optional<int> full_col(const DigitSet& d);

/// Whether the line x = omega + (r/s) y lies in the closed cells of `grid`
/// (extended periodically) whose open interiors it traverses. Exact; r != 0.
bool line_covered(const CellGrid& grid, const Slope& slope, const Rational& omega);

/// Level-1 case of line_covered.
bool segment_coverage_test(const DigitSet& d, const Slope& slope, const Rational& omega);

/// Horizontal line y = omega at level 1. Lines on the 1/n grid skeleton are
/// rejected; otherwise the row floor(n omega) must be full.
bool horizontal_coverage_test(const DigitSet& d, const Rational& omega);

/// Level-1 admissible intercepts for one rational slope, sampled on the grid
/// Z/ns (points) and on the open gaps between grid points (intervals).
struct OmegaProfile {
  int n = 0;
  Slope slope;
  std::int64_t grid = 0;  // n * s
  std::vector<bool> points;
  std::vector<bool> intervals;
};

OmegaProfile omega_profile(const DigitSet& d, const Slope& slope);

/// Grid points whose orbit under m -> n m (mod ns) stays in the passing set.
std::vector<std::int64_t> surviving_points(const OmegaProfile& profile);

bool line_exists_for_slope(const OmegaProfile& profile);

/// A line of H: for rational slopes omega is the x-intercept; for slope 0 it
/// is the height y = omega; for vertical lines it is the abscissa x = omega.
struct LineWitness {
  Slope slope;
  Rational omega;
  friend bool operator==(const LineWitness&, const LineWitness&) = default;
};

/// Intercept of a line of H with this slope, if any. Prefers a surviving grid
/// point; otherwise a periodic point of x -> n x (mod 1) inside a cycle of
/// passing intervals.
std::optional<Rational> witness_intercept(const OmegaProfile& profile);

std::optional<LineWitness> find_line_witness(const DigitSet& d);

}  // namespace fsq
