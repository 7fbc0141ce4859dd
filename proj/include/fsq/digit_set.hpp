#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsq {

/// Malformed or degenerate user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (grid side, census base) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cell of the n x n base grid, x to the right and y upward.
struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Digit set D of a fractal square: a base n >= 2 and 1 < #D < n^2 distinct
/// cells of {0..n-1}^2. Digits are kept sorted by (x, y).
class DigitSet {
 public:
  DigitSet(int n, std::vector<Cell> digits);

  int base() const { return n_; }
  const std::vector<Cell>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool contains(Cell c) const;
  bool contains(int x, int y) const { return contains(Cell{x, y}); }

  /// D^c, sorted by (x, y).
  std::vector<Cell> complement() const;

  /// Bit (y * n + x) set for each digit. Only meaningful for n <= 8.
  std::uint64_t mask() const;
  static DigitSet from_mask(int n, std::uint64_t mask);

  friend bool operator==(const DigitSet& a, const DigitSet& b) {
    return a.n_ == b.n_ && a.digits_ == b.digits_;
  }
  friend auto operator<=>(const DigitSet& a, const DigitSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.digits_ <=> b.digits_;
  }

 private:
  int n_;
  std::vector<Cell> digits_;
  std::vector<std::uint8_t> present_;
};

/// Accepts either the ASCII grid form ('#' present, '.' absent, first line is
/// the top row y = n-1) or a JSON descriptor {"n": 3, "digits": [[x, y], ...]}.
DigitSet parse_digit_set(std::string_view text);
DigitSet parse_grid(std::string_view text);
DigitSet parse_digit_json(std::string_view text);

/// Inverse of parse_grid, newline-terminated rows.
std::string to_grid_text(const DigitSet& d);

/// The k-th approximation F_k as a bitset of k-cells. Cell (a, b) stands for
/// the closed square [a, a+1] x [b, b+1] / n^k.
class CellGrid {
 public:
  CellGrid(int n, int level, std::int64_t side);

  int base() const { return n_; }
  int level() const { return level_; }
  std::int64_t side() const { return side_; }

  bool present(std::int64_t a, std::int64_t b) const {
    const auto i = static_cast<std::uint64_t>(b * side_ + a);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  /// Periodic lookup: the cell of H_k = F_k + Z^2 at global index (a, b).
  bool present_periodic(std::int64_t a, std::int64_t b) const;
  void set(std::int64_t a, std::int64_t b);
  std::int64_t count() const;

  friend bool operator==(const CellGrid&, const CellGrid&) = default;

 private:
  int n_;
  int level_;
  std::int64_t side_;
  std::vector<std::uint64_t> bits_;
};

inline constexpr std::int64_t kDefaultMaxSide = std::int64_t{1} << 14;

/// n^k, or throws ResourceError when it exceeds max_side.
std::int64_t checked_side(int n, int k, std::int64_t max_side = kDefaultMaxSide);

/// Cell (a, b) is present iff every base-n digit pair of (a, b), most
/// significant first, is a digit of D.
CellGrid expand(const DigitSet& d, int k, std::int64_t max_side = kDefaultMaxSide);

/// Elements of the dihedral group of the square.
enum class Symmetry : std::uint8_t {
  kIdentity,
  kRot90,
  kRot180,
  kRot270,
  kFlipX,      // x -> -x
  kFlipY,      // y -> -y
  kTranspose,  // (x, y) -> (y, x)
  kAntiTranspose,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::kIdentity, Symmetry::kRot90,     Symmetry::kRot180,
    Symmetry::kRot270,   Symmetry::kFlipX,     Symmetry::kFlipY,
    Symmetry::kTranspose, Symmetry::kAntiTranspose};

std::string_view symmetry_name(Symmetry g);

/// Linear part acting on Z^2 (vectors, directions).
std::array<std::int64_t, 2> apply_linear(Symmetry g, std::int64_t x, std::int64_t y);
/// Action on the cells {0..n-1}^2 (the linear part about the grid center).
Cell apply(Symmetry g, Cell c, int n);
/// g followed by h, i.e. h o g.
Symmetry compose(Symmetry g, Symmetry h);

DigitSet apply_symmetry(const DigitSet& d, Symmetry g);
/// Least element of the D4 orbit under the (x, y)-sorted digit ordering.
DigitSet canonical_form(const DigitSet& d);
/// Number of distinct digit sets in the D4 orbit of d.
int orbit_size(const DigitSet& d);

}  // namespace fsq
