#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fsq {

/// A vector of Z^2.
struct LatticeVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  LatticeVec& operator+=(const LatticeVec& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(const LatticeVec& a) { return {-a.x, -a.y}; }
  friend LatticeVec operator*(std::int64_t s, const LatticeVec& a) { return {s * a.x, s * a.y}; }
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

  bool is_zero() const { return x == 0 && y == 0; }
  std::int64_t norm_inf() const { return std::max(x < 0 ? -x : x, y < 0 ? -y : y); }
  std::int64_t norm2() const { return x * x + y * y; }
};

std::string to_string(const LatticeVec& v);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// A subgroup of Z^2 in Hermite normal form: generated by (a, b) and (0, c)
/// with a >= 0, c >= 0, b == 0 whenever a == 0, and 0 <= b < c whenever c > 0.
class Lattice {
 public:
  Lattice() = default;
  static Lattice generated_by(std::span<const LatticeVec> gens);

  bool is_zero() const { return a_ == 0 && c_ == 0; }
  int rank() const { return (a_ != 0) + (c_ != 0); }
  std::vector<LatticeVec> basis() const;

  /// Canonical representative of v + L.
  LatticeVec reduce(LatticeVec v) const;
  bool contains(const LatticeVec& v) const { return reduce(v).is_zero(); }

  Lattice operator+(const Lattice& o) const;
  Lattice with(const LatticeVec& v) const;

  /// L intersected with n Z^2.
  Lattice multiples_of(std::int64_t n) const;
  /// L / n; every basis vector must be divisible by n.
  Lattice divided_by(std::int64_t n) const;

  friend auto operator<=>(const Lattice&, const Lattice&) = default;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t c_ = 0;
};

/// offset + lattice, with the offset kept canonical.
struct Coset {
  LatticeVec offset;
  Lattice lattice;

  static Coset make(LatticeVec offset, Lattice lattice) {
    return {lattice.reduce(offset), lattice};
  }
  bool contains(const LatticeVec& v) const { return lattice.contains(v - offset); }
  bool is_point() const { return lattice.is_zero(); }

  friend auto operator<=>(const Coset&, const Coset&) = default;
};

}  // namespace fsq
