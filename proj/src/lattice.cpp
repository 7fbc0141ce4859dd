#include "fsq/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace fsq {

std::string to_string(const LatticeVec& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

namespace {

// Returns g = gcd(p, q) >= 0 and s, t with s*p + t*q = g.
std::int64_t ext_gcd(std::int64_t p, std::int64_t q, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = p, r = q, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * cur_s;
    std::swap(old_s, cur_s);
    old_t -= quot * cur_t;
    std::swap(old_t, cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

Lattice Lattice::generated_by(std::span<const LatticeVec> gens) {
  Lattice l;
  for (const auto& g : gens) l = l.with(g);
  return l;
}

Lattice Lattice::with(const LatticeVec& g) const {
  Lattice l = *this;
  std::int64_t leftover_y = 0;
  if (g.x == 0) {
    leftover_y = g.y;
  } else if (l.a_ == 0) {
    l.a_ = g.x;
    l.b_ = g.y;
  } else {
    std::int64_t s = 0, t = 0;
    const std::int64_t d = ext_gcd(l.a_, g.x, s, t);
    // [[s, t], [g.x/d, -a/d]] is unimodular.
    const std::int64_t nb = s * l.b_ + t * g.y;
    leftover_y = (g.x / d) * l.b_ - (l.a_ / d) * g.y;
    l.a_ = d;
    l.b_ = nb;
  }
  if (l.a_ < 0) {
    l.a_ = -l.a_;
    l.b_ = -l.b_;
  }
  l.c_ = std::gcd(l.c_, leftover_y < 0 ? -leftover_y : leftover_y);
  if (l.c_ > 0) l.b_ = floor_mod(l.b_, l.c_);
  return l;
}

std::vector<LatticeVec> Lattice::basis() const {
  std::vector<LatticeVec> out;
  if (a_ != 0) out.push_back({a_, b_});
  if (c_ != 0) out.push_back({0, c_});
  return out;
}

LatticeVec Lattice::reduce(LatticeVec v) const {
  if (a_ != 0) {
    const std::int64_t i = floor_div(v.x, a_);
    v.x -= i * a_;
    v.y -= i * b_;
  }
  if (c_ != 0) v.y = floor_mod(v.y, c_);
  return v;
}

Lattice Lattice::operator+(const Lattice& o) const {
  Lattice l = *this;
  for (const auto& g : o.basis()) l = l.with(g);
  return l;
}

Lattice Lattice::multiples_of(std::int64_t n) const {
  const LatticeVec f{a_, b_};
  const LatticeVec e{0, c_};
  Lattice out = Lattice{}.with(n * f).with(n * e);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      const LatticeVec v = i * f + j * e;
      if (floor_mod(v.x, n) == 0 && floor_mod(v.y, n) == 0) out = out.with(v);
    }
  }
  return out;
}

Lattice Lattice::divided_by(std::int64_t n) const {
  if (a_ % n != 0 || b_ % n != 0 || c_ % n != 0) {
    throw std::logic_error("lattice not contained in n Z^2");
  }
  Lattice l;
  l.a_ = a_ / n;
  l.b_ = b_ / n;
  l.c_ = c_ / n;
  if (l.c_ > 0) l.b_ = floor_mod(l.b_, l.c_);
  return l;
}

}  // namespace fsq
