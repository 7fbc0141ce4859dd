#include "fsq/line_detect.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fsq/lattice.hpp"

namespace fsq {

namespace {

__extension__ typedef __int128 i128;

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ResourceError("intercept arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string to_string(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

Slope Slope::rational(std::int64_t r, std::int64_t s) {
  if (s < 1) throw std::invalid_argument("slope denominator must be positive");
  const std::int64_t g = std::gcd(r < 0 ? -r : r, s);
  return {r / g, s / g};
}

Slope Slope::of_direction(std::int64_t dx, std::int64_t dy) {
  if (dx == 0 && dy == 0) throw std::invalid_argument("zero direction");
  if (dy == 0) return rational(0, 1);
  if (dx == 0) return vertical();
  if (dy < 0) {
    dx = -dx;
    dy = -dy;
  }
  return rational(dx, dy);
}

std::array<std::int64_t, 2> direction_vector(const Slope& slope) {
  if (slope.is_vertical()) return {0, 1};
  if (slope.r == 0) return {1, 0};
  return {slope.r, slope.s};
}

std::string to_string(const Slope& slope) {
  if (slope.is_vertical()) return "vertical";
  return std::to_string(slope.r) + "/" + std::to_string(slope.s);
}

Slope map_direction(Symmetry g, const Slope& slope) {
  const auto v = direction_vector(slope);
  const auto [dx, dy] = apply_linear(g, v[0], v[1]);
  return Slope::of_direction(dx, dy);
}

std::vector<Slope> candidate_slopes(int n) {
  std::vector<Slope> out;
  for (int total = 1; total <= n; ++total) {
    for (int r = -(total - 1); r <= total - 1; ++r) {
      const int s = total - (r < 0 ? -r : r);
      if (s >= 1 && std::gcd(r < 0 ? -r : r, s) == 1) out.push_back({r, s});
    }
  }
  out.push_back(Slope::vertical());
  return out;
}

std::optional<int> full_row(const DigitSet& d) {
  const int n = d.base();
  for (int y = 0; y < n; ++y) {
    bool full = true;
    for (int x = 0; x < n && full; ++x) full = d.contains(x, y);
    if (full) return y;
  }
  return std::nullopt;
}

std::optional<int> full_col(const DigitSet& d) {
  const int n = d.base();
  for (int x = 0; x < n; ++x) {
    bool full = true;
    for (int y = 0; y < n && full; ++y) full = d.contains(x, y);
    if (full) return x;
  }
  return std::nullopt;
}

bool line_covered(const CellGrid& grid, const Slope& slope, const Rational& omega) {
  if (slope.is_vertical() || slope.r == 0) {
    throw std::invalid_argument("line_covered needs a non-axis slope");
  }
  // Parametrize y in [0, s) by Y = y * N q |r|, so every crossing with the
  // 1/N grid is an integer Y.
  const i128 big_n = grid.side();
  const i128 p = omega.num;
  const i128 q = omega.den;
  const i128 r = slope.r;
  const i128 abs_r = r < 0 ? -r : r;
  const i128 sgn = r < 0 ? -1 : 1;
  const i128 s = slope.s;
  const i128 scale = big_n * q * abs_r;
  const i128 y_end = s * scale;

  std::vector<i128> breaks;
  for (i128 j = 0; j <= s * big_n; ++j) breaks.push_back(j * q * abs_r);
  const i128 i_mid = floor_div128(p * big_n, q);
  for (i128 i = i_mid - big_n * abs_r - 1; i <= i_mid + big_n * abs_r + 1; ++i) {
    const i128 y = sgn * s * (i * q - p * big_n);
    if (y > 0 && y < y_end) breaks.push_back(y);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  for (std::size_t t = 0; t + 1 < breaks.size(); ++t) {
    const i128 y2 = breaks[t] + breaks[t + 1];  // twice the midpoint
    const i128 col = floor_div128(2 * p * s * big_n + sgn * y2, 2 * s * q);
    const i128 row = floor_div128(y2, 2 * q * abs_r);
    if (!grid.present_periodic(static_cast<std::int64_t>(col % big_n),
                               static_cast<std::int64_t>(row % big_n))) {
      return false;
    }
  }
  return true;
}

bool segment_coverage_test(const DigitSet& d, const Slope& slope, const Rational& omega) {
  return line_covered(expand(d, 1), slope, omega);
}

bool horizontal_coverage_test(const DigitSet& d, const Rational& omega) {
  const std::int64_t n = d.base();
  if ((omega.num * n) % omega.den == 0) return false;
  const int row = static_cast<int>(floor_mod(floor_div(omega.num * n, omega.den), n));
  for (int x = 0; x < n; ++x)
    if (!d.contains(x, row)) return false;
  return true;
}

OmegaProfile omega_profile(const DigitSet& d, const Slope& slope) {
  if (slope.is_vertical()) throw std::invalid_argument("omega profile needs a rational slope");
  OmegaProfile profile;
  profile.n = d.base();
  profile.slope = slope;
  profile.grid = static_cast<std::int64_t>(d.base()) * slope.s;
  profile.points.assign(static_cast<std::size_t>(profile.grid), false);
  profile.intervals.assign(static_cast<std::size_t>(profile.grid), false);
  const CellGrid level1 = expand(d, 1);
  for (std::int64_t m = 0; m < profile.grid; ++m) {
    const auto point = Rational::make(m, profile.grid);
    const auto mid = Rational::make(2 * m + 1, 2 * profile.grid);
    if (slope.r == 0) {
      profile.points[m] = horizontal_coverage_test(d, point);
      profile.intervals[m] = horizontal_coverage_test(d, mid);
    } else {
      profile.points[m] = line_covered(level1, slope, point);
      profile.intervals[m] = line_covered(level1, slope, mid);
    }
  }
  return profile;
}

std::vector<std::int64_t> surviving_points(const OmegaProfile& profile) {
  std::vector<bool> alive = profile.points;
  const std::int64_t grid = profile.grid;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t m = 0; m < grid; ++m) {
      if (alive[m] && !alive[(profile.n * m) % grid]) {
        alive[m] = false;
        changed = true;
      }
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t m = 0; m < grid; ++m)
    if (alive[m]) out.push_back(m);
  return out;
}

bool line_exists_for_slope(const OmegaProfile& profile) {
  if (std::find(profile.intervals.begin(), profile.intervals.end(), true) != profile.intervals.end()) {
    return true;
  }
  return !surviving_points(profile).empty();
}

std::optional<Rational> witness_intercept(const OmegaProfile& profile) {
  const auto points = surviving_points(profile);
  if (!points.empty()) return Rational::make(points.front(), profile.grid);

  // Interval m maps onto the n consecutive intervals n m + t, t in [0, n).
  const std::int64_t grid = profile.grid;
  const std::int64_t n = profile.n;
  std::vector<bool> alive = profile.intervals;
  auto successor = [&](std::int64_t m) -> std::optional<std::int64_t> {
    for (std::int64_t t = 0; t < n; ++t) {
      const std::int64_t next = (n * m + t) % grid;
      if (alive[next]) return t;
    }
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t m = 0; m < grid; ++m) {
      if (alive[m] && !successor(m)) {
        alive[m] = false;
        changed = true;
      }
    }
  }
  auto start = std::find(alive.begin(), alive.end(), true);
  if (start == alive.end()) return std::nullopt;

  // Follow first successors until a node repeats; that node starts a cycle.
  std::vector<std::int64_t> seen_at(static_cast<std::size_t>(grid), -1);
  std::vector<std::int64_t> path;
  std::vector<std::int64_t> digits;
  std::int64_t m = start - alive.begin();
  while (seen_at[m] < 0) {
    seen_at[m] = static_cast<std::int64_t>(path.size());
    path.push_back(m);
    const std::int64_t t = *successor(m);
    digits.push_back(t);
    m = (n * m + t) % grid;
  }
  const auto first = static_cast<std::size_t>(seen_at[m]);
  // x = (m0 + f) / grid with f = 0.t_0 t_1 ... t_{p-1} (repeating, base n).
  i128 period_pow = 1;
  i128 tail = 0;
  for (std::size_t j = first; j < digits.size(); ++j) {
    period_pow *= n;
    tail = tail * n + digits[j];
    if (period_pow > (i128{1} << 60)) throw ResourceError("periodic intercept too long");
  }
  const i128 denom_cycle = period_pow - 1;
  return Rational::make(narrow(static_cast<i128>(path[first]) * denom_cycle + tail),
                        narrow(static_cast<i128>(grid) * denom_cycle));
}

Rational band_intercept(int j, int n) {
  return Rational::make(j, n - 1);
}

std::optional<LineWitness> find_line_witness(const DigitSet& d) {
  const std::int64_t n = d.base();
  if (auto row = full_row(d)) return LineWitness{Slope::rational(0, 1), band_intercept(*row, static_cast<int>(n))};
  if (auto col = full_col(d)) return LineWitness{Slope::vertical(), band_intercept(*col, static_cast<int>(n))};
  for (const auto& slope : candidate_slopes(d.base())) {
    if (slope.is_vertical() || slope.r == 0) continue;
    const auto profile = omega_profile(d, slope);
    if (!line_exists_for_slope(profile)) continue;
    if (auto omega = witness_intercept(profile)) return LineWitness{slope, *omega};
  }
  return std::nullopt;
}

}  // namespace fsq
