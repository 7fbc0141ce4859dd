#include "fsq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsq {

namespace {

__extension__ typedef __int128 i128;

// Smallest m >= 0 with m^2 * den^2 >= num.
std::int64_t ceil_sqrt_ratio(i128 num, i128 den) {
  std::int64_t m = 0;
  while (static_cast<i128>(m) * m * den * den < num) ++m;
  return m;
}

std::int64_t window_cells(const Window& w, std::int64_t side) {
  return w.width() * side * w.height() * side;
}

// Iterative flood fill over cells accepted by `open`, 4- or 8-adjacency.
template <typename Open, typename Visit>
void flood(std::int64_t width, std::int64_t height, std::int64_t start, std::vector<std::int32_t>& label,
           std::int32_t id, bool diagonal, const Open& open, const Visit& visit) {
  std::vector<std::int64_t> stack{start};
  label[static_cast<std::size_t>(start)] = id;
  while (!stack.empty()) {
    const std::int64_t cur = stack.back();
    stack.pop_back();
    const std::int64_t i = cur % width;
    const std::int64_t j = cur / width;
    visit(i, j);
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        if (di == 0 && dj == 0) continue;
        if (!diagonal && di != 0 && dj != 0) continue;
        const std::int64_t ni = i + di;
        const std::int64_t nj = j + dj;
        if (ni < 0 || nj < 0 || ni >= width || nj >= height) continue;
        const std::int64_t idx = nj * width + ni;
        if (label[static_cast<std::size_t>(idx)] != -1 || !open(ni, nj)) continue;
        label[static_cast<std::size_t>(idx)] = id;
        stack.push_back(idx);
      }
    }
  }
}

template <typename Open>
LabelledGrid label_components(std::int64_t width, std::int64_t height, bool diagonal, const Open& open) {
  LabelledGrid out;
  out.width = width;
  out.height = height;
  out.labels.assign(static_cast<std::size_t>(width * height), -1);
  std::int32_t next = 0;
  for (std::int64_t j = 0; j < height; ++j) {
    for (std::int64_t i = 0; i < width; ++i) {
      const std::int64_t idx = j * width + i;
      if (out.labels[static_cast<std::size_t>(idx)] != -1 || !open(i, j)) continue;
      std::int64_t size = 0;
      std::int64_t min_i = i, max_i = i, min_j = j, max_j = j;
      bool border = false;
      flood(width, height, idx, out.labels, next, diagonal, open, [&](std::int64_t a, std::int64_t b) {
        ++size;
        min_i = std::min(min_i, a);
        max_i = std::max(max_i, a);
        min_j = std::min(min_j, b);
        max_j = std::max(max_j, b);
        if (a == 0 || b == 0 || a == width - 1 || b == height - 1) border = true;
      });
      ++next;
      auto& st = out.stats;
      ++st.count;
      st.sizes.push_back(size);
      st.total_cells += size;
      st.max_size = std::max(st.max_size, size);
      st.max_extent = std::max({st.max_extent, max_i - min_i + 1, max_j - min_j + 1});
      if (border) ++st.touching_border;
    }
  }
  return out;
}

}  // namespace

WindowGrid::WindowGrid(const DigitSet& d, int k, Window window, std::vector<LatticeVec> removed,
                       std::int64_t max_cells)
    : grid_(expand(d, k)), window_(window), removed_(std::move(removed)) {
  if (window.width() <= 0 || window.height() <= 0) throw InputError("empty window");
  if (window_cells(window, grid_.side()) > max_cells) {
    throw ResourceError("window of " + std::to_string(window_cells(window, grid_.side())) +
                        " cells exceeds cap " + std::to_string(max_cells));
  }
}

bool WindowGrid::present(std::int64_t i, std::int64_t j) const {
  const std::int64_t side = grid_.side();
  const LatticeVec unit{window_.x0 + i / side, window_.y0 + j / side};
  for (const auto& r : removed_)
    if (r == unit) return false;
  return grid_.present(i % side, j % side);
}

LabelledGrid label_Fk(const DigitSet& d, int k) {
  const CellGrid grid = expand(d, k);
  return label_components(grid.side(), grid.side(), true,
                          [&](std::int64_t i, std::int64_t j) { return grid.present(i, j); });
}

ComponentStats components_Fk(const DigitSet& d, int k) { return label_Fk(d, k).stats; }

LabelledGrid label_complement(const DigitSet& d, int k, const Window& window) {
  const WindowGrid grid(d, k, window);
  return label_components(grid.width(), grid.height(), false,
                          [&](std::int64_t i, std::int64_t j) { return !grid.present(i, j); });
}

ComponentStats complement_components(const DigitSet& d, int k, const Window& window) {
  return label_complement(d, k, window).stats;
}

std::int64_t default_margin(int n, const LatticeVec& q) {
  const i128 base = static_cast<i128>(n) * n + 1;
  return ceil_sqrt_ratio(8 * base * base * base * base, n) + q.norm_inf() + 2;
}

std::int64_t diameter_bound(int n) {
  const i128 base = static_cast<i128>(n) * n + 1;
  return ceil_sqrt_ratio(2 * base * base * base * base, n);
}

namespace {

// Flood from the cells of `source` (a rectangle of local indices, all absent)
// and report whether any cell of `target` is reached.
struct Block {
  std::int64_t i0, j0, i1, j1;  // half-open
  bool contains(std::int64_t i, std::int64_t j) const { return i >= i0 && i < i1 && j >= j0 && j < j1; }
};

bool reaches(const WindowGrid& grid, const Block& source, const Block& target) {
  const std::int64_t w = grid.width();
  const std::int64_t h = grid.height();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w * h), 0);
  std::vector<std::int64_t> queue;
  for (std::int64_t j = source.j0; j < source.j1; ++j) {
    for (std::int64_t i = source.i0; i < source.i1; ++i) {
      if (grid.present(i, j)) continue;
      seen[static_cast<std::size_t>(j * w + i)] = 1;
      queue.push_back(j * w + i);
    }
  }
  constexpr int kDi[4] = {1, -1, 0, 0};
  constexpr int kDj[4] = {0, 0, 1, -1};
  // Breadth-first, so a nearby target is found before the search wanders.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t cur = queue[head];
    const std::int64_t i = cur % w;
    const std::int64_t j = cur / w;
    if (target.contains(i, j)) return true;
    for (int t = 0; t < 4; ++t) {
      const std::int64_t ni = i + kDi[t];
      const std::int64_t nj = j + kDj[t];
      if (ni < 0 || nj < 0 || ni >= w || nj >= h) continue;
      auto& s = seen[static_cast<std::size_t>(nj * w + ni)];
      if (s || grid.present(ni, nj)) continue;
      s = 1;
      queue.push_back(nj * w + ni);
    }
  }
  return false;
}

Window padded(const LatticeVec& a, const LatticeVec& b, std::int64_t margin) {
  return {std::min(a.x, b.x) - margin, std::min(a.y, b.y) - margin, std::max(a.x, b.x) + 1 + margin,
          std::max(a.y, b.y) + 1 + margin};
}

}  // namespace

Admissibility oracle_admissible(const DigitSet& d, int k, const LatticeVec& q, std::optional<std::int64_t> margin) {
  if (q.is_zero()) return Admissibility::kConnected;
  const std::int64_t m = margin.value_or(default_margin(d.base(), q));
  const WindowGrid grid(d, k, padded({0, 0}, q, m), {{0, 0}, q});
  const std::int64_t side = grid.cells_per_unit();
  const Block source{grid.local_x(0), grid.local_y(0), grid.local_x(0) + side, grid.local_y(0) + side};
  const Block target{grid.local_x(q.x), grid.local_y(q.y), grid.local_x(q.x) + side, grid.local_y(q.y) + side};
  return reaches(grid, source, target) ? Admissibility::kConnected : Admissibility::kNotWithinWindow;
}

std::vector<LatticeVec> oracle_Q(const DigitSet& d, int k, std::int64_t bound, std::optional<std::int64_t> margin) {
  std::vector<LatticeVec> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if (oracle_admissible(d, k, {x, y}, margin) == Admissibility::kConnected) out.push_back({x, y});
    }
  }
  return out;
}

bool squares_joined(const DigitSet& d, int k, Cell du, Cell dv, const LatticeVec& b,
                    std::optional<std::int64_t> margin) {
  if (d.contains(du) || d.contains(dv)) throw InputError("squares_joined needs cells of D^c");
  const std::int64_t m = margin.value_or(default_margin(d.base(), b));
  const WindowGrid grid(d, k, padded({0, 0}, b, m));
  const std::int64_t sub = grid.cells_per_unit() / d.base();
  const Block source{grid.local_x(0) + du.x * sub, grid.local_y(0) + du.y * sub,
                     grid.local_x(0) + (du.x + 1) * sub, grid.local_y(0) + (du.y + 1) * sub};
  const Block target{grid.local_x(b.x) + dv.x * sub, grid.local_y(b.y) + dv.y * sub,
                     grid.local_x(b.x) + (dv.x + 1) * sub, grid.local_y(b.y) + (dv.y + 1) * sub};
  return reaches(grid, source, target);
}

bool crossing_path_exists(const DigitSet& d, int k) {
  const CellGrid grid = expand(d, k);
  const std::int64_t side = grid.side();
  const WindowGrid unit(d, k, Window{0, 0, 1, 1});
  const Block left{0, 0, 1, side};
  const Block right{side - 1, 0, side, side};
  const Block bottom{0, 0, side, 1};
  const Block top{0, side - 1, side, side};
  return reaches(unit, left, right) || reaches(unit, bottom, top);
}

bool line_in_Hk(const DigitSet& d, const Slope& slope, const Rational& omega, int k) {
  const CellGrid grid = expand(d, k);
  const i128 big_n = grid.side();
  if (slope.is_vertical() || slope.r == 0) {
    // x = omega (vertical) or y = omega (horizontal). Off the skeleton the
    // open strip must be filled; on a grid line either neighbouring strip
    // may cover each piece of the closed line.
    const bool vertical = slope.is_vertical();
    auto at = [&](std::int64_t strip, std::int64_t t) {
      return vertical ? grid.present_periodic(strip, t) : grid.present_periodic(t, strip);
    };
    const i128 scaled = static_cast<i128>(omega.num) * big_n;
    const auto strip = static_cast<std::int64_t>(floor_div(static_cast<std::int64_t>(scaled), omega.den));
    const bool on_skeleton = scaled % omega.den == 0;
    for (std::int64_t t = 0; t < grid.side(); ++t) {
      const bool ok = at(strip, t) || (on_skeleton && at(strip - 1, t));
      if (!ok) return false;
    }
    return true;
  }
  const i128 p = omega.num;
  const i128 q = omega.den;
  const i128 r = slope.r;
  const i128 s = slope.s;
  const i128 abs_r = r < 0 ? -r : r;
  // Points y = t / (4 N q |r|), t in [0, 4 s N q |r|); consecutive crossings
  // of the line with the grid are at least 1 / (N q |r|) apart in y. In cell
  // units N y = s t / den and N x = (4 |r| s N p + r t) / den.
  const i128 den = 4 * s * q * abs_r;
  const i128 samples = 4 * s * big_n * q * abs_r;
  if (samples > (i128{1} << 31)) throw ResourceError("line sampling too fine");
  auto candidates = [&](i128 scaled_num, std::int64_t out[2]) {
    // Cells a with a <= scaled_num / den <= a + 1.
    i128 a = scaled_num / den;
    if (scaled_num % den != 0 && scaled_num < 0) --a;
    out[0] = static_cast<std::int64_t>(a);
    out[1] = (scaled_num % den == 0) ? static_cast<std::int64_t>(a - 1) : out[0];
  };
  for (i128 t = 0; t < samples; ++t) {
    const i128 x_num = 4 * abs_r * s * big_n * p + r * t;
    const i128 y_num = s * t;
    std::int64_t xs[2], ys[2];
    candidates(x_num, xs);
    candidates(y_num, ys);
    bool covered = false;
    for (auto a : xs)
      for (auto b : ys) covered = covered || grid.present_periodic(a, b);
    if (!covered) return false;
  }
  return true;
}

}  // namespace fsq
