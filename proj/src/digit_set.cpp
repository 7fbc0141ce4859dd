#include "fsq/digit_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "json.hpp"

namespace fsq {

DigitSet::DigitSet(int n, std::vector<Cell> digits) : n_(n), digits_(std::move(digits)) {
  if (n < 2) throw InputError("base must be at least 2, got " + std::to_string(n));
  if (n > 64) throw InputError("base too large: " + std::to_string(n));
  present_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& c : digits_) {
    if (c.x < 0 || c.x >= n || c.y < 0 || c.y >= n) {
      throw InputError("digit (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                       ") outside {0.." + std::to_string(n - 1) + "}^2");
    }
    auto& slot = present_[static_cast<std::size_t>(c.y) * n + c.x];
    if (slot) {
      throw InputError("duplicate digit (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")");
    }
    slot = 1;
  }
  std::sort(digits_.begin(), digits_.end());
  if (digits_.size() <= 1 || digits_.size() >= static_cast<std::size_t>(n) * n) {
    throw InputError("degenerate digit set: need 1 < #D < n^2, got #D = " +
                     std::to_string(digits_.size()) + " for n = " + std::to_string(n));
  }
}

bool DigitSet::contains(Cell c) const {
  if (c.x < 0 || c.x >= n_ || c.y < 0 || c.y >= n_) return false;
  return present_[static_cast<std::size_t>(c.y) * n_ + c.x] != 0;
}

std::vector<Cell> DigitSet::complement() const {
  std::vector<Cell> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (!contains(x, y)) out.push_back({x, y});
  return out;
}

std::uint64_t DigitSet::mask() const {
  std::uint64_t m = 0;
  for (const auto& c : digits_) m |= std::uint64_t{1} << (c.y * n_ + c.x);
  return m;
}

DigitSet DigitSet::from_mask(int n, std::uint64_t mask) {
  if (n < 2 || n > 8) throw InputError("mask encoding supports 2 <= n <= 8");
  std::vector<Cell> cells;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if ((mask >> (y * n + x)) & 1u) cells.push_back({x, y});
  return DigitSet(n, std::move(cells));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

DigitSet parse_digit_set(std::string_view text) {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_digit_json(body);
  return parse_grid(body);
}

DigitSet parse_grid(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (char ch : trim(text)) {
    if (ch == '\n' || ch == '/') {
      rows.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  rows.push_back(current);
  for (auto& r : rows) r = std::string(trim(r));

  const int n = static_cast<int>(rows.size());
  if (n < 2) throw InputError("grid must have at least 2 rows");
  std::vector<Cell> cells;
  for (int line = 0; line < n; ++line) {
    const auto& row = rows[line];
    if (static_cast<int>(row.size()) != n) {
      throw InputError("non-square grid: row " + std::to_string(line) + " has " +
                       std::to_string(row.size()) + " characters, expected " + std::to_string(n));
    }
    for (int x = 0; x < n; ++x) {
      if (row[x] == '#') {
        cells.push_back({x, n - 1 - line});
      } else if (row[x] != '.') {
        throw InputError(std::string("illegal character '") + row[x] + "' in grid");
      }
    }
  }
  return DigitSet(n, std::move(cells));
}

DigitSet parse_digit_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON digit set: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("digits")) {
    throw InputError("JSON digit set needs fields \"n\" and \"digits\"");
  }
  if (!j["n"].is_number_integer() || !j["digits"].is_array()) {
    throw InputError("JSON digit set: \"n\" must be an integer and \"digits\" an array");
  }
  std::vector<Cell> cells;
  for (const auto& d : j["digits"]) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
      throw InputError("JSON digit set: each digit must be [x, y]");
    }
    cells.push_back({d[0].get<int>(), d[1].get<int>()});
  }
  return DigitSet(j["n"].get<int>(), std::move(cells));
}

std::string to_grid_text(const DigitSet& d) {
  const int n = d.base();
  std::string out;
  for (int y = n - 1; y >= 0; --y) {
    for (int x = 0; x < n; ++x) out.push_back(d.contains(x, y) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

// --- CellGrid ---------------------------------------------------------------

CellGrid::CellGrid(int n, int level, std::int64_t side)
    : n_(n), level_(level), side_(side), bits_(static_cast<std::size_t>((side * side + 63) / 64), 0) {}

bool CellGrid::present_periodic(std::int64_t a, std::int64_t b) const {
  a %= side_;
  b %= side_;
  if (a < 0) a += side_;
  if (b < 0) b += side_;
  return present(a, b);
}

void CellGrid::set(std::int64_t a, std::int64_t b) {
  const auto i = static_cast<std::uint64_t>(b * side_ + a);
  bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

std::int64_t CellGrid::count() const {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total;
}

std::int64_t checked_side(int n, int k, std::int64_t max_side) {
  if (k < 1) throw InputError("level k must be at least 1");
  std::int64_t side = 1;
  for (int i = 0; i < k; ++i) {
    side *= n;
    if (side > max_side) {
      throw ResourceError("grid side " + std::to_string(n) + "^" + std::to_string(k) +
                          " exceeds cap " + std::to_string(max_side));
    }
  }
  return side;
}

CellGrid expand(const DigitSet& d, int k, std::int64_t max_side) {
  const int n = d.base();
  const std::int64_t side = checked_side(n, k, max_side);
  // Refine level by level: (a, b) at level j+1 is present iff its parent
  // (a / n, b / n) is present at level j and its last digit pair is in D.
  std::vector<std::uint8_t> prev(1, 1);
  std::int64_t prev_side = 1;
  for (int level = 1; level <= k; ++level) {
    const std::int64_t s = prev_side * n;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(s * s), 0);
    for (std::int64_t b = 0; b < s; ++b) {
      for (std::int64_t a = 0; a < s; ++a) {
        if (prev[static_cast<std::size_t>((b / n) * prev_side + a / n)] &&
            d.contains(static_cast<int>(a % n), static_cast<int>(b % n))) {
          cur[static_cast<std::size_t>(b * s + a)] = 1;
        }
      }
    }
    prev = std::move(cur);
    prev_side = s;
  }
  CellGrid grid(n, k, side);
  for (std::int64_t b = 0; b < side; ++b)
    for (std::int64_t a = 0; a < side; ++a)
      if (prev[static_cast<std::size_t>(b * side + a)]) grid.set(a, b);
  return grid;
}

// --- Symmetries -------------------------------------------------------------

namespace {

struct Mat2 {
  int a, b, c, d;  // [[a b] [c d]] acting on column (x, y)
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 matrix_of(Symmetry g) {
  switch (g) {
    case Symmetry::kIdentity: return {1, 0, 0, 1};
    case Symmetry::kRot90: return {0, -1, 1, 0};
    case Symmetry::kRot180: return {-1, 0, 0, -1};
    case Symmetry::kRot270: return {0, 1, -1, 0};
    case Symmetry::kFlipX: return {-1, 0, 0, 1};
    case Symmetry::kFlipY: return {1, 0, 0, -1};
    case Symmetry::kTranspose: return {0, 1, 1, 0};
    case Symmetry::kAntiTranspose: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

}  // namespace

std::string_view symmetry_name(Symmetry g) {
  switch (g) {
    case Symmetry::kIdentity: return "identity";
    case Symmetry::kRot90: return "rot90";
    case Symmetry::kRot180: return "rot180";
    case Symmetry::kRot270: return "rot270";
    case Symmetry::kFlipX: return "flip_x";
    case Symmetry::kFlipY: return "flip_y";
    case Symmetry::kTranspose: return "transpose";
    case Symmetry::kAntiTranspose: return "anti_transpose";
  }
  return "?";
}

std::array<std::int64_t, 2> apply_linear(Symmetry g, std::int64_t x, std::int64_t y) {
  const Mat2 m = matrix_of(g);
  return {m.a * x + m.b * y, m.c * x + m.d * y};
}

Cell apply(Symmetry g, Cell c, int n) {
  // Work in doubled coordinates centred on the grid midpoint.
  const auto [x2, y2] = apply_linear(g, 2 * c.x - (n - 1), 2 * c.y - (n - 1));
  return {static_cast<int>((x2 + (n - 1)) / 2), static_cast<int>((y2 + (n - 1)) / 2)};
}

Symmetry compose(Symmetry g, Symmetry h) {
  const Mat2 mg = matrix_of(g);
  const Mat2 mh = matrix_of(h);
  const Mat2 prod{mh.a * mg.a + mh.b * mg.c, mh.a * mg.b + mh.b * mg.d,
                  mh.c * mg.a + mh.d * mg.c, mh.c * mg.b + mh.d * mg.d};
  for (auto s : kAllSymmetries)
    if (matrix_of(s) == prod) return s;
  throw std::logic_error("dihedral group not closed");
}

DigitSet apply_symmetry(const DigitSet& d, Symmetry g) {
  std::vector<Cell> cells;
  cells.reserve(d.size());
  for (const auto& c : d.digits()) cells.push_back(apply(g, c, d.base()));
  return DigitSet(d.base(), std::move(cells));
}

DigitSet canonical_form(const DigitSet& d) {
  DigitSet best = d;
  for (auto g : kAllSymmetries) {
    DigitSet image = apply_symmetry(d, g);
    if (image.digits() < best.digits()) best = std::move(image);
  }
  return best;
}

int orbit_size(const DigitSet& d) {
  std::set<std::vector<Cell>> images;
  for (auto g : kAllSymmetries) images.insert(apply_symmetry(d, g).digits());
  return static_cast<int>(images.size());
}

}  // namespace fsq
