#pragma once

#include <set>
#include <vector>

#include "fsq/digit_set.hpp"

namespace fsq::testing {

inline DigitSet carpet() { return parse_grid("###\n#.#\n###"); }
inline DigitSet vicsek() { return DigitSet(3, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}); }
inline DigitSet diagonal3() { return DigitSet(3, {{0, 0}, {1, 1}, {2, 2}}); }
inline DigitSet corners() { return DigitSet(3, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}); }
inline DigitSet diagonal2() { return DigitSet(2, {{0, 0}, {1, 1}}); }

/// Cells of F_k listed by walking every k-letter word over D: the word
/// d_1..d_k lands on sum d_i n^{k-i}.
inline std::set<std::pair<std::int64_t, std::int64_t>> cells_by_words(const DigitSet& d, int k) {
  std::set<std::pair<std::int64_t, std::int64_t>> out{{0, 0}};
  for (int level = 0; level < k; ++level) {
    std::set<std::pair<std::int64_t, std::int64_t>> next;
    for (const auto& [a, b] : out)
      for (const auto& c : d.digits()) next.insert({a * d.base() + c.x, b * d.base() + c.y});
    out = std::move(next);
  }
  return out;
}

}  // namespace fsq::testing
