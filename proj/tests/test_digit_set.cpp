#include <algorithm>

#include "doctest.h"
#include "fsq/digit_set.hpp"
#include "helpers.hpp"

using namespace fsq;
using fsq::testing::cells_by_words;

TEST_SUITE("digit_set") {
  TEST_CASE("full grid is rejected as degenerate") {
    CHECK_THROWS_WITH_AS(parse_digit_set("##\n##"), doctest::Contains("degenerate digit set"), InputError);
  }

  TEST_CASE("single digit is rejected as degenerate") {
    CHECK_THROWS_WITH_AS(parse_digit_set("#.\n.."), doctest::Contains("degenerate digit set"), InputError);
  }

  TEST_CASE("top line of the grid is the highest row") {
    const DigitSet d = parse_digit_set("#.\n.#");
    CHECK(d.base() == 2);
    CHECK(d.digits() == std::vector<Cell>{{0, 1}, {1, 0}});
  }

  TEST_CASE("carpet grid reads off all cells but the centre") {
    const DigitSet d = parse_digit_set("###\n#.#\n###");
    CHECK(d.size() == 8);
    CHECK_FALSE(d.contains(1, 1));
    CHECK(d.complement() == std::vector<Cell>{{1, 1}});
  }

  TEST_CASE("grid rows may be separated by slashes") {
    CHECK(parse_digit_set("###/#.#/###") == parse_digit_set("###\n#.#\n###"));
  }

  TEST_CASE("malformed grids") {
    CHECK_THROWS_AS(parse_digit_set("##\n#"), InputError);
    CHECK_THROWS_AS(parse_digit_set("#x\n.#"), InputError);
    CHECK_THROWS_AS(parse_digit_set("#"), InputError);
  }

  TEST_CASE("JSON descriptor") {
    const DigitSet d = parse_digit_set(R"({"n": 3, "digits": [[0,0],[1,1],[2,2]]})");
    CHECK(d == testing::diagonal3());
    CHECK_THROWS_AS(parse_digit_set(R"({"n": 3, "digits": [[0,0],[0,0]]})"), InputError);
    CHECK_THROWS_AS(parse_digit_set(R"({"n": 3, "digits": [[0,3],[1,1]]})"), InputError);
    CHECK_THROWS_AS(parse_digit_set(R"({"n": 3})"), InputError);
    CHECK_THROWS_AS(parse_digit_set(R"({"n": 3, )"), InputError);
  }

  TEST_CASE("grid text round trip") {
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
      const int pop = __builtin_popcountll(mask);
      if (pop < 2 || pop > 8) continue;
      const DigitSet d = DigitSet::from_mask(3, mask);
      CHECK(parse_grid(to_grid_text(d)) == d);
      CHECK(d.mask() == mask);
    }
  }

  TEST_CASE("carpet expansion at levels one and two") {
    const CellGrid g1 = expand(testing::carpet(), 1);
    CHECK(g1.count() == 8);
    CHECK_FALSE(g1.present(1, 1));
    const CellGrid g2 = expand(testing::carpet(), 2);
    CHECK(g2.side() == 9);
    CHECK(g2.count() == 64);
    CHECK_FALSE(g2.present(4, 4));
    CHECK_FALSE(g2.present(1, 1));
    CHECK_FALSE(g2.present(3, 3));
    CHECK(g2.present(3, 0));
  }

  TEST_CASE("binary diagonal at level three has eight cells on the diagonal") {
    const CellGrid g = expand(testing::diagonal2(), 3);
    CHECK(g.count() == 8);
    for (int a = 0; a < 8; ++a) CHECK(g.present(a, a));
  }

  TEST_CASE("expansion matches word enumeration") {
    for (std::uint64_t mask : {0x1FEull, 0x0BAull, 0x111ull, 0x145ull, 0x0C3ull, 0x055ull}) {
      const DigitSet d = DigitSet::from_mask(3, mask);
      for (int k = 1; k <= 4; ++k) {
        const CellGrid g = expand(d, k);
        const auto words = cells_by_words(d, k);
        std::int64_t present = 0;
        for (std::int64_t b = 0; b < g.side(); ++b)
          for (std::int64_t a = 0; a < g.side(); ++a) {
            const bool expected = words.count({a, b}) > 0;
            if (g.present(a, b) != expected) FAIL_CHECK("mismatch at " << a << "," << b);
            present += g.present(a, b);
          }
        CHECK(present == static_cast<std::int64_t>(words.size()));
      }
    }
  }

  TEST_CASE("cell count is a power of #D and levels refine") {
    for (std::uint64_t mask = 3; mask < 16; ++mask) {
      if (__builtin_popcountll(mask) < 2 || mask == 15) continue;
      const DigitSet d = DigitSet::from_mask(2, mask);
      for (int k = 1; k <= 6; ++k) {
        const CellGrid fine = expand(d, k + 1);
        const CellGrid coarse = expand(d, k);
        std::int64_t expected = 1;
        for (int i = 0; i <= k; ++i) expected *= static_cast<std::int64_t>(d.size());
        CHECK(fine.count() == expected);
        for (std::int64_t b = 0; b < fine.side(); ++b)
          for (std::int64_t a = 0; a < fine.side(); ++a)
            if (fine.present(a, b)) CHECK(coarse.present(a / 2, b / 2));
      }
    }
  }

  TEST_CASE("periodic lookup wraps negative indices") {
    const CellGrid g = expand(testing::carpet(), 1);
    CHECK(g.present_periodic(-1, -1) == g.present(2, 2));
    CHECK_FALSE(g.present_periodic(4, -2));
    CHECK(g.present_periodic(5, 3));
  }

  TEST_CASE("side cap raises a resource error") {
    CHECK_THROWS_AS(expand(testing::carpet(), 9), ResourceError);
    CHECK_NOTHROW(checked_side(3, 8));
    CHECK_THROWS_AS(checked_side(2, 15), ResourceError);
  }

  TEST_CASE("symmetries act as the dihedral group") {
    CHECK(apply_symmetry(testing::vicsek(), Symmetry::kIdentity) == testing::vicsek());
    // Closure and the identity element.
    for (auto g : kAllSymmetries) {
      CHECK(compose(g, Symmetry::kIdentity) == g);
      bool has_inverse = false;
      for (auto h : kAllSymmetries) has_inverse = has_inverse || compose(g, h) == Symmetry::kIdentity;
      CHECK(has_inverse);
    }
    // compose(g, h) means g first.
    const DigitSet d = DigitSet(3, {{0, 0}, {1, 0}, {0, 2}});
    for (auto g : kAllSymmetries)
      for (auto h : kAllSymmetries)
        CHECK(apply_symmetry(apply_symmetry(d, g), h) == apply_symmetry(d, compose(g, h)));
  }

  TEST_CASE("quarter turn rotates the picture counterclockwise") {
    // An L with its corner bottom-left, turned by 90 degrees, has its corner
    // bottom-right.
    const DigitSet l = parse_grid("#..\n#..\n###");
    const DigitSet turned = apply_symmetry(l, Symmetry::kRot90);
    CHECK(turned == parse_grid("..#\n..#\n###"));
  }

  TEST_CASE("each symmetry permutes the cells") {
    for (int n = 2; n <= 5; ++n)
      for (auto g : kAllSymmetries) {
        std::set<std::pair<int, int>> image;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const Cell c = apply(g, {x, y}, n);
            CHECK(c.x >= 0);
            CHECK(c.x < n);
            CHECK(c.y >= 0);
            CHECK(c.y < n);
            image.insert({c.x, c.y});
          }
        CHECK(image.size() == static_cast<std::size_t>(n * n));
      }
  }

  TEST_CASE("expansion commutes with symmetries") {
    const DigitSet d = DigitSet(3, {{0, 0}, {1, 0}, {2, 1}, {0, 2}});
    for (auto g : kAllSymmetries) {
      const CellGrid direct = expand(apply_symmetry(d, g), 3);
      const CellGrid base = expand(d, 3);
      for (std::int64_t b = 0; b < 27; ++b)
        for (std::int64_t a = 0; a < 27; ++a) {
          const Cell img = apply(g, {static_cast<int>(a), static_cast<int>(b)}, 27);
          if (base.present(a, b) != direct.present(img.x, img.y)) FAIL_CHECK("cell " << a << "," << b);
        }
    }
  }

  TEST_CASE("canonical form") {
    CHECK(orbit_size(testing::carpet()) == 1);
    for (auto g : kAllSymmetries) CHECK(apply_symmetry(testing::carpet(), g) == testing::carpet());
    CHECK(orbit_size(testing::diagonal3()) == 2);
    for (std::uint64_t mask = 0; mask < 512; mask += 7) {
      const int pop = __builtin_popcountll(mask);
      if (pop < 2 || pop > 8) continue;
      const DigitSet d = DigitSet::from_mask(3, mask);
      const DigitSet c = canonical_form(d);
      CHECK(canonical_form(c) == c);
      for (auto g : kAllSymmetries) {
        CHECK(canonical_form(apply_symmetry(d, g)) == c);
        CHECK(c <= apply_symmetry(d, g));
      }
    }
  }

  TEST_CASE("orbit sizes of base two add up") {
    // Orbits of the ten valid sets: adjacent pairs (4), diagonal pairs (2),
    // triples (4).
    std::set<std::uint64_t> reps;
    int total = 0;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      const int pop = __builtin_popcountll(mask);
      if (pop < 2 || pop > 3) continue;
      const DigitSet d = DigitSet::from_mask(2, mask);
      if (reps.insert(canonical_form(d).mask()).second) total += orbit_size(d);
    }
    CHECK(reps.size() == 3);
    CHECK(total == 10);
  }
}
