#include <algorithm>

#include "doctest.h"
#include "fsq/oracle.hpp"
#include "helpers.hpp"

using namespace fsq;

namespace {
bool has(const std::vector<LatticeVec>& v, LatticeVec q) { return std::find(v.begin(), v.end(), q) != v.end(); }
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("components of the approximations") {
    auto carpet = components_Fk(testing::carpet(), 1);
    CHECK(carpet.count == 1);
    CHECK(carpet.max_size == 8);
    CHECK(carpet.total_cells == 8);

    auto dust = components_Fk(testing::corners(), 2);
    CHECK(dust.count == 16);
    CHECK(dust.max_size == 1);

    // 8-adjacency joins diagonal neighbours.
    auto diag = components_Fk(testing::diagonal2(), 3);
    CHECK(diag.count == 1);
    CHECK(diag.max_size == 8);
    CHECK(diag.max_extent == 8);

    auto vicsek = components_Fk(testing::vicsek(), 2);
    CHECK(vicsek.count == 1);
    CHECK(vicsek.max_size == 25);
  }

  TEST_CASE("component labels agree with the stats") {
    const auto g = label_Fk(testing::corners(), 1);
    CHECK(g.width == 3);
    CHECK(g.height == 3);
    CHECK(g.labels[0] >= 0);
    CHECK(g.labels[1] == -1);
    CHECK(g.stats.count == 4);
  }

  TEST_CASE("complement components") {
    // Holes of the carpet are isolated 4-components.
    auto holes = complement_components(testing::carpet(), 1, Window{-1, -1, 2, 2});
    CHECK(holes.count == 9);
    CHECK(holes.max_size == 1);
    // Complement of corner dust is one connected web.
    auto web = complement_components(testing::corners(), 1, Window{0, 0, 3, 3});
    CHECK(web.count == 1);
    CHECK(web.touching_border == 1);
  }

  TEST_CASE("window margins") {
    CHECK(diameter_bound(3) == 48);
    CHECK(default_margin(3, {0, 0}) == 95 + 2);
    CHECK(default_margin(2, {1, -3}) == 36 + 3 + 2);
  }

  TEST_CASE("pairwise admissibility") {
    CHECK(oracle_admissible(testing::carpet(), 1, {1, 0}) == Admissibility::kConnected);
    CHECK(oracle_admissible(testing::carpet(), 2, {2, 0}) == Admissibility::kNotWithinWindow);
    CHECK(oracle_admissible(testing::corners(), 1, {1, 1}) == Admissibility::kConnected);
    CHECK(oracle_admissible(testing::corners(), 1, {3, 2}) == Admissibility::kConnected);
  }

  TEST_CASE("carpet admissible set stays at Q0") {
    const std::vector<LatticeVec> q0{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
    for (int k = 1; k <= 2; ++k) CHECK(oracle_Q(testing::carpet(), k, 3) == q0);
  }

  TEST_CASE("diagonal admits the diagonal step") {
    const auto q = oracle_Q(testing::diagonal3(), 1, 2);
    CHECK(has(q, {1, 1}));
    CHECK(has(q, {-1, -1}));
    // The anti-diagonal neighbour only meets I at a corner covered by F.
    CHECK_FALSE(has(q, {1, -1}));
  }

  TEST_CASE("oracle sets are symmetric and grow with k") {
    for (std::uint64_t mask : {0x1EFull, 0x0BAull, 0x155ull, 0x0D7ull}) {
      const DigitSet d = DigitSet::from_mask(3, mask);
      const auto q1 = oracle_Q(d, 1, 3);
      const auto q2 = oracle_Q(d, 2, 3);
      for (const auto& v : q1) {
        CHECK(has(q1, -v));
        CHECK(has(q2, v));
      }
    }
  }

  TEST_CASE("subsquare bridges") {
    // Carpet: the centre square only touches itself.
    CHECK(squares_joined(testing::carpet(), 1, {1, 1}, {1, 1}, {0, 0}));
    CHECK_FALSE(squares_joined(testing::carpet(), 1, {1, 1}, {1, 1}, {1, 0}));
    // Corners: the middle column is open all the way through.
    CHECK(squares_joined(testing::corners(), 1, {1, 0}, {1, 2}, {0, -1}));
    CHECK_THROWS_AS(squares_joined(testing::corners(), 1, {0, 0}, {1, 1}, {0, 0}), InputError);
  }

  TEST_CASE("crossing paths") {
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(crossing_path_exists(testing::carpet(), k));
    CHECK(crossing_path_exists(testing::corners(), 1));
    CHECK(crossing_path_exists(testing::corners(), 3));
    const DigitSet gasket(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK_FALSE(crossing_path_exists(gasket, 3));
  }

  TEST_CASE("line membership") {
    const Slope one = Slope::rational(1, 1);
    for (int k = 1; k <= 4; ++k) CHECK(line_in_Hk(testing::diagonal3(), one, Rational::make(0, 1), k));
    CHECK_FALSE(line_in_Hk(testing::diagonal3(), one, Rational::make(1, 3), 1));

    const Slope flat = Slope::rational(0, 1);
    CHECK(line_in_Hk(testing::carpet(), flat, Rational::make(1, 6), 1));
    CHECK(line_in_Hk(testing::carpet(), flat, Rational::make(0, 1), 3));
    CHECK_FALSE(line_in_Hk(testing::carpet(), flat, Rational::make(1, 2), 1));
    CHECK_FALSE(line_in_Hk(testing::diagonal2(), flat, Rational::make(1, 4), 2));
    CHECK(line_in_Hk(testing::carpet(), Slope::vertical(), Rational::make(0, 1), 2));
  }

  TEST_CASE("line membership shrinks with k") {
    const std::vector<Slope> slopes{Slope::rational(0, 1), Slope::vertical(), Slope::rational(1, 1),
                                    Slope::rational(-1, 1), Slope::rational(1, 2), Slope::rational(2, 1)};
    for (std::uint64_t mask : {0x111ull, 0x1EFull, 0x049ull, 0x0DBull}) {
      const DigitSet d = DigitSet::from_mask(3, mask);
      for (const auto& s : slopes)
        for (int p = 0; p < 6; ++p) {
          const auto w = Rational::make(p, 6);
          for (int k = 1; k < 3; ++k)
            if (line_in_Hk(d, s, w, k + 1)) CHECK(line_in_Hk(d, s, w, k));
        }
    }
  }

  TEST_CASE("window grid removes translates") {
    WindowGrid g(testing::carpet(), 1, Window{-1, -1, 2, 2}, {{0, 0}});
    CHECK(g.width() == 9);
    CHECK_FALSE(g.present(g.local_x(0), g.local_y(0)));
    CHECK(g.present(g.local_x(1), g.local_y(0)));
    CHECK_FALSE(g.present(g.local_x(1) + 1, g.local_y(0) + 1));
  }
}
