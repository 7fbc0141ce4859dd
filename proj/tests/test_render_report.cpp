#include <regex>

#include "doctest.h"
#include "fsq/render.hpp"
#include "fsq/report.hpp"
#include "helpers.hpp"

using namespace fsq;

namespace {
std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}
}  // namespace

TEST_SUITE("render_report") {
  TEST_CASE("plain bitmap of the carpet") {
    const auto pbm = render_pbm(expand(testing::carpet(), 1), PbmFormat::kAscii);
    CHECK(pbm == "P1\n3 3\n1 1 1\n1 0 1\n1 1 1\n");
  }

  TEST_CASE("plain bitmap puts the top row first") {
    const DigitSet ell(2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(render_pbm(expand(ell, 1), PbmFormat::kAscii) == "P1\n2 2\n1 0\n1 1\n");
  }

  TEST_CASE("vicsek cross at level two") {
    const auto pbm = render_pbm(expand(testing::vicsek(), 2), PbmFormat::kAscii);
    CHECK(count_of(pbm.substr(3), "1") == 25);  // skip the "P1" magic
    // Middle row: full bar of 9.
    CHECK(pbm.find("1 1 1 1 1 1 1 1 1") != std::string::npos);
  }

  TEST_CASE("binary bitmap payload size") {
    for (int k = 1; k <= 3; ++k) {
      const auto grid = expand(testing::carpet(), k);
      const auto pbm = render_pbm(grid);
      const std::string header = "P4\n" + std::to_string(grid.side()) + " " + std::to_string(grid.side()) + "\n";
      REQUIRE(pbm.rfind(header, 0) == 0);
      CHECK(pbm.size() - header.size() == static_cast<std::size_t>(grid.side() * ((grid.side() + 7) / 8)));
    }
    // Level 1 carpet rows: 111, 101, 111 padded to a byte each.
    const auto p = render_pbm(expand(testing::carpet(), 1));
    CHECK(static_cast<unsigned char>(p[p.size() - 2]) == 0xA0);
    CHECK(static_cast<unsigned char>(p.back()) == 0xE0);
  }

  TEST_CASE("component svg has one rect per labelled cell") {
    const auto labelled = label_Fk(testing::corners(), 2);
    const auto svg = render_components_svg(labelled);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_of(svg, "<rect") == 16);
    CHECK(svg.find("</svg>") != std::string::npos);
  }

  TEST_CASE("reports round-trip through JSON") {
    for (const auto& d : {testing::carpet(), testing::diagonal3(), testing::corners(), testing::vicsek()}) {
      const auto r = classify(d);
      const auto text = report_serialize(r);
      const auto back = report_parse(text);
      CHECK(back == r);
      CHECK(report_serialize(back) == text);
    }
  }

  TEST_CASE("serialization is deterministic and excludes timing") {
    const auto a = report_serialize(classify(testing::corners()));
    const auto b = report_serialize(classify(testing::corners()));
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);
    CHECK(report_serialize(classify(testing::corners()), true).find("elapsed_ms") != std::string::npos);
  }

  TEST_CASE("report keys") {
    const auto j = report_to_json(classify(testing::diagonal3()));
    CHECK(j.at("class") == "parallel_segments");
    CHECK(j.at("n") == 3);
    CHECK(j.at("direction") == nlohmann::json{{"r", 1}, {"s", 1}});
    CHECK(j.at("evidence").at("kind") == "line");
    CHECK(report_to_json(classify(testing::carpet())).at("evidence").at("kind") == "stabilized_q");
    CHECK(report_to_json(classify(testing::corners())).at("evidence").at("kind") == "loop");
  }

  TEST_CASE("slopes in JSON") {
    CHECK(slope_to_json(Slope::vertical()) == "vertical");
    for (const auto& s : {Slope::vertical(), Slope::rational(0, 1), Slope::rational(-2, 1)})
      CHECK(slope_from_json(slope_to_json(s)) == s);
  }

  TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(report_parse("{"), InputError);
    CHECK_THROWS_AS(report_parse("{\"n\": 3}"), InputError);
  }

  TEST_CASE("census tables") {
    CensusOptions opts;
    opts.n = 2;
    const auto c = census(opts);
    const auto s = census_summary_json(c);
    CHECK(s.dump().find("\"parallel_segments\":6") != std::string::npos);
    const auto csv = census_csv(c);
    CHECK(csv.find("size,class,count") != std::string::npos);
    CHECK(report_text(c.entries.front().report).find("parallel_segments") != std::string::npos);
  }
}
