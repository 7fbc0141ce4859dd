#include "doctest.h"
#include "fsq/agreement.hpp"
#include "fsq/classifier.hpp"
#include "fsq/oracle.hpp"
#include "helpers.hpp"

using namespace fsq;

TEST_SUITE("classifier") {
  TEST_CASE("carpet has a non-segment component") {
    const auto r = classify(testing::carpet());
    CHECK(r.classification == TopologyClass::kNonSegmentComponent);
    CHECK(r.boundedness == BoundednessStatus::kBounded);
    CHECK(r.k_stabilized == 1);
    CHECK_FALSE(r.direction.has_value());
    REQUIRE(std::holds_alternative<StabilizedEvidence>(r.evidence));
    CHECK(std::get<StabilizedEvidence>(r.evidence).q == oracle_Q(testing::carpet(), 1, 3));
  }

  TEST_CASE("vicsek cross") {
    const auto r = classify(testing::vicsek());
    CHECK(r.classification == TopologyClass::kNonSegmentComponent);
    CHECK(r.k_stabilized.has_value());
  }

  TEST_CASE("diagonal is a union of parallel segments") {
    const auto r = classify(testing::diagonal3());
    CHECK(r.classification == TopologyClass::kParallelSegments);
    REQUIRE(r.direction.has_value());
    CHECK(*r.direction == Slope::rational(1, 1));
    REQUIRE(std::holds_alternative<LineWitness>(r.evidence));
    const auto& w = std::get<LineWitness>(r.evidence);
    for (int k = 1; k <= 5; ++k) CHECK(line_in_Hk(testing::diagonal3(), w.slope, w.omega, k));
    CHECK(r.loop.has_value());
  }

  TEST_CASE("corner dust is totally disconnected") {
    const auto r = classify(testing::corners());
    CHECK(r.classification == TopologyClass::kTotallyDisconnected);
    REQUIRE(std::holds_alternative<LoopWitness>(r.evidence));
    const auto& loop = std::get<LoopWitness>(r.evidence);
    CHECK(loop.generation == 0);
    CHECK(verify_loop(loop, AdmissibleSet::initial(), testing::corners()));
    CHECK_FALSE(find_line_witness(testing::corners()).has_value());
  }

  TEST_CASE("topology class names round-trip") {
    for (auto c : {TopologyClass::kTotallyDisconnected, TopologyClass::kParallelSegments,
                   TopologyClass::kNonSegmentComponent})
      CHECK(parse_topology_class(to_string(c)) == c);
    CHECK_FALSE(parse_topology_class("bogus").has_value());
  }

  TEST_CASE("iteration cap") {
    ClassifyOptions opts;
    opts.max_iter = 1;
    CHECK_THROWS_AS(classify(testing::vicsek(), opts), InconclusiveError);
    CHECK_NOTHROW(classify(testing::carpet(), opts));
  }

  TEST_CASE("base-two census") {
    CensusOptions opts;
    opts.n = 2;
    const auto c = census(opts);
    CHECK(c.entries.size() == 10);
    const auto by = c.by_class();
    CHECK(by.at(TopologyClass::kParallelSegments) == 6);
    CHECK_FALSE(by.count(TopologyClass::kTotallyDisconnected));
    CHECK(by.at(TopologyClass::kNonSegmentComponent) == 4);
    for (std::size_t i = 1; i < c.entries.size(); ++i)
      CHECK(c.entries[i - 1].report.digits.mask() < c.entries[i].report.digits.mask());

    opts.dedup = true;
    const auto dd = census(opts);
    CHECK(dd.entries.size() == 3);
    CHECK(dd.weighted_by_class() == by);
  }

  TEST_CASE("base-three census is deterministic across thread counts") {
    CensusOptions opts;
    opts.n = 3;
    opts.jobs = 1;
    const auto serial = census(opts);
    opts.jobs = 4;
    const auto parallel = census(opts);
    REQUIRE(serial.entries.size() == 501);
    REQUIRE(parallel.entries.size() == 501);
    for (std::size_t i = 0; i < serial.entries.size(); ++i) CHECK(serial.entries[i].report == parallel.entries[i].report);

    opts.dedup = true;
    const auto dd = census(opts);
    CHECK(dd.weighted_by_class() == serial.by_class());
    std::int64_t total = 0;
    for (const auto& e : dd.entries) total += e.weight;
    CHECK(total == 501);
  }

  TEST_CASE("census refuses large bases") {
    CensusOptions opts;
    opts.n = 4;
    CHECK_THROWS_AS(census(opts), ResourceError);
    opts.n = 1;
    CHECK_THROWS_AS(census(opts), InputError);
  }

  TEST_CASE("classification is invariant under the square's symmetries") {
    auto sets = all_digit_sets(2);
    for (auto& d : load_mask_list(FSQ_TEST_DATA "/symmetry_n3.txt")) sets.push_back(d);
    for (const auto& d : sets) {
      const auto base = classify(d);
      for (auto g : kAllSymmetries) {
        const auto image = classify(apply_symmetry(d, g));
        CHECK(image.classification == base.classification);
        CHECK(image.direction == mapped_direction(base, g));
      }
    }
  }

  TEST_CASE("verdicts agree with the oracle on small levels") {
    for (const auto& d : all_digit_sets(2)) {
      const auto r = classify(d);
      if (r.classification == TopologyClass::kNonSegmentComponent) {
        CHECK(complement_bounded_near_origin(d, 2));
        CHECK_FALSE(crossing_path_exists(d, 4));
      } else if (r.classification == TopologyClass::kParallelSegments) {
        const auto& w = std::get<LineWitness>(r.evidence);
        for (int k = 1; k <= 6; ++k) CHECK(line_in_Hk(d, w.slope, w.omega, k));
      }
    }
  }
}
