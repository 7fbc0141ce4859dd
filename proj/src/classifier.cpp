#include "fsq/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace fsq {

std::string_view to_string(TopologyClass c) {
  switch (c) {
    case TopologyClass::kTotallyDisconnected: return "totally_disconnected";
    case TopologyClass::kParallelSegments: return "parallel_segments";
    case TopologyClass::kNonSegmentComponent: return "non_segment_component";
  }
  return "?";
}

std::optional<TopologyClass> parse_topology_class(std::string_view s) {
  for (auto c : {TopologyClass::kTotallyDisconnected, TopologyClass::kParallelSegments,
                 TopologyClass::kNonSegmentComponent}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

ClassificationReport classify(const DigitSet& d, const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  BoundednessOptions bopts;
  bopts.max_iter = options.max_iter;
  BoundednessResult bounded = classify_boundedness(d, bopts);

  ClassificationReport report(d);
  report.boundedness = bounded.status;
  report.iterations = bounded.iterations;

  switch (bounded.status) {
    case BoundednessStatus::kInconclusive:
      throw InconclusiveError("admissible sets still growing after " + std::to_string(bounded.iterations) +
                              " iterations");
    case BoundednessStatus::kBounded:
      report.classification = TopologyClass::kNonSegmentComponent;
      report.k_stabilized = bounded.stabilized_at;
      report.evidence = StabilizedEvidence{bounded.final_q().elements, bounded.stabilized_at};
      break;
    case BoundednessStatus::kUnbounded: {
      report.loop = bounded.loop;
      if (auto line = find_line_witness(d)) {
        report.classification = TopologyClass::kParallelSegments;
        report.direction = line->slope;
        report.evidence = *line;
      } else {
        report.classification = TopologyClass::kTotallyDisconnected;
        if (bounded.loop) {
          report.evidence = *bounded.loop;
        } else {
          report.evidence = NormBreachEvidence{*bounded.norm_breach, bounded.final_q().generation};
        }
      }
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<Slope> mapped_direction(const ClassificationReport& r, Symmetry g) {
  if (!r.direction) return std::nullopt;
  return map_direction(g, *r.direction);
}

std::map<TopologyClass, std::int64_t> CensusResult::by_class() const {
  std::map<TopologyClass, std::int64_t> out;
  for (const auto& e : entries) ++out[e.report.classification];
  return out;
}

std::map<TopologyClass, std::int64_t> CensusResult::weighted_by_class() const {
  std::map<TopologyClass, std::int64_t> out;
  for (const auto& e : entries) out[e.report.classification] += e.weight;
  return out;
}

std::map<std::pair<int, TopologyClass>, std::int64_t> CensusResult::by_size_and_class() const {
  std::map<std::pair<int, TopologyClass>, std::int64_t> out;
  for (const auto& e : entries) ++out[{static_cast<int>(e.report.digits.size()), e.report.classification}];
  return out;
}

CensusResult census(const CensusOptions& options) {
  const int n = options.n;
  if (n < 2) throw InputError("census needs n >= 2");
  if (n > options.max_n) {
    throw ResourceError("census over base " + std::to_string(n) + " exceeds the cap n <= " +
                        std::to_string(options.max_n));
  }
  const int cells = n * n;

  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    const int pop = std::popcount(m);
    if (pop < 2 || pop >= cells) continue;
    if (options.dedup) {
      const DigitSet d = DigitSet::from_mask(n, m);
      if (canonical_form(d) != d) continue;
    }
    masks.push_back(m);
  }

  std::vector<std::optional<CensusEntry>> slots(masks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < masks.size(); i = next++) {
      try {
        const DigitSet d = DigitSet::from_mask(n, masks[i]);
        ClassifyOptions copts;
        copts.max_iter = options.max_iter;
        slots[i] = CensusEntry{classify(d, copts), options.dedup ? orbit_size(d) : 1};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusResult result;
  result.n = n;
  result.dedup = options.dedup;
  for (auto& s : slots) result.entries.push_back(std::move(*s));
  return result;
}

}  // namespace fsq
