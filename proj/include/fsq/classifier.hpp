#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsq/digit_set.hpp"
#include "fsq/line_detect.hpp"
#include "fsq/loop_graph.hpp"

namespace fsq {

enum class TopologyClass { kTotallyDisconnected, kParallelSegments, kNonSegmentComponent };

/// "totally_disconnected", "parallel_segments", "non_segment_component".
std::string_view to_string(TopologyClass c);
std::optional<TopologyClass> parse_topology_class(std::string_view s);

/// Thrown when the admissible-set iteration hits its cap without deciding.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Q_k with Q_k = Q_{k-1}: every component of the complement is bounded.
struct StabilizedEvidence {
  std::vector<LatticeVec> q;
  int k = 0;
  friend bool operator==(const StabilizedEvidence&, const StabilizedEvidence&) = default;
};

/// Some admissible vector exceeded the norm cap.
struct NormBreachEvidence {
  LatticeVec q;
  int generation = 0;
  friend bool operator==(const NormBreachEvidence&, const NormBreachEvidence&) = default;
};

using Evidence = std::variant<StabilizedEvidence, LoopWitness, NormBreachEvidence, LineWitness>;

struct ClassificationReport {
  explicit ClassificationReport(DigitSet d) : digits(std::move(d)) {}

  DigitSet digits;
  TopologyClass classification = TopologyClass::kTotallyDisconnected;
  /// Set exactly for kParallelSegments.
  std::optional<Slope> direction;
  /// Stabilized Q for bounded sets; the line for parallel segments; the
  /// unboundedness certificate (loop or norm breach) otherwise.
  Evidence evidence;
  std::optional<int> k_stabilized;
  /// The non-zero loop whenever the set is unbounded through one.
  std::optional<LoopWitness> loop;
  BoundednessStatus boundedness = BoundednessStatus::kInconclusive;
  int iterations = 0;
  /// Wall time of classify; kept out of the canonical serialization.
  double elapsed_ms = 0.0;
  std::string version = FSQ_VERSION;

  /// Equality ignores elapsed_ms.
  friend bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    return a.digits == b.digits && a.classification == b.classification && a.direction == b.direction &&
           a.evidence == b.evidence && a.k_stabilized == b.k_stabilized && a.loop == b.loop &&
           a.boundedness == b.boundedness && a.iterations == b.iterations && a.version == b.version;
  }
};

struct ClassifyOptions {
  std::int64_t max_iter = 0;  // 0: default cap for the base
};

/// Boundedness first; bounded means a non-segment component. Otherwise the
/// line search decides between parallel segments and total disconnectedness.
/// Throws InconclusiveError if the iteration cap is reached.
ClassificationReport classify(const DigitSet& d, const ClassifyOptions& options = {});

/// Expected classification of apply_symmetry(d, g) given that of d.
std::optional<Slope> mapped_direction(const ClassificationReport& r, Symmetry g);

struct CensusOptions {
  int n = 2;
  bool dedup = false;
  int jobs = 1;
  int max_n = 3;
  std::int64_t max_iter = 0;
};

struct CensusEntry {
  ClassificationReport report;
  /// Members of the D4 orbit this entry stands for (1 without dedup).
  int weight = 1;
};

struct CensusResult {
  int n = 0;
  bool dedup = false;
  /// Sorted by digit-set mask.
  std::vector<CensusEntry> entries;

  /// Reports per class, unweighted.
  std::map<TopologyClass, std::int64_t> by_class() const;
  /// Digit sets per class, each entry counted with its orbit weight.
  std::map<TopologyClass, std::int64_t> weighted_by_class() const;
  /// Reports per (#D, class).
  std::map<std::pair<int, TopologyClass>, std::int64_t> by_size_and_class() const;
};

/// Classifies every digit set of base n (or one per D4 orbit). Throws
/// ResourceError when n exceeds max_n.
CensusResult census(const CensusOptions& options);

}  // namespace fsq
