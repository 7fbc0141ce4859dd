#pragma once

// Cross-checks between the decision procedure (loop graph, line search,
// classifier) and the brute-force oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fsq/classifier.hpp"
#include "fsq/digit_set.hpp"

namespace fsq {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  std::int64_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

/// Graph Q_k restricted to |q|_inf <= bound equals oracle_Q(d, k, bound).
SuiteResult graph_oracle_equivalence(const std::vector<DigitSet>& sets, const std::vector<int>& levels,
                                     std::int64_t bound, int jobs = 1,
                                     std::optional<std::int64_t> margin = std::nullopt);

/// Every line witness passes line_in_Hk for k = 1..max_k.
SuiteResult line_witness_suite(const std::vector<DigitSet>& sets, int max_k = 5);

/// Every edge (u, v; b) between cells of D^c in G_{Q_{k-1}} joins the u- and
/// (b + v)-squares in the complement of H_k, for k = 1..max_k.
SuiteResult bridge_suite(const std::vector<DigitSet>& sets, int max_k = 2);

/// Classification is unchanged by each symmetry, directions mapped.
SuiteResult symmetry_suite(const std::vector<DigitSet>& sets);

/// Oracle-side sanity for each verdict: crossing paths and stable component
/// sizes for totally disconnected sets, growing components and a bounded
/// complement for non-segment sets.
SuiteResult consistency_suite(const std::vector<ClassificationReport>& reports);

/// Components of the complement of H_k meeting I stay inside the window
/// padded by diameter_bound(n) + 1 without reaching its frame.
bool complement_bounded_near_origin(const DigitSet& d, int k);

/// Largest component size of F_k for k = from..to.
std::vector<std::int64_t> max_component_sizes(const DigitSet& d, int from, int to);

nlohmann::json suites_to_json(const std::vector<SuiteResult>& suites);

/// The named fixtures: carpet, vicsek, diagonal, corners (n = 3), and the
/// n = 2 diagonal pair.
std::vector<std::pair<std::string, DigitSet>> named_fixtures();

/// Every valid digit set of base n, by increasing mask.
std::vector<DigitSet> all_digit_sets(int n);

/// Digit sets from a text file of masks, one "n mask" pair per line; '#'
/// starts a comment.
std::vector<DigitSet> load_mask_list(const std::string& path);

}  // namespace fsq
