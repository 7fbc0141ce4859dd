#include "fsq/agreement.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "fsq/exact_admissible.hpp"
#include "fsq/oracle.hpp"

namespace fsq {

namespace {

std::string describe(const DigitSet& d) {
  std::string s = "n=" + std::to_string(d.base()) + " D={";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(d.digits()[i].x) + "," + std::to_string(d.digits()[i].y) + ")";
  }
  return s + "}";
}

std::string describe(const std::vector<LatticeVec>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + to_string(vs[i]);
  return s + "}";
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, const Fn& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

SuiteResult graph_oracle_equivalence(const std::vector<DigitSet>& sets, const std::vector<int>& levels,
                                     std::int64_t bound, int jobs, std::optional<std::int64_t> margin) {
  SuiteResult suite("graph_oracle_equivalence");
  struct Task {
    std::size_t set;
    int k;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int k : levels) tasks.push_back({i, k});

  std::vector<std::pair<std::vector<LatticeVec>, std::vector<LatticeVec>>> found(tasks.size());
  std::vector<std::optional<std::vector<LatticeVec>>> finite(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const DigitSet& d = sets[tasks[t].set];
    const int k = tasks[t].k;
    found[t] = {admissible_family(d, k).in_ball(bound), oracle_Q(d, k, bound, margin)};
    // When the plain iteration reaches generation k its finite set must agree too.
    const auto run = classify_boundedness(d);
    if (static_cast<int>(run.history.size()) > k) {
      std::vector<LatticeVec> in_ball;
      for (const auto& v : run.history[static_cast<std::size_t>(k)].elements)
        if (v.norm_inf() <= bound) in_ball.push_back(v);
      finite[t] = std::move(in_ball);
    } else if (run.status == BoundednessStatus::kBounded) {
      std::vector<LatticeVec> in_ball;
      for (const auto& v : run.final_q().elements)
        if (v.norm_inf() <= bound) in_ball.push_back(v);
      finite[t] = std::move(in_ball);
    }
  });
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& [graph, oracle] = found[t];
    const std::string where = describe(sets[tasks[t].set]) + " k=" + std::to_string(tasks[t].k);
    suite.expect(graph == oracle, where + ": graph " + describe(graph) + " vs oracle " + describe(oracle));
    if (finite[t]) {
      suite.expect(*finite[t] == graph, where + ": finite iteration " + describe(*finite[t]) + " vs family " +
                                            describe(graph));
    }
  }
  return suite;
}

SuiteResult line_witness_suite(const std::vector<DigitSet>& sets, int max_k) {
  SuiteResult suite("line_witness");
  for (const auto& d : sets) {
    const auto w = find_line_witness(d);
    if (!w) continue;
    for (int k = 1; k <= max_k; ++k) {
      suite.expect(line_in_Hk(d, w->slope, w->omega, k), describe(d) + ": slope " + to_string(w->slope) +
                                                             " omega " + to_string(w->omega) +
                                                             " not in H_" + std::to_string(k));
    }
  }
  return suite;
}

SuiteResult bridge_suite(const std::vector<DigitSet>& sets, int max_k) {
  SuiteResult suite("edge_bridge");
  for (const auto& d : sets) {
    const int n = d.base();
    const auto inner = d.complement();
    for (int k = 1; k <= max_k; ++k) {
      const AdmissibleFamily family = admissible_family(d, k - 1);
      // The family may be infinite, so only q in a small ball are used.
      const std::int64_t qbound = 2 * n;
      const auto qs = family.in_ball(qbound);
      std::set<std::tuple<Cell, Cell, LatticeVec>> edges;
      for (const auto& u : inner) {
        for (const auto& v : inner) {
          for (const auto& q : qs) {
            const LatticeVec shifted{q.x - (v.x - u.x), q.y - (v.y - u.y)};
            if (floor_mod(shifted.x, n) != 0 || floor_mod(shifted.y, n) != 0) continue;
            edges.insert({u, v, LatticeVec{shifted.x / n, shifted.y / n}});
          }
        }
      }
      for (const auto& [u, v, b] : edges) {
        suite.expect(squares_joined(d, k, u, v, b),
                     describe(d) + " k=" + std::to_string(k) + ": edge (" + std::to_string(u.x) + "," +
                         std::to_string(u.y) + ")->(" + std::to_string(v.x) + "," + std::to_string(v.y) +
                         ";" + to_string(b) + ") not joined");
      }
    }
  }
  return suite;
}

SuiteResult symmetry_suite(const std::vector<DigitSet>& sets) {
  SuiteResult suite("d4_invariance");
  for (const auto& d : sets) {
    const auto base = classify(d);
    for (Symmetry g : kAllSymmetries) {
      const auto image = classify(apply_symmetry(d, g));
      const bool same_class = image.classification == base.classification;
      const bool same_dir = image.direction == mapped_direction(base, g);
      suite.expect(same_class && same_dir, describe(d) + " under " + std::string(symmetry_name(g)) + ": " +
                                               std::string(to_string(image.classification)) + " vs " +
                                               std::string(to_string(base.classification)));
    }
  }
  return suite;
}

std::vector<std::int64_t> max_component_sizes(const DigitSet& d, int from, int to) {
  std::vector<std::int64_t> out;
  for (int k = from; k <= to; ++k) out.push_back(components_Fk(d, k).max_size);
  return out;
}

bool complement_bounded_near_origin(const DigitSet& d, int k) {
  const std::int64_t m = diameter_bound(d.base()) + 1;
  const Window window{-m, -m, m + 1, m + 1};
  const LabelledGrid grid = label_complement(d, k, window);
  const std::int64_t side = grid.width / window.width();
  const std::int64_t i0 = m * side;
  std::set<std::int32_t> near;
  for (std::int64_t j = i0; j < i0 + side; ++j)
    for (std::int64_t i = i0; i < i0 + side; ++i) {
      const auto id = grid.labels[static_cast<std::size_t>(j * grid.width + i)];
      if (id >= 0) near.insert(id);
    }
  auto on_frame = [&](std::int64_t i, std::int64_t j) {
    return near.count(grid.labels[static_cast<std::size_t>(j * grid.width + i)]) > 0;
  };
  for (std::int64_t t = 0; t < grid.width; ++t) {
    if (on_frame(t, 0) || on_frame(t, grid.height - 1)) return false;
  }
  for (std::int64_t t = 0; t < grid.height; ++t) {
    if (on_frame(0, t) || on_frame(grid.width - 1, t)) return false;
  }
  return true;
}

SuiteResult consistency_suite(const std::vector<ClassificationReport>& reports) {
  SuiteResult suite("oracle_consistency");
  for (const auto& r : reports) {
    const DigitSet& d = r.digits;
    if (r.classification == TopologyClass::kTotallyDisconnected) {
      bool crossing = false;
      for (int k = 1; k <= 4 && !crossing; ++k) crossing = crossing_path_exists(d, k);
      suite.expect(crossing, describe(d) + ": no crossing path for k <= 4");
      const auto sizes = max_component_sizes(d, 3, 5);
      suite.expect(sizes[0] == sizes[1] && sizes[1] == sizes[2],
                   describe(d) + ": component sizes not stable over k = 3..5");
    } else if (r.classification == TopologyClass::kNonSegmentComponent) {
      suite.expect(complement_bounded_near_origin(d, 2), describe(d) + ": complement of H_2 reaches the frame");
      const auto sizes = max_component_sizes(d, 2, 4);
      suite.expect(sizes[0] < sizes[1] && sizes[1] < sizes[2],
                   describe(d) + ": component sizes do not grow over k = 2..4");
    }
  }
  return suite;
}

nlohmann::json suites_to_json(const std::vector<SuiteResult>& suites) {
  nlohmann::json out = nlohmann::json::array();
  bool all = true;
  for (const auto& s : suites) {
    out.push_back({{"name", s.name}, {"checks", s.checks}, {"passed", s.passed()}, {"failures", s.failures}});
    all = all && s.passed();
  }
  return {{"suites", out}, {"passed", all}};
}

std::vector<std::pair<std::string, DigitSet>> named_fixtures() {
  return {
      {"carpet", DigitSet(3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}})},
      {"vicsek", DigitSet(3, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}})},
      {"diagonal", DigitSet(3, {{0, 0}, {1, 1}, {2, 2}})},
      {"corners", DigitSet(3, {{0, 0}, {2, 0}, {0, 2}, {2, 2}})},
      {"diagonal_pair", DigitSet(2, {{0, 0}, {1, 1}})},
  };
}

std::vector<DigitSet> all_digit_sets(int n) {
  std::vector<DigitSet> out;
  const int cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    const int pop = std::popcount(m);
    if (pop >= 2 && pop < cells) out.push_back(DigitSet::from_mask(n, m));
  }
  return out;
}

std::vector<DigitSet> load_mask_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<DigitSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    int n = 0;
    std::uint64_t mask = 0;
    if (!(row >> n)) continue;
    if (!(row >> mask)) throw InputError("missing mask in " + path + ": " + line);
    out.push_back(DigitSet::from_mask(n, mask));
  }
  return out;
}

}  // namespace fsq
