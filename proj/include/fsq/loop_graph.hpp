#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fsq/digit_set.hpp"
#include "fsq/lattice.hpp"

namespace fsq {

/// A finite symmetric set Q_k of admissible vectors.
struct AdmissibleSet {
  std::vector<LatticeVec> elements;  // sorted, unique
  int generation = 0;

  /// Q_0 = {0, +-e1, +-e2}.
  static AdmissibleSet initial();
  static AdmissibleSet from(std::vector<LatticeVec> elements, int generation);

  bool contains(const LatticeVec& q) const;
  std::size_t size() const { return elements.size(); }
  bool same_elements(const AdmissibleSet& o) const { return elements == o.elements; }
};

/// Edge (u, v; b) of a graph G_Q. Vertices are cells scaled by 1/n, so the
/// edge exists iff n b + to - from lies in Q.
struct GraphEdge {
  Cell from;
  Cell to;
  LatticeVec b;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// All labels b of edges from du to dv, sorted.
std::vector<LatticeVec> edges_between(const AdmissibleSet& q, int n, Cell du, Cell dv);

bool edge_in_graph(const AdmissibleSet& q, int n, const GraphEdge& e);

/// A closed chain of edges of G_{Q_generation} with non-zero label sum.
struct LoopWitness {
  int generation = 0;
  std::vector<GraphEdge> edges;
  LatticeVec sum;
  friend bool operator==(const LoopWitness&, const LoopWitness&) = default;
};

/// Re-checks chaining, closure, the sum, and every edge against q.
bool verify_loop(const LoopWitness& loop, const AdmissibleSet& q, const DigitSet& d);

/// Union-find over the vertices D^c where each vertex carries a potential
/// phi in Z^2 relative to its class root. An edge (u, v; b) asserts
/// phi(v) - phi(u) = b.
class OffsetForest {
 public:
  explicit OffsetForest(std::vector<Cell> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Cell>& vertices() const { return vertices_; }
  std::optional<std::size_t> index_of(Cell c) const;

  std::size_t find(std::size_t v) const;
  /// phi(v) - phi(root of v).
  LatticeVec potential(std::size_t v) const;
  bool same_class(std::size_t a, std::size_t b) const { return find(a) == find(b); }

  /// Returns false, leaving the forest unchanged, when u and v already share
  /// a class with phi(v) - phi(u) != b.
  bool unite(std::size_t u, std::size_t v, const LatticeVec& b);

  /// Edges of the spanning forest leading from `from` to `to` (same class).
  std::vector<GraphEdge> tree_path(std::size_t from, std::size_t to) const;

  std::vector<std::vector<std::size_t>> classes() const;

 private:
  std::vector<Cell> vertices_;
  mutable std::vector<std::size_t> parent_;
  mutable std::vector<LatticeVec> offset_;  // phi(v) - phi(parent)
  std::vector<int> rank_;
  std::vector<std::vector<std::pair<std::size_t, LatticeVec>>> tree_;
};

/// Applies every edge of G_Q between vertices of D^c in lexicographic
/// (from, to, b) order. A potential conflict yields a non-zero loop.
std::variant<OffsetForest, LoopWitness> build_offset_forest(const AdmissibleSet& q, const DigitSet& d);

/// Q_{k+1} from Q_k and its conflict-free forest: single edges between any
/// two cells, plus entry edge + walk inside one class + exit edge.
AdmissibleSet admissible_successor(const AdmissibleSet& q, const OffsetForest& forest,
                                   const DigitSet& d);

/// The loop (v, v; q/n) for the least q in q_set lying in n Z^2 \ {0}.
std::optional<LoopWitness> multiple_of_n_loop(const AdmissibleSet& q_set, const DigitSet& d);

/// admissible_successor, short-circuiting to multiple_of_n_loop when one exists.
std::variant<AdmissibleSet, LoopWitness> next_Q(const AdmissibleSet& q, const OffsetForest& forest,
                                                const DigitSet& d);

/// |q| <= sqrt(2)(n^3 + 2n + 2 + 1/n) + 2 sqrt(2), compared exactly as
/// |q|^2 n^2 <= 2 (n^4 + 2n^2 + 4n + 1)^2.
bool within_norm_cap(const LatticeVec& q, int n);

/// 38 n^10, saturated to the int64 range.
std::int64_t default_max_iter(int n);

enum class BoundednessStatus { kBounded, kUnbounded, kInconclusive };

std::string_view to_string(BoundednessStatus s);

struct BoundednessResult {
  BoundednessStatus status = BoundednessStatus::kInconclusive;
  /// Q_0, Q_1, ... up to the last generation computed.
  std::vector<AdmissibleSet> history;
  /// Bounded: the k with Q_k = Q_{k-1}.
  int stabilized_at = -1;
  std::optional<LoopWitness> loop;
  /// Set when some q exceeded the norm cap (reported as unbounded).
  std::optional<LatticeVec> norm_breach;
  /// Generations computed beyond Q_0.
  int iterations = 0;

  const AdmissibleSet& final_q() const { return history.back(); }
};

struct IterationStep {
  int k;
  const AdmissibleSet& q;
  std::string_view status;  // "growing", "stabilized", "unbounded", "inconclusive"
};

struct BoundednessOptions {
  std::int64_t max_iter = 0;  // 0 selects default_max_iter(n)
  std::function<void(const IterationStep&)> on_step;
};

BoundednessResult classify_boundedness(const DigitSet& d, const BoundednessOptions& options = {});

}  // namespace fsq
