#include "fsq/loop_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace fsq {

AdmissibleSet AdmissibleSet::initial() {
  return from({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 0);
}

AdmissibleSet AdmissibleSet::from(std::vector<LatticeVec> elements, int generation) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return {std::move(elements), generation};
}

bool AdmissibleSet::contains(const LatticeVec& q) const {
  return std::binary_search(elements.begin(), elements.end(), q);
}

std::vector<LatticeVec> edges_between(const AdmissibleSet& q, int n, Cell du, Cell dv) {
  std::vector<LatticeVec> out;
  for (const auto& e : q.elements) {
    const std::int64_t nx = e.x + du.x - dv.x;
    const std::int64_t ny = e.y + du.y - dv.y;
    if (floor_mod(nx, n) == 0 && floor_mod(ny, n) == 0) out.push_back({nx / n, ny / n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool edge_in_graph(const AdmissibleSet& q, int n, const GraphEdge& e) {
  return q.contains({n * e.b.x + e.to.x - e.from.x, n * e.b.y + e.to.y - e.from.y});
}

bool verify_loop(const LoopWitness& loop, const AdmissibleSet& q, const DigitSet& d) {
  if (loop.edges.empty() || loop.sum.is_zero()) return false;
  LatticeVec total;
  for (std::size_t i = 0; i < loop.edges.size(); ++i) {
    const auto& e = loop.edges[i];
    if (d.contains(e.from) || d.contains(e.to)) return false;
    if (!edge_in_graph(q, d.base(), e)) return false;
    if (!(e.to == loop.edges[(i + 1) % loop.edges.size()].from)) return false;
    total += e.b;
  }
  return total == loop.sum;
}

// --- OffsetForest -------------------------------------------------------------

OffsetForest::OffsetForest(std::vector<Cell> vertices)
    : vertices_(std::move(vertices)),
      parent_(vertices_.size()),
      offset_(vertices_.size()),
      rank_(vertices_.size(), 0),
      tree_(vertices_.size()) {
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
}

std::optional<std::size_t> OffsetForest::index_of(Cell c) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t OffsetForest::find(std::size_t v) const {
  if (parent_[v] == v) return v;
  const std::size_t p = parent_[v];
  const std::size_t root = find(p);
  offset_[v] += offset_[p];  // offset_[p] is now relative to root
  parent_[v] = root;
  return root;
}

LatticeVec OffsetForest::potential(std::size_t v) const {
  find(v);
  return parent_[v] == v ? LatticeVec{} : offset_[v];
}

bool OffsetForest::unite(std::size_t u, std::size_t v, const LatticeVec& b) {
  const std::size_t ru = find(u);
  const std::size_t rv = find(v);
  const LatticeVec pu = potential(u);
  const LatticeVec pv = potential(v);
  if (ru == rv) return pv - pu == b;
  // phi(rv) - phi(ru) in the merged frame.
  const LatticeVec root_delta = pu + b - pv;
  if (rank_[ru] >= rank_[rv]) {
    parent_[rv] = ru;
    offset_[rv] = root_delta;
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
  } else {
    parent_[ru] = rv;
    offset_[ru] = -root_delta;
  }
  tree_[u].push_back({v, b});
  tree_[v].push_back({u, -b});
  return true;
}

std::vector<GraphEdge> OffsetForest::tree_path(std::size_t from, std::size_t to) const {
  std::vector<std::optional<std::pair<std::size_t, LatticeVec>>> came_from(size());
  std::deque<std::size_t> queue{from};
  std::vector<bool> seen(size(), false);
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const auto& [next, label] : tree_[cur]) {
      if (seen[next]) continue;
      seen[next] = true;
      came_from[next] = std::make_pair(cur, label);
      queue.push_back(next);
    }
  }
  std::vector<GraphEdge> path;
  if (!seen[to]) return path;
  for (std::size_t cur = to; cur != from;) {
    const auto& [prev, label] = *came_from[cur];
    path.push_back({vertices_[prev], vertices_[cur], label});
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<std::size_t>> OffsetForest::classes() const {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t v = 0; v < size(); ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// --- Iteration ----------------------------------------------------------------

std::variant<OffsetForest, LoopWitness> build_offset_forest(const AdmissibleSet& q, const DigitSet& d) {
  OffsetForest forest(d.complement());
  const auto& verts = forest.vertices();
  for (std::size_t u = 0; u < verts.size(); ++u) {
    for (std::size_t v = 0; v < verts.size(); ++v) {
      for (const auto& b : edges_between(q, d.base(), verts[u], verts[v])) {
        if (forest.unite(u, v, b)) continue;
        LoopWitness loop;
        loop.generation = q.generation;
        loop.edges.push_back({verts[u], verts[v], b});
        for (auto& e : forest.tree_path(v, u)) loop.edges.push_back(e);
        for (const auto& e : loop.edges) loop.sum += e.b;
        return loop;
      }
    }
  }
  return forest;
}

namespace {

std::vector<Cell> all_cells(int n) {
  std::vector<Cell> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells.push_back({x, y});
  return cells;
}

}  // namespace

AdmissibleSet admissible_successor(const AdmissibleSet& q, const OffsetForest& forest,
                                   const DigitSet& d) {
  const int n = d.base();
  const auto cells = all_cells(n);
  const auto& verts = forest.vertices();
  std::set<LatticeVec> sums;

  // Paths with no inner vertex: one edge between arbitrary cells.
  for (const auto& h0 : cells)
    for (const auto& h1 : cells)
      for (const auto& b : edges_between(q, n, h0, h1)) sums.insert(b);

  // Entry edge into v, a 0-path-equivalent walk v ~> w, exit edge from w.
  // The walk contributes phi(w) - phi(v), independent of the route.
  std::map<std::size_t, std::set<LatticeVec>> entries;  // b0 - phi(v)
  std::map<std::size_t, std::set<LatticeVec>> exits;    // phi(w) + bm
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const std::size_t root = forest.find(v);
    const LatticeVec phi = forest.potential(v);
    for (const auto& h : cells) {
      for (const auto& b0 : edges_between(q, n, h, verts[v])) entries[root].insert(b0 - phi);
      for (const auto& bm : edges_between(q, n, verts[v], h)) exits[root].insert(phi + bm);
    }
  }
  for (const auto& [root, ins] : entries) {
    auto it = exits.find(root);
    if (it == exits.end()) continue;
    for (const auto& a : ins)
      for (const auto& b : it->second) sums.insert(a + b);
  }

  std::vector<LatticeVec> elements;
  elements.reserve(2 * sums.size());
  for (const auto& s : sums) {
    elements.push_back(s);
    elements.push_back(-s);
  }
  return AdmissibleSet::from(std::move(elements), q.generation + 1);
}

std::optional<LoopWitness> multiple_of_n_loop(const AdmissibleSet& q, const DigitSet& d) {
  const int n = d.base();
  for (const auto& e : q.elements) {
    if (!e.is_zero() && floor_mod(e.x, n) == 0 && floor_mod(e.y, n) == 0) {
      const Cell v = d.complement().front();
      const LatticeVec b{e.x / n, e.y / n};
      return LoopWitness{q.generation, {{v, v, b}}, b};
    }
  }
  return std::nullopt;
}

std::variant<AdmissibleSet, LoopWitness> next_Q(const AdmissibleSet& q, const OffsetForest& forest,
                                                const DigitSet& d) {
  auto next = admissible_successor(q, forest, d);
  if (auto loop = multiple_of_n_loop(next, d)) return *loop;
  return next;
}

bool within_norm_cap(const LatticeVec& q, int n) {
  __extension__ typedef __int128 i128;
  const i128 nn = n;
  const i128 inner = nn * nn * nn * nn + 2 * nn * nn + 4 * nn + 1;
  const i128 lhs = static_cast<i128>(q.norm2()) * nn * nn;
  return lhs <= 2 * inner * inner;
}

std::int64_t default_max_iter(int n) {
  long double v = 38.0L;
  for (int i = 0; i < 10; ++i) v *= n;
  if (v > static_cast<long double>(std::numeric_limits<std::int64_t>::max())) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(v);
}

std::string_view to_string(BoundednessStatus s) {
  switch (s) {
    case BoundednessStatus::kBounded: return "bounded";
    case BoundednessStatus::kUnbounded: return "unbounded";
    case BoundednessStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

BoundednessResult classify_boundedness(const DigitSet& d, const BoundednessOptions& options) {
  const std::int64_t max_iter = options.max_iter > 0 ? options.max_iter : default_max_iter(d.base());
  auto emit = [&](int k, const AdmissibleSet& q, std::string_view status) {
    if (options.on_step) options.on_step(IterationStep{k, q, status});
  };

  BoundednessResult result;
  result.history.push_back(AdmissibleSet::initial());
  for (int k = 0;; ++k) {
    const AdmissibleSet& current = result.history.back();
    if (k >= max_iter) {
      result.status = BoundednessStatus::kInconclusive;
      emit(k, current, "inconclusive");
      return result;
    }
    auto built = build_offset_forest(current, d);
    if (auto* loop = std::get_if<LoopWitness>(&built)) {
      result.status = BoundednessStatus::kUnbounded;
      result.loop = std::move(*loop);
      emit(k, current, "unbounded");
      return result;
    }
    auto next = admissible_successor(current, std::get<OffsetForest>(built), d);
    result.iterations = k + 1;
    if (auto loop = multiple_of_n_loop(next, d)) {
      emit(k, current, "growing");
      result.status = BoundednessStatus::kUnbounded;
      result.loop = std::move(*loop);
      result.history.push_back(std::move(next));
      emit(k + 1, result.history.back(), "unbounded");
      return result;
    }
    if (next.same_elements(current)) {
      result.status = BoundednessStatus::kBounded;
      result.stabilized_at = k + 1;
      emit(k, current, "growing");
      result.history.push_back(std::move(next));
      emit(k + 1, result.history.back(), "stabilized");
      return result;
    }
    emit(k, current, "growing");
    for (const auto& e : next.elements) {
      if (!within_norm_cap(e, d.base())) {
        result.status = BoundednessStatus::kUnbounded;
        result.norm_breach = e;
        result.history.push_back(std::move(next));
        emit(k + 1, result.history.back(), "unbounded");
        return result;
      }
    }
    result.history.push_back(std::move(next));
  }
}

}  // namespace fsq
