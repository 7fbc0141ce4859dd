#include "fsq/exact_admissible.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace fsq {

namespace {

bool lattice_within(const Lattice& inner, const Lattice& outer) {
  for (const auto& g : inner.basis())
    if (!outer.contains(g)) return false;
  return true;
}

bool coset_within(const Coset& inner, const Coset& outer) {
  return lattice_within(inner.lattice, outer.lattice) && outer.contains(inner.offset);
}

std::vector<Coset> prune(std::set<Coset> raw) {
  std::vector<Coset> all(raw.begin(), raw.end());
  std::stable_sort(all.begin(), all.end(), [](const Coset& a, const Coset& b) {
    return a.lattice.rank() > b.lattice.rank();
  });
  std::vector<Coset> kept;
  for (const auto& c : all) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [&](const Coset& k) { return coset_within(c, k); });
    if (!covered) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Labels b with n b + dv - du in `q`, as a coset (or nothing).
std::optional<Coset> edge_coset(const Coset& q, std::int64_t n, Cell du, Cell dv) {
  const LatticeVec want{dv.x - du.x, dv.y - du.y};
  const auto basis = q.lattice.basis();
  std::optional<LatticeVec> hit;
  auto matches = [&](const LatticeVec& v) {
    return floor_mod(v.x - want.x, n) == 0 && floor_mod(v.y - want.y, n) == 0;
  };
  if (basis.empty()) {
    if (matches(q.offset)) hit = q.offset;
  } else if (basis.size() == 1) {
    for (std::int64_t i = 0; i < n && !hit; ++i) {
      const LatticeVec v = q.offset + i * basis[0];
      if (matches(v)) hit = v;
    }
  } else {
    for (std::int64_t i = 0; i < n && !hit; ++i) {
      for (std::int64_t j = 0; j < n && !hit; ++j) {
        const LatticeVec v = q.offset + i * basis[0] + j * basis[1];
        if (matches(v)) hit = v;
      }
    }
  }
  if (!hit) return std::nullopt;
  const LatticeVec scaled = *hit - want;
  return Coset::make({scaled.x / n, scaled.y / n}, q.lattice.multiples_of(n).divided_by(n));
}

std::vector<Cell> all_cells(int n) {
  std::vector<Cell> cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells.push_back({x, y});
  return cells;
}

// Offset union-find whose classes also accumulate the lattice of loop sums.
class CosetForest {
 public:
  explicit CosetForest(std::size_t size) : parent_(size), offset_(size), loops_(size) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t v) {
    if (parent_[v] == v) return v;
    const std::size_t p = parent_[v];
    const std::size_t root = find(p);
    if (p != root) offset_[v] += offset_[p];
    parent_[v] = root;
    return root;
  }

  LatticeVec potential(std::size_t v) {
    const std::size_t root = find(v);
    return v == root ? LatticeVec{} : offset_[v];
  }

  const Lattice& loops(std::size_t root) const { return loops_[root]; }

  void unite(std::size_t u, std::size_t v, const Coset& label) {
    const std::size_t ru = find(u);
    const std::size_t rv = find(v);
    const LatticeVec pu = potential(u);
    const LatticeVec pv = potential(v);
    if (ru == rv) {
      loops_[ru] = (loops_[ru] + label.lattice).with(label.offset - (pv - pu));
      return;
    }
    parent_[rv] = ru;
    offset_[rv] = pu + label.offset - pv;
    loops_[ru] = loops_[ru] + loops_[rv] + label.lattice;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<LatticeVec> offset_;
  std::vector<Lattice> loops_;
};

}  // namespace

AdmissibleFamily AdmissibleFamily::initial() {
  AdmissibleFamily f;
  for (LatticeVec v : {LatticeVec{0, 0}, LatticeVec{1, 0}, LatticeVec{-1, 0}, LatticeVec{0, 1}, LatticeVec{0, -1}}) {
    f.cosets.push_back(Coset::make(v, Lattice{}));
  }
  std::sort(f.cosets.begin(), f.cosets.end());
  return f;
}

bool AdmissibleFamily::contains(const LatticeVec& q) const {
  return std::any_of(cosets.begin(), cosets.end(), [&](const Coset& c) { return c.contains(q); });
}

bool AdmissibleFamily::is_finite() const {
  return std::all_of(cosets.begin(), cosets.end(), [](const Coset& c) { return c.is_point(); });
}

std::vector<LatticeVec> AdmissibleFamily::in_ball(std::int64_t bound) const {
  std::vector<LatticeVec> out;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      if (contains({x, y})) out.push_back({x, y});
  return out;
}

AdmissibleFamily next_family(const AdmissibleFamily& q, const DigitSet& d) {
  const int n = d.base();
  const auto cells = all_cells(n);
  const auto inner = d.complement();
  std::set<Coset> sums;

  for (const auto& h0 : cells)
    for (const auto& h1 : cells)
      for (const auto& c : q.cosets)
        if (auto e = edge_coset(c, n, h0, h1)) sums.insert(*e);

  CosetForest forest(inner.size());
  for (std::size_t u = 0; u < inner.size(); ++u)
    for (std::size_t v = 0; v < inner.size(); ++v)
      for (const auto& c : q.cosets)
        if (auto e = edge_coset(c, n, inner[u], inner[v])) forest.unite(u, v, *e);

  std::map<std::size_t, std::set<Coset>> entries;
  std::map<std::size_t, std::set<Coset>> exits;
  for (std::size_t v = 0; v < inner.size(); ++v) {
    const std::size_t root = forest.find(v);
    const LatticeVec phi = forest.potential(v);
    for (const auto& h : cells) {
      for (const auto& c : q.cosets) {
        if (auto e = edge_coset(c, n, h, inner[v])) entries[root].insert(Coset::make(e->offset - phi, e->lattice));
        if (auto e = edge_coset(c, n, inner[v], h)) exits[root].insert(Coset::make(phi + e->offset, e->lattice));
      }
    }
  }
  for (const auto& [root, ins] : entries) {
    auto it = exits.find(root);
    if (it == exits.end()) continue;
    const Lattice& loops = forest.loops(root);
    for (const auto& a : ins)
      for (const auto& b : it->second)
        sums.insert(Coset::make(a.offset + b.offset, a.lattice + b.lattice + loops));
  }

  std::set<Coset> symmetric;
  for (const auto& c : sums) {
    symmetric.insert(c);
    symmetric.insert(Coset::make(-c.offset, c.lattice));
  }
  AdmissibleFamily next;
  next.cosets = prune(std::move(symmetric));
  next.generation = q.generation + 1;
  return next;
}

AdmissibleFamily admissible_family(const DigitSet& d, int k) {
  AdmissibleFamily f = AdmissibleFamily::initial();
  for (int i = 0; i < k; ++i) f = next_family(f, d);
  return f;
}

}  // namespace fsq
