#include "redlab/relcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace redlab::relcore {

namespace {

std::pair<int, int> norm(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void FinRelation::add(int u, int v) {
  if (u == v) throw std::invalid_argument("FinRelation: pair {u,u} not allowed");
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("FinRelation: pair member outside universe");
  pairs.insert(norm(u, v));
}

bool FinRelation::related(int u, int v) const {
  if (u == v) return true;
  return pairs.count(norm(u, v)) > 0;
}

bool FinRelation::well_formed() const {
  for (const auto& [u, v] : pairs)
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
  return true;
}

FinRelation transitive_closure(const FinRelation& rel) {
  Dsu dsu(rel.n);
  for (const auto& [u, v] : rel.pairs) dsu.unite(u, v);
  FinRelation out;
  out.n = rel.n;
  for (int u = 0; u < rel.n; ++u)
    for (int v = u + 1; v < rel.n; ++v)
      if (dsu.find(u) == dsu.find(v)) out.pairs.insert({u, v});
  return out;
}

bool is_locally_transitive(const FinRelation& rel, int t) {
  if (t < 0 || t >= rel.n) throw std::out_of_range("is_locally_transitive: t outside universe");
  for (int u = 0; u <= t; ++u)
    for (int v = 0; v <= t; ++v) {
      if (v == u || !rel.related(u, v)) continue;
      for (int w = 0; w <= t; ++w) {
        if (w == u || w == v) continue;
        if (rel.related(v, w) && !rel.related(u, w)) return false;
      }
    }
  return true;
}

FinRelation disjoint_sum(const FinRelation& r, const FinRelation& s) {
  FinRelation out;
  out.n = 2 * std::max(r.n, s.n);
  for (const auto& [u, v] : r.pairs) out.pairs.insert({2 * u, 2 * v});
  for (const auto& [u, v] : s.pairs) out.pairs.insert({2 * u + 1, 2 * v + 1});
  return out;
}

bool is_equivalence(const FinRelation& rel) {
  for (const auto& [u, v] : rel.pairs)
    for (int w = 0; w < rel.n; ++w) {
      if (w == u || w == v) continue;
      if (rel.related(v, w) && !rel.related(u, w)) return false;
      if (rel.related(u, w) && !rel.related(v, w)) return false;
    }
  return true;
}

PreorderTable PreorderTable::identity(int n) {
  PreorderTable p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

bool PreorderTable::is_reflexive() const {
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) return false;
  return true;
}

bool PreorderTable::is_transitive() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k]) return false;
    }
  return true;
}

FinRelation symmetric_fragment(const PreorderTable& p) {
  if (!p.valid()) throw std::invalid_argument("symmetric_fragment: not a preorder");
  FinRelation out;
  out.n = p.n;
  for (int x = 0; x < p.n; ++x)
    for (int y = x + 1; y < p.n; ++y)
      if (p.le(x, y) && p.le(y, x)) out.pairs.insert({x, y});
  return out;
}

void PartitionSchedule::index_blocks() {
  block_of_.assign(stages.size(), std::vector<int>(n, -1));
  for (size_t t = 0; t < stages.size(); ++t)
    for (size_t b = 0; b < stages[t].size(); ++b)
      for (int v : stages[t][b])
        if (v >= 0 && v < n) block_of_[t][v] = static_cast<int>(b);
}

int PartitionSchedule::block_at(int t, int v) const {
  if (block_of_.empty()) throw std::logic_error("PartitionSchedule: index_blocks() not called");
  const int tc = std::min<int>(t, static_cast<int>(block_of_.size()) - 1);
  return block_of_[tc][v];
}

bool stage_related(const PartitionSchedule& s, long long t, int u, int v) {
  if (u == v) return true;
  if (u > t || v > t) return true;
  const int tc = static_cast<int>(std::min<long long>(t, s.last_stage()));
  return s.block_at(tc, u) == s.block_at(tc, v);
}

bool limit_related(const PartitionSchedule& s, int u, int v) {
  if (u == v) return true;
  return s.block_at(s.last_stage(), u) == s.block_at(s.last_stage(), v);
}

FinRelation limit_relation(const PartitionSchedule& s) {
  FinRelation out;
  out.n = s.n;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (limit_related(s, u, v)) out.pairs.insert({u, v});
  return out;
}

Report validate_schedule(const PartitionSchedule& s) {
  Report rep;
  if (s.n < 0) rep.violations.push_back("universe size negative");
  if (s.stages.empty()) {
    rep.violations.push_back("no stages");
    return rep;
  }
  if (s.stable_from < 0 || s.stable_from > s.last_stage())
    rep.violations.push_back("stable_from outside stage range");

  // Each stage is a partition of [0,n) into sorted disjoint blocks.
  for (size_t t = 0; t < s.stages.size(); ++t) {
    std::vector<int> seen(s.n, 0);
    for (const auto& block : s.stages[t]) {
      if (block.empty()) rep.violations.push_back("stage " + std::to_string(t) + ": empty block");
      if (!std::is_sorted(block.begin(), block.end()))
        rep.violations.push_back("stage " + std::to_string(t) + ": block not sorted");
      for (int v : block) {
        if (v < 0 || v >= s.n) {
          rep.violations.push_back("stage " + std::to_string(t) + ": element outside universe");
          continue;
        }
        if (seen[v]++) rep.violations.push_back("stage " + std::to_string(t) + ": element " +
                                                std::to_string(v) + " appears twice");
      }
    }
    for (int v = 0; v < s.n; ++v)
      if (!seen[v])
        rep.violations.push_back("stage " + std::to_string(t) + ": element " + std::to_string(v) +
                                 " not covered");
  }
  if (!rep.ok()) return rep;  // refinement checks need well-formed partitions

  PartitionSchedule indexed = s;
  indexed.index_blocks();
  for (int t = 0; t + 1 <= s.last_stage(); ++t) {
    // stages[t+1] refines stages[t]: elements sharing a t+1 block share a t block.
    for (const auto& block : s.stages[t + 1])
      for (size_t i = 1; i < block.size(); ++i)
        if (indexed.block_at(t, block[i]) != indexed.block_at(t, block[0])) {
          rep.violations.push_back("stage " + std::to_string(t + 1) +
                                   ": not a refinement of stage " + std::to_string(t));
          break;
        }
  }
  for (int t = s.stable_from; t <= s.last_stage(); ++t) {
    if (s.stages[t] != s.stages[s.stable_from]) {
      rep.violations.push_back("stage " + std::to_string(t) + ": changes after stable_from " +
                               std::to_string(s.stable_from));
    }
  }
  return rep;
}

long long ReductionMap::at(long long x) const {
  auto it = table.find(x);
  if (it == table.end()) throw std::out_of_range("ReductionMap: undefined at " + std::to_string(x));
  return it->second;
}

ReductionReport verify_reduction(const ReductionMap& f, const FinRelation& e,
                                 const FinRelation& f_rel, int window) {
  ReductionReport rep;
  for (int x = 0; x < window; ++x) {
    const long long fx = f.at(x);
    if (fx < 0 || fx >= f_rel.n)
      throw std::out_of_range("verify_reduction: f(" + std::to_string(x) +
                              ") outside target universe");
  }
  for (int x = 0; x < window; ++x)
    for (int y = x + 1; y < window; ++y) {
      const bool lhs = e.related(x, y);
      const bool rhs = f_rel.related(static_cast<int>(f.at(x)), static_cast<int>(f.at(y)));
      if (lhs != rhs) rep.counterexamples.push_back({x, y});
    }
  return rep;
}

}  // namespace redlab::relcore
