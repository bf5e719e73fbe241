#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace redlab::relcore {

// Finite fragment of a symmetric relation: unordered pairs {u,v} with u != v
// over the universe [0, n). Reflexivity is never stored; related(u,u) is true
// by convention wherever an equivalence reading is wanted.
struct FinRelation {
  int n = 0;
  std::set<std::pair<int, int>> pairs;  // normalized u < v

  void add(int u, int v);
  bool related(int u, int v) const;
  bool well_formed() const;  // all members < n, no {u,u}
};

// Smallest superset closed under {u,v},{v,w} -> {u,w}; connected components
// become cliques.
FinRelation transitive_closure(const FinRelation& rel);

// Is the relation restricted to [0,t] transitive? Throws std::out_of_range
// unless 0 <= t < rel.n.
bool is_locally_transitive(const FinRelation& rel, int t);

// Universe 2*max(nR,nS); pairs {2u,2v} from r and {2u+1,2v+1} from s.
FinRelation disjoint_sum(const FinRelation& r, const FinRelation& s);

bool is_equivalence(const FinRelation& rel);  // symmetric by type; checks transitivity

struct PreorderTable {
  int n = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: i precedes j

  static PreorderTable identity(int n);
  bool le(int i, int j) const { return leq[i][j]; }
  bool is_reflexive() const;
  bool is_transitive() const;
  bool valid() const { return is_reflexive() && is_transitive(); }
};

// The equivalence {{x,y} : x<=y and y<=x}. Throws std::invalid_argument if p
// is not a preorder.
FinRelation symmetric_fragment(const PreorderTable& p);

// Stage-indexed refining partitions of [0,n): the canonical presentation of a
// co-enumerable equivalence relation at desk scale. stages[t+1] must refine
// stages[t], and stages[t] == stages[stable_from] for t >= stable_from.
struct PartitionSchedule {
  int n = 0;
  int stable_from = 0;
  std::vector<std::vector<std::vector<int>>> stages;  // stages[t] = sorted blocks

  // Derived element -> block index maps; call after filling stages.
  void index_blocks();
  int block_at(int t, int v) const;  // t clamped to the last stage
  int last_stage() const { return static_cast<int>(stages.size()) - 1; }

 private:
  std::vector<std::vector<int>> block_of_;
};

// Membership in the stage-t relation: {u,v} is in iff u > t, or v > t, or u,v
// share a block of stage min(t, T). True for u == v. The family is decreasing
// in t, cofinite, and locally transitive by construction.
bool stage_related(const PartitionSchedule& s, long long t, int u, int v);

// The limit relation read off the stable partition.
bool limit_related(const PartitionSchedule& s, int u, int v);
FinRelation limit_relation(const PartitionSchedule& s);

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Report validate_schedule(const PartitionSchedule& s);

// A finite reduction table x -> f(x) plus the window on which the reduction
// property has been checked.
struct ReductionMap {
  std::map<long long, long long> table;
  long long verified_window = 0;

  long long at(long long x) const;  // throws std::out_of_range if absent
};

struct ReductionReport {
  std::vector<std::pair<int, int>> counterexamples;  // (x,y) with x < y
  bool ok() const { return counterexamples.empty(); }
};

// Checks x E y <-> f(x) F f(y) for all 0 <= x < y < window. f must be total on
// the window and must map into F's universe (std::out_of_range otherwise).
ReductionReport verify_reduction(const ReductionMap& f, const FinRelation& e,
                                 const FinRelation& f_rel, int window);

}  // namespace redlab::relcore
