#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/gen.hpp"
#include "redlab/relcore.hpp"
#include "redlab/rng.hpp"

using namespace redlab;
using relcore::FinRelation;
using relcore::PartitionSchedule;
using relcore::PreorderTable;

namespace {

// Independent closure oracle: path reachability by Floyd-Warshall.
FinRelation closure_by_reachability(const FinRelation& rel) {
  std::vector<std::vector<bool>> reach(rel.n, std::vector<bool>(rel.n, false));
  for (const auto& [u, v] : rel.pairs) reach[u][v] = reach[v][u] = true;
  for (int k = 0; k < rel.n; ++k)
    for (int i = 0; i < rel.n; ++i)
      if (reach[i][k])
        for (int j = 0; j < rel.n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  FinRelation out;
  out.n = rel.n;
  for (int u = 0; u < rel.n; ++u)
    for (int v = u + 1; v < rel.n; ++v)
      if (reach[u][v]) out.pairs.insert({u, v});
  return out;
}

FinRelation random_relation(Rng& rng, int n, int edges) {
  FinRelation r;
  r.n = n;
  for (int e = 0; e < edges; ++e) {
    const int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u != v) r.add(u, v);
  }
  return r;
}

}  // namespace

TEST_CASE("transitive closure basics") {
  FinRelation empty;
  empty.n = 5;
  CHECK(relcore::transitive_closure(empty).pairs.empty());

  FinRelation chain;
  chain.n = 3;
  chain.add(0, 1);
  chain.add(1, 2);
  const auto c = relcore::transitive_closure(chain);
  CHECK(c.pairs == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("transitive closure matches reachability oracle, idempotent, monotone") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto r = random_relation(rng, 10, static_cast<int>(rng.below(14)));
    const auto c = relcore::transitive_closure(r);
    CHECK(c.pairs == closure_by_reachability(r).pairs);
    CHECK(relcore::transitive_closure(c).pairs == c.pairs);

    auto bigger = r;
    if (!c.pairs.empty()) bigger.pairs.insert(*c.pairs.begin());
    const auto cb = relcore::transitive_closure(bigger);
    for (const auto& pr : c.pairs) CHECK(cb.pairs.count(pr));
  }
}

TEST_CASE("local transitivity") {
  FinRelation empty;
  empty.n = 4;
  CHECK(relcore::is_locally_transitive(empty, 3));

  FinRelation chain;
  chain.n = 4;
  chain.add(0, 1);
  chain.add(1, 2);
  CHECK_FALSE(relcore::is_locally_transitive(chain, 2));
  CHECK(relcore::is_locally_transitive(chain, 1));  // the witness 2 is out of window
  CHECK_THROWS_AS(relcore::is_locally_transitive(chain, 7), std::out_of_range);
}

TEST_CASE("disjoint sum embeds both sides") {
  FinRelation e;
  e.n = 1;
  CHECK(relcore::disjoint_sum(e, e).pairs.empty());

  FinRelation r;
  r.n = 2;
  r.add(0, 1);
  const auto d = relcore::disjoint_sum(r, e);
  CHECK(d.pairs == std::set<std::pair<int, int>>{{0, 2}});

  Rng rng(12);
  for (int i = 0; i < 12; ++i) {
    const auto a = gen::random_equivalence(rng, 5);
    const auto b = gen::random_equivalence(rng, 4);
    const auto sum = relcore::disjoint_sum(a, b);
    CHECK(relcore::is_equivalence(sum));

    relcore::ReductionMap left, right;
    for (int x = 0; x < a.n; ++x) left.table[x] = 2 * x;
    for (int x = 0; x < b.n; ++x) right.table[x] = 2 * x + 1;
    CHECK(relcore::verify_reduction(left, a, sum, a.n).ok());
    CHECK(relcore::verify_reduction(right, b, sum, b.n).ok());
  }
}

TEST_CASE("symmetric fragment") {
  auto anti = PreorderTable::identity(4);
  CHECK(relcore::symmetric_fragment(anti).pairs.empty());

  PreorderTable total;
  total.n = 3;
  total.leq.assign(3, std::vector<bool>(3, true));
  CHECK(relcore::symmetric_fragment(total).pairs.size() == 3);

  PreorderTable broken = PreorderTable::identity(3);
  broken.leq[0][0] = false;
  CHECK_THROWS_AS(relcore::symmetric_fragment(broken), std::invalid_argument);

  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen::random_preorder(rng, 8);
    const auto frag = relcore::symmetric_fragment(p);
    CHECK(relcore::is_equivalence(frag));
    for (int x = 0; x < 8; ++x)
      for (int y = x + 1; y < 8; ++y)
        CHECK(frag.related(x, y) == (p.le(x, y) && p.le(y, x)));
  }
}

TEST_CASE("verify_reduction basics") {
  Rng rng(14);
  const auto e = gen::random_equivalence(rng, 6);
  relcore::ReductionMap ident;
  for (int x = 0; x < 6; ++x) ident.table[x] = x;
  CHECK(relcore::verify_reduction(ident, e, e, 6).ok());

  FinRelation two;
  two.n = 4;
  two.add(0, 1);  // two classes {0,1},{2},{3}
  relcore::ReductionMap constant;
  for (int x = 0; x < 4; ++x) constant.table[x] = 0;
  CHECK_FALSE(relcore::verify_reduction(constant, two, two, 4).ok());

  relcore::ReductionMap escape;
  for (int x = 0; x < 4; ++x) escape.table[x] = 9;
  CHECK_THROWS_AS(relcore::verify_reduction(escape, two, two, 4), std::out_of_range);
}

TEST_CASE("stage relation: padding, nesting, local transitivity, limit") {
  PartitionSchedule one;
  one.n = 4;
  one.stable_from = 0;
  one.stages = {{{0, 1, 2, 3}}};
  one.index_blocks();
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(relcore::stage_related(one, 2, u, v));

  Rng rng(15);
  for (int i = 0; i < 30; ++i) {
    const auto s = gen::random_schedule(rng, 9, 20);
    REQUIRE(relcore::validate_schedule(s).ok());

    // Pairs beyond the stage bound are members by cofinite padding.
    for (int t = 0; t < 3 && t + 1 < s.n; ++t) CHECK(relcore::stage_related(s, t, 0, t + 1));

    // Decreasing in t and locally transitive at every bound.
    for (int t = 0; t + 1 <= s.last_stage(); ++t) {
      FinRelation et, et1;
      et.n = et1.n = s.n;
      for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v) {
          if (relcore::stage_related(s, t, u, v)) et.pairs.insert({u, v});
          if (relcore::stage_related(s, t + 1, u, v)) et1.pairs.insert({u, v});
        }
      for (const auto& pr : et1.pairs) CHECK(et.pairs.count(pr));
      if (t < s.n) CHECK(relcore::is_locally_transitive(et, t));
    }

    // Intersection over all stages (padding dies out by stage max(u,v), the
    // partition is stable past the last stage) equals the limit relation.
    const int t_hi = std::max(s.last_stage(), s.n);
    for (int u = 0; u < s.n; ++u)
      for (int v = u + 1; v < s.n; ++v) {
        bool all = true;
        for (int t = 0; t <= t_hi; ++t) all = all && relcore::stage_related(s, t, u, v);
        CHECK(all == relcore::limit_related(s, u, v));
      }
  }
}

TEST_CASE("validate_schedule flags violations") {
  PartitionSchedule ok;
  ok.n = 3;
  ok.stable_from = 0;
  ok.stages = {{{0, 1, 2}}, {{0, 1, 2}}};
  CHECK(relcore::validate_schedule(ok).ok());

  PartitionSchedule merge;
  merge.n = 3;
  merge.stable_from = 1;
  merge.stages = {{{0}, {1}, {2}}, {{0, 1}, {2}}};
  const auto rep = relcore::validate_schedule(merge);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().find("stage 1") != std::string::npos);

  PartitionSchedule late;
  late.n = 2;
  late.stable_from = 0;
  late.stages = {{{0, 1}}, {{0}, {1}}};
  CHECK_FALSE(relcore::validate_schedule(late).ok());

  PartitionSchedule missing;
  missing.n = 3;
  missing.stable_from = 0;
  missing.stages = {{{0, 1}}};
  CHECK_FALSE(relcore::validate_schedule(missing).ok());
}
