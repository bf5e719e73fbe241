#include "redlab/gen.hpp"

#include <algorithm>
#include <numeric>

namespace redlab::gen {

relcore::PartitionSchedule random_schedule(Rng& rng, int max_n, int max_t) {
  relcore::PartitionSchedule s;
  s.n = rng.range(1, max_n);

  // Start from a random coarse partition, then refine by random block splits
  // at random stages. stable_from is the last stage that changed anything.
  const int buckets = rng.range(1, std::max(1, s.n / 2 + 1));
  std::vector<std::vector<int>> cur(buckets);
  for (int v = 0; v < s.n; ++v) cur[rng.below(buckets)].push_back(v);
  std::erase_if(cur, [](const auto& b) { return b.empty(); });

  const int total = rng.range(1, max_t);
  s.stable_from = 0;
  for (int t = 0; t <= total; ++t) {
    if (t > 0 && rng.one_in(3)) {
      // Split one block with >= 2 elements, if any.
      std::vector<size_t> splittable;
      for (size_t b = 0; b < cur.size(); ++b)
        if (cur[b].size() >= 2) splittable.push_back(b);
      if (!splittable.empty()) {
        const size_t b = splittable[rng.below(splittable.size())];
        std::vector<int> left, right;
        for (int v : cur[b]) (rng.one_in(2) ? left : right).push_back(v);
        if (!left.empty() && !right.empty()) {
          cur[b] = left;
          cur.push_back(right);
          s.stable_from = t;
        }
      }
    }
    auto stage = cur;
    for (auto& b : stage) std::sort(b.begin(), b.end());
    std::sort(stage.begin(), stage.end());
    s.stages.push_back(stage);
  }
  s.index_blocks();
  return s;
}

relcore::FinRelation random_equivalence(Rng& rng, int n) {
  relcore::FinRelation r;
  r.n = n;
  std::vector<int> cls(n);
  const int k = rng.range(1, std::max(1, n));
  for (int v = 0; v < n; ++v) cls[v] = static_cast<int>(rng.below(k));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] == cls[v]) r.pairs.insert({u, v});
  return r;
}

relcore::PreorderTable random_preorder(Rng& rng, int n) {
  relcore::PreorderTable p = relcore::PreorderTable::identity(n);
  const int edges = rng.range(0, n * n / 2);
  for (int e = 0; e < edges; ++e) {
    const int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
    p.leq[i][j] = true;
  }
  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;
  return p;
}

std::vector<relcore::PreorderTable> all_preorders(int n) {
  if (n > 4) throw std::invalid_argument("all_preorders: n too large for exhaustion");
  std::vector<relcore::PreorderTable> out;
  const int off_diag = n * n - n;
  for (std::uint64_t mask = 0; mask < (1ull << off_diag); ++mask) {
    relcore::PreorderTable p = relcore::PreorderTable::identity(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((mask >> bit) & 1) p.leq[i][j] = true;
        ++bit;
      }
    if (p.is_transitive()) out.push_back(std::move(p));
  }
  return out;
}

stagecraft::EnumFeed random_feed(Rng& rng, long long horizon, bool unbounded) {
  stagecraft::EnumFeed f;
  f.horizon = horizon;
  long long next_elem = 0;
  if (unbounded) {
    const long long gap = 1 + static_cast<long long>(rng.below(3));
    for (long long s = 1; s <= horizon; s += gap) f.events.push_back({next_elem++, s});
  } else {
    const long long last = static_cast<long long>(rng.below(std::max<long long>(1, horizon / 2)));
    for (long long s = 1; s <= last; ++s)
      if (rng.one_in(2)) f.events.push_back({next_elem++, s});
  }
  return f;
}

stagecraft::SegmentFeed random_segments(Rng& rng, long long horizon, int columns,
                                        int unbounded_column) {
  stagecraft::SegmentFeed f;
  f.horizon = horizon;
  for (int k = 0; k < columns; ++k) {
    std::vector<long long> ls(static_cast<size_t>(horizon) + 1, 0);
    long long cur = 0;
    const bool unbounded = k == unbounded_column;
    const long long stop = unbounded ? horizon : static_cast<long long>(rng.below(horizon / 2 + 1));
    for (long long s = 1; s <= horizon; ++s) {
      if (s <= stop && (unbounded || rng.one_in(2))) ++cur;
      ls[static_cast<size_t>(s)] = cur;
    }
    f.lengths[k] = std::move(ls);
  }
  return f;
}

intalg::IntervalSet random_grid_set(Rng& rng, int gens) {
  const std::uint64_t atoms = 1ull << gens;
  std::vector<std::pair<Rat, Rat>> parts;
  const BigInt den = BigInt(1) << gens;
  for (std::uint64_t a = 0; a < atoms; ++a)
    if (rng.one_in(2)) parts.push_back({Rat(BigInt(a), den), Rat(BigInt(a + 1), den)});
  return intalg::normalized(std::move(parts));
}

injury::Scenario random_scenario(Rng& rng, int depth, long long stages, bool convergent) {
  injury::Scenario sc;
  sc.depth = depth;
  sc.stages = stages;
  sc.seed = rng.u64();
  Rng local(sc.seed);

  // Target preorder over the i/j values the level labels can reach.
  int max_ij = 0;
  for (int d = 0; d < depth; ++d) {
    const Quad q = injury::level_label(d);
    max_ij = std::max({max_ij, static_cast<int>(q.i), static_cast<int>(q.j)});
  }
  const relcore::PreorderTable target = random_preorder(local, max_ij + 1);

  // For each (i,j) outside the target and each functional index, grow one
  // designated level; all other feeds stabilize.
  sc.feeds.assign(depth, std::vector<long long>(static_cast<size_t>(stages) + 1, 0));
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::map<std::uint64_t, int>> designated;
  if (!convergent) {
    for (int d = 0; d < depth; ++d) {
      const Quad q = injury::level_label(d);
      if (target.le(static_cast<int>(q.i), static_cast<int>(q.j))) continue;
      auto& per_e = designated[{q.i, q.j}];
      if (!per_e.count(q.e)) per_e[q.e] = d;  // least p wins
    }
  }
  for (int d = 0; d < depth; ++d) {
    const Quad q = injury::level_label(d);
    bool grows = false;
    if (!convergent) {
      auto it = designated.find({q.i, q.j});
      grows = it != designated.end() && it->second.count(q.e) && it->second.at(q.e) == d;
    }
    long long cur = local.below(2);
    const long long gap = 1 + static_cast<long long>(local.below(3));
    const long long stop = convergent ? static_cast<long long>(local.below(stages / 3 + 1))
                                      : (grows ? stages : static_cast<long long>(local.below(stages / 2 + 1)));
    for (long long s = 0; s <= stages; ++s) {
      if (s > 0 && s <= stop && (grows ? (s % gap == 0) : local.one_in(4))) ++cur;
      sc.feeds[d][static_cast<size_t>(s)] = cur;
    }
  }

  // Table functionals: a dense initial segment (so agreement prefixes can
  // reach the shallow nodes' column witnesses) plus the column values of
  // shallow nodes, with occasional divergence and nonzero outputs.
  std::uint64_t max_e = 0;
  for (int d = 0; d < depth; ++d) max_e = std::max(max_e, injury::level_label(d).e);
  for (std::uint64_t e = 0; e <= max_e; ++e) {
    injury::Functional f;
    std::set<long long> ls;
    for (long long l = 0; l < 20 + static_cast<long long>(local.below(12)); ++l) ls.insert(l);
    for (int len = 0; len <= std::min(depth, 5); ++len)
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
        for (std::uint64_t m = 0; m < 3; ++m)
          ls.insert(static_cast<long long>(
              injury::column_value(injury::NodeId{len, bits}, m)));
    for (long long l : ls) {
      if (local.one_in(12)) continue;  // leave a few inputs divergent
      injury::TableEntry te;
      te.min_stage = static_cast<long long>(local.below(stages / 4 + 1));
      te.use = static_cast<long long>(local.below(200));
      te.output = local.one_in(12) ? 1 : 0;
      f.table[l] = te;
    }
    sc.functionals.push_back(std::move(f));
  }
  return sc;
}

}  // namespace redlab::gen
