#pragma once

#include <vector>

#include "redlab/injury.hpp"
#include "redlab/intalg.hpp"
#include "redlab/relcore.hpp"
#include "redlab/rng.hpp"
#include "redlab/stagecraft.hpp"

// Seeded instance generators; a seed fully determines every generated family.
namespace redlab::gen {

relcore::PartitionSchedule random_schedule(Rng& rng, int max_n, int max_t);
relcore::FinRelation random_equivalence(Rng& rng, int n);
relcore::PreorderTable random_preorder(Rng& rng, int n);
std::vector<relcore::PreorderTable> all_preorders(int n);  // exhaustive, n <= 4

stagecraft::EnumFeed random_feed(Rng& rng, long long horizon, bool unbounded);
stagecraft::SegmentFeed random_segments(Rng& rng, long long horizon, int columns,
                                        int unbounded_column);

intalg::IntervalSet random_grid_set(Rng& rng, int gens);

// Scenario with feeds drawn from a target preorder on r points: for pairs
// (i,j) outside the preorder one designated level per functional index grows
// throughout the run; everything else stabilizes. Convergent scenarios
// stabilize every feed early.
injury::Scenario random_scenario(Rng& rng, int depth, long long stages, bool convergent);

}  // namespace redlab::gen
