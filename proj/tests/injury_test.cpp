#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/gen.hpp"
#include "redlab/injury.hpp"
#include "redlab/io.hpp"
#include "redlab/machines.hpp"
#include "redlab/rng.hpp"
#include "redlab/suite.hpp"

using namespace redlab;
using injury::NodeId;
using injury::Outcome;

namespace {

injury::Scenario constant_scenario(int depth, long long stages) {
  injury::Scenario sc;
  sc.depth = depth;
  sc.stages = stages;
  sc.feeds.assign(depth, std::vector<long long>(static_cast<size_t>(stages) + 1, 1));
  return sc;
}

}  // namespace

TEST_CASE("level labels follow the 4-tuple code") {
  CHECK(injury::level_label(0).i == 0);
  CHECK(injury::level_label(0).j == 0);
  const Quad l1 = injury::level_label(1);
  CHECK(l1.i == 1);
  CHECK(l1.j == 0);
  const Quad l2 = injury::level_label(2);
  CHECK(l2.i == 0);
  CHECK(l2.j == 0);
  CHECK(l2.e == 1);
}

TEST_CASE("tops and Z-sets by brute force") {
  // Root: no predecessor, top. Level 2 shares (0,0) with the root, so depth-2
  // nodes are tops exactly when they exited the root through Inf.
  CHECK(injury::is_top(NodeId{0, 0}));
  CHECK(injury::is_top(NodeId{1, 0}));
  CHECK(injury::is_top(NodeId{1, 1}));
  CHECK(injury::is_top(NodeId{2, 0b01}));        // root exited via Inf
  CHECK_FALSE(injury::is_top(NodeId{2, 0b00}));  // root exited via Zero
  CHECK(injury::top_of(NodeId{2, 0b00}) == NodeId{0, 0});

  for (int len = 0; len <= 10; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); bits += 7) {
      const NodeId a{len, bits};
      // Brute-force predecessor scan.
      const Quad la = injury::level_label(len);
      bool top = true;
      for (int m = len - 1; m >= 0; --m) {
        const Quad lb = injury::level_label(m);
        if (lb.i == la.i && lb.j == la.j) {
          top = a.bit(m) == 1;
          break;
        }
      }
      CHECK(injury::is_top(a) == top);

      const auto z0 = injury::zero_predecessors(a);
      const auto zi = injury::inf_predecessors(a);
      for (const auto& b : z0) {
        CHECK(injury::is_top(b));
        CHECK(a.bit(b.len) == 0);
      }
      for (const auto& b : zi) {
        CHECK_FALSE(injury::is_top(b));
        CHECK(a.bit(b.len) == 1);
      }
      CHECK(injury::zero_predecessors(NodeId{0, 0}).empty());
      CHECK(injury::inf_predecessors(NodeId{0, 0}).empty());
    }
}

TEST_CASE("columns are disjoint and self-describing") {
  const NodeId a{2, 0b01}, b{2, 0b10}, c{3, 0b101};
  for (std::uint64_t m = 0; m < 20; ++m) {
    CHECK(injury::in_column(a, injury::column_value(a, m)));
    CHECK_FALSE(injury::in_column(b, injury::column_value(a, m)));
    CHECK_FALSE(injury::in_column(c, injury::column_value(a, m)));
  }
}

TEST_CASE("stage budget zero gives an empty run") {
  const auto res = injury::run(constant_scenario(3, 0));
  CHECK(res.events.empty());
  CHECK(res.v_sets.empty());
}

TEST_CASE("constant feeds walk the all-zero path and stabilize markers") {
  const auto sc = constant_scenario(3, 30);
  const auto res = injury::run(sc);
  for (long long s = 1; s <= 30; ++s) {
    for (const Outcome o : res.tp[static_cast<size_t>(s)]) CHECK(o == Outcome::Zero);
    CHECK(static_cast<long long>(res.tp[static_cast<size_t>(s)].size()) ==
          std::min<long long>(s, 3));
  }
  CHECK(res.diag_counts.empty());          // nothing ever plays Inf
  CHECK(res.v_sets.empty());               // no enumerations at all
  REQUIRE(res.final_markers.count(1));     // the root holds stable markers
  const auto& root_markers = res.final_markers.at(1);
  CHECK_FALSE(root_markers.empty());
  long long prev = -1;
  for (const auto& [x, v] : root_markers) {
    CHECK(v > prev);
    prev = v;
  }
  const auto audit = injury::audit_markers(res);
  CHECK(audit.clean());
  CHECK(audit.undischarged.empty());
}

TEST_CASE("a growing root feed plays Inf forever") {
  auto sc = constant_scenario(2, 20);
  for (long long s = 0; s <= 20; ++s) sc.feeds[0][static_cast<size_t>(s)] = s;
  const auto res = injury::run(sc);
  for (long long s = 1; s <= 20; ++s) CHECK(res.tp[static_cast<size_t>(s)][0] == Outcome::Inf);
}

TEST_CASE("three-stage hand trace of the fixture scenario") {
  // Derived by hand from the construction rules. Stage 1: the root's feed
  // grew from 0 to 1, so it plays Inf, self-initializes (empty) and cannot
  // diagonalize (functional 0 only converges from stage 175). Stage 2: no
  // further growth, outcome 0, extension defines delta_root(0) fresh in the
  // root's column: pair(1,0) = 1; node "0" then defines delta(0) = pair(2,0)
  // = 3. Stage 3: both extend again, delta_root(1) = pair(1,1) = 4 and
  // delta_"0"(1) = pair(2,1) = 7; "00" (a non-top with outcome 0) does
  // nothing.
  auto sc = suite::fixture_scenario();
  sc.stages = 3;
  for (auto& f : sc.feeds) f.resize(4);
  const auto res = injury::run(sc);

  REQUIRE(res.tp[1].size() == 1);
  CHECK(res.tp[1][0] == Outcome::Inf);
  REQUIRE(res.tp[2].size() == 2);
  CHECK(res.tp[2][0] == Outcome::Zero);
  CHECK(res.tp[2][1] == Outcome::Zero);
  REQUIRE(res.tp[3].size() == 3);
  CHECK(res.tp[3][0] == Outcome::Zero);
  CHECK(res.tp[3][1] == Outcome::Zero);
  CHECK(res.tp[3][2] == Outcome::Zero);

  CHECK(res.v_sets.empty());
  CHECK(res.diag_counts.empty());
  REQUIRE(res.final_markers.count(NodeId{0, 0}.code()));
  CHECK(res.final_markers.at(NodeId{0, 0}.code()) ==
        std::map<long long, long long>{{0, 1}, {1, 4}});
  REQUIRE(res.final_markers.count(NodeId{1, 0}.code()));
  CHECK(res.final_markers.at(NodeId{1, 0}.code()) ==
        std::map<long long, long long>{{0, 3}, {1, 7}});
}

TEST_CASE("the fixture exercises every construction case") {
  const auto sc = suite::fixture_scenario();
  const auto res = injury::run(sc);

  // Child diagonalization (case iii) at stage 162 with witness 136, after
  // defining its marker-index parameter; the root's own diagonalization
  // (case ii) at 181 with witness 1.
  const NodeId child{4, 0};  // "0000"
  REQUIRE(res.diag_counts.count(child.code()));
  CHECK(res.last_diag_stage.at(child.code()) == 162);
  REQUIRE(res.v_sets.count(1));
  CHECK(res.v_sets.at(1).front() == std::pair<long long, long long>{136, 162});
  REQUIRE(res.diag_counts.count(NodeId{0, 0}.code()));
  CHECK(res.last_diag_stage.at(NodeId{0, 0}.code()) == 181);
  CHECK(res.v_member(0, 1));

  // The level-4 node under the Inf side ("I000") also defines its parameter
  // when the root's late growth carries the path to it at 181.
  long long k_defines = 0, lifts = 0, corrections = 0, right_ofs = 0;
  bool lift_at_168 = false, correction_at_163 = false;
  for (const auto& ev : res.events) {
    switch (ev.type) {
      case injury::EventType::KDefine:
        ++k_defines;
        CHECK((ev.stage == 162 || ev.stage == 181));
        break;
      case injury::EventType::Correct:
        ++corrections;
        correction_at_163 = correction_at_163 || ev.stage == 163;
        break;
      case injury::EventType::Enumerate:
        if (ev.reason == injury::Reason::Lift) {
          ++lifts;
          lift_at_168 = lift_at_168 || ev.stage == 168;
        }
        break;
      case injury::EventType::Init:
        if (ev.reason == injury::Reason::RightOf) ++right_ofs;
        break;
      default:
        break;
    }
  }
  CHECK(k_defines == 2);
  CHECK(lifts >= 1);
  CHECK(lift_at_168);
  CHECK(corrections == 1);
  CHECK(correction_at_163);
  CHECK(right_ofs >= 1);

  const auto audit = injury::audit_markers(res);
  CHECK(audit.rule1.empty());
  CHECK(audit.rule2.empty());
  CHECK(audit.column.empty());
}

TEST_CASE("determinism: identical scenarios give identical logs") {
  Rng rng(71);
  const auto sc = gen::random_scenario(rng, 6, 400, false);
  const auto r1 = injury::run(sc);
  const auto r2 = injury::run(sc);
  CHECK(io::events_to_jsonl(r1) == io::events_to_jsonl(r2));
  CHECK(r1.v_sets == r2.v_sets);
  CHECK(r1.fresh_trace == r2.fresh_trace);
}

TEST_CASE("audits are clean on random scenarios and catch corruption") {
  Rng rng(72);
  for (int i = 0; i < 6; ++i) {
    const auto sc = gen::random_scenario(rng, rng.range(4, 9), 600, false);
    const auto res = injury::run(sc);
    const auto audit = injury::audit_markers(res);
    CHECK(audit.rule1.empty());
    CHECK(audit.rule2.empty());
    CHECK(audit.column.empty());
  }

  // Corrupt a run: flip a marker definition to a decreasing value.
  const auto sc = constant_scenario(2, 10);
  auto res = injury::run(sc);
  bool corrupted = false;
  for (auto& ev : res.events)
    if (ev.type == injury::EventType::MarkerDefine && ev.a == 2) {
      ev.b = 1;  // below the earlier markers
      corrupted = true;
      break;
    }
  REQUIRE(corrupted);
  const auto audit = injury::audit_markers(res);
  CHECK_FALSE(audit.rule1.empty());
}

TEST_CASE("rule (iii) corrections and pending obligations") {
  // One top node codes V_0 into V_0-marker territory... use the fixture: the
  // diagonalization at stage 3 enumerates 1 into V_0; the node "I0" (same
  // pair as the root, child-side) later corrects. Run the full fixture and
  // audit: no rule violations, and any obligations left open are reported.
  const auto sc = suite::fixture_scenario();
  const auto res = injury::run(sc);
  const auto audit = injury::audit_markers(res);
  CHECK(audit.rule1.empty());
  CHECK(audit.rule2.empty());
  CHECK(audit.column.empty());
}

TEST_CASE("replay decodes settled memberships on convergent scenarios") {
  Rng rng(73);
  for (int i = 0; i < 4; ++i) {
    const auto sc = gen::random_scenario(rng, rng.range(4, 7), 800, true);
    const auto res = injury::run(sc);
    const auto& final_tp = res.tp.back();
    NodeId cur{0, 0};
    for (size_t d = 0; d < final_tp.size(); ++d) {
      if (injury::is_top(cur) && final_tp[d] == Outcome::Zero) {
        const Quad lab = injury::level_label(cur.len);
        for (long long x = 0; x < 30; ++x) {
          const auto bit = injury::replay_reduction(res, cur, x);
          if (bit) CHECK(*bit == (res.v_member(static_cast<long long>(lab.i), x) ? 1 : 0));
        }
      }
      cur = cur.child(final_tp[d]);
    }
  }
}

TEST_CASE("replay: never-entered points with stable markers decode to zero") {
  const auto sc = constant_scenario(2, 25);
  const auto res = injury::run(sc);
  const NodeId root{0, 0};
  const auto bit = injury::replay_reduction(res, root, 0);
  REQUIRE(bit.has_value());
  CHECK(*bit == 0);
}

TEST_CASE("self-init toggle is honored") {
  // With the toggle on, witnesses must also clear the node's own
  // initializations; the root's stage-181 diagonalization (witness 1,
  // self-init at 181) is then blocked, while the child's stage-162 one (a
  // non-top never self-initializes) still fires.
  const auto sc = suite::fixture_scenario();
  injury::Options opt;
  opt.self_init_bounds_diag = true;
  const auto res = injury::run(sc, opt);
  CHECK_FALSE(res.v_member(0, 1));
  CHECK_FALSE(res.diag_counts.count(NodeId{0, 0}.code()));
  CHECK(res.diag_counts.count(NodeId{4, 0}.code()));
}

TEST_CASE("late convergences above the bound are believable on a stable Inf path") {
  // The level-2 node under the all-zero path works the same pair as the root
  // and runs the identity functional against its own target set, so its
  // agreement prefix never breaks: it keeps diagonalizing, lifting the root's
  // markers in between. Its probed witnesses above the believability bound
  // must all be believable.
  injury::Scenario sc;
  sc.depth = 3;
  sc.stages = 300;
  sc.feeds.assign(3, std::vector<long long>(301, 0));
  for (long long s = 0; s <= 300; ++s) {
    sc.feeds[0][s] = (s >= 1 ? 1 : 0) + (s >= 11 ? 1 : 0);
    sc.feeds[1][s] = 0;
    sc.feeds[2][s] = s / 3;
  }
  injury::Functional f0;  // inert
  f0.table[0] = {400, 1, 0};
  injury::Functional f1;
  f1.machine_backed = true;
  f1.machine = machines::oracle_identity();
  sc.functionals.push_back(std::move(f0));
  sc.functionals.push_back(std::move(f1));
  const auto res = injury::run(sc);

  const NodeId child{2, 0};  // "00"
  REQUIRE(res.diag_counts.count(child.code()));
  CHECK(res.diag_counts.at(child.code()) >= 2);
  REQUIRE(res.last_attempt_probes.count(child.code()));
  const auto& probes = res.last_attempt_probes.at(child.code());
  REQUIRE_FALSE(probes.empty());
  const long long bound = injury::believability_bound(res, child);
  for (const auto& p : probes)
    if (p.l > bound) CHECK(p.believable);

  // Capricious destruction ran: the child repeatedly lifted root markers.
  long long lifts = 0;
  for (const auto& ev : res.events)
    if (ev.type == injury::EventType::Enumerate && ev.reason == injury::Reason::Lift) ++lifts;
  CHECK(lifts >= 3);
  CHECK(injury::audit_markers(res).clean());
}

TEST_CASE("believability bound reflects surviving child parameters") {
  Rng rng(74);
  const auto sc = gen::random_scenario(rng, 8, 1000, false);
  const auto res = injury::run(sc);
  // The bound is the largest k of a live child of a Z^0 top; sanity: bounds
  // are nonnegative and monotone under extension of the node.
  const NodeId a{3, 0b000};
  const NodeId b{5, 0b00000};
  CHECK(injury::believability_bound(res, a) >= 0);
  CHECK(injury::believability_bound(res, b) >= injury::believability_bound(res, a));
}
