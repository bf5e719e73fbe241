#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/gen.hpp"
#include "redlab/machines.hpp"
#include "redlab/rng.hpp"
#include "redlab/stagecraft.hpp"

using namespace redlab;
using stagecraft::EnumFeed;
using stagecraft::SegmentFeed;

namespace {
constexpr long long kCap = 1 << 20;
}

TEST_CASE("feed well-formedness") {
  EnumFeed ok;
  ok.horizon = 10;
  ok.events = {{5, 1}, {3, 1}, {9, 4}};
  CHECK(ok.check().empty());

  EnumFeed dup = ok;
  dup.events.push_back({5, 6});
  CHECK_FALSE(dup.check().empty());

  EnumFeed unsorted = ok;
  unsorted.events.push_back({7, 2});
  CHECK_FALSE(unsorted.check().empty());
}

TEST_CASE("race language: empty feeds give full membership") {
  EnumFeed s, t;
  s.horizon = t.horizon = 12;
  for (long long n = 0; n <= 12; ++n) CHECK(stagecraft::race_member(s, t, n));
}

TEST_CASE("race language: finite vs busy feeds have the right tails") {
  EnumFeed s, t;
  s.horizon = t.horizon = 30;
  s.events = {{0, 2}, {1, 4}};            // stops changing after stage 4
  for (long long st = 1; st <= 30; ++st)  // changes at every stage
    t.events.push_back({100 + st, st});

  // Lengths past the last s-change see a later t-change: non-members.
  for (long long n = 5; n <= 30; ++n) CHECK_FALSE(stagecraft::race_member(s, t, n));
  // Swapped roles: cofinite.
  for (long long n = 5; n <= 30; ++n) CHECK(stagecraft::race_member(t, s, n));
  // The s-feed wins ties at its own change stages.
  CHECK(stagecraft::race_member(s, t, 2));
}

TEST_CASE("race language depends only on the length") {
  Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    const auto s = gen::random_feed(rng, 20, rng.one_in(2));
    const auto t = gen::random_feed(rng, 20, rng.one_in(2));
    for (long long n = 0; n <= 20; ++n) {
      const bool member = stagecraft::race_member(s, t, n);
      // Two distinct strings per length agree with the length verdict.
      std::string w0(static_cast<size_t>(n), '0');
      std::string w1(static_cast<size_t>(n), '1');
      CHECK(stagecraft::race_member(s, t, w0) == member);
      CHECK(stagecraft::race_member(s, t, w1) == member);
    }
  }
}

TEST_CASE("supersparse support is the iterated bound") {
  const auto sum = machines::unary_sum();  // h(n) = 2n + 2
  const auto f = stagecraft::supersparse_support(sum, 6, kCap);
  REQUIRE(f.size() == 7);
  CHECK(f[0] == 0);
  for (size_t k = 0; k + 1 < f.size(); ++k) {
    CHECK(f[k + 1] == machina::step_count(sum, f[k], kCap));  // recomputed independently
    CHECK(f[k + 1] > f[k]);
  }
}

TEST_CASE("supersparse membership diagonalizes against the adversaries") {
  const auto sum = machines::unary_sum();
  const auto f = stagecraft::supersparse_support(sum, 6, kCap);

  // Support restriction: lengths off the ladder are out.
  std::vector<machina::ClockedMachine> reject{machines::reject_all()};
  for (long long len = 0; len <= f[4]; ++len) {
    const bool on_ladder = std::find(f.begin(), f.end(), len) != f.end();
    const bool member = stagecraft::supersparse_member(sum, reject, std::string(len, '0'), kCap);
    if (!on_ladder) CHECK_FALSE(member);
  }

  // A single always-rejecting adversary puts every ladder point in.
  for (size_t k = 0; k < 5; ++k)
    CHECK(stagecraft::supersparse_member(sum, reject, std::string(f[k], '0'), kCap));

  // The set disagrees with every listed adversary somewhere on the ladder.
  std::vector<machina::ClockedMachine> advs{machines::reject_all(), machines::accept_all(),
                                            machines::accept_even_length()};
  for (size_t a = 0; a < advs.size(); ++a) {
    bool differs = false;
    for (size_t k = 0; k < advs.size() * 2 && !differs; ++k) {
      const std::string w(f[k], '0');
      const bool in_a = stagecraft::supersparse_member(sum, advs, w, kCap);
      const bool adv_says = machina::clocked_value(advs[a], w) != 0;
      differs = k % advs.size() == a && in_a != adv_says;
    }
    CHECK(differs);
  }

  CHECK_THROWS_AS(stagecraft::supersparse_member(sum, advs, "01", kCap), std::invalid_argument);
}

TEST_CASE("split stage function") {
  SegmentFeed constant;
  constant.horizon = 10;
  constant.lengths[0] = std::vector<long long>(11, 3);
  for (long long s = 0; s <= 10; ++s) CHECK(stagecraft::split_g(constant, 0, s) == 0);

  SegmentFeed growing;
  growing.horizon = 10;
  growing.lengths[0].resize(11);
  for (long long s = 0; s <= 10; ++s) growing.lengths[0][s] = s;
  for (long long s = 0; s <= 10; ++s) CHECK(stagecraft::split_g(growing, 0, s) == s);

  Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    const auto segs = gen::random_segments(rng, 15, 3, 0);
    for (long long k = 0; k < 3; ++k)
      for (long long s = 0; s <= 15; ++s) {
        long long expect = 0;  // direct reverse scan
        for (long long t = s; t > 0; --t)
          if (segs.at(k, t - 1) != segs.at(k, t)) {
            expect = t;
            break;
          }
        CHECK(stagecraft::split_g(segs, k, s) == expect);
      }
  }
}

TEST_CASE("splitting covers the feed disjointly, stage by stage") {
  Rng rng(53);
  for (int i = 0; i < 25; ++i) {
    const long long horizon = 20;
    EnumFeed a;
    a.horizon = horizon;
    long long elem = 0;
    for (long long s = 1; s <= horizon; ++s)
      if (!rng.one_in(3)) a.events.push_back({elem++, s});
    const auto segs = gen::random_segments(rng, horizon, 3, rng.one_in(2) ? 0 : 2);
    const auto sp = stagecraft::run_splitting(a, segs);

    // Replay: parts cover the enumerated set at every stage, never overlap,
    // and elements never move between parts.
    for (long long s = 0; s <= horizon; ++s) {
      std::set<long long> e_by, f_by;
      for (const auto& [x, t] : sp.e_part)
        if (t <= s) e_by.insert(x);
      for (const auto& [x, t] : sp.f_part)
        if (t <= s) f_by.insert(x);
      const auto all = a.members_by(s);
      CHECK(e_by.size() + f_by.size() == all.size());
      for (long long x : e_by) {
        CHECK(all.count(x));
        CHECK_FALSE(f_by.count(x));
      }
    }
  }
}

TEST_CASE("splitting sends everything to e_part on a constant segment feed") {
  EnumFeed a;
  a.horizon = 6;
  a.events = {{0, 1}, {1, 2}, {2, 5}};
  SegmentFeed constant;
  constant.horizon = 6;
  constant.lengths[0] = std::vector<long long>(7, 2);
  const auto sp = stagecraft::run_splitting(a, constant);
  CHECK(sp.e_part.size() == 3);
  CHECK(sp.f_part.empty());
}

TEST_CASE("splitting sends small elements to f_part under a busy even column") {
  EnumFeed a;
  a.horizon = 8;
  a.events = {{0, 3}, {1, 5}, {2, 7}};
  SegmentFeed segs;
  segs.horizon = 8;
  segs.lengths[0].resize(9);
  for (long long s = 0; s <= 8; ++s) segs.lengths[0][s] = s;  // changes every stage
  const auto sp = stagecraft::run_splitting(a, segs);
  CHECK(sp.f_part.size() == 3);  // a < g(0,s) = s at each entry
  CHECK(sp.e_part.empty());
}

TEST_CASE("window comparisons at the horizon") {
  EnumFeed wi, wj;
  wi.horizon = wj.horizon = 20;
  wi.events = {{1, 1}, {2, 2}, {4, 3}, {7, 4}};
  wj.events = {{7, 2}};

  const auto e0 = stagecraft::window_compare(wi, wj, stagecraft::WindowKind::SymmetricDiffSize, 20);
  CHECK(e0.diff_size == 3);
  CHECK(e0.diff == std::vector<long long>{1, 2, 4});

  const auto e2 = stagecraft::window_compare(wi, wj, stagecraft::WindowKind::ReciprocalSum, 20);
  CHECK(e2.partial_sum == Rat(7, 4));  // 1/1 + 1/2 + 1/4

  // Equal feeds: empty difference, zero sum, no differing columns.
  const auto eq = stagecraft::window_compare(wi, wi, stagecraft::WindowKind::ReciprocalSum, 20);
  CHECK(eq.diff.empty());
  CHECK(eq.partial_sum == Rat(0));

  // A single-column disagreement is flagged as exactly that column.
  EnumFeed ca, cb;
  ca.horizon = cb.horizon = 40;
  ca.events = {{static_cast<long long>(cantor_pair(3, 0)), 1},
               {static_cast<long long>(cantor_pair(2, 1)), 2}};
  cb.events = {{static_cast<long long>(cantor_pair(2, 1)), 3}};
  const auto e1 = stagecraft::window_compare(ca, cb, stagecraft::WindowKind::ColumnsDiffering, 40);
  CHECK(e1.differing_columns == std::vector<long long>{3});
  const auto e3 = stagecraft::window_compare(ca, cb, stagecraft::WindowKind::ColumnwiseDiff, 40);
  CHECK(e3.per_column_diff.at(3) == 1);
}
