#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/gen.hpp"
#include "redlab/io.hpp"
#include "redlab/machines.hpp"
#include "redlab/rng.hpp"
#include "redlab/suite.hpp"

using namespace redlab;
using io::Json;

namespace {
const std::string kFixtures = FIXTURE_DIR;
}

TEST_CASE("schedule json round-trip and validation") {
  Rng rng(81);
  for (int i = 0; i < 10; ++i) {
    const auto s = gen::random_schedule(rng, 8, 20);
    const auto j = io::schedule_to_json(s);
    const auto back = io::schedule_from_json(j);
    CHECK(back.n == s.n);
    CHECK(back.stable_from == s.stable_from);
    CHECK(back.stages == s.stages);
  }

  Json bad = io::schedule_to_json(gen::random_schedule(rng, 5, 8));
  bad["stages"][0] = Json::array({Json::array({0})});  // drops elements
  CHECK_THROWS_AS(io::schedule_from_json(bad), std::invalid_argument);
}

TEST_CASE("feed, segments, preorder round-trips") {
  stagecraft::EnumFeed f;
  f.horizon = 9;
  f.events = {{4, 1}, {2, 3}, {8, 9}};
  CHECK(io::feed_from_json(io::feed_to_json(f)).events == f.events);

  stagecraft::SegmentFeed segs;
  segs.horizon = 3;
  segs.lengths[0] = {0, 1, 1, 2};
  segs.lengths[2] = {0, 0, 0, 0};
  const auto segs2 = io::segments_from_json(io::segments_to_json(segs));
  CHECK(segs2.lengths == segs.lengths);

  Rng rng(82);
  const auto p = gen::random_preorder(rng, 5);
  const auto p2 = io::preorder_from_json(io::preorder_to_json(p));
  CHECK(p2.leq == p.leq);

  Json notpre = io::preorder_to_json(p);
  notpre["leq"][0][0] = 0;
  CHECK_THROWS_AS(io::preorder_from_json(notpre), std::invalid_argument);
}

TEST_CASE("machine json round-trip preserves behavior") {
  for (const auto& m : {machines::unary_sum(), machines::palindrome(), machines::oracle_bit(3)}) {
    const auto m2 = io::machine_from_json(io::machine_to_json(m));
    CHECK(m2.tapes == m.tapes);
    CHECK(m2.delta.size() == m.delta.size());
    if (!m.has_oracle()) {
      const auto r1 = machina::run(m, "1101", 10000);
      const auto r2 = machina::run(m2, "1101", 10000);
      CHECK(r1.output == r2.output);
      CHECK(r1.steps == r2.steps);
    }
  }
}

TEST_CASE("scenario json round-trip reproduces the run") {
  const auto sc = suite::fixture_scenario();
  const auto sc2 = io::scenario_from_json(io::scenario_to_json(sc));
  const auto l1 = io::events_to_jsonl(injury::run(sc));
  const auto l2 = io::events_to_jsonl(injury::run(sc2));
  CHECK(l1 == l2);
}

TEST_CASE("format sniffing") {
  CHECK(io::sniff_kind(Json{{"n", 2}, {"stable_from", 0}, {"stages", Json::array()}}) ==
        "schedule");
  CHECK(io::sniff_kind(Json{{"events", Json::array()}}) == "feed");
  CHECK(io::sniff_kind(Json{{"segments", Json::object()}, {"horizon", 2}}) == "segments");
  CHECK(io::sniff_kind(Json{{"n", 2}, {"leq", Json::array()}}) == "preorder");
  CHECK(io::sniff_kind(Json{{"tapes", 1}}) == "machine");
  CHECK(io::sniff_kind(Json{{"depth", 1}, {"feeds", Json::object()}}) == "scenario");
  CHECK_THROWS(io::sniff_kind(Json{{"what", 1}}));
}

TEST_CASE("truncated json raises a parse error with position info") {
  const std::string text = R"({"n": 3, "stable_from": 0, "stages": [[[0,1,)";
  CHECK_THROWS_AS(Json::parse(text), Json::parse_error);
}

TEST_CASE("committed fixtures load and validate") {
  const auto sched =
      io::schedule_from_json(Json::parse(io::read_file(kFixtures + "/schedule_small.json")));
  CHECK(sched.n == 5);
  CHECK(relcore::validate_schedule(sched).ok());

  const auto sc =
      io::scenario_from_json(Json::parse(io::read_file(kFixtures + "/scenario_small.json")));
  CHECK(sc.depth == 5);
  // The committed scenario is exactly the in-code fixture.
  CHECK(io::scenario_to_json(sc) == io::scenario_to_json(suite::fixture_scenario()));
}

TEST_CASE("golden event log for the fixture scenario") {
  const auto sc = suite::fixture_scenario();
  const auto res = injury::run(sc);
  const std::string log = io::events_to_jsonl(res);
  const std::string golden = io::read_file(kFixtures + "/scenario_small_events.jsonl");
  CHECK(log == golden);
}

// ---------------------------------------------------------------------------
// Process-level checks of the command-line tool.

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(REDBENCH_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli validate exit codes") {
  CHECK(run_cli("validate " + kFixtures + "/schedule_small.json") == 0);
  CHECK(run_cli("validate " + kFixtures + "/scenario_small.json") == 0);
  CHECK(run_cli("validate " + kFixtures + "/schedule_merged_blocks.json") == 1);
  CHECK(run_cli("validate " + kFixtures + "/truncated.json") == 2);
  CHECK(run_cli("validate /nonexistent.json") == 2);
}

TEST_CASE("cli run pi1 reproduces the golden report") {
  const std::string out = "/tmp/redlab_pi1_report.json";
  REQUIRE(run_cli("run pi1 --schedule " + kFixtures + "/schedule_small.json --out " + out) == 0);
  CHECK(io::read_file(out) == io::read_file(kFixtures + "/schedule_small_report.json"));
}

TEST_CASE("cli run injury reproduces the golden log") {
  const std::string out = "/tmp/redlab_injury_events.jsonl";
  REQUIRE(run_cli("run injury --scenario " + kFixtures + "/scenario_small.json --audit --out " +
                  out) == 0);
  CHECK(io::read_file(out) == io::read_file(kFixtures + "/scenario_small_events.jsonl"));
}

TEST_CASE("cli run embed passes the audit on a small preorder") {
  CHECK(run_cli("run embed --preorder " + kFixtures + "/preorder_chain4.json") == 0);
}
