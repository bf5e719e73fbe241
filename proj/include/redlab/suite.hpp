#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redlab/injury.hpp"

// The workbench's acceptance suite: every check the project promises, runnable
// from the CLI (`redbench suite`) and from the test harness. A fixed seed
// fully determines every generated instance.
namespace redlab::suite {

enum class Scale { Smoke, Full };

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  long long ms = 0;
  std::string detail;
};

std::vector<CriterionResult> run_all(Scale scale, std::uint64_t seed);

// One line per criterion: "[PASS] C1 name (detail) 123ms".
std::string format_lines(const std::vector<CriterionResult>& results);

// The committed small scenario driving golden-log checks; also written to
// tests/fixtures/scenario_small.json.
injury::Scenario fixture_scenario();

// FNV-1a of a string; used to pin the fixture event log inside the suite.
std::uint64_t fnv1a(const std::string& s);

}  // namespace redlab::suite
