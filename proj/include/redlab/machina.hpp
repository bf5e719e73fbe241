#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace redlab::machina {

// Deterministic multitape machines over the alphabet {0, 1, blank}.
//
// Conventions, fixed project-wide:
//  - tapes are two-way infinite; '_' is the blank symbol; moves are L/S/R;
//  - the input is written on the LAST tape starting at cell 0, all heads
//    start at cell 0;
//  - the output is the content of tape 0 from cell 0 up to the first blank
//    (for single-tape machines input and output share the tape);
//  - numeric values are unary: the value of a run is the number of 1s in the
//    output;
//  - a machine halts on reaching an accept state or a missing transition;
//  - binary functions on naturals take the input 1^x 0 1^n.
//
// Oracle machines designate a query tape and three states: entering
// query_state with p consecutive 1s at cells 0..p-1 of the query tape moves
// to yes_state or no_state according to oracle bit p (one step). A query at a
// position beyond the supplied oracle prefix makes the run diverge.

constexpr char kBlank = '_';

struct Transition {
  int next = 0;
  std::string write;  // one symbol per tape
  std::string move;   // 'L', 'S' or 'R' per tape

  bool operator==(const Transition&) const = default;
};

struct Machine {
  int tapes = 1;
  std::vector<std::string> state_names;
  int start = 0;
  std::set<int> accept;
  std::map<std::pair<int, std::string>, Transition> delta;

  // Oracle extension; -1 when absent.
  int query_state = -1, yes_state = -1, no_state = -1, query_tape = -1;

  int add_state(const std::string& name);           // returns id, reuses existing names
  int state_id(const std::string& name) const;      // throws if unknown
  void add_rule(int state, const std::string& read, int next, const std::string& write,
                const std::string& move);
  bool has_oracle() const { return query_state >= 0; }
  std::string check() const;  // empty if well-formed, else a diagnostic
};

enum class Halt { Halted, Timeout, OracleOut };

struct RunResult {
  Halt halt = Halt::Timeout;
  long long steps = 0;
  std::string output;   // tape 0 from cell 0 to the first blank
  long long use = 0;    // oracle runs: 1 + largest queried position
  int final_state = 0;
};

long long output_value(const RunResult& r);  // number of 1s in the output

// Oracle access used by runs: bit(p) for p < length.
struct OracleView {
  long long length = 0;
  std::function<int(long long)> bit;

  static OracleView of(const std::vector<std::uint8_t>& bits);
};

RunResult run(const Machine& m, const std::string& input, long long budget);
RunResult run_with_oracle(const Machine& m, const std::string& input,
                          const std::vector<std::uint8_t>& oracle, long long budget);
RunResult run_with_oracle(const Machine& m, const std::string& input, const OracleView& oracle,
                          long long budget);

// Thrown when a supposedly total machine exceeds the configured hard cap.
struct StepCapExceeded : std::runtime_error {
  explicit StepCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// h(n): exact number of steps of g on input 1^n 0 1^n. This is the project's
// time-constructible bound: computing it IS running g.
long long step_count(const Machine& g, long long n, long long cap);

// The padding 1^y 0 1^{h(y)}.
std::string pad_input(const Machine& g, long long y, long long cap);

std::string unary(long long n);                    // 1^n
std::string unary_pair(long long x, long long n);  // 1^x 0 1^n

// G(a,b): checks a = 1^x 0 1^{h(x)} and b = 1^n 0 1^{h(n)} by running g(x,x)
// resp. g(n,n) cut off at the claimed pad length, then evaluates g(x,n);
// anything malformed gives 0. steps is this evaluator's own accounting:
// parse cost |a|+|b| plus all simulation steps spent.
struct EvalResult {
  long long value = 0;
  long long steps = 0;
  bool well_formed = false;
};

EvalResult eval_padded(const Machine& g, const std::string& a, const std::string& b,
                       long long cap);

// A machine with a step budget c*h(|input|) + c; runs cut off by the clock
// output 0 by convention.
struct ClockedMachine {
  enum class Bound { Linear, Quadratic };
  Machine base;
  long long c = 1;
  Bound bound = Bound::Quadratic;

  long long budget(long long input_len) const;
};

RunResult run_clocked(const ClockedMachine& m, const std::string& input);
long long clocked_value(const ClockedMachine& m, const std::string& input);

// Compiles the string w into a machine computing v -> G(w, v) for the given
// g: a product construction embedding a fuel-metered verification copy and an
// output-mirrored computation copy of g. The map w -> machine is injective (w
// is carried in a chain of unreachable tag states) and machines for w with
// equal G-rows are extensionally equal.
ClockedMachine curry_machine(const Machine& g, const std::string& w, long long cap);

}  // namespace redlab::machina
