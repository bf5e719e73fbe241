#include "redlab/machina.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace redlab::machina {

namespace {

// Two-way infinite tape: cells at negative positions live in neg_.
struct Tape {
  std::vector<char> pos_, neg_;
  long long head = 0;

  char read() const {
    if (head >= 0)
      return head < static_cast<long long>(pos_.size()) ? pos_[head] : kBlank;
    const long long i = -head - 1;
    return i < static_cast<long long>(neg_.size()) ? neg_[i] : kBlank;
  }

  void write(char c) {
    if (head >= 0) {
      if (head >= static_cast<long long>(pos_.size())) pos_.resize(head + 1, kBlank);
      pos_[head] = c;
    } else {
      const long long i = -head - 1;
      if (i >= static_cast<long long>(neg_.size())) neg_.resize(i + 1, kBlank);
      neg_[i] = c;
    }
  }

  void move(char dir) {
    if (dir == 'L') --head;
    else if (dir == 'R') ++head;
  }
};

RunResult simulate(const Machine& m, const std::string& input, const OracleView* oracle,
                   long long budget) {
  std::vector<Tape> tapes(m.tapes);
  for (size_t i = 0; i < input.size(); ++i) {
    tapes[m.tapes - 1].head = static_cast<long long>(i);
    tapes[m.tapes - 1].write(input[i]);
  }
  tapes[m.tapes - 1].head = 0;

  RunResult res;
  int state = m.start;
  std::string syms(m.tapes, kBlank);
  // Halting is checked before the budget guard, so a machine that halts at
  // exactly `budget` steps reports Halted; only a pending further step times
  // out.
  while (true) {
    if (m.accept.count(state)) {
      res.halt = Halt::Halted;
      break;
    }
    if (m.has_oracle() && state == m.query_state) {
      if (res.steps >= budget) {
        res.halt = Halt::Timeout;
        break;
      }
      // Query position = count of consecutive 1s from cell 0 of the query tape.
      Tape probe = tapes[m.query_tape];
      probe.head = 0;
      long long p = 0;
      while (probe.read() == '1') {
        probe.move('R');
        ++p;
      }
      if (oracle == nullptr || p >= oracle->length) {
        res.halt = Halt::OracleOut;
        res.final_state = state;
        return res;
      }
      res.use = std::max(res.use, p + 1);
      state = oracle->bit(p) ? m.yes_state : m.no_state;
      ++res.steps;
      continue;
    }
    for (int i = 0; i < m.tapes; ++i) syms[i] = tapes[i].read();
    auto it = m.delta.find({state, syms});
    if (it == m.delta.end()) {
      res.halt = Halt::Halted;
      break;
    }
    if (res.steps >= budget) {
      res.halt = Halt::Timeout;
      break;
    }
    const Transition& tr = it->second;
    for (int i = 0; i < m.tapes; ++i) {
      tapes[i].write(tr.write[i]);
      tapes[i].move(tr.move[i]);
    }
    state = tr.next;
    ++res.steps;
  }
  res.final_state = state;

  Tape& out = tapes[0];
  out.head = 0;
  while (out.read() != kBlank) {
    res.output.push_back(out.read());
    out.move('R');
  }
  return res;
}

}  // namespace

int Machine::add_state(const std::string& name) {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  state_names.push_back(name);
  return static_cast<int>(state_names.size()) - 1;
}

int Machine::state_id(const std::string& name) const {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("Machine: unknown state " + name);
}

void Machine::add_rule(int state, const std::string& read, int next, const std::string& write,
                       const std::string& move) {
  if (delta.count({state, read}))
    throw std::invalid_argument("Machine: duplicate transition from state " +
                                state_names.at(state) + " on '" + read + "'");
  delta[{state, read}] = Transition{next, write, move};
}

std::string Machine::check() const {
  if (tapes < 1) return "tape count must be at least 1";
  if (start < 0 || start >= static_cast<int>(state_names.size())) return "bad start state";
  for (const auto& [key, tr] : delta) {
    const auto& [state, read] = key;
    if (state < 0 || state >= static_cast<int>(state_names.size())) return "bad source state";
    if (tr.next < 0 || tr.next >= static_cast<int>(state_names.size())) return "bad target state";
    if (static_cast<int>(read.size()) != tapes || static_cast<int>(tr.write.size()) != tapes ||
        static_cast<int>(tr.move.size()) != tapes)
      return "transition arity does not match tape count";
    for (char c : read)
      if (c != '0' && c != '1' && c != kBlank) return "bad read symbol";
    for (char c : tr.write)
      if (c != '0' && c != '1' && c != kBlank) return "bad write symbol";
    for (char c : tr.move)
      if (c != 'L' && c != 'S' && c != 'R') return "bad move";
  }
  if (has_oracle()) {
    if (query_tape < 0 || query_tape >= tapes) return "bad query tape";
    for (int s : {query_state, yes_state, no_state})
      if (s < 0 || s >= static_cast<int>(state_names.size())) return "bad oracle state";
  }
  return {};
}

long long output_value(const RunResult& r) {
  return std::count(r.output.begin(), r.output.end(), '1');
}

OracleView OracleView::of(const std::vector<std::uint8_t>& bits) {
  OracleView v;
  v.length = static_cast<long long>(bits.size());
  v.bit = [&bits](long long p) { return bits[static_cast<size_t>(p)] ? 1 : 0; };
  return v;
}

RunResult run(const Machine& m, const std::string& input, long long budget) {
  return simulate(m, input, nullptr, budget);
}

RunResult run_with_oracle(const Machine& m, const std::string& input,
                          const std::vector<std::uint8_t>& oracle, long long budget) {
  const OracleView v = OracleView::of(oracle);
  return simulate(m, input, &v, budget);
}

RunResult run_with_oracle(const Machine& m, const std::string& input, const OracleView& oracle,
                          long long budget) {
  return simulate(m, input, &oracle, budget);
}

long long step_count(const Machine& g, long long n, long long cap) {
  const RunResult r = run(g, unary_pair(n, n), cap);
  if (r.halt != Halt::Halted)
    throw StepCapExceeded("step_count: machine exceeded cap " + std::to_string(cap) +
                          " on n = " + std::to_string(n));
  return r.steps;
}

std::string unary(long long n) { return std::string(static_cast<size_t>(n), '1'); }

std::string unary_pair(long long x, long long n) { return unary(x) + '0' + unary(n); }

std::string pad_input(const Machine& g, long long y, long long cap) {
  return unary(y) + '0' + unary(step_count(g, y, cap));
}

namespace {

// Splits s as 1^x 0 1^z (exactly one 0); nullopt when malformed.
struct PadShape {
  long long x = 0, z = 0;
};

std::optional<PadShape> parse_pad(const std::string& s) {
  const auto zero = s.find('0');
  if (zero == std::string::npos) return std::nullopt;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i == zero) continue;
    if (s[i] != '1') return std::nullopt;
  }
  return PadShape{static_cast<long long>(zero), static_cast<long long>(s.size() - zero - 1)};
}

}  // namespace

EvalResult eval_padded(const Machine& g, const std::string& a, const std::string& b,
                       long long cap) {
  EvalResult res;
  res.steps = static_cast<long long>(a.size() + b.size());  // parse cost
  const auto pa = parse_pad(a), pb = parse_pad(b);
  if (!pa || !pb) return res;

  // Verify the claimed step counts by running g(x,x) cut off at the claimed
  // pad length: well-formed iff g halts at exactly that step.
  for (const auto& shape : {*pa, *pb}) {
    const RunResult r = run(g, unary_pair(shape.x, shape.x), shape.z);
    res.steps += r.steps;
    if (r.halt != Halt::Halted || r.steps != shape.z) return res;
  }
  const RunResult r = run(g, unary_pair(pa->x, pb->x), cap);
  if (r.halt != Halt::Halted)
    throw StepCapExceeded("eval_padded: g exceeded cap on the final evaluation");
  res.steps += r.steps;
  res.value = output_value(r);
  res.well_formed = true;
  return res;
}

long long ClockedMachine::budget(long long n) const {
  switch (bound) {
    case Bound::Linear: return c * n + c;
    case Bound::Quadratic: return c * n * n + c;
  }
  return c;
}

RunResult run_clocked(const ClockedMachine& m, const std::string& input) {
  return run(m.base, input, m.budget(static_cast<long long>(input.size())));
}

long long clocked_value(const ClockedMachine& m, const std::string& input) {
  const RunResult r = run_clocked(m, input);
  return r.halt == Halt::Halted ? output_value(r) : 0;
}

}  // namespace redlab::machina
