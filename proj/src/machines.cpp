#include "redlab/machines.hpp"

namespace redlab::machines {

using machina::ClockedMachine;
using machina::kBlank;
using machina::Machine;

namespace {
const std::string B1{kBlank};
}

Machine unary_sum() {
  Machine m;
  m.tapes = 2;  // [out, in]
  const int run = m.add_state("run");
  const int halt = m.add_state("halt");
  m.start = run;
  m.accept.insert(halt);
  m.add_rule(run, "_1", run, "11", "RR");  // copy 1s
  m.add_rule(run, "_0", run, "__", "SR");  // skip the separator
  m.add_rule(run, "__", halt, "__", "SS");
  return m;
}

Machine unary_parity_gate() {
  Machine m;
  m.tapes = 2;  // [out, in]
  const int even = m.add_state("even");
  const int odd = m.add_state("odd");
  const int skip = m.add_state("skip");
  const int copy = m.add_state("copy");
  const int halt = m.add_state("halt");
  m.start = even;
  m.accept.insert(halt);
  m.add_rule(even, "_1", odd, "_1", "SR");
  m.add_rule(odd, "_1", even, "_1", "SR");
  m.add_rule(even, "_0", skip, "__", "SR");
  m.add_rule(odd, "_0", copy, "__", "SR");
  m.add_rule(even, "__", halt, "__", "SS");  // x = n-free degenerate input
  m.add_rule(odd, "__", halt, "__", "SS");
  m.add_rule(skip, "_1", skip, "_1", "SR");
  m.add_rule(skip, "__", halt, "__", "SS");
  m.add_rule(copy, "_1", copy, "11", "RR");
  m.add_rule(copy, "__", halt, "1_", "RS");  // the trailing +1
  return m;
}

Machine echo() {
  Machine m;
  m.tapes = 1;
  const int halt = m.add_state("halt");
  m.start = halt;
  m.accept.insert(halt);
  return m;
}

Machine forever() {
  Machine m;
  m.tapes = 1;
  const int run = m.add_state("run");
  m.start = run;
  for (const std::string s : {std::string("0"), std::string("1"), B1})
    m.add_rule(run, s, run, s, "R");
  return m;
}

Machine palindrome() {
  Machine m;
  m.tapes = 3;  // [out, work, in]
  const int copy = m.add_state("copy");
  const int back1 = m.add_state("back1");
  const int back2 = m.add_state("back2");
  const int cmp = m.add_state("cmp");
  const int yes = m.add_state("yes");
  const int halt = m.add_state("halt");
  m.start = copy;
  m.accept.insert(halt);
  for (const char c : {'0', '1'}) {
    m.add_rule(copy, std::string("__") + c, copy, std::string("_") + c + c, "SRR");
  }
  m.add_rule(copy, "___", back1, "___", "SLL");
  for (const char c : {'0', '1'}) {
    for (const char d : {'0', '1', kBlank}) {
      // Rewind the input head to its first cell; the work head stays on the
      // last written symbol.
      m.add_rule(back1, std::string("_") + d + c, back2, std::string("_") + d + c, "SSL");
    }
  }
  m.add_rule(back1, "___", cmp, "___", "SSR");  // empty input
  for (const char d : {'0', '1', kBlank}) {
    for (const char c : {'0', '1'})
      m.add_rule(back2, std::string("_") + d + c, back2, std::string("_") + d + c, "SSL");
    m.add_rule(back2, std::string("_") + d + '_', cmp, std::string("_") + d + '_', "SSR");
  }
  for (const char c : {'0', '1'}) {
    // Matching symbols advance both heads; a mismatch halts with empty output.
    m.add_rule(cmp, std::string("_") + c + c, cmp, std::string("_") + c + c, "SLR");
  }
  m.add_rule(cmp, "___", yes, "___", "SSS");
  m.add_rule(yes, "___", halt, "1__", "SSS");
  return m;
}

Machine oracle_bit(int p) {
  Machine m;
  m.tapes = 3;  // [out, query, in]
  int prev = m.add_state("w0");
  m.start = prev;
  for (int i = 0; i < p; ++i) {
    const int next = m.add_state("w" + std::to_string(i + 1));
    m.add_rule(prev, "___", next, "_1_", "SRS");
    prev = next;
  }
  const int ask = m.add_state("ask");
  const int yes = m.add_state("yes");
  const int no = m.add_state("no");
  const int halt = m.add_state("halt");
  m.add_rule(prev, "___", ask, "___", "SSS");
  m.add_rule(yes, "___", halt, "1__", "SSS");
  m.accept.insert(halt);
  m.accept.insert(no);
  m.query_state = ask;
  m.yes_state = yes;
  m.no_state = no;
  m.query_tape = 1;
  return m;
}

Machine oracle_ignore() {
  Machine m;
  m.tapes = 3;
  const int put = m.add_state("put");
  const int halt = m.add_state("halt");
  m.start = put;
  m.accept.insert(halt);
  m.add_rule(put, "___", halt, "1__", "SSS");
  m.query_state = m.add_state("ask");
  m.yes_state = halt;
  m.no_state = halt;
  m.query_tape = 1;
  return m;
}

Machine oracle_identity() {
  Machine m;
  m.tapes = 3;  // [out, query, in]
  const int copy = m.add_state("copy");
  const int ask = m.add_state("ask");
  const int yes = m.add_state("yes");
  const int no = m.add_state("no");
  const int halt = m.add_state("halt");
  m.start = copy;
  m.accept.insert(halt);
  m.accept.insert(no);
  m.add_rule(copy, "__1", copy, "_11", "SRR");  // query position = input length
  m.add_rule(copy, "___", ask, "___", "SSS");
  m.add_rule(yes, "___", halt, "1__", "SSS");
  m.query_state = ask;
  m.yes_state = yes;
  m.no_state = no;
  m.query_tape = 1;
  return m;
}

ClockedMachine reject_all() {
  ClockedMachine cm;
  cm.base.tapes = 2;
  const int halt = cm.base.add_state("halt");
  cm.base.start = halt;
  cm.base.accept.insert(halt);
  cm.c = 2;
  cm.bound = ClockedMachine::Bound::Linear;
  return cm;
}

ClockedMachine accept_all() {
  ClockedMachine cm;
  cm.base.tapes = 2;
  const int put = cm.base.add_state("put");
  const int halt = cm.base.add_state("halt");
  cm.base.start = put;
  cm.base.accept.insert(halt);
  for (const std::string s : {"_0", "_1", "__"}) cm.base.add_rule(put, s, halt, "1" + s.substr(1), "RS");
  cm.c = 2;
  cm.bound = ClockedMachine::Bound::Linear;
  return cm;
}

ClockedMachine accept_even_length() {
  ClockedMachine cm;
  Machine& m = cm.base;
  m.tapes = 2;
  const int even = m.add_state("even");
  const int odd = m.add_state("odd");
  const int halt = m.add_state("halt");
  m.start = even;
  m.accept.insert(halt);
  for (const char c : {'0', '1'}) {
    m.add_rule(even, std::string("_") + c, odd, std::string("_") + c, "SR");
    m.add_rule(odd, std::string("_") + c, even, std::string("_") + c, "SR");
  }
  m.add_rule(even, "__", halt, "1_", "RS");
  m.add_rule(odd, "__", halt, "__", "SS");
  cm.c = 3;
  cm.bound = ClockedMachine::Bound::Linear;
  return cm;
}

}  // namespace redlab::machines
