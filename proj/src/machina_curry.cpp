#include <stdexcept>
#include <string>
#include <vector>

#include "redlab/machina.hpp"

namespace redlab::machina {

// curry_machine(g, w) compiles a genuine transition table for v -> G(w, v).
//
// Tape layout of the compiled machine M (g has kg tapes):
//   0            out      (mirrors g's output tape during the final run)
//   1 .. kg      gver     (verification copy of g's tapes; input tape = kg)
//   kg+1 .. 2kg  gcomp    (computation copy; output tape = kg+1, input = 2kg)
//   2kg+1        scratch  (holds 1^n for re-use)
//   2kg+2        fuel     (holds 1^z; one cell consumed per verified g-step)
//   2kg+3        in       (v, the machine's own input)
//
// Phases: copy v's blocks out (writing g's verification input 1^n 0 1^n and
// the fuel), run the fuel-metered gver copy of g — the input is well-formed
// exactly when g halts with the fuel exhausted on the same step — then write
// 1^x 0 1^n on gcomp and run the gcomp copy of g with every write to its
// output tape mirrored onto tape 0. Any malformedness jumps straight to the
// halting state with a blank output, i.e. value 0.
//
// w itself is carried in a chain of unreachable tag states, so w -> machine
// is injective even across strings the compiler rejects.

namespace {

constexpr char kSyms[3] = {'0', '1', kBlank};

struct Builder {
  Machine m;
  int tapes;

  explicit Builder(int t) : tapes(t) { m.tapes = t; }

  std::string blank_vec() const { return std::string(static_cast<size_t>(tapes), kBlank); }
  std::string stay_vec() const { return std::string(static_cast<size_t>(tapes), 'S'); }

  // One rule from a mostly-blank template: reads[i], writes[i], moves[i] given
  // as (tape, value) overrides.
  void rule(int state, std::vector<std::pair<int, char>> reads, int next,
            std::vector<std::pair<int, char>> writes, std::vector<std::pair<int, char>> moves) {
    std::string rd = blank_vec(), wr = blank_vec(), mv = stay_vec();
    for (auto [t, c] : reads) rd[t] = c;
    // Writes default to rewriting what was read, so untouched tapes keep content.
    wr = rd;
    for (auto [t, c] : writes) wr[t] = c;
    for (auto [t, c] : moves) mv[t] = c;
    m.add_rule(state, rd, next, wr, mv);
  }
};

void append_tag_chain(Machine& m, const std::string& w) {
  // Unreachable states whose linking pattern encodes w bit by bit.
  int prev = m.add_state("tag0");
  const std::string blank(static_cast<size_t>(m.tapes), kBlank);
  const std::string stay(static_cast<size_t>(m.tapes), 'S');
  for (size_t i = 0; i < w.size(); ++i) {
    const int next = m.add_state("tag" + std::to_string(i + 1));
    m.add_rule(prev, blank, w[i] == '1' ? next : prev, blank, stay);
    prev = next;
  }
}

// All symbol vectors over {0,1,blank}^k.
std::vector<std::string> all_vectors(int k) {
  std::vector<std::string> out{""};
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : kSyms) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

ClockedMachine curry_machine(const Machine& g, const std::string& w, long long cap) {
  if (g.has_oracle()) throw std::invalid_argument("curry_machine: g must be oracle-free");
  const auto bad = g.check();
  if (!bad.empty()) throw std::invalid_argument("curry_machine: g ill-formed: " + bad);

  // Compile-time check of w = 1^x 0 1^{h(x)}. On failure the curried machine
  // is the constant-0 machine (value 0 on every input).
  long long x = -1, zw = -1;
  {
    const auto zero = w.find('0');
    bool ok = zero != std::string::npos;
    for (size_t i = 0; ok && i < w.size(); ++i)
      if (i != zero && w[i] != '1') ok = false;
    if (ok) {
      const long long cx = static_cast<long long>(zero);
      const long long cz = static_cast<long long>(w.size() - zero - 1);
      if (cz <= cap) {
        const RunResult r = run(g, unary_pair(cx, cx), cz);
        if (r.halt == Halt::Halted && r.steps == cz) {
          x = cx;
          zw = cz;
        }
      }
    }
  }

  if (x < 0) {
    // Constant-0 machine: a separate output tape stays blank forever.
    ClockedMachine cm;
    cm.base.tapes = 2;
    const int done = cm.base.add_state("done");
    cm.base.start = done;
    cm.base.accept.insert(done);
    append_tag_chain(cm.base, w);
    cm.c = 4;
    cm.bound = ClockedMachine::Bound::Quadratic;
    return cm;
  }

  const int kg = g.tapes;
  const int t_out = 0;
  const int t_gver = 1;               // g tape j -> t_gver + j
  const int t_gcomp = kg + 1;         // g tape j -> t_gcomp + j
  const int t_scr = 2 * kg + 1;
  const int t_fuel = 2 * kg + 2;
  const int t_in = 2 * kg + 3;
  const int gver_in = t_gver + kg - 1;
  const int gcomp_in = t_gcomp + kg - 1;
  const int gcomp_out = t_gcomp;
  const bool mirror_gcin = (gcomp_in == gcomp_out);  // single-tape g

  Builder b(2 * kg + 4);
  Machine& m = b.m;

  const int s_scan = m.add_state("scan_n");
  const int s_rew_a = m.add_state("rew_scr_a");
  const int s_rew_b = m.add_state("rew_scr_b");
  const int s_cpy2_a = m.add_state("cpy_ver_a");
  const int s_cpy2_b = m.add_state("cpy_ver_b");
  const int s_rew2_a = m.add_state("rew_scr2_a");
  const int s_rew2_b = m.add_state("rew_scr2_b");
  const int s_cpyz = m.add_state("cpy_fuel");
  const int s_rewf_a = m.add_state("rew_fuel_a");
  const int s_rewf_b = m.add_state("rew_fuel_b");
  const int s_rewg_a = m.add_state("rew_gin_a");
  const int s_rewg_b = m.add_state("rew_gin_b");
  const int s_done = m.add_state("done");
  m.start = s_scan;
  m.accept.insert(s_done);

  std::vector<int> ver_state(g.state_names.size()), comp_state(g.state_names.size());
  for (size_t q = 0; q < g.state_names.size(); ++q) {
    ver_state[q] = m.add_state("ver:" + g.state_names[q]);
    comp_state[q] = m.add_state("comp:" + g.state_names[q]);
  }
  std::vector<int> chain(static_cast<size_t>(x) + 1);
  for (long long i = 0; i <= x; ++i) chain[i] = m.add_state("putx" + std::to_string(i));
  const int s_cpyn_a = m.add_state("cpy_comp_a");
  const int s_cpyn_b = m.add_state("cpy_comp_b");
  const int s_rewc_a = m.add_state("rew_gcin_a");
  const int s_rewc_b = m.add_state("rew_gcin_b");

  // --- Phase 1: scan v = 1^n 0 1^z -------------------------------------
  // n-block: copy to gver input and scratch in lockstep. The input head then
  // parks on the separator (a known symbol) through the scratch phases.
  b.rule(s_scan, {{t_in, '1'}}, s_scan, {{gver_in, '1'}, {t_scr, '1'}},
         {{t_in, 'R'}, {gver_in, 'R'}, {t_scr, 'R'}});
  b.rule(s_scan, {{t_in, '0'}}, s_rew_a, {{gver_in, '0'}}, {{gver_in, 'R'}});
  b.rule(s_scan, {}, s_done, {}, {});  // no separator: malformed

  // Rewind scratch to the blank left of its block.
  b.rule(s_rew_a, {{t_in, '0'}}, s_rew_b, {}, {{t_scr, 'L'}});
  b.rule(s_rew_b, {{t_scr, '1'}, {t_in, '0'}}, s_rew_b, {}, {{t_scr, 'L'}});
  b.rule(s_rew_b, {{t_in, '0'}}, s_cpy2_a, {}, {});

  // Second copy of the n-block onto gver input.
  b.rule(s_cpy2_a, {{t_in, '0'}}, s_cpy2_b, {}, {{t_scr, 'R'}});
  b.rule(s_cpy2_b, {{t_scr, '1'}, {t_in, '0'}}, s_cpy2_b, {{gver_in, '1'}},
         {{t_scr, 'R'}, {gver_in, 'R'}});
  b.rule(s_cpy2_b, {{t_in, '0'}}, s_rew2_a, {}, {});

  b.rule(s_rew2_a, {{t_in, '0'}}, s_rew2_b, {}, {{t_scr, 'L'}});
  b.rule(s_rew2_b, {{t_scr, '1'}, {t_in, '0'}}, s_rew2_b, {}, {{t_scr, 'L'}});
  b.rule(s_rew2_b, {{t_in, '0'}}, s_cpyz, {}, {{t_in, 'R'}});  // consume the separator

  // z-block to fuel; a second 0 in v is malformed.
  b.rule(s_cpyz, {{t_in, '1'}}, s_cpyz, {{t_fuel, '1'}}, {{t_in, 'R'}, {t_fuel, 'R'}});
  b.rule(s_cpyz, {{t_in, '0'}}, s_done, {}, {});
  b.rule(s_cpyz, {}, s_rewf_a, {}, {});

  // Fuel parks on its first cell, gver input on its first cell. Once the
  // fuel head is parked its cell shows '1' or blank, so later pre-ver states
  // enumerate both.
  b.rule(s_rewf_a, {}, s_rewf_b, {}, {{t_fuel, 'L'}});
  b.rule(s_rewf_b, {{t_fuel, '1'}}, s_rewf_b, {}, {{t_fuel, 'L'}});
  b.rule(s_rewf_b, {}, s_rewg_a, {}, {{t_fuel, 'R'}});

  for (char f : {'1', kBlank}) {
    b.rule(s_rewg_a, {{t_fuel, f}}, s_rewg_b, {}, {{gver_in, 'L'}});
    for (char c : {'0', '1'})
      b.rule(s_rewg_b, {{gver_in, c}, {t_fuel, f}}, s_rewg_b, {}, {{gver_in, 'L'}});
    b.rule(s_rewg_b, {{t_fuel, f}}, ver_state[g.start], {}, {{gver_in, 'R'}});
  }

  // --- Phase 2: fuel-metered verification copy of g ---------------------
  const auto g_vectors = all_vectors(kg);
  for (size_t q = 0; q < g.state_names.size(); ++q) {
    const bool accepting = g.accept.count(static_cast<int>(q)) > 0;
    for (const auto& sv : g_vectors) {
      std::vector<std::pair<int, char>> reads;
      for (int j = 0; j < kg; ++j) reads.push_back({t_gver + j, sv[j]});
      auto it = accepting ? g.delta.end() : g.delta.find({static_cast<int>(q), sv});
      if (it != g.delta.end()) {
        // One g-step: needs a fuel cell; running out first means g wants more
        // than z steps, i.e. the input is malformed.
        auto reads_fuel = reads;
        reads_fuel.push_back({t_fuel, '1'});
        std::vector<std::pair<int, char>> writes, moves;
        for (int j = 0; j < kg; ++j) {
          writes.push_back({t_gver + j, it->second.write[j]});
          moves.push_back({t_gver + j, it->second.move[j]});
        }
        moves.push_back({t_fuel, 'R'});
        b.rule(ver_state[q], reads_fuel, ver_state[it->second.next], writes, moves);
        b.rule(ver_state[q], reads, s_done, {}, {});  // fuel blank: too slow
      } else {
        // g halts here: exactly on fuel exhaustion means well-formed.
        auto reads_fuel = reads;
        reads_fuel.push_back({t_fuel, '1'});
        b.rule(ver_state[q], reads_fuel, s_done, {}, {});  // halted early
        b.rule(ver_state[q], reads, chain[0], {}, {});
      }
    }
  }

  // --- Phase 3: write 1^x 0 1^n on gcomp input, mirroring if it is also
  // g's output tape, then run the computation copy with its output tape
  // mirrored to tape 0.
  const auto put = [&](int state, char sym, int next) {
    // gver tapes sit at g's halt configuration: enumerate their symbols.
    for (const auto& sv : g_vectors) {
      std::vector<std::pair<int, char>> reads;
      for (int j = 0; j < kg; ++j) reads.push_back({t_gver + j, sv[j]});
      std::vector<std::pair<int, char>> writes{{gcomp_in, sym}};
      std::vector<std::pair<int, char>> moves{{gcomp_in, 'R'}};
      if (mirror_gcin) {
        writes.push_back({t_out, sym});
        moves.push_back({t_out, 'R'});
      }
      b.rule(state, reads, next, writes, moves);
    }
  };
  for (long long i = 0; i < x; ++i) put(chain[i], '1', chain[i + 1]);
  put(chain[x], '0', s_cpyn_a);

  for (const auto& sv : g_vectors) {
    std::vector<std::pair<int, char>> gv;
    for (int j = 0; j < kg; ++j) gv.push_back({t_gver + j, sv[j]});

    auto with_scr = [&](char c) {
      auto r = gv;
      r.push_back({t_scr, c});
      return r;
    };
    b.rule(s_cpyn_a, gv, s_cpyn_b, {}, {{t_scr, 'R'}});
    {
      std::vector<std::pair<int, char>> writes{{gcomp_in, '1'}};
      std::vector<std::pair<int, char>> moves{{gcomp_in, 'R'}, {t_scr, 'R'}};
      if (mirror_gcin) {
        writes.push_back({t_out, '1'});
        moves.push_back({t_out, 'R'});
      }
      b.rule(s_cpyn_b, with_scr('1'), s_cpyn_b, writes, moves);
    }
    b.rule(s_cpyn_b, gv, s_rewc_a, {}, {});

    // Rewind gcomp input to its first cell (mirror moves when shared).
    {
      std::vector<std::pair<int, char>> moves{{gcomp_in, 'L'}};
      if (mirror_gcin) moves.push_back({t_out, 'L'});
      b.rule(s_rewc_a, gv, s_rewc_b, {}, moves);
      for (char c : {'0', '1'}) {
        auto r = gv;
        r.push_back({gcomp_in, c});
        std::vector<std::pair<int, char>> reads = r;
        if (mirror_gcin) reads.push_back({t_out, c});
        b.rule(s_rewc_b, reads, s_rewc_b, {}, moves);
      }
      std::vector<std::pair<int, char>> moves_r{{gcomp_in, 'R'}};
      if (mirror_gcin) moves_r.push_back({t_out, 'R'});
      b.rule(s_rewc_b, gv, comp_state[g.start], {}, moves_r);
    }
  }

  // Computation copy: every write/move on g's output tape is applied to tape 0
  // as well, so tape 0 ends as an exact replica of g's output.
  for (size_t q = 0; q < g.state_names.size(); ++q) {
    const bool accepting = g.accept.count(static_cast<int>(q)) > 0;
    for (const auto& sv : g_vectors) {
      auto it = accepting ? g.delta.end() : g.delta.find({static_cast<int>(q), sv});
      for (const auto& hv : g_vectors) {  // gver halt symbols, unknown here
        std::vector<std::pair<int, char>> reads{{t_out, sv[0]}};
        for (int j = 0; j < kg; ++j) {
          reads.push_back({t_gver + j, hv[j]});
          reads.push_back({t_gcomp + j, sv[j]});
        }
        if (it != g.delta.end()) {
          std::vector<std::pair<int, char>> writes{{t_out, it->second.write[0]}};
          std::vector<std::pair<int, char>> moves{{t_out, it->second.move[0]}};
          for (int j = 0; j < kg; ++j) {
            writes.push_back({t_gcomp + j, it->second.write[j]});
            moves.push_back({t_gcomp + j, it->second.move[j]});
          }
          b.rule(comp_state[q], reads, comp_state[it->second.next], writes, moves);
        } else {
          b.rule(comp_state[q], reads, s_done, {}, {});
        }
      }
    }
  }

  append_tag_chain(m, w);

  const auto diag = m.check();
  if (!diag.empty()) throw std::logic_error("curry_machine: compiled machine ill-formed: " + diag);

  ClockedMachine cm;
  cm.base = std::move(m);
  cm.c = zw + 2 * x + 64;  // covers every phase of the compiled run
  cm.bound = ClockedMachine::Bound::Quadratic;
  (void)cap;
  return cm;
}

}  // namespace redlab::machina
