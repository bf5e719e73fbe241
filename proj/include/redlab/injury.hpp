#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redlab/machina.hpp"
#include "redlab/pairing.hpp"

namespace redlab::injury {

// ---------------------------------------------------------------------------
// Tree structure. Nodes are outcome strings; Inf is the left outcome. Every
// node at depth d carries the label (i,j,e,p) = unquad(d), measures the feed
// of level d, and works on the pair (V_i, V_j) with functional index e.

enum class Outcome : std::uint8_t { Inf = 1, Zero = 0 };

struct NodeId {
  int len = 0;
  std::uint32_t bits = 0;  // bit m set <=> outcome Inf at depth m

  int bit(int m) const { return (bits >> m) & 1; }
  NodeId prefix(int m) const { return {m, bits & ((1u << m) - 1)}; }
  NodeId child(Outcome o) const {
    return {len + 1, o == Outcome::Inf ? bits | (1u << len) : bits};
  }
  // Injective code; also the base of the node's own number column.
  std::uint64_t code() const { return (1ull << len) | bits; }
  bool is_prefix_of(const NodeId& b) const {
    return len <= b.len && (b.bits & ((1u << len) - 1)) == bits;
  }
  bool strict_prefix_of(const NodeId& b) const { return len < b.len && is_prefix_of(b); }
  std::string text() const;  // "" for the root, else e.g. "I0I"

  auto operator<=>(const NodeId&) const = default;
};

inline Quad level_label(int level) { return cantor_unquad(static_cast<std::uint64_t>(level)); }

// The node's own number column: {pair(code, m) : m}.
inline std::uint64_t column_value(const NodeId& a, std::uint64_t m) {
  return cantor_pair(a.code(), m);
}
inline bool in_column(const NodeId& a, std::uint64_t v) {
  return cantor_unpair(v).first == a.code();
}

// A node is top when no proper prefix shares its (i,j), or the maximal such
// prefix is exited through Inf.
bool is_top(const NodeId& a);
NodeId top_of(const NodeId& a);  // maximal same-(i,j) top prefix; identity on tops

// Z^0: top prefixes exited through Zero. Z^inf: non-top prefixes exited
// through Inf.
std::vector<NodeId> zero_predecessors(const NodeId& a);
std::vector<NodeId> inf_predecessors(const NodeId& a);

// ---------------------------------------------------------------------------
// Scenario: the simulation's inputs.

struct TableEntry {
  long long min_stage = 0;  // converges from this stage on
  long long use = 0;
  int output = 0;
};

// A functional is either a finite convergence table (oracle-independent
// outputs, declared uses) or an oracle machine run with step budget s against
// the V_j characteristic prefix of length s.
struct Functional {
  bool machine_backed = false;
  std::map<long long, TableEntry> table;
  machina::Machine machine;
};

struct Scenario {
  int depth = 0;
  long long stages = 0;
  std::vector<std::vector<long long>> feeds;  // feeds[level][s], s = 0..stages
  std::vector<Functional> functionals;        // indexed by e; absent e never converges
  std::uint64_t seed = 0;                     // generation provenance only

  std::string check() const;  // empty when well-formed
};

// ---------------------------------------------------------------------------
// Run results.

enum class EventType : std::uint8_t {
  Visit,          // a = outcome (1 Inf), b = feed size
  Init,           // a = reason, b = initiator code
  KDefine,        // a = k value
  MarkerDefine,   // a = index, b = value
  MarkerUndefine, // a = index, b = old value (reason correction/lift/init)
  Enumerate,      // a = V index, b = element
  Diagonalize,    // a = witness, b = use
  Correct         // a = entrant, b = old marker value
};

enum class Reason : std::uint8_t {
  None = 0,
  RightOf,    // initialization right of the visited path
  Extension,  // initialization of a diagonalizer's extensions
  SelfInit,   // case (ii) self-initialization
  Correction,
  Lift,
  Diag
};

struct Event {
  long long stage = 0;
  EventType type = EventType::Visit;
  NodeId node;
  long long a = 0, b = 0;
  Reason reason = Reason::None;
};

struct AttemptProbe {
  long long l = 0, use = 0, stage = 0;
  bool believable = false;
};

struct RunResult {
  int depth = 0;
  long long stages = 0;
  // V sets as enumeration histories, keyed by index.
  std::map<long long, std::vector<std::pair<long long, long long>>> v_sets;
  std::vector<std::vector<Outcome>> tp;  // tp[s] for s = 0..stages (tp[0] empty)
  std::vector<Event> events;
  std::vector<std::uint64_t> fresh_trace;  // value floor after each stage
  std::map<std::uint64_t, long long> diag_counts;       // node code -> attempts done
  std::map<std::uint64_t, long long> last_diag_stage;   // node code -> stage
  std::map<std::uint64_t, std::map<long long, long long>> final_markers;  // top code
  std::map<std::uint64_t, long long> final_k;                             // node code
  std::map<std::uint64_t, std::vector<AttemptProbe>> last_attempt_probes; // node code

  bool v_member(long long i, long long elem) const;
  bool v_member_by(long long i, long long elem, long long stage) const;
};

struct Options {
  // Whether self-initializations also bound the diagonalization witness; the
  // construction's wording counts only initializations by other nodes.
  bool self_init_bounds_diag = false;
};

RunResult run(const Scenario& sc, const Options& opt = {});

// ---------------------------------------------------------------------------
// Auditing and replay, both driven purely by the event log.

struct AuditReport {
  std::vector<std::string> rule1;   // marker order violations
  std::vector<std::string> rule2;   // marker moved without a same-stage V_j change below it
  std::vector<std::string> column;  // column/freshness discipline violations
  std::vector<std::string> undischarged;  // coding obligations open at the end (not failures)
  long long init_wipes = 0;
  bool clean() const { return rule1.empty() && rule2.empty() && column.empty(); }
};

AuditReport audit_markers(const RunResult& r);

// Decodes V_{i_top}(x) from the logged V_{j_top} history: find a stage after
// which V_j never changes at or below the marker of x, then read V_i there.
// "unsettled" (nullopt) when no such stage exists within the run or a coding
// obligation for x is still open at the end.
std::optional<int> replay_reduction(const RunResult& r, const NodeId& top, long long x);

// The Lemma-style threshold for believability at alpha: the largest k
// parameter of a live child of any top in Z^0(alpha).
long long believability_bound(const RunResult& r, const NodeId& alpha);

}  // namespace redlab::injury
