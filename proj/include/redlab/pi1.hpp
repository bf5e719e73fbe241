#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "redlab/pairing.hpp"
#include "redlab/relcore.hpp"

namespace redlab::pi1 {

// Row value f(x,n) of the binary function presenting a schedule's limit
// relation: descend to the least element related to x at stage max(x,n) while
// one exists below x. For any n >= stable_from the value is the minimum of
// x's limit block, so two rows agree everywhere iff their points share a
// limit block.
int row_value(const relcore::PartitionSchedule& s, int x, long long n);

// Rows 0..n-1 tabulated on columns 0..horizon (inclusive).
struct RowTable {
  int n = 0;
  long long horizon = 0;
  std::vector<std::vector<int>> rows;  // rows[x][k], k <= horizon

  int at(int x, long long k) const { return rows[x][static_cast<size_t>(k)]; }
};

RowTable build_rows(const relcore::PartitionSchedule& s, long long horizon);

// Decides the limit relation by comparing rows on columns 0..window
// (inclusive, so the window always contains the stabilization column).
// Throws std::invalid_argument if window < max(stable_from, n): below that
// bound the comparison is not guaranteed to match the limit partition.
bool decide_by_rows(const relcore::PartitionSchedule& s, int x, int y, long long window);

// --------------------------------------------------------------------------
// Universal row table over a finite family of schedules. Codes are Cantor
// pairs <i,x>; real rows are the member rows, and garbage codes get constant
// rows above every real value so they never collide:
//   i out of range        -> pair(i, Nmax+1)        (one sink per i)
//   x outside member i    -> pair(i, Nmax+2+x)      (one sink per code)
struct Family {
  std::vector<relcore::PartitionSchedule> members;

  int max_universe() const;
  // Columns 0..family_window() decide row equality for every pair of codes.
  long long family_window() const;
};

std::uint64_t universal_value(const Family& fam, std::uint64_t code, long long n);
bool universal_rows_equal(const Family& fam, std::uint64_t c0, std::uint64_t c1);

// F_n: do rows x and y agree on their first n columns? F_0 relates everything.
bool prefix_related(const RowTable& t, long long n, int x, int y);

// --------------------------------------------------------------------------
// Limit approximation f(x,y,t) in {0,1} on the box [0,n)^2 x [0,stages):
// x ~ y is meant to hold iff f(x,y,t) = 1 for every t.
struct ApproxTable {
  int n = 0;
  long long stages = 0;
  std::vector<std::uint8_t> bits;

  static ApproxTable constant_one(int n, long long stages);
  bool in_box(std::uint64_t x, std::uint64_t y, long long t) const;
  int at(std::uint64_t x, std::uint64_t y, long long t) const;
  void set(std::uint64_t x, std::uint64_t y, long long t, int v);
};

// The diagonal gadget for column e. phi maps s to the supplied value of the
// candidate reduction at <e,s>. Searches the least t <= max_stage with
// phi(0)=x, phi(1)=y, phi(t+2)=z all present and f(x,y,t)=0, then the least v
// with f(x,z,v)=0 or f(y,z,v)=0, and relates <e,0> resp. <e,1> to <e,t+2>.
// Absent witnesses (including out-of-box queries) produce the empty result.
struct DiagonalResult {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;  // at most one
  long long t = -1;                                             // witness stage, -1 if none
  long long v = -1;
  bool first_bullet = false;  // true when f(x,z,v)=0 chose the pair
};

DiagonalResult diagonal_pairs(const ApproxTable& f,
                              const std::map<std::uint64_t, std::uint64_t>& phi,
                              std::uint64_t e, long long max_stage);

}  // namespace redlab::pi1

// Convenience wrapper: tabulate a candidate's values phi(s) = m(<e,s>) for
// s <= max_stage + 2 by running the machine with a step budget; divergent
// inputs are simply absent. Lives in pi1_machina.cpp to keep the gadget
// itself machine-free.
namespace redlab::machina {
struct Machine;
}
namespace redlab::pi1 {
std::map<std::uint64_t, std::uint64_t> tabulate_candidate(const machina::Machine& m,
                                                          std::uint64_t e, long long max_stage,
                                                          long long budget);
}  // namespace redlab::pi1
