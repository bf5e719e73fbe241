#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redlab/machina.hpp"
#include "redlab/rational.hpp"

namespace redlab::stagecraft {

// A stagewise enumeration: events (element, stage) with nondecreasing stages
// and no element enumerated twice.
struct EnumFeed {
  std::vector<std::pair<long long, long long>> events;
  long long horizon = 0;

  std::string check() const;  // empty when well-formed
  bool changed_at(long long stage) const;
  std::set<long long> members_by(long long stage) const;
  std::set<long long> members() const { return members_by(horizon); }
};

// The length language raced between two feeds: a string of length n is a
// member iff the latest stage t <= n (t > 0) at which either feed changed is
// an s_feed change, or no stage qualifies at all. Membership depends only on
// the length; s_feed wins ties.
bool race_member(const EnumFeed& s_feed, const EnumFeed& t_feed, long long length);
bool race_member(const EnumFeed& s_feed, const EnumFeed& t_feed, const std::string& w);

// f(n) = h^(n)(0) where h is the machine's step-count bound. Strictly
// increasing provided h(m) >= m+1 (checked); throws StepCapExceeded past cap.
std::vector<long long> supersparse_support(const machina::Machine& h_machine, int count,
                                           long long cap);

// Membership of 0^|w| in the supersparse diagonal set: support restricted to
// lengths f(k), flipping adversary k mod (#adversaries) on 0^{f(k)}.
bool supersparse_member(const machina::Machine& h_machine,
                        const std::vector<machina::ClockedMachine>& adversaries,
                        const std::string& w, long long cap);

// Monotone initial-segment lengths: column k, stages 0..horizon.
struct SegmentFeed {
  std::map<long long, std::vector<long long>> lengths;  // k -> lengths by stage
  long long horizon = 0;

  std::string check() const;
  long long at(long long k, long long s) const;  // 0 when k absent; clamped in s
};

// Greatest t <= s with t = 0 or lengths(k,t-1) != lengths(k,t).
long long split_g(const SegmentFeed& p, long long k, long long s);

struct Splitting {
  std::vector<std::pair<long long, long long>> e_part, f_part;  // (element, stage)

  std::set<long long> e_members() const;
  std::set<long long> f_members() const;
};

// Stage replay: an element a entering the feed at stage s > 0 goes to f_part
// when the least k <= s with a < split_g(p,k,s) is even, and to e_part when
// that k is odd or absent.
Splitting run_splitting(const EnumFeed& a, const SegmentFeed& p);

// Finite-window comparisons of two enumerations, in the style of the four
// classical Borel relations E0..E3 on columns/sets. All results are
// approximations at the horizon, never limit claims.
enum class WindowKind { SymmetricDiffSize, ColumnsDiffering, ReciprocalSum, ColumnwiseDiff };

struct WindowReport {
  WindowKind kind;
  long long horizon = 0;
  std::vector<long long> diff;                        // the symmetric difference
  long long diff_size = 0;                            // E0
  std::vector<long long> differing_columns;           // E1
  Rat partial_sum{0};                                 // E2 (indices >= 1 only)
  std::map<long long, long long> per_column_diff;     // E3
};

WindowReport window_compare(const EnumFeed& wi, const EnumFeed& wj, WindowKind kind,
                            long long horizon);

}  // namespace redlab::stagecraft
