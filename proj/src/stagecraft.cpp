#include "redlab/stagecraft.hpp"

#include <algorithm>
#include <stdexcept>

#include "redlab/pairing.hpp"

namespace redlab::stagecraft {

std::string EnumFeed::check() const {
  std::set<long long> seen;
  long long last = 0;
  for (const auto& [elem, stage] : events) {
    if (stage < last) return "stages decrease in event order";
    last = stage;
    if (elem < 0) return "negative element";
    if (stage < 0 || stage > horizon) return "stage outside horizon";
    if (!seen.insert(elem).second)
      return "element " + std::to_string(elem) + " enumerated twice";
  }
  return {};
}

bool EnumFeed::changed_at(long long stage) const {
  for (const auto& [elem, s] : events) {
    if (s == stage) return true;
    if (s > stage) break;
  }
  return false;
}

std::set<long long> EnumFeed::members_by(long long stage) const {
  std::set<long long> out;
  for (const auto& [elem, s] : events)
    if (s <= stage) out.insert(elem);
  return out;
}

bool race_member(const EnumFeed& s_feed, const EnumFeed& t_feed, long long length) {
  for (long long t = length; t > 0; --t) {
    if (s_feed.changed_at(t)) return true;
    if (t_feed.changed_at(t)) return false;
  }
  return true;  // t = 0
}

bool race_member(const EnumFeed& s_feed, const EnumFeed& t_feed, const std::string& w) {
  return race_member(s_feed, t_feed, static_cast<long long>(w.size()));
}

std::vector<long long> supersparse_support(const machina::Machine& h_machine, int count,
                                           long long cap) {
  std::vector<long long> f{0};
  long long prev_h = -1;
  for (int k = 1; k <= count; ++k) {
    const long long arg = f.back();
    const long long h = machina::step_count(h_machine, arg, cap);
    if (h < arg + 1)
      throw std::invalid_argument("supersparse_support: h(" + std::to_string(arg) +
                                  ") < " + std::to_string(arg) + "+1, bound not increasing");
    (void)prev_h;
    prev_h = h;
    f.push_back(h);
  }
  return f;
}

bool supersparse_member(const machina::Machine& h_machine,
                        const std::vector<machina::ClockedMachine>& adversaries,
                        const std::string& w, long long cap) {
  for (char c : w)
    if (c != '0') throw std::invalid_argument("supersparse_member: input not over {0}*");
  const long long len = static_cast<long long>(w.size());
  // Find k with f(k) = |w|, computing the support lazily.
  long long fk = 0;
  long long k = 0;
  while (fk < len) {
    const long long h = machina::step_count(h_machine, fk, cap);
    if (h < fk + 1)
      throw std::invalid_argument("supersparse_member: bound not increasing");
    fk = h;
    ++k;
  }
  if (fk != len) return false;
  if (adversaries.empty()) return true;
  const auto& adv = adversaries[static_cast<size_t>(k % static_cast<long long>(adversaries.size()))];
  return machina::clocked_value(adv, w) == 0;  // disagree with the adversary
}

std::string SegmentFeed::check() const {
  for (const auto& [k, ls] : lengths) {
    if (k < 0) return "negative column index";
    for (size_t i = 0; i + 1 < ls.size(); ++i)
      if (ls[i + 1] < ls[i]) return "column " + std::to_string(k) + " decreases";
    if (static_cast<long long>(ls.size()) != horizon + 1)
      return "column " + std::to_string(k) + " has wrong stage count";
  }
  return {};
}

long long SegmentFeed::at(long long k, long long s) const {
  auto it = lengths.find(k);
  if (it == lengths.end() || it->second.empty()) return 0;
  const auto& ls = it->second;
  const size_t i = static_cast<size_t>(std::min<long long>(s, static_cast<long long>(ls.size()) - 1));
  return ls[i];
}

long long split_g(const SegmentFeed& p, long long k, long long s) {
  for (long long t = s; t > 0; --t)
    if (p.at(k, t - 1) != p.at(k, t)) return t;
  return 0;
}

std::set<long long> Splitting::e_members() const {
  std::set<long long> out;
  for (const auto& [e, s] : e_part) out.insert(e);
  return out;
}

std::set<long long> Splitting::f_members() const {
  std::set<long long> out;
  for (const auto& [e, s] : f_part) out.insert(e);
  return out;
}

Splitting run_splitting(const EnumFeed& a, const SegmentFeed& p) {
  Splitting out;
  for (const auto& [elem, s] : a.events) {
    if (s <= 0) {
      out.e_part.push_back({elem, s});  // only stages s > 0 are examined
      continue;
    }
    long long chosen = -1;
    for (long long k = 0; k <= s; ++k)
      if (elem < split_g(p, k, s)) {
        chosen = k;
        break;
      }
    if (chosen >= 0 && chosen % 2 == 0)
      out.f_part.push_back({elem, s});
    else
      out.e_part.push_back({elem, s});
  }
  return out;
}

WindowReport window_compare(const EnumFeed& wi, const EnumFeed& wj, WindowKind kind,
                            long long horizon) {
  WindowReport rep;
  rep.kind = kind;
  rep.horizon = horizon;
  const auto a = wi.members_by(horizon), b = wj.members_by(horizon);
  for (long long x : a)
    if (!b.count(x)) rep.diff.push_back(x);
  for (long long x : b)
    if (!a.count(x)) rep.diff.push_back(x);
  std::sort(rep.diff.begin(), rep.diff.end());
  rep.diff_size = static_cast<long long>(rep.diff.size());

  switch (kind) {
    case WindowKind::SymmetricDiffSize:
      break;
    case WindowKind::ColumnsDiffering: {
      std::set<long long> cols;
      for (long long x : rep.diff) cols.insert(static_cast<long long>(
          cantor_unpair(static_cast<std::uint64_t>(x)).first));
      rep.differing_columns.assign(cols.begin(), cols.end());
      break;
    }
    case WindowKind::ReciprocalSum:
      for (long long x : rep.diff)
        if (x >= 1) rep.partial_sum += Rat(1, BigInt(x));
      break;
    case WindowKind::ColumnwiseDiff:
      for (long long x : rep.diff)
        rep.per_column_diff[static_cast<long long>(
            cantor_unpair(static_cast<std::uint64_t>(x)).first)]++;
      break;
  }
  return rep;
}

}  // namespace redlab::stagecraft
