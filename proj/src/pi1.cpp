#include "redlab/pi1.hpp"

#include <algorithm>
#include <stdexcept>

namespace redlab::pi1 {

int row_value(const relcore::PartitionSchedule& s, int x, long long n) {
  if (x < 0 || x >= s.n) throw std::out_of_range("row_value: x outside universe");
  int cur = x;
  while (true) {
    const long long t = std::max<long long>(cur, n);
    const int tc = static_cast<int>(std::min<long long>(t, s.last_stage()));
    // Least element related to cur at stage t; members below cur relate via a
    // shared block only (everything <= cur is <= t).
    const int block = s.block_at(tc, cur);
    int least = cur;
    for (int r = 0; r < cur; ++r)
      if (s.block_at(tc, r) == block) {
        least = r;
        break;
      }
    if (least == cur) return cur;
    cur = least;
  }
}

RowTable build_rows(const relcore::PartitionSchedule& s, long long horizon) {
  RowTable t;
  t.n = s.n;
  t.horizon = horizon;
  t.rows.assign(s.n, std::vector<int>(static_cast<size_t>(horizon) + 1, 0));
  for (int x = 0; x < s.n; ++x)
    for (long long k = 0; k <= horizon; ++k) t.rows[x][static_cast<size_t>(k)] = row_value(s, x, k);
  return t;
}

bool decide_by_rows(const relcore::PartitionSchedule& s, int x, int y, long long window) {
  const long long bound = std::max<long long>(s.stable_from, s.n);
  if (window < bound)
    throw std::invalid_argument("decide_by_rows: window below max(stable_from, n)");
  for (long long k = 0; k <= window; ++k)
    if (row_value(s, x, k) != row_value(s, y, k)) return false;
  return true;
}

int Family::max_universe() const {
  int m = 0;
  for (const auto& s : members) m = std::max(m, s.n);
  return m;
}

long long Family::family_window() const {
  long long w = 0;
  for (const auto& s : members) w = std::max<long long>(w, std::max(s.stable_from, s.n));
  return w;
}

std::uint64_t universal_value(const Family& fam, std::uint64_t code, long long n) {
  const auto [i, x] = cantor_unpair(code);
  const std::uint64_t nmax = static_cast<std::uint64_t>(fam.max_universe());
  if (i >= fam.members.size()) return cantor_pair(i, nmax + 1);
  const auto& sched = fam.members[i];
  if (x >= static_cast<std::uint64_t>(sched.n)) return cantor_pair(i, nmax + 2 + x);
  return static_cast<std::uint64_t>(row_value(sched, static_cast<int>(x), n));
}

bool universal_rows_equal(const Family& fam, std::uint64_t c0, std::uint64_t c1) {
  const long long w = fam.family_window();
  for (long long k = 0; k <= w; ++k)
    if (universal_value(fam, c0, k) != universal_value(fam, c1, k)) return false;
  return true;
}

bool prefix_related(const RowTable& t, long long n, int x, int y) {
  if (n > t.horizon + 1) throw std::out_of_range("prefix_related: n beyond table horizon");
  for (long long k = 0; k < n; ++k)
    if (t.at(x, k) != t.at(y, k)) return false;
  return true;
}

ApproxTable ApproxTable::constant_one(int n, long long stages) {
  ApproxTable t;
  t.n = n;
  t.stages = stages;
  t.bits.assign(static_cast<size_t>(n) * n * stages, 1);
  return t;
}

bool ApproxTable::in_box(std::uint64_t x, std::uint64_t y, long long t) const {
  return x < static_cast<std::uint64_t>(n) && y < static_cast<std::uint64_t>(n) && t >= 0 &&
         t < stages;
}

int ApproxTable::at(std::uint64_t x, std::uint64_t y, long long t) const {
  return bits[(static_cast<size_t>(x) * n + y) * stages + t];
}

void ApproxTable::set(std::uint64_t x, std::uint64_t y, long long t, int v) {
  bits[(static_cast<size_t>(x) * n + y) * stages + t] = static_cast<std::uint8_t>(v);
  bits[(static_cast<size_t>(y) * n + x) * stages + t] = static_cast<std::uint8_t>(v);
}

DiagonalResult diagonal_pairs(const ApproxTable& f,
                              const std::map<std::uint64_t, std::uint64_t>& phi,
                              std::uint64_t e, long long max_stage) {
  DiagonalResult out;
  const auto get = [&](std::uint64_t s) -> std::optional<std::uint64_t> {
    auto it = phi.find(s);
    if (it == phi.end()) return std::nullopt;
    return it->second;
  };
  const auto x = get(0), y = get(1);
  if (!x || !y) return out;
  for (long long t = 0; t <= max_stage; ++t) {
    const auto z = get(static_cast<std::uint64_t>(t) + 2);
    if (!z) continue;
    if (!f.in_box(*x, *y, t) || f.at(*x, *y, t) != 0) continue;
    // Case 1 at the least such t: pick the side that first separates from z.
    for (long long v = 0; v < f.stages; ++v) {
      if (f.in_box(*x, *z, v) && f.at(*x, *z, v) == 0) {
        out.pair = {cantor_pair(e, 0), cantor_pair(e, static_cast<std::uint64_t>(t) + 2)};
        out.t = t;
        out.v = v;
        out.first_bullet = true;
        return out;
      }
      if (f.in_box(*y, *z, v) && f.at(*y, *z, v) == 0) {
        out.pair = {cantor_pair(e, 1), cantor_pair(e, static_cast<std::uint64_t>(t) + 2)};
        out.t = t;
        out.v = v;
        out.first_bullet = false;
        return out;
      }
    }
    return out;  // t found but no separating v within the box: nothing emitted
  }
  return out;  // Case 2
}

}  // namespace redlab::pi1
