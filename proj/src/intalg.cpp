#include "redlab/intalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace redlab::intalg {

namespace {
const Rat kZero(0);
const Rat kOne(1);
}  // namespace

IntervalSet IntervalSet::unit() {
  IntervalSet s;
  s.parts.push_back({kZero, kOne});
  return s;
}

IntervalSet IntervalSet::interval(const Rat& lo, const Rat& hi) {
  return normalized({{lo, hi}});
}

IntervalSet normalized(std::vector<std::pair<Rat, Rat>> raw) {
  std::vector<std::pair<Rat, Rat>> clipped;
  for (auto& [lo, hi] : raw) {
    Rat l = std::max(lo, kZero), h = std::min(hi, kOne);
    if (l < h) clipped.push_back({l, h});
  }
  std::sort(clipped.begin(), clipped.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  IntervalSet out;
  for (auto& iv : clipped) {
    if (!out.parts.empty() && iv.first <= out.parts.back().second)
      out.parts.back().second = std::max(out.parts.back().second, iv.second);
    else
      out.parts.push_back(iv);
  }
  return out;
}

IntervalSet meet(const IntervalSet& a, const IntervalSet& b) {
  std::vector<std::pair<Rat, Rat>> parts;
  size_t i = 0, j = 0;
  while (i < a.parts.size() && j < b.parts.size()) {
    const Rat lo = std::max(a.parts[i].first, b.parts[j].first);
    const Rat hi = std::min(a.parts[i].second, b.parts[j].second);
    if (lo < hi) parts.push_back({lo, hi});
    if (a.parts[i].second < b.parts[j].second) ++i; else ++j;
  }
  return normalized(std::move(parts));
}

IntervalSet join(const IntervalSet& a, const IntervalSet& b) {
  std::vector<std::pair<Rat, Rat>> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  return normalized(std::move(parts));
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<std::pair<Rat, Rat>> parts;
  Rat cur = kZero;
  for (const auto& [lo, hi] : a.parts) {
    if (cur < lo) parts.push_back({cur, lo});
    cur = hi;
  }
  if (cur < kOne) parts.push_back({cur, kOne});
  return normalized(std::move(parts));
}

IntervalSet minus(const IntervalSet& a, const IntervalSet& b) { return meet(a, complement(b)); }

bool leq(const IntervalSet& a, const IntervalSet& b) { return minus(a, b).is_empty(); }

IntervalSet generator(int n) {
  if (n < 0) throw std::invalid_argument("generator: negative index");
  const BigInt den = BigInt(1) << (n + 1);
  std::vector<std::pair<Rat, Rat>> parts;
  for (BigInt k = 1; k < den; k += 2) parts.push_back({Rat(k, den), Rat(k + 1, den)});
  return normalized(std::move(parts));
}

std::string to_text(const IntervalSet& a) {
  if (a.is_empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (i) out += ';';
    out += rat_text(a.parts[i].first) + ',' + rat_text(a.parts[i].second);
  }
  return out;
}

bool on_grid(const IntervalSet& a, int gens) {
  const BigInt den = BigInt(1) << gens;
  for (const auto& [lo, hi] : a.parts) {
    if ((lo.numerator() * den) % lo.denominator() != 0) return false;
    if ((hi.numerator() * den) % hi.denominator() != 0) return false;
  }
  return true;
}

IntervalSet ideal_join(const relcore::PreorderTable& p, int gens) {
  IntervalSet acc;
  for (int n = 0; n < gens; ++n)
    for (int k = 0; k < gens; ++k) {
      if (n == k || !p.le(n, k)) continue;
      acc = join(acc, minus(generator(n), generator(k)));
    }
  return acc;
}

bool ideal_member(const IntervalSet& w, const relcore::PreorderTable& p, int gens) {
  if (gens > p.n) throw std::invalid_argument("ideal_member: gens exceeds preorder universe");
  if (!on_grid(w, gens))
    throw std::invalid_argument("ideal_member: endpoints off the 2^-gens grid");
  return leq(w, ideal_join(p, gens));
}

bool quotient_leq(const IntervalSet& a, const IntervalSet& b, const relcore::PreorderTable& p,
                  int gens) {
  return ideal_member(minus(a, b), p, gens);
}

}  // namespace redlab::intalg
