#pragma once

#include <cstdint>
#include <utility>

namespace redlab {

// Cantor pairing <i,x> = (i+x)(i+x+1)/2 + x, fixed project-wide so that every
// encoded index is reproducible across runs: <0,0>=0, <1,0>=1, <0,1>=2, ...
constexpr std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t x) {
  const std::uint64_t s = i + x;
  return s * (s + 1) / 2 + x;
}

constexpr std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // Largest s with s(s+1)/2 <= z, found by search from a float seed.
  std::uint64_t s = 0;
  {
    std::uint64_t lo = 0, hi = 1;
    while (hi * (hi + 1) / 2 <= z) hi *= 2;
    while (lo < hi) {
      const std::uint64_t mid = (lo + hi + 1) / 2;
      if (mid * (mid + 1) / 2 <= z) lo = mid; else hi = mid - 1;
    }
    s = lo;
  }
  const std::uint64_t x = z - s * (s + 1) / 2;
  return {s - x, x};
}

// 4-tuple code used for priority-tree levels: <<i,j>,<e,p>>.
constexpr std::uint64_t cantor_quad(std::uint64_t i, std::uint64_t j,
                                    std::uint64_t e, std::uint64_t p) {
  return cantor_pair(cantor_pair(i, j), cantor_pair(e, p));
}

struct Quad {
  std::uint64_t i = 0, j = 0, e = 0, p = 0;
};

constexpr Quad cantor_unquad(std::uint64_t z) {
  const auto [a, b] = cantor_unpair(z);
  const auto [i, j] = cantor_unpair(a);
  const auto [e, p] = cantor_unpair(b);
  return Quad{i, j, e, p};
}

}  // namespace redlab
