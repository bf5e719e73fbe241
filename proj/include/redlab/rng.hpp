#pragma once

#include <cstdint>
#include <random>

namespace redlab {

// mt19937_64 produces the same stream on every platform. The bounded draws
// below avoid std::uniform_int_distribution, whose output is
// implementation-defined and would break byte-identical reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform-ish value in [0, n); modulo bias is irrelevant at these sizes.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  // Inclusive range.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool one_in(std::uint64_t n) { return below(n) == 0; }

  // Derives an independent child seed; used to fan one suite seed out to
  // per-instance generators without coupling their streams.
  std::uint64_t fork() { return eng_() ^ 0x9e3779b97f4a7c15ull; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace redlab
