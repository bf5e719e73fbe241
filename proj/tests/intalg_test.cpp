#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redlab/gen.hpp"
#include "redlab/intalg.hpp"
#include "redlab/rng.hpp"

using namespace redlab;
using intalg::IntervalSet;

namespace {

IntervalSet random_set(Rng& rng) { return gen::random_grid_set(rng, static_cast<int>(rng.below(5)) + 1); }

// Atom-level oracle over the 2^gens dyadic grid.
std::uint64_t mask_of(const IntervalSet& s, int gens) {
  std::uint64_t m = 0;
  const BigInt den = BigInt(1) << gens;
  for (std::uint64_t a = 0; a < (1ull << gens); ++a) {
    const Rat mid(BigInt(2 * a + 1), 2 * den);
    for (const auto& [lo, hi] : s.parts)
      if (lo <= mid && mid < hi) {
        m |= 1ull << a;
        break;
      }
  }
  return m;
}

}  // namespace

TEST_CASE("canonical form and boolean operations") {
  CHECK(intalg::complement(IntervalSet::empty()) == IntervalSet::unit());
  CHECK(intalg::complement(IntervalSet::unit()) == IntervalSet::empty());

  // Adjacent pieces merge.
  const auto glued = intalg::join(IntervalSet::interval(rat(0), rat(1, 2)),
                                  IntervalSet::interval(rat(1, 2), rat(3, 4)));
  CHECK(glued.parts.size() == 1);
  CHECK(glued == IntervalSet::interval(rat(0), rat(3, 4)));

  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_set(rng);
    const auto b = random_set(rng);
    CHECK(intalg::meet(a, intalg::complement(a)).is_empty());
    CHECK(intalg::join(a, intalg::complement(a)) == IntervalSet::unit());
    // De Morgan, both computed independently.
    CHECK(intalg::complement(intalg::meet(a, b)) ==
          intalg::join(intalg::complement(a), intalg::complement(b)));
    CHECK(intalg::complement(intalg::join(a, b)) ==
          intalg::meet(intalg::complement(a), intalg::complement(b)));
    // Distributivity and associativity against a third draw.
    const auto c = random_set(rng);
    CHECK(intalg::meet(a, intalg::join(b, c)) ==
          intalg::join(intalg::meet(a, b), intalg::meet(a, c)));
    CHECK(intalg::meet(intalg::meet(a, b), c) == intalg::meet(a, intalg::meet(b, c)));
    CHECK(intalg::join(intalg::join(a, b), c) == intalg::join(a, intalg::join(b, c)));
  }
}

TEST_CASE("order") {
  Rng rng(32);
  CHECK(intalg::leq(IntervalSet::empty(), IntervalSet::empty()));
  CHECK(intalg::leq(IntervalSet::empty(), IntervalSet::unit()));
  CHECK(intalg::leq(IntervalSet::interval(rat(0), rat(1, 2)),
                    IntervalSet::interval(rat(0), rat(3, 4))));
  for (int i = 0; i < 60; ++i) {
    const auto a = random_set(rng), b = random_set(rng);
    if (intalg::leq(a, b) && intalg::leq(b, a)) CHECK(a == b);
    CHECK(intalg::leq(intalg::meet(a, b), a));
    CHECK(intalg::leq(a, intalg::join(a, b)));
  }
}

TEST_CASE("generators and freeness") {
  CHECK(intalg::generator(0) == IntervalSet::interval(rat(1, 2), rat(1)));
  const auto p1 = intalg::generator(1);
  CHECK(p1 == intalg::join(IntervalSet::interval(rat(1, 4), rat(1, 2)),
                           IntervalSet::interval(rat(3, 4), rat(1))));

  // Freeness: every signed product of the first m generators is nonempty.
  for (int m = 1; m <= 6; ++m) {
    for (std::uint64_t pattern = 0; pattern < (1ull << m); ++pattern) {
      IntervalSet acc = IntervalSet::unit();
      for (int i = 0; i < m; ++i) {
        const auto g = intalg::generator(i);
        acc = intalg::meet(acc, (pattern >> i) & 1 ? intalg::complement(g) : g);
      }
      CHECK_FALSE(acc.is_empty());
    }
  }
}

TEST_CASE("textual form") {
  CHECK(intalg::to_text(IntervalSet::empty()) == "empty");
  CHECK(intalg::to_text(intalg::generator(0)) == "1/2,1/1");
}

TEST_CASE("ideal membership: generator pairs, both directions, exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : gen::all_preorders(n)) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          const auto w = intalg::minus(intalg::generator(a), intalg::generator(b));
          CHECK(intalg::ideal_member(w, p, n) == p.le(a, b));
        }
    }
  }
}

TEST_CASE("ideal membership agrees with the atom oracle on random elements") {
  Rng rng(33);
  const auto pool3 = gen::all_preorders(3);
  const auto pool4 = gen::all_preorders(4);
  for (int i = 0; i < 250; ++i) {
    const bool four = rng.one_in(2);
    const auto& p = four ? pool4[rng.below(pool4.size())] : pool3[rng.below(pool3.size())];
    const auto w = gen::random_grid_set(rng, p.n);
    std::uint64_t ideal_mask = 0;
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        if (a != b && p.le(a, b))
          ideal_mask |= mask_of(intalg::generator(a), p.n) & ~mask_of(intalg::generator(b), p.n);
    const bool oracle = (mask_of(w, p.n) & ~ideal_mask) == 0;
    CHECK(intalg::ideal_member(w, p, p.n) == oracle);
  }
}

TEST_CASE("ideal membership rejects off-grid elements") {
  const auto p = relcore::PreorderTable::identity(2);
  const auto w = IntervalSet::interval(rat(0), rat(1, 3));
  CHECK_THROWS_AS(intalg::ideal_member(w, p, 2), std::invalid_argument);
}

TEST_CASE("antichain ideal is trivial") {
  const auto p = relcore::PreorderTable::identity(3);
  CHECK(intalg::ideal_member(IntervalSet::empty(), p, 3));
  CHECK_FALSE(intalg::ideal_member(
      intalg::minus(intalg::generator(0), intalg::generator(1)), p, 3));
}

TEST_CASE("unused generator indices never change the verdict") {
  Rng rng(34);
  const auto pool = gen::all_preorders(3);
  for (int i = 0; i < 40; ++i) {
    const auto& p = pool[rng.below(pool.size())];
    relcore::PreorderTable ext = relcore::PreorderTable::identity(6);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) ext.leq[a][b] = p.leq[a][b];
    const auto w = gen::random_grid_set(rng, 3);
    CHECK(intalg::ideal_member(w, p, 3) == intalg::ideal_member(w, ext, 6));
  }
}

TEST_CASE("quotient order") {
  for (const auto& p : gen::all_preorders(3)) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(intalg::quotient_leq(intalg::generator(a), intalg::generator(b), p, 3) ==
              p.le(a, b));
  }

  Rng rng(35);
  const auto pool = gen::all_preorders(4);
  for (int i = 0; i < 25; ++i) {
    const auto& p = pool[rng.below(pool.size())];
    const auto a = gen::random_grid_set(rng, 4);
    const auto b = gen::random_grid_set(rng, 4);
    const auto c = gen::random_grid_set(rng, 4);
    CHECK(intalg::quotient_leq(a, a, p, 4));
    if (intalg::quotient_leq(a, b, p, 4) && intalg::quotient_leq(b, c, p, 4))
      CHECK(intalg::quotient_leq(a, c, p, 4));
  }

  // A total preorder collapses generator differences, not everything: the
  // unit stays strictly above the generators' meet.
  relcore::PreorderTable total;
  total.n = 2;
  total.leq.assign(2, std::vector<bool>(2, true));
  CHECK(intalg::quotient_leq(intalg::generator(0), intalg::generator(1), total, 2));
  const auto meet01 = intalg::meet(intalg::generator(0), intalg::generator(1));
  CHECK(intalg::quotient_leq(intalg::generator(0), meet01, total, 2));
  CHECK_FALSE(intalg::quotient_leq(IntervalSet::unit(), meet01, total, 2));
}
