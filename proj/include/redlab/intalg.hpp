#pragma once

#include <string>
#include <utility>
#include <vector>

#include "redlab/rational.hpp"
#include "redlab/relcore.hpp"

namespace redlab::intalg {

// Finite union of half-open rational subintervals of [0,1), kept canonical:
// sorted, disjoint, nonempty parts with adjacent parts merged. Equality of
// sets is structural equality of the canonical form.
struct IntervalSet {
  std::vector<std::pair<Rat, Rat>> parts;  // [lo, hi), 0 <= lo < hi <= 1

  static IntervalSet empty() { return {}; }
  static IntervalSet unit();
  static IntervalSet interval(const Rat& lo, const Rat& hi);

  bool is_empty() const { return parts.empty(); }
  bool operator==(const IntervalSet&) const = default;
};

// Canonicalizes an arbitrary list of intervals (clipped to [0,1)).
IntervalSet normalized(std::vector<std::pair<Rat, Rat>> raw);

IntervalSet meet(const IntervalSet& a, const IntervalSet& b);
IntervalSet join(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);
IntervalSet minus(const IntervalSet& a, const IntervalSet& b);

// a <= b iff a - b is empty.
bool leq(const IntervalSet& a, const IntervalSet& b);

// The free generators: p_n is the set where binary digit n+1 equals 1, i.e.
// the union of [k/2^(n+1), (k+1)/2^(n+1)) over odd k. Any boolean combination
// of distinct generators is nonempty, which is exactly freeness.
IntervalSet generator(int n);

// Textual form "lo/den,hi/den;lo/den,hi/den;..." ("empty" for the zero set).
std::string to_text(const IntervalSet& a);

// Are all endpoints multiples of 2^-gens (i.e. is a expressible over the
// generators p_0..p_{gens-1})?
bool on_grid(const IntervalSet& a, int gens);

// Join of the ideal generators p_n - p_k over distinct n <= k pairs of the
// preorder (indices < gens).
IntervalSet ideal_join(const relcore::PreorderTable& p, int gens);

// Membership of w in the ideal generated by {p_n - p_k : n <= k in p}.
// w must lie on the 2^-gens grid (std::invalid_argument otherwise); the
// finite join above is a complete test because any generator with index >=
// gens can be sent to 0 by an assignment fixing p_0..p_{gens-1}, so ideal
// elements never need it.
bool ideal_member(const IntervalSet& w, const relcore::PreorderTable& p, int gens);

// Quotient order of F/I: a precedes b iff a - b lies in the ideal.
bool quotient_leq(const IntervalSet& a, const IntervalSet& b, const relcore::PreorderTable& p,
                  int gens);

}  // namespace redlab::intalg
