#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redlab/intalg.hpp"
#include "redlab/relcore.hpp"

namespace redlab::embedder {

// Algebras the engine can run over. Each exposes the Boolean operations, an
// exact zero test (which is what distinguishes a quotient from the free
// algebra), a fixed element enumeration, and a splitter returning a proper
// nonzero part of any splittable element.

// The interval algebra with the trivial ideal: zero test is emptiness.
class IntervalAlgebra {
 public:
  using Elem = intalg::IntervalSet;

  Elem zero() const { return intalg::IntervalSet::empty(); }
  Elem unit() const { return intalg::IntervalSet::unit(); }
  Elem meet(const Elem& a, const Elem& b) const { return intalg::meet(a, b); }
  Elem join(const Elem& a, const Elem& b) const { return intalg::join(a, b); }
  Elem complement(const Elem& a) const { return intalg::complement(a); }
  bool is_zero(const Elem& a) const { return a.is_empty(); }
  bool leq(const Elem& a, const Elem& b) const { return intalg::leq(a, b); }

  // Left half of the leftmost interval, split at its midpoint.
  Elem split_part(const Elem& y) const {
    if (y.is_empty()) throw std::logic_error("split_part: zero element");
    const auto& [lo, hi] = y.parts.front();
    return intalg::IntervalSet::interval(lo, lo + (hi - lo) / 2);
  }

  std::string text(const Elem& a) const { return intalg::to_text(a); }
};

// The quotient of the interval algebra by the ideal of a finite preorder:
// same carriers, zero test through ideal membership. Elements are enumerated
// generators-first so that embedding the generators needs depth = gens only.
class QuotientIntervalAlgebra {
 public:
  using Elem = intalg::IntervalSet;

  QuotientIntervalAlgebra(relcore::PreorderTable p, int gens);

  Elem zero() const { return intalg::IntervalSet::empty(); }
  Elem unit() const { return intalg::IntervalSet::unit(); }
  Elem meet(const Elem& a, const Elem& b) const { return intalg::meet(a, b); }
  Elem join(const Elem& a, const Elem& b) const { return intalg::join(a, b); }
  Elem complement(const Elem& a) const { return intalg::complement(a); }
  // Zero in the quotient = membership in the (cached) ideal join.
  bool is_zero(const Elem& a) const {
    if (!intalg::on_grid(a, gens_))
      throw std::invalid_argument("QuotientIntervalAlgebra: element off the generator grid");
    return intalg::leq(a, ideal_);
  }
  bool leq(const Elem& a, const Elem& b) const { return is_zero(intalg::minus(a, b)); }
  std::string text(const Elem& a) const { return intalg::to_text(a); }

  // code < gens: the generator itself; beyond that the canonical interval
  // sets in (denominator, lexicographic) order, deduplicated.
  Elem element(std::uint64_t code) const;

  int gens() const { return gens_; }
  const relcore::PreorderTable& preorder() const { return p_; }

 private:
  relcore::PreorderTable p_;
  int gens_;
  intalg::IntervalSet ideal_;
};

// A finite Boolean algebra of subsets of `atoms` atoms as bitmasks; atomless
// for the engine's purposes as long as encountered elements keep >= 2 atoms.
class MaskAlgebra {
 public:
  using Elem = std::uint64_t;

  explicit MaskAlgebra(int atoms) : atoms_(atoms), full_(atoms >= 64 ? ~0ull : (1ull << atoms) - 1) {
    if (atoms < 1 || atoms > 64) throw std::invalid_argument("MaskAlgebra: 1..64 atoms");
  }

  Elem zero() const { return 0; }
  Elem unit() const { return full_; }
  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem join(Elem a, Elem b) const { return a | b; }
  Elem complement(Elem a) const { return full_ & ~a; }
  bool is_zero(Elem a) const { return a == 0; }
  bool leq(Elem a, Elem b) const { return (a & ~b) == 0; }

  // Lower half of the set atoms.
  Elem split_part(Elem y) const;

  std::string text(Elem a) const;

 private:
  int atoms_;
  Elem full_;
};

// Builds the embedding h level by level. At depth d, for every d-bit pattern
// tau, the products p_tau (over the source enumeration) and y_tau (over the
// images) must vanish together; that correspondence is re-verified after
// every extension and a violation is fatal.
template <class Src, class Tgt>
class EmbeddingEngine {
 public:
  using SElem = typename Src::Elem;
  using TElem = typename Tgt::Elem;
  // alpha(y_tau, p_tau, n): target element whose meet with y_tau realizes the
  // component for source element n under the product p_tau.
  using Supplier = std::function<TElem(const TElem&, const SElem&, const SElem&)>;

  EmbeddingEngine(const Src& src, const Tgt& tgt, Supplier alpha)
      : src_(src), tgt_(tgt), alpha_(std::move(alpha)) {}

  int depth() const { return static_cast<int>(images_.size()); }
  const std::vector<TElem>& images() const { return images_; }

  // Signed product over the first `depth` source elements / images; bit i of
  // pattern set means complemented.
  SElem source_product(std::uint64_t pattern) const {
    SElem acc = src_.unit();
    for (int i = 0; i < depth(); ++i) {
      const SElem e = src_.element(static_cast<std::uint64_t>(i));
      acc = src_.meet(acc, (pattern >> i) & 1 ? src_.complement(e) : e);
    }
    return acc;
  }

  TElem image_product(std::uint64_t pattern) const {
    TElem acc = tgt_.unit();
    for (int i = 0; i < depth(); ++i)
      acc = tgt_.meet(acc, (pattern >> i) & 1 ? tgt_.complement(images_[i]) : images_[i]);
    return acc;
  }

  // The component z_tau for the next element under pattern tau.
  TElem component_for(std::uint64_t pattern) const {
    const SElem next = src_.element(static_cast<std::uint64_t>(depth()));
    const SElem p_tau = source_product(pattern);
    const TElem y_tau = image_product(pattern);
    if (tgt_.is_zero(y_tau)) return tgt_.zero();
    if (src_.is_zero(src_.meet(next, p_tau))) return tgt_.zero();
    if (src_.leq(p_tau, next)) return y_tau;
    const TElem z = tgt_.meet(y_tau, alpha_(y_tau, p_tau, next));
    if (tgt_.is_zero(z) || tgt_.is_zero(tgt_.meet(y_tau, tgt_.complement(z))))
      throw std::logic_error("component_for: supplier broke the strict-split contract at pattern " +
                             std::to_string(pattern));
    return z;
  }

  // Appends the image of the next source element and re-checks the vanishing
  // correspondence at the new depth; returns the image.
  TElem extend() {
    const int n = depth();
    TElem h = tgt_.zero();
    for (std::uint64_t tau = 0; tau < (1ull << n); ++tau) h = tgt_.join(h, component_for(tau));
    images_.push_back(h);
    for (std::uint64_t tau = 0; tau < (1ull << (n + 1)); ++tau) {
      if (src_.is_zero(source_product(tau)) != tgt_.is_zero(image_product(tau)))
        throw std::logic_error("extend: product correspondence failed at depth " +
                               std::to_string(n + 1) + ", pattern " + std::to_string(tau));
    }
    return images_.back();
  }

  // Audit of the correspondence at the current depth (count of zero products
  // on each side; they must be equal pattern by pattern to pass).
  std::vector<std::pair<bool, bool>> audit() const {
    std::vector<std::pair<bool, bool>> rows;
    for (std::uint64_t tau = 0; tau < (1ull << depth()); ++tau)
      rows.push_back({src_.is_zero(source_product(tau)), tgt_.is_zero(image_product(tau))});
    return rows;
  }

 private:
  const Src& src_;
  const Tgt& tgt_;
  Supplier alpha_;
  std::vector<TElem> images_;
};

// The desk-scale pair-reduction supplier: answers the two decidable source
// queries and otherwise returns a proper part of y_tau via the target's
// splitter.
template <class Src, class Tgt>
typename EmbeddingEngine<Src, Tgt>::Supplier splitting_supplier(const Src& src, const Tgt& tgt) {
  return [&src, &tgt](const typename Tgt::Elem& y_tau, const typename Src::Elem& p_tau,
                      const typename Src::Elem& n) -> typename Tgt::Elem {
    if (src.is_zero(src.meet(n, p_tau))) return tgt.zero();
    if (src.leq(p_tau, n)) return tgt.unit();
    return tgt.split_part(y_tau);
  };
}

struct EmbeddingResult {
  std::vector<intalg::IntervalSet> images;  // image of p_n, n < gens
  int depth = 0;
  // Per-depth audit: patterns where either side vanished, as (src, tgt) flag
  // pairs; all pairs equal on a passing run.
  std::vector<std::vector<std::pair<bool, bool>>> audits;
  std::vector<std::vector<bool>> source_order;  // quotient order of the preorder
  std::vector<std::vector<bool>> image_order;   // target order of the images
  relcore::ReductionMap as_reduction;           // n -> n over the two orders
  bool order_equivalent = false;
};

// Runs the engine far enough to cover the generators and checks
//   n precedes k in P  <->  image(n) <= image(k) in the target
// for all n,k < gens. Throws on a product-correspondence violation; a failed
// final equivalence is reported in the result and is fatal for callers that
// require it.
EmbeddingResult embed_preorder(const relcore::PreorderTable& p, int gens,
                               const IntervalAlgebra& target);

// Fact-style inseparability criterion check: over the samples, membership in
// u forces g(x) ~ 0 and membership in v forces g(x) ~ 1.
struct CriterionReport {
  std::vector<long long> u_violations, v_violations;
  bool ok() const { return u_violations.empty() && v_violations.empty(); }
};

template <class Elem>
CriterionReport separation_check(const std::function<bool(long long)>& u_test,
                                 const std::function<bool(long long)>& v_test,
                                 const std::function<Elem(long long)>& g,
                                 const std::function<bool(const Elem&)>& is_zero,
                                 const std::function<bool(const Elem&)>& is_unit,
                                 const std::vector<long long>& samples) {
  CriterionReport rep;
  for (long long x : samples) {
    if (u_test(x) && !is_zero(g(x))) rep.u_violations.push_back(x);
    if (v_test(x) && !is_unit(g(x))) rep.v_violations.push_back(x);
  }
  return rep;
}

}  // namespace redlab::embedder
