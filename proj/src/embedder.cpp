#include "redlab/embedder.hpp"

#include <bit>

namespace redlab::embedder {

QuotientIntervalAlgebra::QuotientIntervalAlgebra(relcore::PreorderTable p, int gens)
    : p_(std::move(p)), gens_(gens) {
  if (!p_.valid()) throw std::invalid_argument("QuotientIntervalAlgebra: not a preorder");
  if (gens_ < 0 || gens_ > p_.n)
    throw std::invalid_argument("QuotientIntervalAlgebra: gens outside preorder universe");
  ideal_ = intalg::ideal_join(p_, gens_);
}

intalg::IntervalSet QuotientIntervalAlgebra::element(std::uint64_t code) const {
  if (code < static_cast<std::uint64_t>(gens_)) return intalg::generator(static_cast<int>(code));

  // Canonical stream: for d = 0, 1, ... list new sets over the 2^d dyadic
  // grid by ascending atom mask, skipping sets seen on a coarser grid and the
  // generators already enumerated.
  std::uint64_t remaining = code - static_cast<std::uint64_t>(gens_);
  std::vector<intalg::IntervalSet> gens_sets;
  for (int i = 0; i < gens_; ++i) gens_sets.push_back(intalg::generator(i));
  for (int d = 0;; ++d) {
    if (d > 20) throw std::out_of_range("QuotientIntervalAlgebra: enumeration code too deep");
    const std::uint64_t atoms = 1ull << d;
    const BigInt den = BigInt(1) << d;
    for (std::uint64_t mask = 0; mask < (1ull << atoms); ++mask) {
      std::vector<std::pair<Rat, Rat>> parts;
      for (std::uint64_t a = 0; a < atoms; ++a)
        if ((mask >> a) & 1) parts.push_back({Rat(BigInt(a), den), Rat(BigInt(a + 1), den)});
      intalg::IntervalSet s = intalg::normalized(std::move(parts));
      if (d > 0 && intalg::on_grid(s, d - 1)) continue;  // seen on a coarser grid
      bool is_gen = false;
      for (const auto& g : gens_sets)
        if (s == g) {
          is_gen = true;
          break;
        }
      if (is_gen) continue;
      if (remaining == 0) return s;
      --remaining;
    }
  }
}

MaskAlgebra::Elem MaskAlgebra::split_part(Elem y) const {
  if (y == 0) throw std::logic_error("MaskAlgebra::split_part: zero element");
  const int bits = std::popcount(y);
  if (bits < 2)
    throw std::logic_error("MaskAlgebra::split_part: single atom cannot split");
  Elem out = 0;
  int take = bits / 2;
  for (int a = 0; a < atoms_ && take > 0; ++a)
    if ((y >> a) & 1) {
      out |= 1ull << a;
      --take;
    }
  return out;
}

std::string MaskAlgebra::text(Elem a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < atoms_; ++i)
    if ((a >> i) & 1) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

EmbeddingResult embed_preorder(const relcore::PreorderTable& p, int gens,
                               const IntervalAlgebra& target) {
  QuotientIntervalAlgebra source(p, gens);
  using Engine = EmbeddingEngine<QuotientIntervalAlgebra, IntervalAlgebra>;
  Engine eng(source, target, splitting_supplier(source, target));

  EmbeddingResult res;
  for (int d = 0; d < gens; ++d) {
    eng.extend();
    res.audits.push_back(eng.audit());
  }
  res.depth = eng.depth();
  res.images = eng.images();

  res.source_order.assign(gens, std::vector<bool>(gens, false));
  res.image_order.assign(gens, std::vector<bool>(gens, false));
  res.order_equivalent = true;
  for (int n = 0; n < gens; ++n)
    for (int k = 0; k < gens; ++k) {
      res.source_order[n][k] = p.le(n, k);
      res.image_order[n][k] = target.leq(res.images[n], res.images[k]);
      if (res.source_order[n][k] != res.image_order[n][k]) res.order_equivalent = false;
    }
  for (int n = 0; n < gens; ++n) res.as_reduction.table[n] = n;
  res.as_reduction.verified_window = gens;
  return res;
}

}  // namespace redlab::embedder
