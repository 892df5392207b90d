#pragma once

/**
 * @file subquotient.hpp
 * @brief Quotient rings R/I and corner rings eRe as standalone FiniteRings.
 *
 * Both constructions re-present the resulting additive group on a fresh
 * cyclic basis and keep explicit maps back to the parent ring, so every
 * predicate that works on a FiniteRing applies to them unchanged.
 */

#include <unordered_map>

#include "idemlab/ideal.hpp"
#include "idemlab/presentation.hpp"

namespace idemlab {

class QuotientRing {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteRing& parent() const noexcept { return parent_; }

  /// Image of x under R -> R/I.
  Element project(const Element& x) const {
    const std::uint64_t rep = rep_of_[parent_.index_of(x)];
    return ring_.element(coords_of_rep_.at(rep));
  }

  /// Canonical (lexicographically least) representative of a coset.
  Element lift(const Element& q) const {
    return parent_.element_at(rep_of_qindex_[ring_.index_of(q)]);
  }

 private:
  friend QuotientRing quotient_ring(const FiniteRing&, const Ideal&, std::uint64_t);
  QuotientRing(FiniteRing ring, FiniteRing parent) : ring_(std::move(ring)), parent_(std::move(parent)) {}

  FiniteRing ring_;
  FiniteRing parent_;
  std::vector<std::uint64_t> rep_of_;
  std::unordered_map<std::uint64_t, Coords> coords_of_rep_;
  std::vector<std::uint64_t> rep_of_qindex_;
};

inline QuotientRing quotient_ring(const FiniteRing& ring, const Ideal& ideal,
                                  std::uint64_t cap = kDefaultCap) {
  if (ideal.ring_id() != ring.id())
    throw AlgebraError(ErrorKind::NotAnIdeal, "ideal was built for a different ring");
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  const std::uint64_t n = ring.order();

  std::vector<std::uint64_t> rep_of(n, n);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (rep_of[x] != n) continue;
    // x is the smallest index of its coset, hence its representative.
    reps.push_back(x);
    const Element ex = ring.element_at(x);
    for (const auto& i : ideal.elements()) rep_of[ring.index_of(ring.add(ex, i))] = x;
  }
  std::unordered_map<std::uint64_t, std::size_t> id_of_rep;
  for (std::size_t t = 0; t < reps.size(); ++t) id_of_rep[reps[t]] = t;

  auto add_ids = [&](std::size_t a, std::size_t b) {
    const Element s = ring.add(ring.element_at(reps[a]), ring.element_at(reps[b]));
    return id_of_rep.at(rep_of[ring.index_of(s)]);
  };
  const auto dec = detail::decompose_abelian_group(reps.size(), 0, add_ids);
  const std::size_t k = dec.generators.size();

  auto coords_of_elem = [&](const Element& x) -> const Coords& {
    return dec.coords_of[id_of_rep.at(rep_of[ring.index_of(x)])];
  };
  StructureTable table(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = coords_of_elem(ring.mul(ring.element_at(reps[dec.generators[i]]),
                                            ring.element_at(reps[dec.generators[j]])));
  std::string label = ring.label() + "/I" + std::to_string(ideal.size());
  FiniteRing qring = FiniteRing::build(dec.orders, table, coords_of_elem(ring.one()),
                                       std::move(label), cap);

  QuotientRing q(std::move(qring), ring);
  q.rep_of_ = std::move(rep_of);
  q.rep_of_qindex_.assign(reps.size(), 0);
  for (std::size_t t = 0; t < reps.size(); ++t) {
    q.coords_of_rep_[reps[t]] = dec.coords_of[t];
    q.rep_of_qindex_[q.ring_.index_of(q.ring_.element(dec.coords_of[t]))] = reps[t];
  }
  return q;
}

class CornerRing {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteRing& parent() const noexcept { return parent_; }
  const Element& idempotent() const noexcept { return idempotent_; }

  /// eRe -> R.
  Element embed(const Element& x) const {
    return parent_.element_at(parent_index_[ring_.index_of(x)]);
  }

  /// Inverse of embed on eRe; throws if r is not of the form e r e.
  Element restrict(const Element& r) const {
    auto it = coords_of_parent_.find(parent_.index_of(r));
    if (it == coords_of_parent_.end())
      throw AlgebraError(ErrorKind::ShapeMismatch, to_string(r) + " does not lie in eRe");
    return ring_.element(it->second);
  }

 private:
  friend CornerRing corner_ring(const FiniteRing&, const Element&, std::uint64_t);
  CornerRing(FiniteRing ring, FiniteRing parent, Element e)
      : ring_(std::move(ring)), parent_(std::move(parent)), idempotent_(std::move(e)) {}

  FiniteRing ring_;
  FiniteRing parent_;
  Element idempotent_;
  std::vector<std::uint64_t> parent_index_;
  std::unordered_map<std::uint64_t, Coords> coords_of_parent_;
};

/// eRe with identity e, for a nonzero idempotent e.
inline CornerRing corner_ring(const FiniteRing& ring, const Element& e,
                              std::uint64_t cap = kDefaultCap) {
  if (!ring.is_idempotent(e))
    throw AlgebraError(ErrorKind::NotIdempotent, to_string(e) + " is not idempotent");
  if (ring.is_zero(e))
    throw AlgebraError(ErrorKind::ZeroIdempotent, "corner ring of 0 is not unital");
  require_within_cap(ring.order(), cap, "ring " + ring.label());

  std::vector<char> in_corner(ring.order(), 0);
  for (std::uint64_t r = 0; r < ring.order(); ++r)
    in_corner[ring.index_of(ring.mul(ring.mul(e, ring.element_at(r)), e))] = 1;
  std::vector<std::uint64_t> members;
  std::unordered_map<std::uint64_t, std::size_t> id_of;
  for (std::uint64_t r = 0; r < ring.order(); ++r)
    if (in_corner[r]) {
      id_of[r] = members.size();
      members.push_back(r);
    }

  auto add_ids = [&](std::size_t a, std::size_t b) {
    return id_of.at(ring.index_of(ring.add(ring.element_at(members[a]), ring.element_at(members[b]))));
  };
  const auto dec = detail::decompose_abelian_group(members.size(), 0, add_ids);
  const std::size_t k = dec.generators.size();
  auto coords_of_elem = [&](const Element& x) -> const Coords& {
    return dec.coords_of[id_of.at(ring.index_of(x))];
  };
  StructureTable table(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = coords_of_elem(ring.mul(ring.element_at(members[dec.generators[i]]),
                                            ring.element_at(members[dec.generators[j]])));
  FiniteRing cring = FiniteRing::build(dec.orders, table, coords_of_elem(e),
                                       "e" + to_string(e) + " " + ring.label() + " e", cap);

  CornerRing c(std::move(cring), ring, e);
  c.parent_index_.assign(members.size(), 0);
  for (std::size_t t = 0; t < members.size(); ++t) {
    c.coords_of_parent_[members[t]] = dec.coords_of[t];
    c.parent_index_[c.ring_.index_of(c.ring_.element(dec.coords_of[t]))] = members[t];
  }
  return c;
}

}  // namespace idemlab
