#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "idemlab/ring.hpp"

namespace idemlab {

/// A two-sided ideal with its full element set materialized.
class Ideal {
 public:
  std::uint64_t ring_id() const noexcept { return ring_id_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  /// All members, lexicographically sorted.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(const FiniteRing& ring, const Element& x) const {
    if (ring.id() != ring_id_)
      throw AlgebraError(ErrorKind::RingMismatch, "ideal belongs to a different ring");
    return member_[ring.index_of(x)];
  }

  bool is_zero() const noexcept { return elements_.size() == 1; }

 private:
  friend Ideal make_ideal_unchecked(const FiniteRing&, std::vector<Element>,
                                    std::vector<char>);
  std::uint64_t ring_id_ = 0;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::vector<char> member_;
};

inline Ideal make_ideal_unchecked(const FiniteRing& ring, std::vector<Element> generators,
                                  std::vector<char> member) {
  Ideal I;
  I.ring_id_ = ring.id();
  I.generators_ = std::move(generators);
  I.member_ = std::move(member);
  for (std::uint64_t i = 0; i < I.member_.size(); ++i)
    if (I.member_[i]) I.elements_.push_back(ring.element_at(i));
  return I;
}

/// Smallest two-sided ideal containing `generators`.
inline Ideal generate_ideal(const FiniteRing& ring, std::vector<Element> generators,
                            std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  std::vector<char> member(ring.order(), 0);
  std::vector<std::uint64_t> members;
  std::deque<Element> pending(generators.begin(), generators.end());
  member[0] = 1;
  members.push_back(0);

  // The member set is always an additive subgroup H; a pending y extends it
  // to H + <y> coset by coset, and each new member queues its products with
  // the generators on both sides.
  while (!pending.empty()) {
    Element y = std::move(pending.front());
    pending.pop_front();
    if (member[ring.index_of(y)]) continue;
    const std::size_t base = members.size();
    Element shift = y;
    while (!member[ring.index_of(shift)]) {
      for (std::size_t t = 0; t < base; ++t) {
        const Element s = ring.add(ring.element_at(members[t]), shift);
        member[ring.index_of(s)] = 1;
        members.push_back(ring.index_of(s));
        for (std::size_t g = 0; g < ring.rank(); ++g) {
          pending.push_back(ring.mul(ring.basis(g), s));
          pending.push_back(ring.mul(s, ring.basis(g)));
        }
      }
      shift = ring.add(shift, y);
    }
  }
  return make_ideal_unchecked(ring, std::move(generators), std::move(member));
}

/// Accepts an explicit element set and checks it is a two-sided ideal.
inline Ideal validate_ideal(const FiniteRing& ring, const std::vector<Element>& elements,
                            std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  std::vector<char> member(ring.order(), 0);
  for (const auto& x : elements) member[ring.index_of(x)] = 1;
  if (!member[0]) throw AlgebraError(ErrorKind::NotAnIdeal, "set does not contain 0");
  for (const auto& x : elements) {
    for (const auto& y : elements)
      if (!member[ring.index_of(ring.add(x, y))])
        throw AlgebraError(ErrorKind::NotAnIdeal,
                           "not closed under addition: " + to_string(x) + " + " + to_string(y));
    for (std::size_t g = 0; g < ring.rank(); ++g) {
      if (!member[ring.index_of(ring.mul(ring.basis(g), x))] ||
          !member[ring.index_of(ring.mul(x, ring.basis(g)))])
        throw AlgebraError(ErrorKind::NotAnIdeal,
                           "does not absorb g_" + std::to_string(g) + " at " + to_string(x));
    }
  }
  return make_ideal_unchecked(ring, elements, std::move(member));
}

}  // namespace idemlab
