#pragma once

/**
 * @file idempotents.hpp
 * @brief Semicentrality, isomorphism and conjugacy of idempotents in finite rings.
 *
 * Conventions:
 *  - e is left semicentral when (1-e)Re = 0 and right semicentral when
 *    eR(1-e) = 0; central means both.
 *  - e and f are isomorphic when e = ab and f = ba for some a, b.
 *  - e and f are conjugate when f = u e u^-1 for a unit u.
 *
 * Every search walks candidates in lexicographic coordinate order and returns
 * the first hit, so all reported witnesses are reproducible.
 */

#include <optional>
#include <string>
#include <vector>

#include "idemlab/ideal.hpp"
#include "idemlab/ring.hpp"
#include "idemlab/subquotient.hpp"

namespace idemlab {

enum class Side { Left, Right };

inline std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

inline void require_idempotent(const FiniteRing& ring, const Element& e) {
  if (!ring.is_idempotent(e))
    throw AlgebraError(ErrorKind::NotIdempotent,
                       to_string(e) + " is not idempotent in " + ring.label());
}

/// All x with x^2 = x, sorted; always contains 0 and 1.
inline std::vector<Element> enumerate_idempotents(const FiniteRing& ring,
                                                  std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < ring.order(); ++i) {
    Element x = ring.element_at(i);
    if (ring.is_idempotent(x)) out.push_back(std::move(x));
  }
  return out;
}

struct SemicentralCheck {
  bool holds = true;
  Side side = Side::Left;  // side of the failing product when !holds
  std::optional<Element> witness;  // basis element r with nonzero product
  std::optional<Element> product;  // (1-e) r e  or  e r (1-e)
};

/// (1-e) g_i e = 0 for every generator g_i; bilinearity makes that sufficient.
inline SemicentralCheck semicentral_check(const FiniteRing& ring, const Element& e, Side side) {
  require_idempotent(ring, e);
  const Element co = ring.sub(ring.one(), e);
  SemicentralCheck out;
  out.side = side;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const Element r = ring.basis(i);
    Element p = side == Side::Left ? ring.mul(ring.mul(co, r), e) : ring.mul(ring.mul(e, r), co);
    if (!ring.is_zero(p)) {
      out.holds = false;
      out.witness = r;
      out.product = std::move(p);
      return out;
    }
  }
  return out;
}

inline SemicentralCheck is_left_semicentral(const FiniteRing& ring, const Element& e) {
  return semicentral_check(ring, e, Side::Left);
}

inline SemicentralCheck is_right_semicentral(const FiniteRing& ring, const Element& e) {
  return semicentral_check(ring, e, Side::Right);
}

inline SemicentralCheck is_central(const FiniteRing& ring, const Element& e) {
  auto left = is_left_semicentral(ring, e);
  if (!left.holds) return left;
  return is_right_semicentral(ring, e);
}

struct IsoWitness {
  Element a, b, e, f;
};

inline bool witness_valid(const FiniteRing& ring, const IsoWitness& w) {
  return ring.mul(w.a, w.b) == w.e && ring.mul(w.b, w.a) == w.f && ring.is_idempotent(w.e) &&
         ring.is_idempotent(w.f);
}

namespace detail {

// Sorted, deduplicated { x r y : r in R }.
inline std::vector<Element> sandwich_set(const FiniteRing& ring, const Element& x,
                                         const Element& y) {
  std::vector<char> seen(ring.order(), 0);
  for (std::uint64_t r = 0; r < ring.order(); ++r)
    seen[ring.index_of(ring.mul(ring.mul(x, ring.element_at(r)), y))] = 1;
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < ring.order(); ++i)
    if (seen[i]) out.push_back(ring.element_at(i));
  return out;
}

}  // namespace detail

/// Searches (a, b) in eRf x fRe for ab = e, ba = f. Any witness normalizes
/// into that set via a -> eaf, b -> fbe. For e == f the witness (e, e) is
/// returned directly.
inline std::optional<IsoWitness> find_iso_witness(const FiniteRing& ring, const Element& e,
                                                  const Element& f,
                                                  std::uint64_t cap = kDefaultCap) {
  require_idempotent(ring, e);
  require_idempotent(ring, f);
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  if (e == f) return IsoWitness{e, e, e, f};
  const auto left = detail::sandwich_set(ring, e, f);
  const auto right = detail::sandwich_set(ring, f, e);
  for (const auto& a : left)
    for (const auto& b : right)
      if (ring.mul(a, b) == e && ring.mul(b, a) == f) return IsoWitness{a, b, e, f};
  return std::nullopt;
}

/// Replaces (a, b) by (ea, fb), so that a lies in eR and b in fR.
inline IsoWitness normalize_iso_witness(const FiniteRing& ring, const Element& a,
                                        const Element& b, const Element& e, const Element& f) {
  if (!ring.is_idempotent(e) || !ring.is_idempotent(f))
    throw AlgebraError(ErrorKind::WitnessInvalid, "e and f must be idempotent");
  if (ring.mul(a, b) != e || ring.mul(b, a) != f)
    throw AlgebraError(ErrorKind::WitnessInvalid,
                       "ab = " + to_string(ring.mul(a, b)) + ", ba = " +
                           to_string(ring.mul(b, a)) + " do not match e = " + to_string(e) +
                           ", f = " + to_string(f));
  IsoWitness w{ring.mul(e, a), ring.mul(f, b), e, f};
  if (!witness_valid(ring, w) || ring.mul(e, w.a) != w.a || ring.mul(f, w.b) != w.b)
    throw AlgebraError(ErrorKind::WitnessInvalid, "normalized witness failed its identities");
  return w;
}

/// Inverse table for the whole ring (entry -1 for non-units).
class UnitGroup {
 public:
  explicit UnitGroup(const FiniteRing& ring, std::uint64_t cap = kDefaultCap) {
    require_within_cap(ring.order(), cap, "ring " + ring.label());
    inverse_.assign(ring.order(), -1);
    for (std::uint64_t i = 0; i < ring.order(); ++i) {
      if (inverse_[i] >= 0) continue;
      if (auto inv = ring.try_inverse(ring.element_at(i))) {
        const auto j = ring.index_of(*inv);
        inverse_[i] = static_cast<std::int64_t>(j);
        inverse_[j] = static_cast<std::int64_t>(i);
      }
    }
  }

  bool is_unit(std::uint64_t index) const { return inverse_[index] >= 0; }
  std::uint64_t inverse(std::uint64_t index) const {
    return static_cast<std::uint64_t>(inverse_[index]);
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto v : inverse_) n += v >= 0;
    return n;
  }

 private:
  std::vector<std::int64_t> inverse_;
};

/// J(R) = { x : 1 - r x is a unit for every r }.
inline Ideal jacobson_radical(const FiniteRing& ring, std::uint64_t cap = kDefaultCap) {
  const UnitGroup units(ring, cap);
  const Element one = ring.one();
  std::vector<Element> members;
  for (std::uint64_t xi = 0; xi < ring.order(); ++xi) {
    const Element x = ring.element_at(xi);
    bool quasi_regular = true;
    for (std::uint64_t r = 0; r < ring.order() && quasi_regular; ++r)
      quasi_regular = units.is_unit(ring.index_of(ring.sub(one, ring.mul(ring.element_at(r), x))));
    if (quasi_regular) members.push_back(x);
  }
  return validate_ideal(ring, members, cap);
}

struct SemiprimeCheck {
  bool semiprime = true;
  std::optional<Element> witness;  // nonzero x with xRx = 0
};

inline SemiprimeCheck is_semiprime(const FiniteRing& ring, std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  for (std::uint64_t xi = 1; xi < ring.order(); ++xi) {
    const Element x = ring.element_at(xi);
    bool annihilated = true;
    for (std::size_t g = 0; g < ring.rank() && annihilated; ++g)
      annihilated = ring.is_zero(ring.mul(ring.mul(x, ring.basis(g)), x));
    if (annihilated) return {false, x};
  }
  return {};
}

struct DedekindCheck {
  bool dedekind_finite = true;
  std::optional<std::pair<Element, Element>> witness;  // ab = 1, ba != 1
};

/// Exhaustive ab = 1 => ba = 1 check. Always true for finite rings.
inline DedekindCheck is_dedekind_finite(const FiniteRing& ring, std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  const Element one = ring.one();
  for (std::uint64_t ai = 0; ai < ring.order(); ++ai) {
    const Element a = ring.element_at(ai);
    for (std::uint64_t bi = 0; bi < ring.order(); ++bi) {
      const Element b = ring.element_at(bi);
      if (ring.mul(a, b) == one && ring.mul(b, a) != one) return {false, std::pair{a, b}};
    }
  }
  return {};
}

struct Conjugator {
  Element u, u_inv, e, f;
};

inline bool conjugator_valid(const FiniteRing& ring, const Conjugator& c) {
  const Element one = ring.one();
  return ring.mul(c.u, c.u_inv) == one && ring.mul(c.u_inv, c.u) == one &&
         ring.mul(c.u, c.e) == ring.mul(c.f, c.u) &&
         ring.mul(ring.mul(c.u, c.e), c.u_inv) == c.f;
}

/// First unit u (lexicographic) with u e u^-1 = f; u = 1 when e == f.
inline std::optional<Conjugator> are_conjugate(const FiniteRing& ring, const UnitGroup& units,
                                               const Element& e, const Element& f) {
  require_idempotent(ring, e);
  require_idempotent(ring, f);
  if (e == f) return Conjugator{ring.one(), ring.one(), e, f};
  for (std::uint64_t ui = 0; ui < ring.order(); ++ui) {
    if (!units.is_unit(ui)) continue;
    const Element u = ring.element_at(ui);
    const Element u_inv = ring.element_at(units.inverse(ui));
    if (ring.mul(ring.mul(u, e), u_inv) == f) return Conjugator{u, u_inv, e, f};
  }
  return std::nullopt;
}

inline std::optional<Conjugator> are_conjugate(const FiniteRing& ring, const Element& e,
                                               const Element& f,
                                               std::uint64_t cap = kDefaultCap) {
  return are_conjugate(ring, UnitGroup(ring, cap), e, f);
}

struct PipelineResult {
  Conjugator conjugator;
  Element perturbation;  // x = f - e
  std::vector<std::string> log;
};

/// Builds u = 1 + x(2e - 1) with x = f - e, following the route through
/// R/J: e is central modulo J, its image coincides with that of f, hence
/// x lies in J and u is a unit with ue = fu.
///
/// The radical and quotient are computed once per ring; run() can then be
/// called for many (e, f) pairs.
class ConjugatorPipeline {
 public:
  explicit ConjugatorPipeline(const FiniteRing& ring, std::uint64_t cap = kDefaultCap)
      : ring_(ring),
        cap_(cap),
        radical_(jacobson_radical(ring, cap)),
        quotient_(quotient_ring(ring, radical_, cap)) {}

  const Ideal& radical() const noexcept { return radical_; }
  const QuotientRing& quotient() const noexcept { return quotient_; }

  PipelineResult run(const Element& e, const Element& f) const {
    require_idempotent(ring_, e);
    require_idempotent(ring_, f);
    const bool left = is_left_semicentral(ring_, e).holds;
    const bool right = is_right_semicentral(ring_, e).holds;
    if (!left && !right)
      throw AlgebraError(ErrorKind::NotSemicentral,
                         to_string(e) + " is neither left nor right semicentral");
    auto witness = find_iso_witness(ring_, e, f, cap_);
    if (!witness)
      throw AlgebraError(ErrorKind::NotIsomorphic,
                         to_string(e) + " and " + to_string(f) + " are not isomorphic");

    PipelineResult out;
    auto& log = out.log;
    log.push_back(std::string("e = ") + to_string(e) + " is " +
                  (left && right ? "central" : left ? "left semicentral" : "right semicentral"));
    log.push_back("iso witness a = " + to_string(witness->a) + ", b = " + to_string(witness->b));

    const FiniteRing& bar = quotient_.ring();
    log.push_back("radical: |J| = " + std::to_string(radical_.size()) + ", |R/J| = " +
                  std::to_string(bar.order()));

    const Element e_bar = quotient_.project(e);
    const Element f_bar = quotient_.project(f);
    if (!is_central(bar, e_bar).holds)
      throw PipelineAssertionFailed("central-in-quotient",
                                    "image of e " + to_string(e_bar) + " is not central in R/J");
    log.push_back("image of e is central in R/J");

    const IsoWitness w_bar = normalize_iso_witness(bar, quotient_.project(witness->a),
                                                   quotient_.project(witness->b), e_bar, f_bar);
    if (bar.mul(e_bar, f_bar) != f_bar || bar.mul(e_bar, w_bar.b) != w_bar.b)
      throw PipelineAssertionFailed("witness-in-corner",
                                    "f or b does not lie in the corner eR of R/J");
    log.push_back("normalized witness lies in the corner eR/J");

    // e central in R/J, so eR/J = e(R/J)e is a unital ring with identity e.
    if (!bar.is_zero(e_bar)) {
      const CornerRing corner = corner_ring(bar, e_bar, cap_);
      if (!is_dedekind_finite(corner.ring(), cap_).dedekind_finite)
        throw PipelineAssertionFailed("corner-dedekind-finite",
                                      "corner of R/J at e is not Dedekind-finite");
      log.push_back("corner ring of order " + std::to_string(corner.ring().order()) +
                    " is Dedekind-finite");
    }
    if (f_bar != e_bar)
      throw PipelineAssertionFailed("images-coincide", "image of f " + to_string(f_bar) +
                                                           " differs from image of e " +
                                                           to_string(e_bar));
    log.push_back("images of e and f coincide in R/J");

    const Element x = ring_.sub(f, e);
    if (!radical_.contains(ring_, x))
      throw PipelineAssertionFailed("perturbation-in-radical",
                                    "x = f - e = " + to_string(x) + " is not in J");
    log.push_back("x = f - e = " + to_string(x) + " lies in J");

    const Element two_e_minus_one = ring_.sub(ring_.add(e, e), ring_.one());
    const Element u = ring_.add(ring_.one(), ring_.mul(x, two_e_minus_one));
    auto u_inv = ring_.try_inverse(u);
    if (!u_inv)
      throw PipelineAssertionFailed("unit-formed", "u = " + to_string(u) + " is not a unit");
    log.push_back("u = 1 + x(2e - 1) = " + to_string(u) + ", u^-1 = " + to_string(*u_inv));

    Conjugator c{u, *u_inv, e, f};
    if (ring_.mul(u, e) != ring_.mul(f, u) || ring_.mul(ring_.mul(u, e), *u_inv) != f)
      throw PipelineAssertionFailed("conjugation-verified", "ue != fu");
    log.push_back("ue = fu verified");

    out.conjugator = std::move(c);
    out.perturbation = x;
    return out;
  }

 private:
  FiniteRing ring_;
  std::uint64_t cap_;
  Ideal radical_;
  QuotientRing quotient_;
};

inline PipelineResult construct_conjugator(const FiniteRing& ring, const Element& e,
                                           const Element& f, std::uint64_t cap = kDefaultCap) {
  return ConjugatorPipeline(ring, cap).run(e, f);
}

struct TransferReport {
  Side side = Side::Left;
  Element e, f;
  IsoWitness witness;
  SemicentralCheck f_check;
  std::optional<Conjugator> conjugator;

  bool holds() const { return f_check.holds && conjugator.has_value(); }
};

/// For e semicentral on `side` and f isomorphic to e: is f semicentral on the
/// same side, and conjugate to e?
inline TransferReport semicentral_transfer_check(const FiniteRing& ring, const Element& e,
                                                 const Element& f, Side side,
                                                 std::uint64_t cap = kDefaultCap) {
  if (!semicentral_check(ring, e, side).holds)
    throw AlgebraError(ErrorKind::NotSemicentral,
                       to_string(e) + " is not " + std::string(to_string(side)) + " semicentral");
  auto witness = find_iso_witness(ring, e, f, cap);
  if (!witness)
    throw AlgebraError(ErrorKind::NotIsomorphic,
                       to_string(e) + " and " + to_string(f) + " are not isomorphic");
  TransferReport out{side, e, f, *witness, semicentral_check(ring, f, side),
                     are_conjugate(ring, e, f, cap)};
  return out;
}

}  // namespace idemlab
