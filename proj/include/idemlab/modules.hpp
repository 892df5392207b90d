#pragma once

/**
 * @file modules.hpp
 * @brief Finite right modules, their Hom groups and endomorphism rings.
 *
 * Module elements are row vectors over Z/n_1 x ... x Z/n_t. The action of a
 * ring generator g_i is a t x t integer matrix A_i whose row c is the image of
 * generator c, so v.g_i = v A_i and right-module associativity reads
 * A(g_i g_j) = A_i A_j (apply A_i first).
 *
 * A module map D -> N is likewise a matrix whose row c is the image of
 * generator c of D. Endomorphisms compose as functions: in End(M) the
 * product phi psi means "psi first", whose matrix is Psi * Phi.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "idemlab/idempotents.hpp"
#include "idemlab/presentation.hpp"
#include "idemlab/ring.hpp"

namespace idemlab {

using IntMatrix = std::vector<Coords>;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

class FiniteModule {
 public:
  static FiniteModule build(const FiniteRing& ring, Coords cyclic_orders,
                            std::vector<IntMatrix> action, std::string label = {},
                            std::uint64_t cap = kDefaultCap) {
    const std::size_t t = cyclic_orders.size();
    for (std::size_t c = 0; c < t; ++c)
      if (cyclic_orders[c] < 2)
        throw AlgebraError(ErrorKind::IllFormedModule,
                           "cyclic order n_" + std::to_string(c) + " is below 2");
    if (action.size() != ring.rank())
      throw AlgebraError(ErrorKind::IllFormedModule,
                         "need one action matrix per ring generator (" +
                             std::to_string(ring.rank()) + "), got " +
                             std::to_string(action.size()));
    FiniteModule m(ring);
    m.orders_ = std::move(cyclic_orders);
    m.label_ = label.empty() ? "module over " + ring.label() : std::move(label);
    m.order_ = detail::saturating_order(m.orders_);
    require_within_cap(m.order_, cap, "module " + m.label_);
    m.strides_.assign(t, 1);
    for (std::size_t c = t; c-- > 1;) m.strides_[c - 1] = m.strides_[c] * static_cast<std::uint64_t>(m.orders_[c]);

    for (std::size_t i = 0; i < action.size(); ++i) {
      IntMatrix& a = action[i];
      if (a.size() != t)
        throw AlgebraError(ErrorKind::IllFormedModule,
                           "action matrix " + std::to_string(i) + " has wrong row count");
      for (std::size_t c = 0; c < t; ++c) {
        if (a[c].size() != t)
          throw AlgebraError(ErrorKind::IllFormedModule,
                             "action matrix " + std::to_string(i) + " has wrong column count");
        for (std::size_t r = 0; r < t; ++r) {
          a[c][r] = floor_mod(a[c][r], m.orders_[r]);
          // Generator c has order n_c and g_i has additive order m_i.
          if ((m.orders_[c] % m.orders_[r]) * a[c][r] % m.orders_[r] != 0 ||
              (ring.cyclic_orders()[i] % m.orders_[r]) * a[c][r] % m.orders_[r] != 0)
            throw AlgebraError(ErrorKind::IllFormedModule,
                               "action matrix " + std::to_string(i) + " entry (" +
                                   std::to_string(c) + "," + std::to_string(r) +
                                   ") is not a well-defined additive map");
        }
      }
    }
    m.action_ = std::move(action);

    // one acts as the identity; A(g_i g_j) = A_i A_j.
    for (std::size_t c = 0; c < t; ++c) {
      Coords gen(t, 0);
      gen[c] = 1;
      if (m.act(gen, ring.one()) != gen)
        throw AlgebraError(ErrorKind::IllFormedModule,
                           "identity does not act trivially on generator " + std::to_string(c));
      for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < ring.rank(); ++j)
          if (m.act(m.act(gen, ring.basis(i)), ring.basis(j)) !=
              m.act(gen, ring.mul(ring.basis(i), ring.basis(j))))
            throw AlgebraError(ErrorKind::IllFormedModule,
                               "action is not multiplicative on (g_" + std::to_string(i) +
                                   ", g_" + std::to_string(j) + ") at generator " +
                                   std::to_string(c));
    }
    return m;
  }

  const FiniteRing& ring() const noexcept { return ring_; }
  const Coords& cyclic_orders() const noexcept { return orders_; }
  const std::vector<IntMatrix>& action() const noexcept { return action_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  Coords reduce(Coords v) const {
    for (std::size_t c = 0; c < rank(); ++c) v[c] = floor_mod(v[c], orders_[c]);
    return v;
  }

  Coords add(const Coords& v, const Coords& w) const {
    Coords out(rank());
    for (std::size_t c = 0; c < rank(); ++c) out[c] = (v[c] + w[c]) % orders_[c];
    return out;
  }

  /// v . x for a ring element x.
  Coords act(const Coords& v, const Element& x) const {
    Coords out(rank(), 0);
    for (std::size_t i = 0; i < ring_.rank(); ++i) {
      if (x.coords[i] == 0) continue;
      for (std::size_t c = 0; c < rank(); ++c) {
        if (v[c] == 0) continue;
        const std::int64_t s = v[c] * x.coords[i];
        for (std::size_t r = 0; r < rank(); ++r)
          out[r] = (out[r] + s % orders_[r] * action_[i][c][r]) % orders_[r];
      }
    }
    return out;
  }

  std::uint64_t index_of(const Coords& v) const {
    std::uint64_t idx = 0;
    for (std::size_t c = 0; c < rank(); ++c) idx += static_cast<std::uint64_t>(v[c]) * strides_[c];
    return idx;
  }

  Coords element_at(std::uint64_t index) const {
    Coords v(rank());
    for (std::size_t c = 0; c < rank(); ++c) {
      v[c] = static_cast<std::int64_t>(index / strides_[c]);
      index %= strides_[c];
    }
    return v;
  }

  /// Additive order of v.
  std::int64_t order_of(const Coords& v) const {
    std::int64_t ord = 1;
    for (std::size_t c = 0; c < rank(); ++c)
      if (v[c]) ord = std::lcm(ord, orders_[c] / gcd64(orders_[c], v[c]));
    return ord;
  }

 private:
  explicit FiniteModule(FiniteRing ring) : ring_(std::move(ring)) {}

  FiniteRing ring_;
  Coords orders_;
  std::vector<IntMatrix> action_;
  std::string label_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> strides_;
};

/// R as a right module over itself.
inline FiniteModule regular_module(const FiniteRing& ring, std::uint64_t cap = kDefaultCap) {
  const std::size_t k = ring.rank();
  std::vector<IntMatrix> action(k, IntMatrix(k, Coords(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) action[i][c][r] = ring.constant(c, i, r);
  return FiniteModule::build(ring, ring.cyclic_orders(), std::move(action),
                             ring.label() + "_" + ring.label(), cap);
}

struct ModuleMap {
  IntMatrix matrix;  // rows = source generators, columns = target generators

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
  friend auto operator<=>(const ModuleMap&, const ModuleMap&) = default;

  bool is_zero() const {
    for (const auto& row : matrix)
      for (auto v : row)
        if (v) return false;
    return true;
  }
};

inline std::string to_string(const ModuleMap& f) {
  std::string out = "[";
  for (std::size_t c = 0; c < f.matrix.size(); ++c) {
    if (c) out += ",";
    out += to_string(f.matrix[c]);
  }
  return out + "]";
}

/// Image of v under phi: D -> N.
inline Coords apply(const ModuleMap& phi, const Coords& v, const FiniteModule& target) {
  Coords out(target.rank(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!v[c]) continue;
    for (std::size_t r = 0; r < target.rank(); ++r)
      out[r] = (out[r] + v[c] % target.cyclic_orders()[r] * phi.matrix[c][r]) %
               target.cyclic_orders()[r];
  }
  return out;
}

/// psi o phi (phi first) for phi: D -> N, psi: N -> P.
inline ModuleMap compose(const ModuleMap& psi, const ModuleMap& phi, const FiniteModule& target) {
  ModuleMap out;
  out.matrix.reserve(phi.matrix.size());
  for (const auto& row : phi.matrix) out.matrix.push_back(apply(psi, row, target));
  return out;
}

inline ModuleMap identity_map(const FiniteModule& m) {
  ModuleMap id{IntMatrix(m.rank(), Coords(m.rank(), 0))};
  for (std::size_t c = 0; c < m.rank(); ++c) id.matrix[c][c] = 1;
  return id;
}

inline ModuleMap zero_map(const FiniteModule& source, const FiniteModule& target) {
  return ModuleMap{IntMatrix(source.rank(), Coords(target.rank(), 0))};
}

inline ModuleMap add_maps(const ModuleMap& x, const ModuleMap& y, const FiniteModule& target) {
  ModuleMap out = x;
  for (std::size_t c = 0; c < out.matrix.size(); ++c)
    out.matrix[c] = target.add(x.matrix[c], y.matrix[c]);
  return out;
}

inline ModuleMap sub_maps(const ModuleMap& x, const ModuleMap& y, const FiniteModule& target) {
  ModuleMap out = x;
  for (std::size_t c = 0; c < out.matrix.size(); ++c)
    for (std::size_t r = 0; r < target.rank(); ++r)
      out.matrix[c][r] = floor_mod(x.matrix[c][r] - y.matrix[c][r], target.cyclic_orders()[r]);
  return out;
}

inline void require_same_ring(const FiniteModule& x, const FiniteModule& y) {
  if (x.ring().id() != y.ring().id())
    throw AlgebraError(ErrorKind::RingMismatch,
                       "modules " + x.label() + " and " + y.label() + " are over different rings");
}

/// Every module map source -> target, in lexicographic order of the flattened
/// matrix. Rows are assigned generator by generator; each row ranges over the
/// target elements killed by the generator's order, and every commutation
/// equation is checked as soon as the rows it involves are fixed.
inline std::vector<ModuleMap> hom_space(const FiniteModule& source, const FiniteModule& target,
                                        std::uint64_t cap = kDefaultCap) {
  require_same_ring(source, target);
  require_within_cap(target.order(), cap, "module " + target.label());
  const FiniteRing& ring = source.ring();
  const std::size_t s = source.rank();

  std::vector<std::vector<Coords>> row_choices(s);
  for (std::size_t c = 0; c < s; ++c)
    for (std::uint64_t i = 0; i < target.order(); ++i) {
      Coords v = target.element_at(i);
      if (source.cyclic_orders()[c] % target.order_of(v) == 0) row_choices[c].push_back(std::move(v));
    }

  // Equation (c, g): (row c of A^D_g) . phi == phi[c] . A^N_g, checkable once
  // rows up to max(c, support of row c of A^D_g) are assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready_at(s);
  for (std::size_t c = 0; c < s; ++c)
    for (std::size_t g = 0; g < ring.rank(); ++g) {
      std::size_t last = c;
      for (std::size_t k = 0; k < s; ++k)
        if (source.action()[g][c][k]) last = std::max(last, k);
      ready_at[last].emplace_back(c, g);
    }

  std::vector<ModuleMap> out;
  ModuleMap phi{IntMatrix(s)};
  const std::uint64_t node_budget = cap * 1024;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> assign = [&](std::size_t c) {
    if (c == s) {
      out.push_back(phi);
      if (out.size() > cap)
        throw AlgebraError(ErrorKind::CapExceeded,
                           "Hom(" + source.label() + ", " + target.label() +
                               ") exceeds the enumeration cap " + std::to_string(cap));
      return;
    }
    for (const auto& v : row_choices[c]) {
      if (++nodes > node_budget)
        throw AlgebraError(ErrorKind::CapExceeded, "Hom search exceeded its node budget");
      phi.matrix[c] = v;
      bool ok = true;
      for (const auto& [row, g] : ready_at[c]) {
        const Coords lhs = apply(phi, source.action()[g][row], target);
        const Coords rhs = target.act(phi.matrix[row], ring.basis(g));
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) assign(c + 1);
    }
  };
  assign(0);
  return out;
}

struct HomCheck {
  bool zero = true;
  std::optional<ModuleMap> witness;  // first nonzero map
};

inline HomCheck hom_is_zero(const FiniteModule& source, const FiniteModule& target,
                            std::uint64_t cap = kDefaultCap) {
  for (auto& phi : hom_space(source, target, cap))
    if (!phi.is_zero()) return {false, std::move(phi)};
  return {};
}

struct ModuleIso {
  ModuleMap forward;   // D1 -> D2
  ModuleMap backward;  // D2 -> D1
};

/// First phi in Hom(D1, D2) with a two-sided inverse in Hom(D2, D1).
inline std::optional<ModuleIso> modules_isomorphic(const FiniteModule& d1, const FiniteModule& d2,
                                                   std::uint64_t cap = kDefaultCap) {
  require_same_ring(d1, d2);
  if (d1.order() != d2.order()) return std::nullopt;
  const auto forward = hom_space(d1, d2, cap);
  std::optional<std::vector<ModuleMap>> backward;
  const ModuleMap id1 = identity_map(d1), id2 = identity_map(d2);
  for (const auto& phi : forward) {
    // Same finite order, so phi is bijective iff its kernel is trivial.
    bool injective = true;
    for (std::uint64_t i = 1; i < d1.order() && injective; ++i) {
      const Coords img = apply(phi, d1.element_at(i), d2);
      injective = std::any_of(img.begin(), img.end(), [](auto v) { return v != 0; });
    }
    if (!injective) continue;
    if (!backward) backward = hom_space(d2, d1, cap);
    for (const auto& psi : *backward)
      if (compose(psi, phi, d1) == id1 && compose(phi, psi, d2) == id2) return ModuleIso{phi, psi};
  }
  return std::nullopt;
}

/// End(M) re-presented as a FiniteRing, with the dictionary back to maps.
class EndomorphismRing {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteModule& module() const noexcept { return module_; }
  const std::vector<ModuleMap>& basis_maps() const noexcept { return basis_; }

  ModuleMap to_map(const Element& x) const {
    ModuleMap out = zero_map(module_, module_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::int64_t k = 0; k < x.coords.at(i); ++k) out = add_maps(out, basis_[i], module_);
    return out;
  }

  Element from_map(const ModuleMap& phi) const {
    auto it = coords_of_.find(phi);
    if (it == coords_of_.end())
      throw AlgebraError(ErrorKind::IllFormedModule, to_string(phi) + " is not an endomorphism");
    return ring_.element(it->second);
  }

 private:
  friend EndomorphismRing endomorphism_ring(const FiniteModule&, std::uint64_t);
  EndomorphismRing(FiniteRing ring, FiniteModule module)
      : ring_(std::move(ring)), module_(std::move(module)) {}

  FiniteRing ring_;
  FiniteModule module_;
  std::vector<ModuleMap> basis_;
  std::map<ModuleMap, Coords> coords_of_;
};

inline EndomorphismRing endomorphism_ring(const FiniteModule& m, std::uint64_t cap = kDefaultCap) {
  if (m.rank() == 0)
    throw AlgebraError(ErrorKind::IllFormedModule, "End(0) is the zero ring");
  const auto homs = hom_space(m, m, cap);
  std::map<ModuleMap, std::size_t> id_of;
  for (std::size_t t = 0; t < homs.size(); ++t) id_of[homs[t]] = t;
  const std::size_t zero_id = id_of.at(zero_map(m, m));
  auto add_ids = [&](std::size_t a, std::size_t b) { return id_of.at(add_maps(homs[a], homs[b], m)); };
  const auto dec = detail::decompose_abelian_group(homs.size(), zero_id, add_ids);
  const std::size_t k = dec.generators.size();

  // phi psi = phi o psi.
  StructureTable table(k, std::vector<Coords>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = dec.coords_of[id_of.at(compose(homs[dec.generators[i]], homs[dec.generators[j]], m))];
  FiniteRing ring = FiniteRing::build(dec.orders, table, dec.coords_of[id_of.at(identity_map(m))],
                                      "End(" + m.label() + ")", cap);
  EndomorphismRing end(std::move(ring), m);
  for (auto g : dec.generators) end.basis_.push_back(homs[g]);
  for (std::size_t t = 0; t < homs.size(); ++t) end.coords_of_[homs[t]] = dec.coords_of[t];
  return end;
}

/// A submodule given by its element set, re-presented on a cyclic basis.
struct Submodule {
  FiniteModule module;
  ModuleMap inclusion;                  // submodule -> ambient
  std::map<Coords, Coords> coords_of;   // ambient vector -> submodule coordinates
};

inline Submodule submodule_from_elements(const FiniteModule& ambient, const std::vector<char>& member,
                                         std::string label, std::uint64_t cap) {
  std::vector<std::uint64_t> members;
  std::map<std::uint64_t, std::size_t> id_of;
  for (std::uint64_t i = 0; i < member.size(); ++i)
    if (member[i]) {
      id_of[i] = members.size();
      members.push_back(i);
    }
  auto add_ids = [&](std::size_t a, std::size_t b) {
    return id_of.at(ambient.index_of(ambient.add(ambient.element_at(members[a]), ambient.element_at(members[b]))));
  };
  const auto dec = detail::decompose_abelian_group(members.size(), 0, add_ids);
  const std::size_t t = dec.generators.size();
  const FiniteRing& ring = ambient.ring();

  IntMatrix gens;
  for (auto g : dec.generators) gens.push_back(ambient.element_at(members[g]));
  std::vector<IntMatrix> action(ring.rank(), IntMatrix(t));
  for (std::size_t i = 0; i < ring.rank(); ++i)
    for (std::size_t c = 0; c < t; ++c)
      action[i][c] = dec.coords_of[id_of.at(ambient.index_of(ambient.act(gens[c], ring.basis(i))))];

  Submodule out{FiniteModule::build(ring, dec.orders, std::move(action), std::move(label), cap),
                ModuleMap{gens}, {}};
  for (std::size_t id = 0; id < members.size(); ++id)
    out.coords_of[ambient.element_at(members[id])] = dec.coords_of[id];
  return out;
}

struct Summand {
  Submodule image;       // D = Im(eps)
  Submodule complement;  // D' = Im(1 - eps), standing in for M/D
  ModuleMap projection;  // M -> D', v |-> v(1 - eps)
};

inline bool is_idempotent_map(const FiniteModule& m, const ModuleMap& eps) {
  return compose(eps, eps, m) == eps;
}

inline Summand summand_from_idempotent(const FiniteModule& m, const ModuleMap& eps,
                                       std::uint64_t cap = kDefaultCap) {
  if (!is_idempotent_map(m, eps))
    throw AlgebraError(ErrorKind::NotIdempotent, to_string(eps) + " is not an idempotent endomorphism");
  require_within_cap(m.order(), cap, "module " + m.label());
  const ModuleMap co = sub_maps(identity_map(m), eps, m);
  std::vector<char> in_image(m.order(), 0), in_complement(m.order(), 0);
  for (std::uint64_t i = 0; i < m.order(); ++i) {
    const Coords v = m.element_at(i);
    in_image[m.index_of(apply(eps, v, m))] = 1;
    in_complement[m.index_of(apply(co, v, m))] = 1;
  }
  const auto image_size = std::count(in_image.begin(), in_image.end(), 1);
  const auto complement_size = std::count(in_complement.begin(), in_complement.end(), 1);
  for (std::uint64_t i = 1; i < m.order(); ++i)
    if (in_image[i] && in_complement[i])
      throw AlgebraError(ErrorKind::IllFormedModule, "image and complement intersect");
  if (static_cast<std::uint64_t>(image_size * complement_size) != m.order())
    throw AlgebraError(ErrorKind::IllFormedModule, "image and complement do not span M");

  Summand out{submodule_from_elements(m, in_image, "Im" + to_string(eps), cap),
              submodule_from_elements(m, in_complement, "Im(1-" + to_string(eps) + ")", cap),
              {}};
  for (std::size_t c = 0; c < m.rank(); ++c) {
    Coords gen(m.rank(), 0);
    gen[c] = 1;
    out.projection.matrix.push_back(out.complement.coords_of.at(apply(co, gen, m)));
  }
  return out;
}

inline Summand summand_from_idempotent(const EndomorphismRing& end, const Element& eps,
                                       std::uint64_t cap = kDefaultCap) {
  return summand_from_idempotent(end.module(), end.to_map(eps), cap);
}

struct IdempotentSummandRow {
  Element idempotent;
  std::uint64_t image_order = 0;
  std::uint64_t complement_order = 0;
  bool left_semicentral = false;
  bool right_semicentral = false;
  bool hom_summand_to_quotient_zero = false;  // Hom(D, M/D) = 0
  bool hom_quotient_to_summand_zero = false;  // Hom(M/D, D) = 0
};

struct CorollaryReport {
  std::string label;
  std::uint64_t module_order = 0;
  std::uint64_t end_order = 0;
  bool clause_c = true;  // End(M) Dedekind-finite
  bool clause_a = true;
  bool clause_a_prime = true;
  bool clause_b = true;
  bool bridge_left = true;         // left semicentral <=> Hom(D, M/D) = 0
  bool bridge_right = true;        // right semicentral <=> Hom(M/D, D) = 0
  bool conjugacy_bridge = true;    // conjugate <=> D1 ~ D2 and M/D1 ~ M/D2
  bool iso_bridge = true;          // ab/ba criterion <=> D1 ~ D2
  bool conjugacy_recorded = true;  // printed clause (b) pairs are also conjugate
  std::size_t isomorphic_pairs = 0;
  std::vector<IdempotentSummandRow> rows;
  std::vector<std::string> failures;

  bool ok() const {
    return clause_c && clause_a && clause_a_prime && clause_b && bridge_left && bridge_right &&
           conjugacy_bridge && iso_bridge && failures.empty();
  }
};

/// Checks the module-level clauses on every pair of idempotents of End(M),
/// together with the bridges between ring-side and module-side predicates.
inline CorollaryReport verify_corollary(const FiniteModule& m, std::uint64_t cap = kDefaultCap) {
  const EndomorphismRing end = endomorphism_ring(m, cap);
  const FiniteRing& s = end.ring();
  CorollaryReport rep;
  rep.label = m.label();
  rep.module_order = m.order();
  rep.end_order = s.order();
  rep.clause_c = is_dedekind_finite(s, cap).dedekind_finite;

  const auto idems = enumerate_idempotents(s, cap);
  std::vector<Summand> summands;
  for (const auto& eps : idems) {
    summands.push_back(summand_from_idempotent(end, eps, cap));
    const Summand& sm = summands.back();
    IdempotentSummandRow row;
    row.idempotent = eps;
    row.image_order = sm.image.module.order();
    row.complement_order = sm.complement.module.order();
    row.left_semicentral = is_left_semicentral(s, eps).holds;
    row.right_semicentral = is_right_semicentral(s, eps).holds;
    row.hom_summand_to_quotient_zero = hom_is_zero(sm.image.module, sm.complement.module, cap).zero;
    row.hom_quotient_to_summand_zero = hom_is_zero(sm.complement.module, sm.image.module, cap).zero;
    if (row.left_semicentral != row.hom_summand_to_quotient_zero) {
      rep.bridge_left = false;
      rep.failures.push_back("left bridge fails at " + to_string(eps));
    }
    if (row.right_semicentral != row.hom_quotient_to_summand_zero) {
      rep.bridge_right = false;
      rep.failures.push_back("right bridge fails at " + to_string(eps));
    }
    rep.rows.push_back(row);
  }

  const std::size_t n = idems.size();
  std::vector<std::vector<char>> image_iso(n, std::vector<char>(n, 0)), comp_iso = image_iso;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      image_iso[i][j] = image_iso[j][i] =
          modules_isomorphic(summands[i].image.module, summands[j].image.module, cap).has_value();
      comp_iso[i][j] = comp_iso[j][i] =
          modules_isomorphic(summands[i].complement.module, summands[j].complement.module, cap)
              .has_value();
    }

  const UnitGroup units(s, cap);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& r1 = rep.rows[i];
      const auto& r2 = rep.rows[j];
      const bool ring_iso = find_iso_witness(s, idems[i], idems[j], cap).has_value();
      const bool conj = are_conjugate(s, units, idems[i], idems[j]).has_value();
      if (ring_iso != static_cast<bool>(image_iso[i][j])) {
        rep.iso_bridge = false;
        rep.failures.push_back("iso bridge fails at (" + to_string(idems[i]) + ", " +
                               to_string(idems[j]) + ")");
      }
      if (conj != (image_iso[i][j] && comp_iso[i][j])) {
        rep.conjugacy_bridge = false;
        rep.failures.push_back("conjugacy bridge fails at (" + to_string(idems[i]) + ", " +
                               to_string(idems[j]) + ")");
      }
      if (!image_iso[i][j]) continue;
      ++rep.isomorphic_pairs;
      if (r1.hom_summand_to_quotient_zero && !r2.hom_summand_to_quotient_zero) {
        rep.clause_a = false;
        rep.failures.push_back("clause (a) fails at (" + to_string(idems[i]) + ", " +
                               to_string(idems[j]) + ")");
      }
      if (r1.hom_quotient_to_summand_zero && !r2.hom_quotient_to_summand_zero) {
        rep.clause_a_prime = false;
        rep.failures.push_back("clause (a') fails at (" + to_string(idems[i]) + ", " +
                               to_string(idems[j]) + ")");
      }
      if (r1.hom_summand_to_quotient_zero || r1.hom_quotient_to_summand_zero) {
        if (!comp_iso[i][j]) {
          rep.clause_b = false;
          rep.failures.push_back("clause (b) fails at (" + to_string(idems[i]) + ", " +
                                 to_string(idems[j]) + ")");
        }
        if (!conj) rep.conjugacy_recorded = false;
      }
    }
  return rep;
}

}  // namespace idemlab
