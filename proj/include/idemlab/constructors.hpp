#pragma once

// Named ring families used to populate the verification corpus.

#include <string>
#include <utility>
#include <vector>

#include "idemlab/ring.hpp"

namespace idemlab {

namespace detail {

inline void require_modulus(std::int64_t m) {
  if (m < 2)
    throw AlgebraError(ErrorKind::ShapeMismatch,
                       "modulus " + std::to_string(m) + " is below 2");
}

inline std::uint64_t power_saturating(std::int64_t base, std::uint64_t exp) {
  return saturating_order(Coords(exp, base));
}

// Matrix units e_ij for (i,j) in `cells`, multiplied by e_ij e_kl = d_jk e_il.
inline FiniteRing matrix_unit_ring(std::size_t n, std::int64_t m,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                   std::string label, std::uint64_t cap) {
  require_within_cap(power_saturating(m, cells.size()), cap, label);
  const std::size_t k = cells.size();
  std::vector<std::vector<std::ptrdiff_t>> index(n, std::vector<std::ptrdiff_t>(n, -1));
  for (std::size_t t = 0; t < k; ++t) index[cells[t].first][cells[t].second] = static_cast<std::ptrdiff_t>(t);

  StructureTable table(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const auto [i, j] = cells[a];
      const auto [kk, l] = cells[b];
      if (j == kk && index[i][l] >= 0) table[a][b][static_cast<std::size_t>(index[i][l])] = 1;
    }
  Coords one(k, 0);
  for (std::size_t i = 0; i < n; ++i) one[static_cast<std::size_t>(index[i][i])] = 1;
  return FiniteRing::build(Coords(k, m), table, std::move(one), std::move(label), cap);
}

}  // namespace detail

/// Z/m.
inline FiniteRing zmod_ring(std::int64_t m, std::uint64_t cap = kDefaultCap) {
  detail::require_modulus(m);
  return FiniteRing::build({m}, {{{1}}}, {1}, "Z/" + std::to_string(m), cap);
}

/// M_n(Z/m) on the row-major matrix-unit basis e_11, e_12, ..., e_nn.
inline FiniteRing matrix_ring(std::size_t n, std::int64_t m,
                              std::uint64_t cap = kDefaultCap) {
  detail::require_modulus(m);
  if (n == 0) throw AlgebraError(ErrorKind::ShapeMismatch, "matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells.emplace_back(i, j);
  return detail::matrix_unit_ring(n, m, cells,
                                  "M" + std::to_string(n) + "(Z/" + std::to_string(m) + ")", cap);
}

/// Upper (or lower) triangular n x n matrices over Z/m, basis e_ij with i <= j
/// (resp. i >= j) in row-major order. For n = 2 upper: e11, e12, e22.
inline FiniteRing triangular_ring(std::size_t n, std::int64_t m, bool upper,
                                  std::uint64_t cap = kDefaultCap) {
  detail::require_modulus(m);
  if (n == 0) throw AlgebraError(ErrorKind::ShapeMismatch, "matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (upper ? i <= j : i >= j) cells.emplace_back(i, j);
  std::string label = "T" + std::to_string(n) + "(Z/" + std::to_string(m) + ")";
  if (!upper) label += "_lower";
  return detail::matrix_unit_ring(n, m, cells, std::move(label), cap);
}

/// R1 x R2 with componentwise operations; generators of R1 come first.
inline FiniteRing product_ring(const FiniteRing& r1, const FiniteRing& r2,
                               std::uint64_t cap = kDefaultCap) {
  const std::size_t k1 = r1.rank(), k2 = r2.rank(), k = k1 + k2;
  Coords orders = r1.cyclic_orders();
  orders.insert(orders.end(), r2.cyclic_orders().begin(), r2.cyclic_orders().end());
  std::string label = r1.label() + "×" + r2.label();
  require_within_cap(detail::saturating_order(orders), cap, label);

  StructureTable table(k, std::vector<Coords>(k, Coords(k, 0)));
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j)
      for (std::size_t l = 0; l < k1; ++l) table[i][j][l] = r1.constant(i, j, l);
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k2; ++j)
      for (std::size_t l = 0; l < k2; ++l) table[k1 + i][k1 + j][k1 + l] = r2.constant(i, j, l);
  Coords one = r1.one().coords;
  const Coords one2 = r2.one().coords;
  one.insert(one.end(), one2.begin(), one2.end());
  return FiniteRing::build(std::move(orders), table, std::move(one), std::move(label), cap);
}

/// Z/m[x]/(x^2) on the basis 1, x.
inline FiniteRing dual_numbers(std::int64_t m, std::uint64_t cap = kDefaultCap) {
  detail::require_modulus(m);
  StructureTable table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  return FiniteRing::build({m, m}, table, {1, 0}, "Z/" + std::to_string(m) + "[x]/(x^2)", cap);
}

/// Group ring Z/m[C2] on the basis 1, g with g^2 = 1.
inline FiniteRing group_ring_c2(std::int64_t m, std::uint64_t cap = kDefaultCap) {
  detail::require_modulus(m);
  StructureTable table = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  return FiniteRing::build({m, m}, table, {1, 0}, "Z/" + std::to_string(m) + "[C2]", cap);
}

}  // namespace idemlab
