#pragma once

/**
 * @file ring.hpp
 * @brief Finite unital rings presented by structure constants.
 *
 * A ring R is stored through its additive group Z/m_1 x ... x Z/m_k together
 * with a rank-3 table c[i][j][l] such that g_i * g_j = sum_l c[i][j][l] g_l for
 * the standard generators g_i. Multiplication of arbitrary elements is the
 * bilinear extension of that table, so every bilinear identity can be checked
 * on generators alone.
 *
 * Elements are plain coordinate vectors tagged with the id of the ring they
 * belong to. The lexicographic order on coordinates coincides with the order
 * of element indices (first coordinate most significant), which is the order
 * used by every deterministic scan in this library.
 */

#include <atomic>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemlab/error.hpp"

namespace idemlab {

inline constexpr std::uint64_t kDefaultCap = 4096;

using Coords = std::vector<std::int64_t>;
using StructureTable = std::vector<std::vector<std::vector<std::int64_t>>>;

struct Element {
  std::uint64_t ring_id = 0;
  Coords coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline std::string to_string(const Coords& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + "]";
}

inline std::string to_string(const Element& x) { return to_string(x.coords); }

inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

namespace detail {

inline std::uint64_t next_ring_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// Product of the orders, saturating at uint64 max.
inline std::uint64_t saturating_order(const Coords& orders) {
  std::uint64_t n = 1;
  for (auto m : orders) {
    auto um = static_cast<std::uint64_t>(m);
    if (n > std::numeric_limits<std::uint64_t>::max() / um)
      return std::numeric_limits<std::uint64_t>::max();
    n *= um;
  }
  return n;
}

}  // namespace detail

inline void require_within_cap(std::uint64_t order, std::uint64_t cap,
                               const std::string& what) {
  if (order > cap)
    throw AlgebraError(ErrorKind::CapExceeded,
                       what + " has order " +
                           (order == std::numeric_limits<std::uint64_t>::max()
                                ? std::string(">2^64")
                                : std::to_string(order)) +
                           " above the enumeration cap " + std::to_string(cap));
}

class FiniteRing {
 public:
  /// Validates and builds a ring. Table entries and the identity may be given
  /// with negative or unreduced values; they are reduced modulo the target order.
  static FiniteRing build(Coords cyclic_orders, const StructureTable& table,
                          Coords one, std::string label,
                          std::uint64_t cap = kDefaultCap) {
    const std::size_t k = cyclic_orders.size();
    if (k == 0)
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "at least one cyclic factor is required");
    for (std::size_t i = 0; i < k; ++i)
      if (cyclic_orders[i] < 2)
        throw AlgebraError(ErrorKind::ShapeMismatch,
                           "cyclic order m_" + std::to_string(i) + " = " +
                               std::to_string(cyclic_orders[i]) + " is below 2");
    if (table.size() != k)
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "structure constant table has " +
                             std::to_string(table.size()) + " rows, expected " +
                             std::to_string(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (table[i].size() != k)
        throw AlgebraError(ErrorKind::ShapeMismatch,
                           "table row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < k; ++j)
        if (table[i][j].size() != k)
          throw AlgebraError(ErrorKind::ShapeMismatch,
                             "table entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has wrong length");
    }
    if (one.size() != k)
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "identity has " + std::to_string(one.size()) +
                             " coordinates, expected " + std::to_string(k));

    FiniteRing r;
    r.orders_ = std::move(cyclic_orders);
    r.label_ = std::move(label);
    r.id_ = detail::next_ring_id();
    r.order_ = detail::saturating_order(r.orders_);
    require_within_cap(r.order_, cap, "ring " + r.label_);
    r.init_strides();

    r.table_.assign(k * k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          r.table_[(i * k + j) * k + l] = floor_mod(table[i][j][l], r.orders_[l]);
    for (std::size_t i = 0; i < k; ++i) one[i] = floor_mod(one[i], r.orders_[i]);
    r.one_ = std::move(one);

    r.check_well_defined();
    r.check_associative();
    r.check_unit();
    return r;
  }

  std::size_t rank() const noexcept { return orders_.size(); }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t id() const noexcept { return id_; }
  const Coords& cyclic_orders() const noexcept { return orders_; }
  const std::string& label() const noexcept { return label_; }

  std::int64_t constant(std::size_t i, std::size_t j, std::size_t l) const {
    const std::size_t k = rank();
    return table_[(i * k + j) * k + l];
  }

  /// The table in nested form, as accepted by build().
  StructureTable structure_constants() const {
    const std::size_t k = rank();
    StructureTable t(k, std::vector<std::vector<std::int64_t>>(k, Coords(k)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) t[i][j][l] = constant(i, j, l);
    return t;
  }

  Element zero() const { return Element{id_, Coords(rank(), 0)}; }
  Element one() const { return Element{id_, one_}; }
  Element basis(std::size_t i) const {
    Coords c(rank(), 0);
    c.at(i) = 1;
    return Element{id_, std::move(c)};
  }

  /// Strict element construction: every coordinate must already lie in [0, m_i).
  Element element(Coords coords) const {
    if (coords.size() != rank())
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "element " + to_string(coords) + " needs " +
                             std::to_string(rank()) + " coordinates in " + label_);
    for (std::size_t i = 0; i < rank(); ++i)
      if (coords[i] < 0 || coords[i] >= orders_[i])
        throw AlgebraError(ErrorKind::CoordinateOutOfRange,
                           "coordinate " + std::to_string(i) + " of " +
                               to_string(coords) + " not in [0," +
                               std::to_string(orders_[i]) + ")");
    return Element{id_, std::move(coords)};
  }

  /// Lenient construction: coordinates are reduced modulo the cyclic orders.
  Element reduce(Coords coords) const {
    if (coords.size() != rank())
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "element " + to_string(coords) + " has wrong length");
    for (std::size_t i = 0; i < rank(); ++i) coords[i] = floor_mod(coords[i], orders_[i]);
    return Element{id_, std::move(coords)};
  }

  bool owns(const Element& x) const noexcept { return x.ring_id == id_; }

  std::uint64_t index_of(const Element& x) const {
    check(x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      idx += static_cast<std::uint64_t>(x.coords[i]) * strides_[i];
    return idx;
  }

  Element element_at(std::uint64_t index) const {
    Coords c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      c[i] = static_cast<std::int64_t>(index / strides_[i]);
      index %= strides_[i];
    }
    return Element{id_, std::move(c)};
  }

  Element add(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element z{id_, Coords(rank())};
    for (std::size_t i = 0; i < rank(); ++i)
      z.coords[i] = (x.coords[i] + y.coords[i]) % orders_[i];
    return z;
  }

  Element neg(const Element& x) const {
    check(x);
    Element z{id_, Coords(rank())};
    for (std::size_t i = 0; i < rank(); ++i)
      z.coords[i] = x.coords[i] == 0 ? 0 : orders_[i] - x.coords[i];
    return z;
  }

  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

  Element scalar_mul(std::int64_t n, const Element& x) const {
    check(x);
    Element z{id_, Coords(rank())};
    for (std::size_t i = 0; i < rank(); ++i)
      z.coords[i] = floor_mod(floor_mod(n, orders_[i]) * x.coords[i], orders_[i]);
    return z;
  }

  Element mul(const Element& x, const Element& y) const {
    check(x);
    check(y);
    const std::size_t k = rank();
    Coords acc(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (x.coords[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (y.coords[j] == 0) continue;
        const std::int64_t xy = x.coords[i] * y.coords[j];
        const std::int64_t* row = &table_[(i * k + j) * k];
        for (std::size_t l = 0; l < k; ++l)
          if (row[l]) acc[l] = (acc[l] + xy % orders_[l] * row[l]) % orders_[l];
      }
    }
    return Element{id_, std::move(acc)};
  }

  bool is_zero(const Element& x) const {
    check(x);
    for (auto c : x.coords)
      if (c) return false;
    return true;
  }

  bool is_idempotent(const Element& x) const { return mul(x, x) == x; }

  /// Two-sided inverse via the power sequence x, x^2, ...: in a finite ring x
  /// is a unit iff some power equals 1, and then x^(n-1) is the inverse.
  std::optional<Element> try_inverse(const Element& x) const {
    check(x);
    const Element unit = one();
    Element prev = unit;
    Element p = x;
    for (std::uint64_t step = 1; step <= order_; ++step) {
      if (p == unit) return prev;
      if (is_zero(p)) return std::nullopt;
      prev = p;
      p = mul(p, x);
    }
    return std::nullopt;
  }

  bool is_unit(const Element& x) const { return try_inverse(x).has_value(); }

  Element inverse(const Element& x) const {
    auto inv = try_inverse(x);
    if (!inv)
      throw AlgebraError(ErrorKind::NotInvertible,
                         to_string(x) + " is not a unit of " + label_);
    return *inv;
  }

  /// Same additive group, multiplication reversed.
  FiniteRing opposite() const {
    FiniteRing r = *this;
    r.id_ = detail::next_ring_id();
    r.label_ = label_ + "^op";
    const std::size_t k = rank();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          r.table_[(i * k + j) * k + l] = constant(j, i, l);
    return r;
  }

  /// Reinterprets coordinates of an element of a ring with the same additive
  /// group (e.g. the opposite ring) as an element of this ring.
  Element transport(const Element& x) const { return element(x.coords); }

 private:
  FiniteRing() = default;

  void check(const Element& x) const {
    if (x.ring_id != id_)
      throw AlgebraError(ErrorKind::RingMismatch,
                         "element " + to_string(x) + " does not belong to " + label_);
  }

  void init_strides() {
    const std::size_t k = rank();
    strides_.assign(k, 1);
    if (order_ == std::numeric_limits<std::uint64_t>::max()) return;
    for (std::size_t i = k; i-- > 1;)
      strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(orders_[i]);
  }

  void check_well_defined() const {
    const std::size_t k = rank();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          const std::int64_t c = constant(i, j, l);
          if ((orders_[i] % orders_[l] * c) % orders_[l] != 0 ||
              (orders_[j] % orders_[l] * c) % orders_[l] != 0)
            throw AlgebraError(
                ErrorKind::WellDefinednessViolation,
                "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                    std::to_string(l) + "] = " + std::to_string(c) +
                    " is not killed by m_" + std::to_string(i) + " and m_" +
                    std::to_string(j) + " modulo m_" + std::to_string(l));
        }
  }

  void check_associative() const {
    const std::size_t k = rank();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          const Element gi = basis(i), gj = basis(j), gl = basis(l);
          if (mul(mul(gi, gj), gl) != mul(gi, mul(gj, gl)))
            throw AlgebraError(ErrorKind::AssociativityViolation,
                               "(g_" + std::to_string(i) + " g_" + std::to_string(j) +
                                   ") g_" + std::to_string(l) + " != g_" +
                                   std::to_string(i) + " (g_" + std::to_string(j) +
                                   " g_" + std::to_string(l) + ")");
        }
  }

  void check_unit() const {
    const Element u = one();
    for (std::size_t i = 0; i < rank(); ++i) {
      const Element gi = basis(i);
      if (mul(u, gi) != gi || mul(gi, u) != gi)
        throw AlgebraError(ErrorKind::UnitViolation,
                           "identity " + to_string(one_) + " does not fix g_" +
                               std::to_string(i));
    }
  }

  Coords orders_;
  std::vector<std::int64_t> table_;
  Coords one_;
  std::string label_;
  std::uint64_t id_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> strides_;
};

/// Free-function form of FiniteRing::build.
inline FiniteRing build_ring(Coords cyclic_orders, const StructureTable& table,
                             Coords one, std::string label,
                             std::uint64_t cap = kDefaultCap) {
  return FiniteRing::build(std::move(cyclic_orders), table, std::move(one),
                           std::move(label), cap);
}

/// Every element of R in lexicographic order.
inline std::vector<Element> all_elements(const FiniteRing& ring,
                                         std::uint64_t cap = kDefaultCap) {
  require_within_cap(ring.order(), cap, "ring " + ring.label());
  std::vector<Element> out;
  out.reserve(ring.order());
  for (std::uint64_t i = 0; i < ring.order(); ++i) out.push_back(ring.element_at(i));
  return out;
}

}  // namespace idemlab
