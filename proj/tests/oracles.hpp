#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls FiniteRing::mul; matrices are multiplied entrywise and
// residues are plain integers.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "idemlab/idemlab.hpp"

namespace oracle {

using idemlab::Coords;

/// Square matrix over Z/m, row-major.
struct Mat {
  std::size_t n = 0;
  std::int64_t m = 2;
  Coords a;

  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat z{x.n, x.m, Coords(x.n * x.n, 0)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < x.n; ++j) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < x.n; ++t) s += x.at(i, t) * y.at(t, j);
        z.a[i * x.n + j] = s % x.m;
      }
    return z;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = (x.a[i] + y.a[i]) % x.m;
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = ((x.a[i] - y.a[i]) % x.m + x.m) % x.m;
    return z;
  }
  friend bool operator==(const Mat&, const Mat&) = default;

  static Mat identity(std::size_t n, std::int64_t m) {
    Mat z{n, m, Coords(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) z.a[i * n + i] = 1;
    return z;
  }
  bool is_zero() const {
    for (auto v : a)
      if (v) return false;
    return true;
  }
};

/// Every n x n matrix over Z/m, optionally restricted to upper-triangular ones.
inline std::vector<Mat> all_matrices(std::size_t n, std::int64_t m, bool upper_only = false) {
  std::vector<Mat> out;
  Coords digits(n * n, 0);
  for (;;) {
    bool ok = true;
    if (upper_only)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) ok = ok && digits[i * n + j] == 0;
    if (ok) out.push_back({n, m, digits});
    std::size_t p = digits.size();
    while (p > 0 && ++digits[p - 1] == m) digits[--p] = 0;
    if (p == 0) return out;
  }
}

/// Coordinates of an upper-triangular matrix in the library's basis
/// (cells i <= j, row-major).
inline Coords upper_coords(const Mat& x) {
  Coords c;
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = i; j < x.n; ++j) c.push_back(x.at(i, j));
  return c;
}

inline bool is_unit(const std::vector<Mat>& ring, const Mat& x) {
  const Mat one = Mat::identity(x.n, x.m);
  for (const auto& y : ring)
    if (x * y == one && y * x == one) return true;
  return false;
}

inline bool is_nilpotent(const Mat& x) {
  Mat p = x;
  for (std::size_t k = 0; k <= x.a.size() + 1; ++k) {
    if (p.is_zero()) return true;
    p = p * x;
  }
  return false;
}

/// Jacobson radical of a finite ring as the largest nil left ideal:
/// x is in J iff every r x is nilpotent.
inline std::vector<Mat> radical(const std::vector<Mat>& ring) {
  std::vector<Mat> out;
  for (const auto& x : ring) {
    bool nil = true;
    for (const auto& r : ring) nil = nil && is_nilpotent(r * x);
    if (nil) out.push_back(x);
  }
  return out;
}

inline std::set<std::int64_t> zmod_idempotents(std::int64_t m) {
  std::set<std::int64_t> out;
  for (std::int64_t x = 0; x < m; ++x)
    if (x * x % m == x) out.insert(x);
  return out;
}

/// Ring-agnostic oracles that only use add/sub and a caller-supplied
/// multiplication table scan over all elements.
inline std::optional<idemlab::Element> scan_inverse(const idemlab::FiniteRing& r, const idemlab::Element& x) {
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    const auto y = r.element_at(i);
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
  }
  return std::nullopt;
}

inline idemlab::Element random_element(const idemlab::FiniteRing& r, std::mt19937_64& rng) {
  Coords c;
  for (auto m : r.cyclic_orders()) c.push_back(std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng));
  return r.element(c);
}

/// Rings of the default corpus, materialized once.
inline const std::vector<idemlab::FiniteRing>& corpus_rings() {
  static const std::vector<idemlab::FiniteRing> rings = [] {
    std::vector<idemlab::FiniteRing> out;
    const auto c = idemlab::default_corpus();
    for (const auto& e : c.rings) out.push_back(idemlab::materialize(e, c.cap));
    return out;
  }();
  return rings;
}

}  // namespace oracle
