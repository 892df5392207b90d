#pragma once

// Re-presenting a finite abelian group as a product of cyclic groups.
//
// Used to give quotient rings, corner rings and endomorphism rings a fresh
// structure-constant presentation. The group is handed over as ids 0..n-1 in
// preference order together with an addition function on ids.

#include <cstdint>
#include <functional>
#include <vector>

#include "idemlab/error.hpp"
#include "idemlab/ring.hpp"

namespace idemlab::detail {

struct CyclicDecomposition {
  std::vector<std::size_t> generators;
  Coords orders;
  std::vector<Coords> coords_of;  // indexed by id
};

/// Greedy generator extraction: repeatedly pick the earliest element of
/// maximal order whose cyclic subgroup meets the span so far only in 0. The
/// span stays a direct summand at every step, so this always terminates with
/// a basis of the whole group.
inline CyclicDecomposition decompose_abelian_group(
    std::size_t n, std::size_t zero,
    const std::function<std::size_t(std::size_t, std::size_t)>& add) {
  CyclicDecomposition out;
  std::vector<char> in_span(n, 0);
  std::vector<std::size_t> span{zero};
  in_span[zero] = 1;

  auto order_of = [&](std::size_t g) {
    std::int64_t ord = 1;
    for (std::size_t t = g; t != zero; t = add(t, g)) ++ord;
    return ord;
  };

  while (span.size() < n) {
    std::size_t best = n;
    std::int64_t best_order = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (in_span[g]) continue;
      const std::int64_t ord = order_of(g);
      if (ord <= best_order) continue;
      bool independent = true;
      for (std::size_t t = add(g, g), s = 2; s < static_cast<std::size_t>(ord); t = add(t, g), ++s)
        if (in_span[t]) {
          independent = false;
          break;
        }
      if (independent) {
        best = g;
        best_order = ord;
      }
    }
    if (best == n)
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "cyclic decomposition stalled (addition is not a group law)");
    out.generators.push_back(best);
    out.orders.push_back(best_order);
    const std::size_t base = span.size();
    std::size_t shift = best;
    for (std::int64_t c = 1; c < best_order; ++c, shift = add(shift, best))
      for (std::size_t t = 0; t < base; ++t) {
        const std::size_t s = add(span[t], shift);
        in_span[s] = 1;
        span.push_back(s);
      }
  }

  // Coordinates: walk all combinations sum c_i g_i.
  out.coords_of.assign(n, Coords{});
  const std::size_t k = out.generators.size();
  Coords c(k, 0);
  std::size_t filled = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t acc) {
    if (i == k) {
      out.coords_of[acc] = c;
      ++filled;
      return;
    }
    std::size_t cur = acc;
    for (std::int64_t v = 0; v < out.orders[i]; ++v) {
      c[i] = v;
      walk(i + 1, cur);
      cur = add(cur, out.generators[i]);
    }
    c[i] = 0;
  };
  walk(0, zero);
  if (filled != n)
    throw AlgebraError(ErrorKind::ShapeMismatch, "cyclic decomposition is not a basis");
  return out;
}

}  // namespace idemlab::detail
