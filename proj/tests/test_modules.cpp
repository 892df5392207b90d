#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace idemlab;

namespace {

FiniteModule diag(const FiniteRing& r, Coords orders, std::string label = "M") {
  // Scalar action of Z/m on a direct sum of cyclic groups.
  IntMatrix id(orders.size(), Coords(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) id[i][i] = 1;
  return FiniteModule::build(r, std::move(orders), {id}, std::move(label));
}

// Every integer matrix phi (row c = image of generator c) that respects
// generator orders and commutes with the action, counted by raw scan.
std::uint64_t brute_force_end_count(const FiniteModule& m) {
  const Coords& ord = m.cyclic_orders();
  const std::size_t k = ord.size();
  std::vector<std::int64_t> digits(k * k, 0);
  auto image = [&](const Coords& v) {
    Coords out(k, 0);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d) out[d] += v[c] * digits[c * k + d];
    for (std::size_t d = 0; d < k; ++d) out[d] = floor_mod(out[d], ord[d]);
    return out;
  };
  auto act = [&](const Coords& v, std::size_t g) {
    Coords out(k, 0);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d) out[d] += v[c] * m.action()[g][c][d];
    for (std::size_t d = 0; d < k; ++d) out[d] = floor_mod(out[d], ord[d]);
    return out;
  };
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t c = 0; c < k && ok; ++c) {
      Coords v(k, 0);
      v[c] = ord[c];
      ok = image(v) == Coords(k, 0);
    }
    for (std::uint64_t i = 0; i < m.order() && ok; ++i) {
      const Coords v = m.element_at(i);
      for (std::size_t g = 0; g < m.ring().rank() && ok; ++g) ok = image(act(v, g)) == act(image(v), g);
    }
    count += ok;
    std::size_t p = digits.size();
    while (p > 0 && ++digits[p - 1] == ord[(p - 1) % k]) digits[--p] = 0;
    if (p == 0) return count;
  }
}

std::vector<FiniteModule> corpus_modules() {
  std::vector<FiniteModule> out;
  const auto c = default_corpus();
  for (const auto& e : c.modules) out.push_back(materialize(e, c.cap));
  return out;
}

}  // namespace

TEST(Module, Validation) {
  const auto z4 = zmod_ring(4);
  // 4 * generator must vanish: Z/8 is not a Z/4-module.
  EXPECT_THROW(FiniteModule::build(z4, {8}, {{{1}}}, "bad"), AlgebraError);
  // The identity must act trivially.
  EXPECT_THROW(FiniteModule::build(z4, {4}, {{{3}}}, "bad"), AlgebraError);
  // Wrong number of action matrices.
  EXPECT_THROW(FiniteModule::build(z4, {4}, {{{1}}, {{1}}}, "bad"), AlgebraError);
  // Non-multiplicative action of T2(Z/2): e11 acting as identity.
  const auto t2 = triangular_ring(2, 2, true);
  EXPECT_THROW(FiniteModule::build(t2, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}, "bad"),
               AlgebraError);
}

TEST(Module, RowVectorsUnderTriangularRing) {
  const auto t2 = triangular_ring(2, 2, true);
  const auto m = FiniteModule::build(t2, {2, 2}, {{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}}, "rows");
  // (1, 0) * [[1,1],[0,1]] = (1, 1)
  EXPECT_EQ(m.act({1, 0}, t2.element({1, 1, 1})), (Coords{1, 1}));
  EXPECT_EQ(m.act({0, 1}, t2.element({1, 1, 0})), (Coords{0, 0}));
}

TEST(End, OrdersAgainstBruteForce) {
  const auto z2 = zmod_ring(2), z4 = zmod_ring(4), z6 = zmod_ring(6);
  const auto v22 = diag(z2, {2, 2});
  EXPECT_EQ(endomorphism_ring(v22).ring().order(), 16u);
  EXPECT_EQ(brute_force_end_count(v22), 16u);
  const auto cyc6 = regular_module(z6);
  EXPECT_EQ(endomorphism_ring(cyc6).ring().order(), 6u);
  EXPECT_EQ(brute_force_end_count(cyc6), 6u);
  const auto v42 = diag(z4, {4, 2});
  EXPECT_EQ(endomorphism_ring(v42).ring().order(), 32u);
  EXPECT_EQ(brute_force_end_count(v42), 32u);
  for (const auto& m : corpus_modules())
    EXPECT_EQ(endomorphism_ring(m).ring().order(), brute_force_end_count(m)) << m.label();
}

TEST(End, MultiplicationIsComposition) {
  const auto z4 = zmod_ring(4);
  const auto m = diag(z4, {4, 2});
  const auto end = endomorphism_ring(m);
  const auto& s = end.ring();
  for (const auto& x : all_elements(s))
    for (const auto& y : all_elements(s)) {
      // (xy)(v) = x(y(v)): apply y first.
      const auto xy = end.to_map(s.mul(x, y));
      for (std::uint64_t i = 0; i < m.order(); ++i) {
        const Coords v = m.element_at(i);
        ASSERT_EQ(apply(xy, v, m), apply(end.to_map(x), apply(end.to_map(y), v, m), m));
      }
    }
  EXPECT_EQ(end.to_map(s.one()), identity_map(m));
  for (const auto& x : all_elements(s)) EXPECT_EQ(end.from_map(end.to_map(x)), x);
}

TEST(End, TwoByTwoMatricesOverZ2) {
  const auto end = endomorphism_ring(diag(zmod_ring(2), {2, 2}));
  // Same idempotent and radical counts as M2(Z/2).
  EXPECT_EQ(enumerate_idempotents(end.ring()).size(), 8u);
  EXPECT_TRUE(jacobson_radical(end.ring()).is_zero());
}

TEST(Summand, Examples) {
  const auto m = diag(zmod_ring(2), {2, 2});
  const auto id = summand_from_idempotent(m, identity_map(m));
  EXPECT_EQ(id.image.module.order(), 4u);
  EXPECT_EQ(id.complement.module.order(), 1u);
  const auto zero = summand_from_idempotent(m, zero_map(m, m));
  EXPECT_EQ(zero.image.module.order(), 1u);
  EXPECT_EQ(zero.complement.module.order(), 4u);
  const auto p = summand_from_idempotent(m, ModuleMap{{{1, 0}, {0, 0}}});
  EXPECT_EQ(p.image.module.order(), 2u);
  EXPECT_EQ(p.complement.module.order(), 2u);
  EXPECT_THROW(summand_from_idempotent(m, ModuleMap{{{0, 1}, {0, 0}}}), AlgebraError);
}

TEST(Summand, ProjectionKillsImage) {
  for (const auto& m : corpus_modules()) {
    const auto end = endomorphism_ring(m);
    for (const auto& eps : enumerate_idempotents(end.ring())) {
      const auto sm = summand_from_idempotent(end, eps);
      EXPECT_EQ(sm.image.module.order() * sm.complement.module.order(), m.order());
      const auto proj_on_image = compose(sm.projection, sm.image.inclusion, sm.complement.module);
      EXPECT_TRUE(proj_on_image.is_zero()) << m.label();
    }
  }
}

TEST(Hom, Examples) {
  const auto z6 = zmod_ring(6);
  EXPECT_TRUE(hom_is_zero(diag(z6, {2}), diag(z6, {3})).zero);
  const auto z2 = zmod_ring(2);
  const auto d = diag(z2, {2});
  const auto h = hom_is_zero(d, d);
  ASSERT_FALSE(h.zero);
  EXPECT_EQ(*h.witness, identity_map(d));
  const auto m = diag(z2, {2, 2});
  const auto sm = summand_from_idempotent(m, ModuleMap{{{1, 0}, {0, 0}}});
  EXPECT_FALSE(hom_is_zero(sm.image.module, sm.complement.module).zero);
  EXPECT_EQ(hom_space(sm.image.module, sm.complement.module).size(), 2u);
  EXPECT_THROW(hom_is_zero(d, diag(z6, {2})), AlgebraError);
}

TEST(Iso, Examples) {
  const auto z2 = zmod_ring(2);
  EXPECT_TRUE(modules_isomorphic(diag(z2, {2}), diag(z2, {2})));
  const auto z4 = zmod_ring(4);
  EXPECT_FALSE(modules_isomorphic(diag(z4, {2}), diag(z4, {4})));
  const auto m = diag(z2, {2, 2});
  const auto first = summand_from_idempotent(m, ModuleMap{{{1, 0}, {0, 0}}});
  const auto second = summand_from_idempotent(m, ModuleMap{{{0, 0}, {0, 1}}});
  const auto iso = modules_isomorphic(first.image.module, second.image.module);
  ASSERT_TRUE(iso);
  EXPECT_EQ(compose(iso->backward, iso->forward, first.image.module), identity_map(first.image.module));
  // Same order, different structure: Z/4 vs Z/2 + Z/2 over Z/4.
  EXPECT_FALSE(modules_isomorphic(diag(z4, {4}), diag(z4, {2, 2})));
}

TEST(ModuleClauses, CoprimeDecomposition) {
  const auto rep = verify_corollary(diag(zmod_ring(6), {2, 3}));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.end_order, 6u);
  ASSERT_EQ(rep.rows.size(), 4u);
  for (const auto& row : rep.rows) {
    EXPECT_TRUE(row.left_semicentral && row.right_semicentral);
    EXPECT_TRUE(row.hom_summand_to_quotient_zero && row.hom_quotient_to_summand_zero);
  }
}

TEST(ModuleClauses, TwoCopiesOfZ2) {
  const auto m = diag(zmod_ring(2), {2, 2});
  const auto rep = verify_corollary(m);
  EXPECT_TRUE(rep.ok());
  const auto end = endomorphism_ring(m);
  const auto p = end.from_map(ModuleMap{{{1, 0}, {0, 0}}});
  bool seen = false;
  for (const auto& row : rep.rows) {
    if (row.idempotent.coords != p.coords) continue;
    seen = true;
    EXPECT_FALSE(row.left_semicentral);
    EXPECT_FALSE(row.hom_summand_to_quotient_zero);
  }
  EXPECT_TRUE(seen);
  // eps = 1: Hom(M, 0) = 0 and 1 is central.
  for (const auto& row : rep.rows)
    if (row.idempotent.coords == end.ring().one().coords) {
      EXPECT_TRUE(row.hom_summand_to_quotient_zero);
      EXPECT_TRUE(row.left_semicentral && row.right_semicentral);
    }
}

TEST(ModuleClauses, BridgesOnCorpus) {
  for (const auto& m : corpus_modules()) {
    const auto rep = verify_corollary(m);
    EXPECT_TRUE(rep.bridge_left) << m.label();
    EXPECT_TRUE(rep.bridge_right) << m.label();
    EXPECT_TRUE(rep.iso_bridge) << m.label();
    EXPECT_TRUE(rep.conjugacy_bridge) << m.label();
    EXPECT_TRUE(rep.conjugacy_recorded) << m.label();
    EXPECT_TRUE(rep.ok()) << m.label();
  }
}

TEST(ModuleJson, RoundTrip) {
  const auto m = diag(zmod_ring(4), {4, 2}, "Z/4+Z/2");
  const auto back = module_from_json(module_to_json(m));
  EXPECT_EQ(back.cyclic_orders(), m.cyclic_orders());
  EXPECT_EQ(back.action(), m.action());
  EXPECT_EQ(back.label(), m.label());
  const auto by_spec = module_from_json(Json::parse(R"({"ring": "zmod:6", "cyclic_orders": [2, 3], "action": [[[1,0],[0,1]]]})"));
  EXPECT_EQ(by_spec.order(), 6u);
}
