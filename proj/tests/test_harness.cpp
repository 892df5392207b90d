#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace idemlab;

namespace {

const Summary& default_summary() {
  static const Summary s = run_all(default_corpus());
  return s;
}

const TheoremVerdict& verdict_for(const Summary& s, const std::string& label) {
  for (const auto& v : s.rings)
    if (v.label == label) return v;
  throw std::runtime_error("no verdict for " + label);
}

}  // namespace

TEST(Corpus, DefaultShape) {
  const auto c = default_corpus();
  EXPECT_GE(c.rings.size(), 14u);
  EXPECT_NO_THROW(validate_corpus(c));
  std::set<std::string> labels;
  for (const auto& r : oracle::corpus_rings()) {
    EXPECT_GE(r.order(), 2u);
    EXPECT_LE(r.order(), 256u);
    labels.insert(r.label());
  }
  for (const char* need : {"M2(Z/2)", "M2(Z/3)", "Z/2×Z/3", "T2(Z/2)", "Z/6"}) EXPECT_TRUE(labels.count(need)) << need;
  // Entry labels coincide with the constructed rings' labels.
  for (std::size_t i = 0; i < c.rings.size(); ++i) EXPECT_EQ(c.rings[i].label, oracle::corpus_rings()[i].label());
}

TEST(Corpus, DuplicateLabelsRejected) {
  const auto j = Json::parse(R"({"rings": [{"label": "x", "spec": "zmod:2"}, {"label": "x", "spec": "zmod:3"}]})");
  EXPECT_THROW(corpus_from_json(j), AlgebraError);
}

TEST(Corpus, FromJson) {
  const auto j = Json::parse(R"({"cap": 100, "rings": [{"spec": "zmod:4"},
      {"label": "inline", "ring": {"cyclic_orders": [3], "structure_constants": [[[1]]], "one": [1]}}]})");
  const auto c = corpus_from_json(j);
  EXPECT_EQ(c.cap, 100u);
  ASSERT_EQ(c.rings.size(), 2u);
  EXPECT_EQ(c.rings[0].label, "zmod:4");
  EXPECT_EQ(materialize(c.rings[1], c.cap).order(), 3u);
}

TEST(VerifyTheorem, T2) {
  const auto r = triangular_ring(2, 2, true);
  const auto v = verify_theorem(r);
  EXPECT_EQ(v.status, VerdictStatus::Ok);
  EXPECT_TRUE(v.clause_a && v.clause_a_prime && v.clause_b && v.clause_c);
  bool seen = false;
  for (const auto& p : v.pairs)
    if (p.e == r.element({1, 0, 0}) && p.f == r.element({1, 1, 0})) {
      seen = true;
      ASSERT_TRUE(p.pipeline);
      EXPECT_EQ(p.pipeline->u, r.element({1, 1, 1}));
    }
  EXPECT_TRUE(seen);
}

TEST(VerifyTheorem, CommutativeAndSemiprime) {
  const auto z6 = verify_theorem(zmod_ring(6));
  EXPECT_EQ(z6.status, VerdictStatus::Ok);
  EXPECT_EQ(z6.idempotent_count, 4u);
  EXPECT_EQ(z6.semicentral_count, 4u);
  EXPECT_EQ(z6.pairs.size(), 4u);
  for (const auto& p : z6.pairs) EXPECT_EQ(p.e, p.f);

  const auto m2 = verify_theorem(matrix_ring(2, 2));
  EXPECT_EQ(m2.status, VerdictStatus::Ok);
  EXPECT_EQ(m2.semicentral_count, 2u);
  for (const auto& p : m2.pairs) EXPECT_EQ(p.e, p.f);
}

TEST(RunAll, DefaultCorpusHasNoFalsifications) {
  const auto& s = default_summary();
  EXPECT_EQ(s.falsifications(), 0u);
  EXPECT_EQ(s.cap_exceeded(), 0u);
  EXPECT_EQ(s.exit_code(), 0);
  EXPECT_TRUE(s.counterexample.ok());
  for (const auto& v : s.rings) EXPECT_EQ(v.status, VerdictStatus::Ok) << v.label;
  for (const auto& m : s.modules) EXPECT_EQ(m.status, VerdictStatus::Ok) << m.label;
}

TEST(RunAll, EmptyCorpusStillRunsCounterexample) {
  const auto s = run_all(Corpus{});
  EXPECT_TRUE(s.rings.empty());
  EXPECT_TRUE(s.counterexample.ok());
  EXPECT_EQ(s.exit_code(), 0);
}

TEST(RunAll, OverCapEntryIsIsolated) {
  Corpus c;
  c.rings.push_back({"Z/2", "zmod:2"});
  c.rings.push_back({"M3(Z/3)", "matrix:3:3"});
  c.rings.push_back({"Z/3", "zmod:3"});
  const auto s = run_all(c);
  EXPECT_EQ(verdict_for(s, "M3(Z/3)").status, VerdictStatus::CapExceeded);
  EXPECT_EQ(verdict_for(s, "Z/2").status, VerdictStatus::Ok);
  EXPECT_EQ(verdict_for(s, "Z/3").status, VerdictStatus::Ok);
  EXPECT_EQ(s.cap_exceeded(), 1u);
  EXPECT_EQ(s.exit_code(), 4);
}

TEST(RunAll, BadEntryCountsAsFalsification) {
  Corpus c;
  c.rings.push_back({"broken", Json::parse(R"({"cyclic_orders": [2, 2], "structure_constants": [[[0,1],[0,0]],[[0,0],[0,1]]], "one": [1, 0]})")});
  const auto s = run_all(c);
  EXPECT_EQ(s.rings.at(0).status, VerdictStatus::Error);
  EXPECT_EQ(s.exit_code(), 3);
}

TEST(RunAll, ResultsSortedByLabel) {
  const auto& s = default_summary();
  for (std::size_t i = 1; i < s.rings.size(); ++i) EXPECT_LT(s.rings[i - 1].label, s.rings[i].label);
  for (std::size_t i = 1; i < s.modules.size(); ++i) EXPECT_LT(s.modules[i - 1].label, s.modules[i].label);
}

TEST(Determinism, ReportsAreByteIdentical) {
  const auto c = default_corpus();
  const auto first = to_json_lines(run_all(c));
  RunOptions threaded;
  threaded.threads = 4;
  EXPECT_EQ(first, to_json_lines(run_all(c)));
  EXPECT_EQ(first, to_json_lines(run_all(c, threaded)));
}

TEST(Report, JsonLinesShape) {
  const auto text = to_json_lines(default_summary());
  std::istringstream in(text);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  const auto& s = default_summary();
  ASSERT_EQ(lines.size(), s.rings.size() + s.modules.size() + 2);
  EXPECT_EQ(lines.front()["kind"], "theorem");
  EXPECT_EQ(lines[lines.size() - 2]["kind"], "counterexample");
  EXPECT_EQ(lines[lines.size() - 2]["left_witness"]["product"], "a - b·a^2");
  EXPECT_EQ(lines.back()["kind"], "summary");
  EXPECT_EQ(lines.back()["falsifications"], 0);
  EXPECT_FALSE(text.find("elapsed") != std::string::npos);
}

TEST(Coverage, EveryIsomorphicPairExactlyOnce) {
  const auto& s = default_summary();
  for (std::size_t i = 0; i < s.rings.size(); ++i) {
    const auto& v = s.rings[i];
    const auto r = parse_ring_spec(v.label);  // labels parse back to the corpus rings
    const auto idems = enumerate_idempotents(r);
    std::set<std::pair<Coords, Coords>> expected, seen;
    for (const auto& e : idems) {
      if (!is_left_semicentral(r, e).holds && !is_right_semicentral(r, e).holds) continue;
      for (const auto& f : idems)
        if (find_iso_witness(r, e, f)) expected.insert({e.coords, f.coords});
    }
    for (const auto& p : v.pairs) EXPECT_TRUE(seen.insert({p.e.coords, p.f.coords}).second) << v.label;
    EXPECT_EQ(seen, expected) << v.label;
    EXPECT_LE(v.pairs.size(), v.idempotent_count * v.semicentral_count);
  }
}

TEST(CrossValidation, ScanAndPipelineAgree) {
  for (const auto& v : default_summary().rings)
    for (const auto& p : v.pairs) {
      ASSERT_TRUE(p.scan) << v.label;
      ASSERT_TRUE(p.pipeline) << v.label << " " << p.pipeline_error;
    }
}
