// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.
//
//   acceptance [path/to/idemlab-cli]
//
// The CLI path is used by the determinism check; without it only the
// library-level reports are compared.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace idemlab;

namespace {

// Runtime budgets in seconds.
constexpr double kCounterexampleBudget = 1.0;
constexpr double kTheoremBudget = 60.0;
constexpr double kBridgeBudget = 30.0;

constexpr std::size_t kMinCorpusRings = 14;
constexpr std::uint64_t kMinOrder = 2, kMaxOrder = 256;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

Outcome counterexample() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = verify_counterexample(2);
  const auto one = ToeplitzElement::one();
  const auto& [a, b, e] = rep.triple;
  o.require(a * b == one, "ab != 1");
  o.require(b * a != one, "ba == 1");
  o.require(e == b * a && e.is_idempotent(), "e = ba is not idempotent");
  o.require(rep.ab_is_one, "e not isomorphic to 1");
  o.require(rep.left_witness.has_value(), "no left witness within degree 2");
  if (rep.left_witness) {
    o.require(rep.left_witness->r == Monomial{0, 1}, "witness r != a");
    o.require(rep.left_witness->product == ToeplitzElement::a() - ToeplitzElement::monomial({1, 2}),
              "(1-e) a e != a - b a^2");
  }
  const double dt = seconds_since(t0);
  o.require(dt < kCounterexampleBudget, "runtime " + fmt_seconds(dt));
  if (o.pass)
    o.detail = "(1-e)·a·e = " + to_string(rep.left_witness->product) + ", " + fmt_seconds(dt);
  return o;
}

struct CorpusRun {
  std::vector<FiniteRing> rings;
  std::vector<TheoremVerdict> verdicts;
  double seconds = 0;
};

const CorpusRun& corpus_run() {
  static const CorpusRun run = [] {
    CorpusRun r;
    const auto t0 = std::chrono::steady_clock::now();
    const auto c = default_corpus();
    for (const auto& entry : c.rings) {
      r.rings.push_back(materialize(entry, c.cap));
      r.verdicts.push_back(verify_theorem(r.rings.back(), c.cap, entry.label));
    }
    r.seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

Outcome theorem() {
  Outcome o;
  const auto& run = corpus_run();
  o.require(run.rings.size() >= kMinCorpusRings, "corpus has only " + std::to_string(run.rings.size()) + " rings");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < run.rings.size(); ++i) {
    const auto& r = run.rings[i];
    const auto& v = run.verdicts[i];
    o.require(r.order() >= kMinOrder && r.order() <= kMaxOrder, r.label() + " order out of range");
    o.require(v.status == VerdictStatus::Ok, v.label + ": " +
                                                  (v.falsifications.empty() ? v.error : v.falsifications.front()));
    for (const auto& p : v.pairs) {
      if (p.e_left) o.require(p.f_left, v.label + ": left semicentrality not transferred");
      if (p.e_right) o.require(p.f_right, v.label + ": right semicentrality not transferred");
      o.require(p.scan.has_value(), v.label + ": pair not conjugate");
    }
    pairs += v.pairs.size();
  }
  o.require(run.seconds < kTheoremBudget, "runtime " + fmt_seconds(run.seconds));
  if (o.pass)
    o.detail = std::to_string(run.rings.size()) + " rings, " + std::to_string(pairs) + " pairs, " +
               fmt_seconds(run.seconds);
  return o;
}

Outcome pipeline() {
  Outcome o;
  const auto& run = corpus_run();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < run.rings.size(); ++i) {
    const auto& r = run.rings[i];
    for (const auto& p : run.verdicts[i].pairs) {
      ++pairs;
      const std::string tag = r.label() + " (" + to_string(p.e) + ", " + to_string(p.f) + ")";
      o.require(p.pipeline.has_value(), tag + ": pipeline failed: " + p.pipeline_error);
      o.require(p.scan.has_value(), tag + ": scan found no conjugator");
      if (!p.pipeline || !p.scan) continue;
      const auto& c = *p.pipeline;
      const auto x = r.sub(p.f, p.e);
      const auto expected_u = r.add(r.one(), r.mul(x, r.sub(r.add(p.e, p.e), r.one())));
      o.require(c.u == expected_u, tag + ": u != 1 + x(2e-1)");
      o.require(r.mul(c.u, p.e) == r.mul(p.f, c.u), tag + ": ue != fu");
      o.require(r.mul(r.mul(c.u, p.e), c.u_inv) == p.f, tag + ": f != u e u^-1");
      o.require(r.mul(c.u, c.u_inv) == r.one() && r.mul(c.u_inv, c.u) == r.one(), tag + ": u^-1 wrong");
      o.require(conjugator_valid(r, *p.scan), tag + ": scanned conjugator invalid");
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs agree with the unit-group scan";
  return o;
}

Outcome semiprime_central() {
  Outcome o;
  std::set<std::string> semiprime;
  for (const auto& r : corpus_run().rings) {
    if (!is_semiprime(r).semiprime) continue;
    semiprime.insert(r.label());
    for (const auto& e : enumerate_idempotents(r))
      if (is_left_semicentral(r, e).holds || is_right_semicentral(r, e).holds)
        o.require(is_central(r, e).holds, r.label() + ": " + to_string(e) + " semicentral, not central");
  }
  for (const char* need : {"M2(Z/2)", "M2(Z/3)", "Z/2×Z/3"})
    o.require(semiprime.count(need) == 1, std::string(need) + " not found semiprime");
  if (o.pass) o.detail = std::to_string(semiprime.size()) + " semiprime rings";
  return o;
}

Outcome radical_and_corners() {
  Outcome o;
  std::size_t corners = 0;
  for (const auto& r : corpus_run().rings) {
    const auto q = quotient_ring(r, jacobson_radical(r));
    o.require(jacobson_radical(q.ring()).is_zero(), r.label() + ": J(R/J) != 0");
    for (const auto& e : enumerate_idempotents(r)) {
      if (r.is_zero(e)) continue;
      try {
        const auto c = corner_ring(r, e);
        o.require(c.embed(c.ring().one()) == e, r.label() + ": corner identity is not e");
        o.require(is_dedekind_finite(c.ring()).dedekind_finite, r.label() + ": corner not Dedekind-finite");
        ++corners;
      } catch (const AlgebraError& ex) {
        o.require(false, r.label() + ": corner at " + to_string(e) + ": " + ex.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(corners) + " corner rings";
  return o;
}

Outcome bridges() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = default_corpus();
  std::size_t idems = 0;
  for (const auto& entry : c.modules) {
    const auto m = materialize(entry, c.cap);
    const auto rep = verify_corollary(m, c.cap);
    for (const auto& row : rep.rows)
      o.require(row.left_semicentral == row.hom_summand_to_quotient_zero,
                m.label() + ": left semicentral vs Hom(D, M/D) at " + to_string(row.idempotent));
    o.require(rep.iso_bridge, m.label() + ": ab/ba criterion disagrees with module isomorphism");
    o.require(rep.ok(), m.label() + ": " + (rep.failures.empty() ? "clause failed" : rep.failures.front()));
    idems += rep.rows.size();
  }
  const double dt = seconds_since(t0);
  o.require(dt < kBridgeBudget, "runtime " + fmt_seconds(dt));
  if (o.pass)
    o.detail = std::to_string(c.modules.size()) + " modules, " + std::to_string(idems) + " idempotents, " +
               fmt_seconds(dt);
  return o;
}

Outcome oracle_counts() {
  Outcome o;
  auto count_idempotents = [](const std::vector<oracle::Mat>& ring) {
    std::size_t n = 0;
    for (const auto& x : ring) n += x * x == x;
    return n;
  };
  const auto m2 = oracle::all_matrices(2, 2), t2 = oracle::all_matrices(2, 2, true);
  const std::size_t z6_oracle = oracle::zmod_idempotents(6).size();
  const std::size_t m2_oracle = count_idempotents(m2), t2_oracle = count_idempotents(t2);
  std::size_t z4_j_oracle = 0;
  for (std::int64_t x = 0; x < 4; ++x) {
    bool nil = true;
    for (std::int64_t r = 0; r < 4; ++r) nil = nil && (r * x) * (r * x) % 4 == 0;
    z4_j_oracle += nil;
  }
  const std::size_t t2_j_oracle = oracle::radical(t2).size(), m2_j_oracle = oracle::radical(m2).size();

  o.require(z6_oracle == 4 && m2_oracle == 8 && t2_oracle == 6, "oracle idempotent counts");
  o.require(z4_j_oracle == 2 && t2_j_oracle == 2 && m2_j_oracle == 1, "oracle radical sizes");
  o.require(enumerate_idempotents(zmod_ring(6)).size() == z6_oracle, "Z/6 idempotents");
  o.require(enumerate_idempotents(matrix_ring(2, 2)).size() == m2_oracle, "M2(Z/2) idempotents");
  o.require(enumerate_idempotents(triangular_ring(2, 2, true)).size() == t2_oracle, "T2(Z/2) idempotents");
  o.require(jacobson_radical(zmod_ring(4)).size() == z4_j_oracle, "J(Z/4)");
  o.require(jacobson_radical(triangular_ring(2, 2, true)).size() == t2_j_oracle, "J(T2(Z/2))");
  o.require(jacobson_radical(matrix_ring(2, 2)).size() == m2_j_oracle, "J(M2(Z/2))");
  if (o.pass) o.detail = "idempotents 4/8/6, radicals 2/2/1";
  return o;
}

Outcome rewriting() {
  Outcome o;
  using T = ToeplitzElement;
  std::size_t words = 0;
  for (int len = 0; len <= 10; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      T x = T::one();
      for (int k = len - 1; k >= 0; --k) {
        const bool is_b = (bits >> k) & 1;
        w += is_b ? 'b' : 'a';
        x = x * (is_b ? T::b() : T::a());
      }
      o.require(reduce_word(Word::parse(w)) == x, "word " + w);
      ++words;
    }
  o.require(words == 2047, "word count " + std::to_string(words));
  std::size_t products = 0;
  for (std::uint32_t i = 0; i <= 4; ++i)
    for (std::uint32_t j = 0; j <= 4; ++j)
      for (std::uint32_t k = 0; k <= 4; ++k)
        for (std::uint32_t l = 0; l <= 4; ++l) {
          const std::string w = std::string(i, 'b') + std::string(j, 'a') + std::string(k, 'b') + std::string(l, 'a');
          o.require(T::monomial({i, j}) * T::monomial({k, l}) == reduce_word(Word::parse(w)), "product " + w);
          ++products;
        }
  if (o.pass) o.detail = std::to_string(words) + " words, " + std::to_string(products) + " basis products";
  return o;
}

std::optional<std::string> capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  const auto c = default_corpus();
  const auto first = to_json_lines(run_all(c));
  RunOptions threaded;
  threaded.threads = 4;
  o.require(first == to_json_lines(run_all(c)), "library reports differ between runs");
  o.require(first == to_json_lines(run_all(c, threaded)), "threaded report differs");
  if (!cli.empty()) {
    const std::string cmd = "\"" + cli + "\" --format json --bound 2 verify";
    const auto a = capture(cmd), b = capture(cmd);
    o.require(a && b && !a->empty(), "could not run " + cmd);
    if (a && b) {
      o.require(*a == *b, "CLI reports differ between runs");
      o.require(*a == first, "CLI report differs from library report");
    }
  }
  if (o.pass) o.detail = std::to_string(first.size()) + " bytes" + (cli.empty() ? " (library only)" : ", CLI x2");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 counterexample in Z<a,b>/(ab-1)", counterexample},
      {"AC2 theorem clauses on the default corpus", theorem},
      {"AC3 conjugator pipeline vs unit-group scan", pipeline},
      {"AC4 semiprime rings: semicentral => central", semiprime_central},
      {"AC5 J(R/J) = 0 and Dedekind-finite corners", radical_and_corners},
      {"AC6 module bridges", bridges},
      {"AC7 oracle idempotent and radical counts", oracle_counts},
      {"AC8 rewriting oracle", rewriting},
      {"AC9 byte-identical verify reports", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << "  [" << o.detail << "]\n";
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
