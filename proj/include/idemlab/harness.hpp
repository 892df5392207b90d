#pragma once

/**
 * @file harness.hpp
 * @brief End-to-end verification over a corpus of finite rings and modules.
 *
 * For every ring: each idempotent isomorphic to a left (right) semicentral
 * idempotent must be left (right) semicentral and conjugate to it, and the
 * ring must be Dedekind-finite. Conjugacy is established twice, by a scan of
 * the unit group and by the radical-quotient pipeline, and the two must agree.
 * Any failure on a finite ring is an internal error.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "idemlab/constructors.hpp"
#include "idemlab/idempotents.hpp"
#include "idemlab/io.hpp"
#include "idemlab/modules.hpp"
#include "idemlab/toeplitz.hpp"

namespace idemlab {

struct RingEntry {
  std::string label;
  Json definition;  // spec string or ring JSON object
};

struct ModuleEntry {
  std::string label;
  Json definition;  // module JSON
};

struct Corpus {
  std::vector<RingEntry> rings;
  std::vector<ModuleEntry> modules;
  std::uint64_t cap = kDefaultCap;
};

inline FiniteRing materialize(const RingEntry& entry, std::uint64_t cap) {
  return entry.definition.is_string() ? parse_ring_spec(entry.definition.get<std::string>(), cap)
                                      : ring_from_json(entry.definition, cap);
}

inline FiniteModule materialize(const ModuleEntry& entry, std::uint64_t cap) {
  Json def = entry.definition;
  if (!def.contains("label")) def["label"] = entry.label;
  return module_from_json(def, cap);
}

inline void validate_corpus(const Corpus& corpus) {
  std::set<std::string> seen;
  for (const auto& r : corpus.rings)
    if (!seen.insert("ring:" + r.label).second)
      throw AlgebraError(ErrorKind::ParseError, "duplicate corpus label " + r.label);
  for (const auto& m : corpus.modules)
    if (!seen.insert("module:" + m.label).second)
      throw AlgebraError(ErrorKind::ParseError, "duplicate corpus label " + m.label);
}

inline Corpus default_corpus() {
  Corpus c;
  for (int m : {2, 4, 6, 8, 9, 12}) c.rings.push_back({"Z/" + std::to_string(m), "zmod:" + std::to_string(m)});
  c.rings.push_back({"M2(Z/2)", "matrix:2:2"});
  c.rings.push_back({"M2(Z/3)", "matrix:2:3"});
  c.rings.push_back({"T2(Z/2)", "upper:2:2"});
  c.rings.push_back({"T2(Z/3)", "upper:2:3"});
  c.rings.push_back({"T2(Z/4)", "upper:2:4"});
  c.rings.push_back({"T3(Z/2)", "upper:3:2"});
  c.rings.push_back({"T2(Z/2)_lower", "lower:2:2"});
  c.rings.push_back({"Z/2×Z/2", "product:zmod:2,zmod:2"});
  c.rings.push_back({"Z/2×Z/3", "product:zmod:2,zmod:3"});
  c.rings.push_back({"M2(Z/2)×Z/2", "product:matrix:2:2,zmod:2"});
  c.rings.push_back({"Z/2[x]/(x^2)", "dual:2"});
  c.rings.push_back({"Z/4[x]/(x^2)", "dual:4"});
  c.rings.push_back({"Z/2[C2]", "c2:2"});

  auto diag_module = [](std::string ring, Coords orders) {
    Json j;
    j["ring"] = std::move(ring);
    j["cyclic_orders"] = orders;
    IntMatrix id(orders.size(), Coords(orders.size(), 0));
    for (std::size_t i = 0; i < orders.size(); ++i) id[i][i] = 1;
    j["action"] = std::vector<IntMatrix>{id};
    return j;
  };
  c.modules.push_back({"Z/2⊕Z/2 over Z/2", diag_module("zmod:2", {2, 2})});
  c.modules.push_back({"Z/4⊕Z/2 over Z/4", diag_module("zmod:4", {4, 2})});
  c.modules.push_back({"Z/2⊕Z/3 over Z/6", diag_module("zmod:6", {2, 3})});

  // Row vectors (Z/2)^2 under right multiplication by T2(Z/2) (basis e11, e12, e22).
  Json rows;
  rows["ring"] = "upper:2:2";
  rows["cyclic_orders"] = Coords{2, 2};
  rows["action"] = std::vector<IntMatrix>{{{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 1}}};
  c.modules.push_back({"(Z/2)^2 over T2(Z/2)", rows});

  Json regular = module_to_json(regular_module(triangular_ring(2, 2, true)));
  regular["ring"] = "upper:2:2";
  regular.erase("label");
  c.modules.push_back({"T2(Z/2) over itself", regular});
  return c;
}

inline Corpus corpus_from_json(const Json& j) {
  Corpus c;
  c.cap = j.value("cap", kDefaultCap);
  for (const auto& r : j.value("rings", Json::array())) {
    RingEntry e;
    e.definition = r.contains("spec") ? r.at("spec") : r.at("ring");
    e.label = r.value("label", e.definition.is_string() ? e.definition.get<std::string>()
                                                        : e.definition.value("label", std::string("R")));
    c.rings.push_back(std::move(e));
  }
  for (const auto& m : j.value("modules", Json::array()))
    c.modules.push_back({m.value("label", std::string("module")), m});
  validate_corpus(c);
  return c;
}

struct PairRecord {
  Element e, f;
  bool e_left = false, e_right = false;
  bool f_left = false, f_right = false;
  IsoWitness witness;
  std::optional<Conjugator> scan;
  std::optional<Conjugator> pipeline;
  std::string pipeline_error;
};

enum class VerdictStatus { Ok, Falsified, CapExceeded, Error };

inline std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Ok: return "ok";
    case VerdictStatus::Falsified: return "falsified";
    case VerdictStatus::CapExceeded: return "cap_exceeded";
    case VerdictStatus::Error: return "error";
  }
  return "error";
}

struct TheoremVerdict {
  std::string label;
  std::uint64_t order = 0;
  std::size_t idempotent_count = 0;
  std::size_t semicentral_count = 0;
  bool clause_a = true, clause_a_prime = true, clause_b = true, clause_c = true;
  std::vector<PairRecord> pairs;
  std::vector<std::string> falsifications;
  VerdictStatus status = VerdictStatus::Ok;
  std::string error;
  double elapsed_ms = 0;  // reported in the table only
};

inline TheoremVerdict verify_theorem(const FiniteRing& ring, std::uint64_t cap = kDefaultCap,
                                     std::string label = {}) {
  TheoremVerdict v;
  v.label = label.empty() ? ring.label() : std::move(label);
  v.order = ring.order();
  const auto idems = enumerate_idempotents(ring, cap);
  v.idempotent_count = idems.size();
  const UnitGroup units(ring, cap);
  const ConjugatorPipeline pipeline(ring, cap);

  std::vector<char> left(idems.size()), right(idems.size());
  for (std::size_t i = 0; i < idems.size(); ++i) {
    left[i] = is_left_semicentral(ring, idems[i]).holds;
    right[i] = is_right_semicentral(ring, idems[i]).holds;
    v.semicentral_count += left[i] || right[i];
  }

  auto falsify = [&](bool& clause, const std::string& what) {
    clause = false;
    v.falsifications.push_back(what);
  };

  for (std::size_t i = 0; i < idems.size(); ++i) {
    if (!left[i] && !right[i]) continue;
    for (std::size_t j = 0; j < idems.size(); ++j) {
      auto w = find_iso_witness(ring, idems[i], idems[j], cap);
      if (!w) continue;
      PairRecord p;
      p.e = idems[i];
      p.f = idems[j];
      p.e_left = left[i];
      p.e_right = right[i];
      p.f_left = left[j];
      p.f_right = right[j];
      p.witness = *w;
      const std::string tag = "(" + to_string(p.e) + ", " + to_string(p.f) + ")";
      if (p.e_left && !p.f_left) falsify(v.clause_a, "(a) " + tag + ": f not left semicentral");
      if (p.e_right && !p.f_right) falsify(v.clause_a_prime, "(a') " + tag + ": f not right semicentral");

      p.scan = are_conjugate(ring, units, p.e, p.f);
      try {
        p.pipeline = pipeline.run(p.e, p.f).conjugator;
      } catch (const AlgebraError& ex) {
        p.pipeline_error = ex.what();
      }
      if (!p.scan) falsify(v.clause_b, "(b) " + tag + ": no conjugating unit");
      if (!p.pipeline) falsify(v.clause_b, "(b) " + tag + ": pipeline failed: " + p.pipeline_error);
      if (p.scan && !conjugator_valid(ring, *p.scan))
        falsify(v.clause_b, "(b) " + tag + ": scanned conjugator invalid");
      if (p.pipeline && !conjugator_valid(ring, *p.pipeline))
        falsify(v.clause_b, "(b) " + tag + ": pipeline conjugator invalid");
      v.pairs.push_back(std::move(p));
    }
  }

  const auto df = is_dedekind_finite(ring, cap);
  if (!df.dedekind_finite)
    falsify(v.clause_c, "(c) ab = 1 with ba != 1 at a = " + to_string(df.witness->first) +
                            ", b = " + to_string(df.witness->second));
  if (!v.falsifications.empty()) v.status = VerdictStatus::Falsified;
  return v;
}

struct CounterexampleReport {
  ToeplitzCounterexample triple;
  bool ab_is_one = false;
  bool ba_is_one = true;
  bool e_idempotent = false;
  bool one_central = false;
  std::optional<ToeplitzWitness> left_witness;
  std::optional<ToeplitzWitness> right_witness;
  std::uint32_t degree_bound = 0;

  // (a) fails exactly where Dedekind-finiteness fails: e ~ 1 via (a, b),
  // 1 is central, e is not left semicentral, and ba != 1.
  bool ok() const {
    return ab_is_one && !ba_is_one && e_idempotent && one_central && left_witness.has_value();
  }
};

inline CounterexampleReport verify_counterexample(std::uint32_t degree_bound = 2) {
  CounterexampleReport r;
  r.triple = dedekind_finite_counterexample();
  r.degree_bound = degree_bound;
  const auto one = ToeplitzElement::one();
  r.ab_is_one = r.triple.a * r.triple.b == one;
  r.ba_is_one = r.triple.b * r.triple.a == one;
  r.e_idempotent = r.triple.e.is_idempotent();
  r.one_central = !find_non_semicentral_witness(one, degree_bound, Side::Left) &&
                  !find_non_semicentral_witness(one, degree_bound, Side::Right);
  r.left_witness = find_non_semicentral_witness(r.triple.e, degree_bound, Side::Left);
  r.right_witness = find_non_semicentral_witness(r.triple.e, degree_bound, Side::Right);
  return r;
}

struct ModuleVerdict {
  std::string label;
  std::optional<CorollaryReport> report;
  VerdictStatus status = VerdictStatus::Ok;
  std::string error;
  double elapsed_ms = 0;
};

struct RunOptions {
  std::uint64_t cap = kDefaultCap;
  unsigned threads = 1;
  std::uint32_t degree_bound = 2;
};

struct Summary {
  std::vector<TheoremVerdict> rings;
  std::vector<ModuleVerdict> modules;
  CounterexampleReport counterexample;

  std::size_t falsifications() const {
    std::size_t n = 0;
    for (const auto& r : rings) n += r.status == VerdictStatus::Falsified || r.status == VerdictStatus::Error;
    for (const auto& m : modules) n += m.status == VerdictStatus::Falsified || m.status == VerdictStatus::Error;
    return n + (counterexample.ok() ? 0 : 1);
  }
  std::size_t cap_exceeded() const {
    std::size_t n = 0;
    for (const auto& r : rings) n += r.status == VerdictStatus::CapExceeded;
    for (const auto& m : modules) n += m.status == VerdictStatus::CapExceeded;
    return n;
  }
  /// 0 ok, 3 falsification, 4 cap exceeded somewhere.
  int exit_code() const {
    if (falsifications()) return 3;
    if (cap_exceeded()) return 4;
    return 0;
  }
};

namespace detail {

template <class Fn>
void run_indexed(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

inline Summary run_all(const Corpus& corpus, const RunOptions& options = {}) {
  Summary s;
  s.rings.resize(corpus.rings.size());
  s.modules.resize(corpus.modules.size());

  detail::run_indexed(corpus.rings.size(), options.threads, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    TheoremVerdict& v = s.rings[i];
    try {
      v = verify_theorem(materialize(corpus.rings[i], options.cap), options.cap, corpus.rings[i].label);
    } catch (const AlgebraError& ex) {
      v = TheoremVerdict{};
      v.label = corpus.rings[i].label;
      v.status = ex.kind() == ErrorKind::CapExceeded ? VerdictStatus::CapExceeded : VerdictStatus::Error;
      v.error = ex.what();
    }
    v.elapsed_ms = detail::ms_since(t0);
  });

  detail::run_indexed(corpus.modules.size(), options.threads, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    ModuleVerdict& v = s.modules[i];
    v.label = corpus.modules[i].label;
    try {
      v.report = verify_corollary(materialize(corpus.modules[i], options.cap), options.cap);
      if (!v.report->ok()) v.status = VerdictStatus::Falsified;
    } catch (const AlgebraError& ex) {
      v.status = ex.kind() == ErrorKind::CapExceeded ? VerdictStatus::CapExceeded : VerdictStatus::Error;
      v.error = ex.what();
    }
    v.elapsed_ms = detail::ms_since(t0);
  });

  std::stable_sort(s.rings.begin(), s.rings.end(),
                   [](const auto& x, const auto& y) { return x.label < y.label; });
  std::stable_sort(s.modules.begin(), s.modules.end(),
                   [](const auto& x, const auto& y) { return x.label < y.label; });
  s.counterexample = verify_counterexample(options.degree_bound);
  return s;
}

// ---- serialization --------------------------------------------------------

inline Json coords_or_null(const std::optional<Element>& x) {
  return x ? Json(x->coords) : Json(nullptr);
}

inline Json to_json(const Conjugator& c) {
  return Json{{"u", c.u.coords}, {"u_inv", c.u_inv.coords}};
}

inline Json to_json(const PairRecord& p) {
  Json j;
  j["e"] = p.e.coords;
  j["f"] = p.f.coords;
  j["e_left"] = p.e_left;
  j["e_right"] = p.e_right;
  j["f_left"] = p.f_left;
  j["f_right"] = p.f_right;
  j["witness"] = {p.witness.a.coords, p.witness.b.coords};
  j["scan"] = p.scan ? to_json(*p.scan) : Json(nullptr);
  j["pipeline"] = p.pipeline ? to_json(*p.pipeline) : Json(nullptr);
  if (!p.pipeline_error.empty()) j["pipeline_error"] = p.pipeline_error;
  return j;
}

inline Json to_json(const TheoremVerdict& v) {
  Json j;
  j["kind"] = "theorem";
  j["ring"] = v.label;
  j["status"] = to_string(v.status);
  j["order"] = v.order;
  j["idempotents"] = v.idempotent_count;
  j["semicentral"] = v.semicentral_count;
  j["clauses"] = {{"a", v.clause_a}, {"a_prime", v.clause_a_prime}, {"b", v.clause_b}, {"c", v.clause_c}};
  j["pairs"] = Json::array();
  for (const auto& p : v.pairs) j["pairs"].push_back(to_json(p));
  j["falsifications"] = v.falsifications;
  j["error"] = v.error.empty() ? Json(nullptr) : Json(v.error);
  return j;
}

inline Json to_json(const ModuleVerdict& v) {
  Json j;
  j["kind"] = "corollary";
  j["module"] = v.label;
  j["status"] = to_string(v.status);
  if (v.report) {
    const auto& r = *v.report;
    j["module_order"] = r.module_order;
    j["end_order"] = r.end_order;
    j["clauses"] = {{"a", r.clause_a}, {"a_prime", r.clause_a_prime}, {"b", r.clause_b}, {"c", r.clause_c}};
    j["bridges"] = {{"left_semicentral_vs_hom", r.bridge_left},
                    {"right_semicentral_vs_hom", r.bridge_right},
                    {"conjugacy", r.conjugacy_bridge},
                    {"isomorphism", r.iso_bridge}};
    j["clause_b_pairs_conjugate"] = r.conjugacy_recorded;
    j["isomorphic_pairs"] = r.isomorphic_pairs;
    j["idempotents"] = Json::array();
    for (const auto& row : r.rows)
      j["idempotents"].push_back({{"e", row.idempotent.coords},
                                  {"image_order", row.image_order},
                                  {"complement_order", row.complement_order},
                                  {"left_sc", row.left_semicentral},
                                  {"right_sc", row.right_semicentral},
                                  {"hom_D_to_M_mod_D_zero", row.hom_summand_to_quotient_zero},
                                  {"hom_M_mod_D_to_D_zero", row.hom_quotient_to_summand_zero}});
    j["failures"] = r.failures;
  }
  j["error"] = v.error.empty() ? Json(nullptr) : Json(v.error);
  return j;
}

inline Json to_json(const CounterexampleReport& r) {
  auto witness = [](const std::optional<ToeplitzWitness>& w) {
    return w ? Json{{"r", to_string(w->r)}, {"product", to_string(w->product)}} : Json(nullptr);
  };
  Json j;
  j["kind"] = "counterexample";
  j["a"] = to_string(r.triple.a);
  j["b"] = to_string(r.triple.b);
  j["e"] = to_string(r.triple.e);
  j["ab"] = to_string(r.triple.a * r.triple.b);
  j["ba"] = to_string(r.triple.b * r.triple.a);
  j["ab_is_one"] = r.ab_is_one;
  j["ba_is_one"] = r.ba_is_one;
  j["e_idempotent"] = r.e_idempotent;
  j["e_isomorphic_to_one"] = r.ab_is_one;
  j["one_central"] = r.one_central;
  j["degree_bound"] = r.degree_bound;
  j["left_witness"] = witness(r.left_witness);
  j["right_witness"] = witness(r.right_witness);
  j["ok"] = r.ok();
  return j;
}

/// One JSON object per line: ring verdicts, module verdicts, the
/// counterexample, then a summary line.
inline std::string to_json_lines(const Summary& s) {
  std::string out;
  for (const auto& r : s.rings) out += to_json(r).dump() + "\n";
  for (const auto& m : s.modules) out += to_json(m).dump() + "\n";
  out += to_json(s.counterexample).dump() + "\n";
  Json sum;
  sum["kind"] = "summary";
  sum["rings"] = s.rings.size();
  sum["modules"] = s.modules.size();
  sum["falsifications"] = s.falsifications();
  sum["cap_exceeded"] = s.cap_exceeded();
  sum["exit_code"] = s.exit_code();
  out += sum.dump() + "\n";
  return out;
}

}  // namespace idemlab
