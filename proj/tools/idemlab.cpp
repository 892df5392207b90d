// idemlab: command-line front end for the idempotent toolkit.
//
// Exit codes: 0 ok, 1 validation/other error, 2 negative answer to a
// check (iso/conjugate), 3 falsification in `verify`, 4 cap exceeded,
// 64 parse error, 65 element coordinate out of range.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idemlab/idemlab.hpp"

namespace {

using namespace idemlab;

enum class Format { Table, Json };

struct CliConfig {
  std::uint64_t cap = kDefaultCap;
  Format format = Format::Table;
  std::uint32_t degree_bound = 4;
  std::string corpus_path;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

std::string pad(std::string s, std::size_t width) {
  // Labels may contain multi-byte characters; pad on code points.
  std::size_t cps = 0;
  for (unsigned char ch : s) cps += (ch & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

void print_ring_table(const FiniteRing& r) {
  std::cout << "ring " << r.label() << "\n"
            << "  order          " << r.order() << "\n"
            << "  cyclic orders  " << to_string(r.cyclic_orders()) << "\n"
            << "  one            " << to_string(r.one()) << "\n";
}

int cmd_ring_build(const CliConfig& cfg, const std::string& spec) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  print_json(ring_to_json(r));
  return 0;
}

int cmd_ring_idempotents(const CliConfig& cfg, const std::string& spec) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const auto idems = enumerate_idempotents(r, cfg.cap);
  if (cfg.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& e : idems) {
      const bool l = is_left_semicentral(r, e).holds, rt = is_right_semicentral(r, e).holds;
      rows.push_back({{"e", e.coords}, {"left_sc", l}, {"right_sc", rt}, {"central", l && rt}});
    }
    print_json({{"ring", r.label()}, {"count", idems.size()}, {"idempotents", rows}});
    return 0;
  }
  std::cout << idems.size() << " idempotents in " << r.label() << "\n";
  std::cout << pad("element", 16) << pad("left_sc", 9) << pad("right_sc", 10) << "central\n";
  for (const auto& e : idems) {
    const bool l = is_left_semicentral(r, e).holds, rt = is_right_semicentral(r, e).holds;
    std::cout << pad(to_string(e), 16) << pad(yes_no(l), 9) << pad(yes_no(rt), 10)
              << yes_no(l && rt) << "\n";
  }
  return 0;
}

int cmd_check_iso(const CliConfig& cfg, const std::string& spec, const std::string& es,
                  const std::string& fs) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const Element e = parse_element(r, es), f = parse_element(r, fs);
  const auto w = find_iso_witness(r, e, f, cfg.cap);
  if (cfg.format == Format::Json) {
    print_json(predicate_report("isomorphic", r, {e, f}, w.has_value(),
                                w ? std::optional(std::vector{w->a, w->b}) : std::nullopt));
  } else if (w) {
    std::cout << "isomorphic: a = " << to_string(w->a) << ", b = " << to_string(w->b)
              << " (ab = e, ba = f)\n";
  } else {
    std::cout << "NOT isomorphic\n";
  }
  return w ? 0 : 2;
}

int cmd_check_conjugate(const CliConfig& cfg, const std::string& spec, const std::string& es,
                        const std::string& fs) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const Element e = parse_element(r, es), f = parse_element(r, fs);
  const auto c = are_conjugate(r, e, f, cfg.cap);
  if (cfg.format == Format::Json) {
    print_json(predicate_report("conjugate", r, {e, f}, c.has_value(),
                                c ? std::optional(std::vector{c->u, c->u_inv}) : std::nullopt));
  } else if (c) {
    std::cout << "conjugate: u = " << to_string(c->u) << ", u^-1 = " << to_string(c->u_inv)
              << " (f = u e u^-1)\n";
  } else {
    std::cout << "NOT conjugate\n";
  }
  return c ? 0 : 2;
}

int cmd_check_semicentral(const CliConfig& cfg, const std::string& spec, const std::string& es,
                          const std::string& side_name) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const Element e = parse_element(r, es);
  const Side side = side_name == "right" ? Side::Right : Side::Left;
  const auto chk = semicentral_check(r, e, side);
  if (cfg.format == Format::Json) {
    print_json(predicate_report(std::string(to_string(side)) + "_semicentral", r, {e}, chk.holds,
                                chk.holds ? std::nullopt
                                          : std::optional(std::vector{*chk.witness, *chk.product})));
  } else if (chk.holds) {
    std::cout << to_string(e) << " is " << to_string(side) << " semicentral\n";
  } else {
    std::cout << to_string(e) << " is NOT " << to_string(side) << " semicentral: r = "
              << to_string(*chk.witness) << " gives " << to_string(*chk.product) << " != 0\n";
  }
  return 0;
}

int cmd_conjugator(const CliConfig& cfg, const std::string& spec, const std::string& es,
                   const std::string& fs) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const Element e = parse_element(r, es), f = parse_element(r, fs);
  const auto res = construct_conjugator(r, e, f, cfg.cap);
  if (cfg.format == Format::Json) {
    print_json({{"ring", r.label()},
                {"e", e.coords},
                {"f", f.coords},
                {"x", res.perturbation.coords},
                {"u", res.conjugator.u.coords},
                {"u_inv", res.conjugator.u_inv.coords},
                {"log", res.log}});
    return 0;
  }
  std::cout << "u = " << to_string(res.conjugator.u) << "\n"
            << "u^-1 = " << to_string(res.conjugator.u_inv) << "\n"
            << "stage log:\n";
  for (const auto& line : res.log) std::cout << "  " << line << "\n";
  return 0;
}

int cmd_radical(const CliConfig& cfg, const std::string& spec) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const Ideal j = jacobson_radical(r, cfg.cap);
  if (cfg.format == Format::Json) {
    Json el = Json::array();
    for (const auto& x : j.elements()) el.push_back(x.coords);
    print_json({{"ring", r.label()}, {"size", j.size()}, {"elements", el}});
    return 0;
  }
  std::cout << "J(" << r.label() << ") has " << j.size() << " element(s):\n";
  for (const auto& x : j.elements()) std::cout << "  " << to_string(x) << "\n";
  return 0;
}

int cmd_semiprime(const CliConfig& cfg, const std::string& spec) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const auto chk = is_semiprime(r, cfg.cap);
  if (cfg.format == Format::Json) {
    print_json(predicate_report("semiprime", r, {}, chk.semiprime,
                                chk.witness ? std::optional(std::vector{*chk.witness}) : std::nullopt));
  } else if (chk.semiprime) {
    std::cout << r.label() << " is semiprime\n";
  } else {
    std::cout << r.label() << " is NOT semiprime: x = " << to_string(*chk.witness) << " has xRx = 0\n";
  }
  return 0;
}

int cmd_quotient(const CliConfig& cfg, const std::string& spec) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const QuotientRing q = quotient_ring(r, jacobson_radical(r, cfg.cap), cfg.cap);
  if (cfg.format == Format::Json) {
    Json proj = Json::array();
    for (std::uint64_t i = 0; i < r.order(); ++i) {
      const Element x = r.element_at(i);
      proj.push_back({x.coords, q.project(x).coords});
    }
    print_json({{"ring", ring_to_json(q.ring())}, {"projection", proj}});
    return 0;
  }
  std::cout << "R/J for R = " << r.label() << "\n";
  print_ring_table(q.ring());
  std::cout << "  coset representatives:\n";
  for (std::uint64_t i = 0; i < q.ring().order(); ++i) {
    const Element c = q.ring().element_at(i);
    std::cout << "    " << pad(to_string(c), 14) << "<- " << to_string(q.lift(c)) << "\n";
  }
  return 0;
}

int cmd_corner(const CliConfig& cfg, const std::string& spec, const std::string& es) {
  FiniteRing r = parse_ring_spec(spec, cfg.cap);
  const CornerRing c = corner_ring(r, parse_element(r, es), cfg.cap);
  if (cfg.format == Format::Json) {
    Json emb = Json::array();
    for (std::uint64_t i = 0; i < c.ring().order(); ++i) {
      const Element x = c.ring().element_at(i);
      emb.push_back({x.coords, c.embed(x).coords});
    }
    print_json({{"ring", ring_to_json(c.ring())}, {"embedding", emb}});
    return 0;
  }
  print_ring_table(c.ring());
  std::cout << "  dedekind-finite " << yes_no(is_dedekind_finite(c.ring(), cfg.cap).dedekind_finite)
            << "\n";
  return 0;
}

int cmd_toeplitz_reduce(const std::string& word) {
  std::cout << to_string(reduce_word(Word::parse(word))) << "\n";
  return 0;
}

int cmd_toeplitz_eval(const std::string& expr) {
  std::cout << to_string(parse_toeplitz(expr)) << "\n";
  return 0;
}

int cmd_toeplitz_counterexample(const CliConfig& cfg) {
  const auto rep = verify_counterexample(cfg.degree_bound);
  if (cfg.format == Format::Json) {
    print_json(to_json(rep));
  } else {
    const auto& t = rep.triple;
    std::cout << "a = " << to_string(t.a) << ", b = " << to_string(t.b) << ", e = ba = "
              << to_string(t.e) << "\n"
              << "ab = " << to_string(t.a * t.b) << "\n"
              << "ba = " << to_string(t.b * t.a) << (rep.ba_is_one ? "" : " != 1") << "\n"
              << "e idempotent: " << yes_no(rep.e_idempotent) << "\n"
              << "e isomorphic to the central idempotent 1 via (a, b): " << yes_no(rep.ab_is_one) << "\n";
    if (rep.left_witness)
      std::cout << "e not left semicentral: (1-e)·" << to_string(rep.left_witness->r) << "·e = "
                << to_string(rep.left_witness->product) << "\n";
    else
      std::cout << "no left witness up to degree " << cfg.degree_bound << "\n";
    if (rep.right_witness)
      std::cout << "e not right semicentral: e·" << to_string(rep.right_witness->r) << "·(1-e) = "
                << to_string(rep.right_witness->product) << "\n";
    std::cout << (rep.ok() ? "certified" : "NOT certified") << "\n";
  }
  return rep.ok() ? 0 : 3;
}

int cmd_module_end(const CliConfig& cfg, const std::string& path) {
  const FiniteModule m = load_module(path, cfg.cap);
  const EndomorphismRing end = endomorphism_ring(m, cfg.cap);
  if (cfg.format == Format::Json) {
    Json maps = Json::array();
    for (const auto& phi : end.basis_maps()) maps.push_back(phi.matrix);
    print_json({{"ring", ring_to_json(end.ring())}, {"basis_maps", maps}});
    return 0;
  }
  print_ring_table(end.ring());
  for (std::size_t i = 0; i < end.basis_maps().size(); ++i)
    std::cout << "  g_" << i << " = " << to_string(end.basis_maps()[i]) << "\n";
  return 0;
}

int cmd_module_verify(const CliConfig& cfg, const std::string& path) {
  const FiniteModule m = load_module(path, cfg.cap);
  ModuleVerdict v;
  v.label = m.label();
  v.report = verify_corollary(m, cfg.cap);
  if (!v.report->ok()) v.status = VerdictStatus::Falsified;
  if (cfg.format == Format::Json) {
    print_json(to_json(v));
  } else {
    const auto& r = *v.report;
    std::cout << "module " << r.label << ", |M| = " << r.module_order << ", |End(M)| = " << r.end_order
              << "\n"
              << "  (a) " << yes_no(r.clause_a) << "  (a') " << yes_no(r.clause_a_prime) << "  (b) "
              << yes_no(r.clause_b) << "  (c) " << yes_no(r.clause_c) << "\n"
              << "  bridges: semicentral/Hom " << yes_no(r.bridge_left && r.bridge_right)
              << ", conjugacy " << yes_no(r.conjugacy_bridge) << ", isomorphism "
              << yes_no(r.iso_bridge) << "\n";
    std::cout << "  " << pad("idempotent", 16) << pad("|D|", 5) << pad("left_sc", 9)
              << pad("Hom(D,M/D)=0", 14) << pad("right_sc", 10) << "Hom(M/D,D)=0\n";
    for (const auto& row : r.rows)
      std::cout << "  " << pad(to_string(row.idempotent), 16) << pad(std::to_string(row.image_order), 5)
                << pad(yes_no(row.left_semicentral), 9)
                << pad(yes_no(row.hom_summand_to_quotient_zero), 14)
                << pad(yes_no(row.right_semicentral), 10)
                << yes_no(row.hom_quotient_to_summand_zero) << "\n";
    for (const auto& f : r.failures) std::cout << "  FAILURE " << f << "\n";
  }
  return v.report->ok() ? 0 : 3;
}

int cmd_verify(const CliConfig& cfg, const std::string& report_path, unsigned threads) {
  Corpus corpus = default_corpus();
  if (!cfg.corpus_path.empty())
    corpus = corpus_from_json(detail::parse_json(detail::read_file(cfg.corpus_path), cfg.corpus_path));
  RunOptions opt;
  opt.cap = cfg.cap;
  opt.threads = threads;
  opt.degree_bound = cfg.degree_bound;
  const Summary s = run_all(corpus, opt);
  const std::string lines = to_json_lines(s);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << lines;
  }
  if (cfg.format == Format::Json) {
    std::cout << lines;
    return s.exit_code();
  }

  std::cout << pad("ring", 18) << pad("order", 7) << pad("idem", 6) << pad("sc", 4) << pad("pairs", 7)
            << pad("(a)", 5) << pad("(a')", 5) << pad("(b)", 5) << pad("(c)", 5) << pad("status", 14)
            << "ms\n";
  for (const auto& v : s.rings) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << v.elapsed_ms;
    std::cout << pad(v.label, 18) << pad(std::to_string(v.order), 7)
              << pad(std::to_string(v.idempotent_count), 6) << pad(std::to_string(v.semicentral_count), 4)
              << pad(std::to_string(v.pairs.size()), 7) << pad(yes_no(v.clause_a), 5)
              << pad(yes_no(v.clause_a_prime), 5) << pad(yes_no(v.clause_b), 5)
              << pad(yes_no(v.clause_c), 5) << pad(std::string(to_string(v.status)), 14) << ms.str()
              << "\n";
  }
  std::cout << "\n" << pad("module", 26) << pad("|M|", 5) << pad("|End|", 7) << pad("status", 14) << "ms\n";
  for (const auto& v : s.modules) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << v.elapsed_ms;
    std::cout << pad(v.label, 26) << pad(v.report ? std::to_string(v.report->module_order) : "-", 5)
              << pad(v.report ? std::to_string(v.report->end_order) : "-", 7)
              << pad(std::string(to_string(v.status)), 14) << ms.str() << "\n";
  }
  std::cout << "\ncounterexample Z<a,b>/(ab-1): " << (s.counterexample.ok() ? "certified" : "FAILED") << "\n"
            << "falsifications: " << s.falsifications() << ", cap exceeded: " << s.cap_exceeded() << "\n";
  return s.exit_code();
}

int exit_code_for(const AlgebraError& ex) {
  switch (ex.kind()) {
    case ErrorKind::ParseError: return 64;
    case ErrorKind::CoordinateOutOfRange: return 65;
    case ErrorKind::CapExceeded: return 4;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idemlab: semicentral, isomorphic and conjugate idempotents in finite rings"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("IDEMLAB_CAP")) {
    try {
      cfg.cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "IDEMLAB_CAP must be an integer\n";
      return 64;
    }
  }
  std::string format = "table";
  app.add_option("--cap", cfg.cap, "enumeration cap (default 4096, or $IDEMLAB_CAP)")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--bound", cfg.degree_bound, "degree bound for Toeplitz witness search");

  std::function<int()> action;
  std::string spec, e_arg, f_arg, side = "left", word, path, report_path;
  unsigned threads = 1;

  auto* ring = app.add_subcommand("ring", "build and inspect rings");
  ring->require_subcommand(1);
  auto* ring_build = ring->add_subcommand("build", "validate and echo canonical JSON");
  ring_build->add_option("spec", spec, "ring spec or JSON file")->required();
  ring_build->callback([&] { action = [&] { return cmd_ring_build(cfg, spec); }; });
  auto* ring_idem = ring->add_subcommand("idempotents", "list idempotents with semicentrality flags");
  ring_idem->add_option("spec", spec)->required();
  ring_idem->callback([&] { action = [&] { return cmd_ring_idempotents(cfg, spec); }; });

  auto* check = app.add_subcommand("check", "decide relations between idempotents");
  check->require_subcommand(1);
  auto* check_iso = check->add_subcommand("iso", "isomorphism witness (exit 2 if none)");
  check_iso->add_option("spec", spec)->required();
  check_iso->add_option("e", e_arg)->required();
  check_iso->add_option("f", f_arg)->required();
  check_iso->callback([&] { action = [&] { return cmd_check_iso(cfg, spec, e_arg, f_arg); }; });
  auto* check_conj = check->add_subcommand("conjugate", "conjugating unit (exit 2 if none)");
  check_conj->add_option("spec", spec)->required();
  check_conj->add_option("e", e_arg)->required();
  check_conj->add_option("f", f_arg)->required();
  check_conj->callback([&] { action = [&] { return cmd_check_conjugate(cfg, spec, e_arg, f_arg); }; });
  auto* check_sc = check->add_subcommand("semicentral", "semicentrality with failing basis witness");
  check_sc->add_option("spec", spec)->required();
  check_sc->add_option("e", e_arg)->required();
  check_sc->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  check_sc->callback([&] { action = [&] { return cmd_check_semicentral(cfg, spec, e_arg, side); }; });

  auto* conj = app.add_subcommand("conjugator", "conjugating unit u = 1 + x(2e-1) with stage log");
  conj->add_option("spec", spec)->required();
  conj->add_option("e", e_arg)->required();
  conj->add_option("f", f_arg)->required();
  conj->callback([&] { action = [&] { return cmd_conjugator(cfg, spec, e_arg, f_arg); }; });

  auto* radical = app.add_subcommand("radical", "Jacobson radical");
  radical->add_option("spec", spec)->required();
  radical->callback([&] { action = [&] { return cmd_radical(cfg, spec); }; });
  auto* semiprime = app.add_subcommand("semiprime", "semiprimeness with witness");
  semiprime->add_option("spec", spec)->required();
  semiprime->callback([&] { action = [&] { return cmd_semiprime(cfg, spec); }; });
  auto* quotient = app.add_subcommand("quotient", "R/J with coset representatives");
  quotient->add_option("spec", spec)->required();
  quotient->callback([&] { action = [&] { return cmd_quotient(cfg, spec); }; });
  auto* corner = app.add_subcommand("corner", "corner ring eRe");
  corner->add_option("spec", spec)->required();
  corner->add_option("e", e_arg)->required();
  corner->callback([&] { action = [&] { return cmd_corner(cfg, spec, e_arg); }; });

  auto* toe = app.add_subcommand("toeplitz", "arithmetic in Z<a,b>/(ab-1)");
  toe->require_subcommand(1);
  auto* toe_reduce = toe->add_subcommand("reduce", "normal form of a word");
  toe_reduce->add_option("word", word)->required();
  toe_reduce->callback([&] { action = [&] { return cmd_toeplitz_reduce(word); }; });
  auto* toe_eval = toe->add_subcommand("eval", "normal form of an expression");
  toe_eval->add_option("expr", word)->required();
  toe_eval->callback([&] { action = [&] { return cmd_toeplitz_eval(word); }; });
  auto* toe_cx = toe->add_subcommand("counterexample", "certify ab = 1, ba != 1 and the witness");
  toe_cx->add_option("--bound", cfg.degree_bound, "degree bound");
  toe_cx->callback([&] { action = [&] { return cmd_toeplitz_counterexample(cfg); }; });

  auto* mod = app.add_subcommand("module", "finite modules");
  mod->require_subcommand(1);
  auto* mod_end = mod->add_subcommand("end", "End(M) as a ring");
  mod_end->add_option("module-file", path)->required();
  mod_end->callback([&] { action = [&] { return cmd_module_end(cfg, path); }; });
  auto* mod_verify = mod->add_subcommand("verify", "module-level clauses and bridges");
  mod_verify->add_option("module-file", path)->required();
  mod_verify->callback([&] { action = [&] { return cmd_module_verify(cfg, path); }; });

  auto* verify = app.add_subcommand("verify", "run the corpus verification");
  verify->add_option("--corpus", cfg.corpus_path, "corpus JSON file");
  verify->add_option("--report", report_path, "write JSON lines here");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  verify->callback([&] { action = [&] { return cmd_verify(cfg, report_path, threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }
  cfg.format = format == "json" ? Format::Json : Format::Table;

  try {
    return action();
  } catch (const AlgebraError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
}
