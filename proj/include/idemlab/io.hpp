#pragma once

// JSON interchange for rings, modules and elements, plus the named ring specs
// "zmod:m", "matrix:n:m", "upper:n:m", "lower:n:m", "dual:m", "c2:m" and
// "product:spec1,spec2". Constructor labels such as "Z/6", "M2(Z/3)",
// "T2(Z/2)_lower" or "Z/2×Z/3" are accepted too.

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "idemlab/constructors.hpp"
#include "idemlab/modules.hpp"
#include "idemlab/ring.hpp"
#include "idemlab/toeplitz.hpp"

namespace idemlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoll(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw AlgebraError(ErrorKind::ParseError,
                       "expected an integer for " + std::string(what) + ", got '" +
                           std::string(text) + "'");
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(ErrorKind::ParseError, origin + ": " + ex.what());
  }
}

}  // namespace detail

inline Json ring_to_json(const FiniteRing& ring) {
  Json j;
  j["label"] = ring.label();
  j["cyclic_orders"] = ring.cyclic_orders();
  j["structure_constants"] = ring.structure_constants();
  j["one"] = ring.one().coords;
  return j;
}

inline FiniteRing ring_from_json(const Json& j, std::uint64_t cap = kDefaultCap) {
  try {
    return FiniteRing::build(j.at("cyclic_orders").get<Coords>(),
                             j.at("structure_constants").get<StructureTable>(),
                             j.at("one").get<Coords>(), j.value("label", std::string("R")), cap);
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(ErrorKind::ParseError, std::string("ring JSON: ") + ex.what());
  }
}

namespace detail {

inline std::optional<FiniteRing> ring_from_label(const std::string& s, std::uint64_t cap) {
  static const std::regex zmod(R"(Z/(\d+))"), matrix(R"(M(\d+)\(Z/(\d+)\))"),
      tri(R"(T(\d+)\(Z/(\d+)\)(_lower)?)"), dual(R"(Z/(\d+)\[x\]/\(x\^2\))"),
      c2(R"(Z/(\d+)\[C2\])");
  std::smatch g;
  auto num = [&](std::size_t i) { return parse_int(g[i].str(), "label"); };
  if (std::regex_match(s, g, zmod)) return zmod_ring(num(1), cap);
  if (std::regex_match(s, g, matrix)) return matrix_ring(static_cast<std::size_t>(num(1)), num(2), cap);
  if (std::regex_match(s, g, tri))
    return triangular_ring(static_cast<std::size_t>(num(1)), num(2), !g[3].matched, cap);
  if (std::regex_match(s, g, dual)) return dual_numbers(num(1), cap);
  if (std::regex_match(s, g, c2)) return group_ring_c2(num(1), cap);
  const std::string times = "×";
  for (auto pos = s.find(times); pos != std::string::npos; pos = s.find(times, pos + 1)) {
    auto r1 = ring_from_label(s.substr(0, pos), cap);
    auto r2 = ring_from_label(s.substr(pos + times.size()), cap);
    if (r1 && r2) return product_ring(*r1, *r2, cap);
  }
  return std::nullopt;
}

}  // namespace detail

/// Named spec, constructor label, inline JSON object, or a path to a JSON file.
inline FiniteRing parse_ring_spec(std::string_view spec, std::uint64_t cap = kDefaultCap) {
  const std::string s(spec);
  if (!s.empty() && s.front() == '{') return ring_from_json(detail::parse_json(s, "ring"), cap);

  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  const auto args = detail::split(rest, ':');
  auto need = [&](std::size_t n) {
    if (colon == std::string::npos || args.size() != n)
      throw AlgebraError(ErrorKind::ParseError,
                         "spec '" + s + "' expects " + std::to_string(n) + " argument(s)");
  };

  if (head == "zmod") {
    need(1);
    return zmod_ring(detail::parse_int(args[0], "modulus"), cap);
  }
  if (head == "matrix" || head == "upper" || head == "lower") {
    need(2);
    const auto n = detail::parse_int(args[0], "size");
    if (n < 1) throw AlgebraError(ErrorKind::ParseError, "matrix size must be positive");
    const auto m = detail::parse_int(args[1], "modulus");
    if (head == "matrix") return matrix_ring(static_cast<std::size_t>(n), m, cap);
    return triangular_ring(static_cast<std::size_t>(n), m, head == "upper", cap);
  }
  if (head == "dual") {
    need(1);
    return dual_numbers(detail::parse_int(args[0], "modulus"), cap);
  }
  if (head == "c2") {
    need(1);
    return group_ring_c2(detail::parse_int(args[0], "modulus"), cap);
  }
  if (head == "product") {
    // Try every comma as the split point; nested products parse on the first
    // split where both halves are valid specs.
    for (std::size_t pos = rest.find(','); pos != std::string::npos; pos = rest.find(',', pos + 1)) {
      try {
        auto r1 = parse_ring_spec(rest.substr(0, pos), cap);
        auto r2 = parse_ring_spec(rest.substr(pos + 1), cap);
        return product_ring(r1, r2, cap);
      } catch (const AlgebraError& ex) {
        if (ex.kind() != ErrorKind::ParseError) throw;
      }
    }
    throw AlgebraError(ErrorKind::ParseError, "cannot split product spec '" + s + "'");
  }
  if (auto r = detail::ring_from_label(s, cap)) return std::move(*r);
  if (std::filesystem::exists(s))
    return ring_from_json(detail::parse_json(detail::read_file(s), s), cap);
  throw AlgebraError(ErrorKind::ParseError, "unknown ring spec '" + s + "'");
}

/// "e=[1,0,0]", "[1,0,0]" or "1,0,0"; coordinates must already be in range.
inline Element parse_element(const FiniteRing& ring, std::string_view text) {
  std::string s(text);
  if (auto eq = s.find('='); eq != std::string::npos) s = s.substr(eq + 1);
  std::string cleaned;
  for (char ch : s)
    if (ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  if (cleaned.empty()) throw AlgebraError(ErrorKind::ParseError, "empty element");
  Coords coords;
  for (const auto& part : detail::split(cleaned, ','))
    coords.push_back(detail::parse_int(part, "coordinate"));
  if (coords.size() != ring.rank())
    throw AlgebraError(ErrorKind::ParseError, "element '" + std::string(text) + "' needs " +
                                                  std::to_string(ring.rank()) + " coordinates");
  return ring.element(std::move(coords));
}

inline Json module_to_json(const FiniteModule& m) {
  Json j;
  j["label"] = m.label();
  j["ring"] = ring_to_json(m.ring());
  j["cyclic_orders"] = m.cyclic_orders();
  j["action"] = m.action();
  return j;
}

/// {"ring": <spec string or ring object>, "cyclic_orders": [...], "action": [[[...]]]}
inline FiniteModule module_from_json(const Json& j, std::uint64_t cap = kDefaultCap) {
  try {
    const Json& rj = j.at("ring");
    FiniteRing ring = rj.is_string() ? parse_ring_spec(rj.get<std::string>(), cap) : ring_from_json(rj, cap);
    return FiniteModule::build(ring, j.at("cyclic_orders").get<Coords>(),
                               j.at("action").get<std::vector<IntMatrix>>(),
                               j.value("label", std::string{}), cap);
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(ErrorKind::ParseError, std::string("module JSON: ") + ex.what());
  }
}

inline FiniteModule load_module(const std::string& path, std::uint64_t cap = kDefaultCap) {
  return module_from_json(detail::parse_json(detail::read_file(path), path), cap);
}

/// {"predicate", "ring", "inputs", "result", "witness"} report line.
inline Json predicate_report(std::string predicate, const FiniteRing& ring,
                             const std::vector<Element>& inputs, bool result,
                             const std::optional<std::vector<Element>>& witness) {
  Json j;
  j["predicate"] = std::move(predicate);
  j["ring"] = ring.label();
  j["inputs"] = Json::array();
  for (const auto& x : inputs) j["inputs"].push_back(x.coords);
  j["result"] = result;
  if (witness) {
    j["witness"] = Json::array();
    for (const auto& x : *witness) j["witness"].push_back(x.coords);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace idemlab
