#pragma once

/**
 * @file toeplitz.hpp
 * @brief Exact arithmetic in Z<a,b>/(ab - 1).
 *
 * The single rewrite rule ab -> 1 terminates and has no critical pairs, so
 * every word has a unique normal form b^i a^j and these monomials form a
 * Z-basis. Products of basis monomials have the closed form
 *
 *   (b^i a^j)(b^k a^l) = b^i a^(j-k+l)      if j >= k
 *                      = b^(i+k-j) a^l      otherwise.
 *
 * Coefficients are arbitrary-precision integers.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemlab/error.hpp"
#include "idemlab/idempotents.hpp"

namespace idemlab {

using BigInt = boost::multiprecision::cpp_int;

/// The normal-form monomial b^b_exp a^a_exp, ordered graded-lexicographically
/// on (b_exp + a_exp, b_exp).
struct Monomial {
  std::uint32_t b_exp = 0;
  std::uint32_t a_exp = 0;

  std::uint64_t degree() const { return std::uint64_t{b_exp} + a_exp; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    return x.b_exp <=> y.b_exp;
  }
};

inline Monomial operator*(const Monomial& x, const Monomial& y) {
  if (x.a_exp >= y.b_exp) return {x.b_exp, x.a_exp - y.b_exp + y.a_exp};
  return {x.b_exp + y.b_exp - x.a_exp, y.a_exp};
}

inline std::string to_string(const Monomial& m) {
  std::string out;
  auto part = [&](char letter, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "·";
    out += letter;
    if (e > 1) out += "^" + std::to_string(e);
  };
  part('b', m.b_exp);
  part('a', m.a_exp);
  return out.empty() ? "1" : out;
}

class ToeplitzElement {
 public:
  using Terms = std::map<Monomial, BigInt>;

  ToeplitzElement() = default;

  static ToeplitzElement monomial(Monomial m, BigInt coefficient = 1) {
    ToeplitzElement x;
    if (coefficient != 0) x.terms_.emplace(m, std::move(coefficient));
    return x;
  }
  static ToeplitzElement constant(BigInt c) { return monomial({0, 0}, std::move(c)); }
  static ToeplitzElement one() { return constant(1); }
  static ToeplitzElement a() { return monomial({0, 1}); }
  static ToeplitzElement b() { return monomial({1, 0}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  ToeplitzElement& operator+=(const ToeplitzElement& y) {
    for (const auto& [m, c] : y.terms_) accumulate(m, c);
    return *this;
  }
  ToeplitzElement& operator-=(const ToeplitzElement& y) {
    for (const auto& [m, c] : y.terms_) accumulate(m, -c);
    return *this;
  }

  friend ToeplitzElement operator+(ToeplitzElement x, const ToeplitzElement& y) { return x += y; }
  friend ToeplitzElement operator-(ToeplitzElement x, const ToeplitzElement& y) { return x -= y; }
  friend ToeplitzElement operator-(const ToeplitzElement& x) { return ToeplitzElement{} - x; }

  friend ToeplitzElement operator*(const ToeplitzElement& x, const ToeplitzElement& y) {
    ToeplitzElement out;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) out.accumulate(mx * my, cx * cy);
    return out;
  }

  friend bool operator==(const ToeplitzElement&, const ToeplitzElement&) = default;

  bool is_idempotent() const { return *this * *this == *this; }

 private:
  void accumulate(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Normal form printed as a signed sum, e.g. "a - b·a^2".
inline std::string to_string(const ToeplitzElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = to_string(m);
    if (mono == "1")
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "·" + mono;
  }
  return out;
}

/// A string over {a, b}.
class Word {
 public:
  static Word parse(std::string_view text) {
    for (char ch : text)
      if (ch != 'a' && ch != 'b')
        throw AlgebraError(ErrorKind::ParseError,
                           "word contains '" + std::string(1, ch) + "', only a and b allowed");
    return Word(std::string(text));
  }

  const std::string& letters() const noexcept { return letters_; }

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Applies ab -> (empty) at the leftmost occurrence until none is left.
/// Returns every intermediate word, starting with the input.
inline std::vector<std::string> rewrite_trace(const Word& word) {
  std::vector<std::string> trace{word.letters()};
  std::string w = word.letters();
  for (auto pos = w.find("ab"); pos != std::string::npos; pos = w.find("ab")) {
    w.erase(pos, 2);
    trace.push_back(w);
  }
  return trace;
}

inline ToeplitzElement reduce_word(const Word& word) {
  const std::string nf = rewrite_trace(word).back();
  // A word without "ab" is b^i a^j.
  const auto i = static_cast<std::uint32_t>(nf.find_first_not_of('b') == std::string::npos
                                                ? nf.size()
                                                : nf.find_first_not_of('b'));
  return ToeplitzElement::monomial({i, static_cast<std::uint32_t>(nf.size() - i)});
}

namespace detail {

// expr   := term (('+' | '-') term)*
// term   := unary (['*' | '·'] unary)*
// unary  := '-' unary | power
// power  := atom ['^' integer]
// atom   := integer | 'a' | 'b' | '(' expr ')'
// Juxtaposition multiplies; whitespace is ignored.
class ToeplitzParser {
 public:
  explicit ToeplitzParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const unsigned char ch = static_cast<unsigned char>(text[i]);
      if (std::isspace(ch)) continue;
      // U+00B7 middle dot, as printed by to_string.
      if (ch == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
        src_ += '*';
        ++i;
        continue;
      }
      src_ += static_cast<char>(ch);
    }
  }

  ToeplitzElement parse() {
    if (src_.empty()) fail("empty expression");
    ToeplitzElement x = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError(ErrorKind::ParseError,
                       what + " at offset " + std::to_string(pos_) + " in \"" + src_ + "\"");
  }
  bool at(char ch) const { return pos_ < src_.size() && src_[pos_] == ch; }
  bool starts_atom() const {
    return pos_ < src_.size() &&
           (src_[pos_] == 'a' || src_[pos_] == 'b' || src_[pos_] == '(' ||
            std::isdigit(static_cast<unsigned char>(src_[pos_])));
  }

  ToeplitzElement expr() {
    ToeplitzElement x = term();
    while (at('+') || at('-')) {
      const char op = src_[pos_++];
      ToeplitzElement y = term();
      if (op == '+')
        x += y;
      else
        x -= y;
    }
    return x;
  }

  ToeplitzElement term() {
    ToeplitzElement x = unary();
    for (;;) {
      if (at('*')) {
        ++pos_;
        x = x * unary();
      } else if (starts_atom()) {
        x = x * unary();
      } else {
        return x;
      }
    }
  }

  ToeplitzElement unary() {
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  ToeplitzElement power() {
    ToeplitzElement base = atom();
    if (!at('^')) return base;
    ++pos_;
    const BigInt e = integer();
    if (e > 4096) fail("exponent too large");
    ToeplitzElement out = ToeplitzElement::one();
    for (int i = 0; i < e.convert_to<int>(); ++i) out = out * base;
    return out;
  }

  ToeplitzElement atom() {
    if (at('a')) {
      ++pos_;
      return ToeplitzElement::a();
    }
    if (at('b')) {
      ++pos_;
      return ToeplitzElement::b();
    }
    if (at('(')) {
      ++pos_;
      ToeplitzElement x = expr();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return x;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      return ToeplitzElement::constant(integer());
    fail(pos_ < src_.size() ? "unexpected '" + std::string(1, src_[pos_]) + "'"
                            : std::string("unexpected end"));
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(src_.substr(start, pos_ - start));
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ToeplitzElement parse_toeplitz(std::string_view text) {
  return detail::ToeplitzParser(text).parse();
}

struct ToeplitzCounterexample {
  ToeplitzElement a, b, e;
};

/// a, b with ab = 1 and e = ba: an idempotent isomorphic to 1 that is not 1.
inline ToeplitzCounterexample dedekind_finite_counterexample() {
  const auto a = ToeplitzElement::a();
  const auto b = ToeplitzElement::b();
  return {a, b, b * a};
}

struct ToeplitzWitness {
  Monomial r;
  ToeplitzElement product;
};

/// First monomial r (graded-lex, degree <= bound) with (1-e) r e != 0 for the
/// left side or e r (1-e) != 0 for the right side. Absence within the bound
/// proves nothing.
inline std::optional<ToeplitzWitness> find_non_semicentral_witness(const ToeplitzElement& e,
                                                                   std::uint32_t degree_bound,
                                                                   Side side = Side::Left) {
  if (!e.is_idempotent())
    throw AlgebraError(ErrorKind::NotIdempotent, to_string(e) + " is not idempotent");
  const ToeplitzElement co = ToeplitzElement::one() - e;
  for (std::uint32_t d = 0; d <= degree_bound; ++d)
    for (std::uint32_t i = 0; i <= d; ++i) {
      const Monomial m{i, d - i};
      const auto r = ToeplitzElement::monomial(m);
      ToeplitzElement p = side == Side::Left ? co * r * e : e * r * co;
      if (!p.is_zero()) return ToeplitzWitness{m, std::move(p)};
    }
  return std::nullopt;
}

}  // namespace idemlab
