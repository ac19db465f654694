#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "pfactor/error.hpp"
#include "pfactor/rational.hpp"

namespace pfactor {

/// Variables available in claim polynomials:
///   n  graph order
///   d  minimum degree
///   s  size of the removed set
///   t  floor(2d/3), kept as its own symbol
enum class Var : std::uint8_t { n = 0, d = 1, s = 2, t = 3 };

struct Point {
  Rational n;
  Rational d;
  Rational s;

  Rational t() const { return Rational((Rational(2) * d / Rational(3)).floor(), 1); }
};

/// Multivariate polynomial over the rationals in n, d, s, t.
class Polynomial {
 public:
  using Monomial = std::array<std::uint8_t, 4>;

  Polynomial() = default;
  Polynomial(Rational c) {  // NOLINT(google-explicit-constructor)
    if (c != Rational(0)) terms_[Monomial{}] = c;
  }

  static Polynomial variable(Var v) {
    Polynomial p;
    Monomial m{};
    m[static_cast<std::size_t>(v)] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{};
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const {
    Polynomial out(Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  Rational constant() const {
    const auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational eval(const Point& at) const {
    const std::array<Rational, 4> vals{at.n, at.d, at.s, at.t()};
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::uint8_t e = 0; e < m[i]; ++e) term *= vals[i];
      acc += term;
    }
    return acc;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  }

  std::map<Monomial, Rational> terms_;
};

namespace detail {

// Recursive-descent reader for expressions such as
//   "-16s^2+(12n-36)s+12n-12nd+16d^2+16d-14"   or   "-4/25(3n-20d-53)(3n-5d-8)".
// Juxtaposition multiplies; '/' only divides by a numeric constant.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, "polynomial \"" + std::string(text_) + "\" at " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'n' || c == 'd' || c == 's' || c == 't'; }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        const Polynomial divisor = power();
        if (!divisor.is_constant() || divisor.constant() == Rational(0)) error("divisor must be a nonzero constant");
        acc = acc * Polynomial(Rational(1) / divisor.constant());
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      unsigned e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (pos_ == start) error("expected exponent");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) v = v * 10 + (text_[pos_++] - '0');
      return Polynomial(Rational(v));
    }
    switch (c) {
      case 'n': ++pos_; return Polynomial::variable(Var::n);
      case 'd': ++pos_; return Polynomial::variable(Var::d);
      case 's': ++pos_; return Polynomial::variable(Var::s);
      case 't': ++pos_; return Polynomial::variable(Var::t);
      default: error(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace pfactor
