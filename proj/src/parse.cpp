#include "juliasym/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

namespace juliasym {

namespace {

constexpr int kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalMap parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty expression");
    RationalMap value = expr();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == 'i' || c == '(';
  }

  RationalMap expr() {
    RationalMap acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalMap term() {
    RationalMap acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        RationalMap rhs = factor();
        if (rhs.num().is_zero()) throw ParseError(at, "division by zero");
        acc = acc / rhs;
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  RationalMap factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return RationalMap::constant(-1.0) * factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    RationalMap base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    int e = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), e);
    if (ec != std::errc() || end == text_.data() + pos_) throw ParseError(at, "expected integer exponent");
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    pos_ = static_cast<std::size_t>(end - text_.data());
    RationalMap result = RationalMap::constant(1.0);
    for (int k = 0; k < e; ++k) result = result * base;
    if (negative) {
      if (result.num().is_zero()) throw ParseError(at, "negative power of zero");
      result = RationalMap::constant(1.0) / result;
    }
    return result;
  }

  RationalMap primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == 'z') {
      ++pos_;
      return RationalMap(Polynomial::identity());
    }
    if (c == 'i') {
      ++pos_;
      return RationalMap::constant(Complex(0.0, 1.0));
    }
    if (c == '(') {
      ++pos_;
      RationalMap inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.')) ++end;
      if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
        std::size_t e = end + 1;
        if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
        if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
          end = e;
          while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        }
      }
      const std::string lexeme(text_.substr(pos_, end - pos_));
      char* stop = nullptr;
      const double v = std::strtod(lexeme.c_str(), &stop);
      if (stop != lexeme.c_str() + lexeme.size()) throw ParseError(at, "malformed number '" + lexeme + "'");
      pos_ = end;
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        ++pos_;
        return RationalMap::constant(Complex(0.0, v));
      }
      return RationalMap::constant(v);
    }
    if (c == '\0') throw ParseError(pos_, "unexpected end of expression");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalMap parse_map(std::string_view text, const ToleranceConfig& tol) {
  RationalMap r = Parser(text).parse();
  return rational_reduce(r.num(), r.den(), tol);
}

Polynomial parse_polynomial(std::string_view text, const ToleranceConfig& tol) {
  const RationalMap r = parse_map(text, tol);
  if (!r.is_polynomial()) throw ParseError(0, "expected a polynomial, got a rational map");
  return r.as_polynomial();
}

Complex parse_complex(std::string_view text) {
  const RationalMap r = parse_map(text);
  if (r.degree() > 0) throw ParseError(0, "expected a constant, found the variable z");
  return r.num().is_zero() ? Complex{} : r.num()[0];
}

}  // namespace juliasym
