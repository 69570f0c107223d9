#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "mpoly.hpp"
#include "quat.hpp"
#include "upoly.hpp"

namespace qnull {

/// Malformed input text; `position` is the zero-based offset of the problem.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InvalidInput(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

/// Recursive-descent parser for quaternion polynomial expressions:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | 'i' | 'j' | 'k' | variable | '(' expr ')'
///
/// Juxtaposition multiplies, in order, so `2/3jx` is (2/3) j x. Variables are
/// `x1`..`xn`; a bare `x` is accepted when there is exactly one variable.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  MPoly parse() {
    MPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'j' || c == 'k' || c == 'x' ||
           c == '(';
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  MPoly expr() {
    MPoly out(nvars_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      if (!starts_atom()) fail(peek() == '\0' ? "unexpected end of input" : "expected a term");
      MPoly t = term();
      out += negate ? -t : t;
      first = false;
    }
    return out;
  }

  MPoly term() {
    MPoly out = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        if (!starts_atom()) fail("expected a factor after '*'");
      } else if (!starts_atom()) {
        break;
      }
      out = out * factor();
    }
    return out;
  }

  MPoly factor() {
    MPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      std::string e = digits();
      if (e.size() > 3) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = digits();
        if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
      }
      return MPoly::constant(nvars_, Quat(Rat(mpz_class(num), mpz_class(den))));
    }
    if (c == 'i' || c == 'j' || c == 'k') {
      ++pos_;
      return MPoly::constant(nvars_, Quat::unit(c - 'i' + 1));
    }
    if (c == 'x') {
      std::size_t at = pos_++;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        auto idx = text_.substr(start, pos_ - start);
        if (idx.size() > 6) throw ParseError("variable index too large", at);
        index = std::stoul(std::string(idx));
      } else if (nvars_ != 1) {
        throw ParseError("bare 'x' needs exactly one variable; use x1..x" + std::to_string(nvars_), at);
      }
      if (index < 1 || index > nvars_)
        throw ParseError("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(nvars_), at);
      return MPoly::variable(nvars_, index - 1);
    }
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly parse_mpoly(std::string_view text, std::size_t nvars) {
  return detail::ExprParser(text, nvars).parse();
}

/// Quaternion literal such as `1 - 2/3i + j - k`.
inline Quat parse_quat(std::string_view text) { return parse_mpoly(text, 0).constant_term(); }

/// Polynomial in `x` such as `(1+i)x^2 - 2/3jx + k`.
inline UPoly parse_upoly(std::string_view text) { return parse_mpoly(text, 1).to_upoly(); }

}  // namespace qnull
