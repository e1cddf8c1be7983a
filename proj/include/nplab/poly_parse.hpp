#ifndef NPLAB_POLY_PARSE_HPP
#define NPLAB_POLY_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace nplab {

namespace detail {

// expr   := term (("+" | "-") term)*
// term   := unary ("*" unary)*
// unary  := ("+" | "-") unary | power
// power  := atom ("^" INT)?
// atom   := NUMBER | VAR | "(" expr ")"
// VAR    := "x" INT | "t" INT | "I" | "A[" INT "," INT "," INT "]"
//         | "a[" INT "," INT "]" | "b[" INT "," INT "]"
class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error("polynomial: " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  unsigned integer() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint16_t>::max()) fail("index too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return static_cast<unsigned>(v);
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (accept('*')) p *= unary();
    return p;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) return base.pow(integer());
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    std::size_t start = pos_;
    ++pos_;
    switch (ch) {
    case 'x': {
      unsigned k = integer();
      if (k == 0) {
        pos_ = start;
        fail("variable indices start at 1");
      }
      return Poly::var(VarId::param(k));
    }
    case 't':
      return Poly::var(VarId::aux(integer()));
    case 'I':
      return Poly::var(VarId::imag());
    case 'A': {
      expect('[');
      unsigned i = integer();
      expect(',');
      unsigned t = integer();
      expect(',');
      unsigned q = integer();
      expect(']');
      if (i == 0 || t == 0 || q == 0) {
        pos_ = start;
        fail("variable indices start at 1");
      }
      return Poly::var(VarId::edge(i, t, q));
    }
    case 'a':
    case 'b': {
      expect('[');
      unsigned i = integer();
      expect(',');
      unsigned j = integer();
      expect(']');
      return Poly::var(ch == 'a' ? VarId::coef_a(i, j) : VarId::coef_b(i, j));
    }
    default:
      pos_ = start;
      fail(std::string("unknown symbol '") + ch + "'");
    }
  }

  Poly number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.'))
      ++pos_;
    // A '/' directly followed by digits belongs to the literal.
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    try {
      return Poly(parse_rat(text_.substr(start, pos_ - start)));
    } catch (const std::exception &) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the text form produced by Poly::to_string (and ordinary
/// arithmetic notation with parentheses and integer powers).
inline Poly parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

} // namespace nplab

#endif // NPLAB_POLY_PARSE_HPP
