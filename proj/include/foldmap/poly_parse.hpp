#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "foldmap/poly.hpp"

namespace foldmap {

namespace detail {

// Recursive-descent reader for integer-coefficient expressions such as
// "x^3 - 3*x*y - 9*x - 6*y - 12" or "(u^2 - 2)*(v^2 - 2)".
class PolyReader {
public:
  PolyReader(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw math_error("cannot parse polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(vars_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (accept('*')) {
        acc = acc * factor();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) != 0)) {
        acc = acc * factor();  // implicit product, e.g. "2x" or "x y"
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '/')) ++pos_;
      return Poly::constant(vars_, CycloElem(parse_rational(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a number, variable or '('");
    std::string name(s_.substr(start, pos_ - start));
    // Single-letter variables may be juxtaposed ("xy"); split when the whole
    // token is not itself a variable name.
    if (std::find(vars_.begin(), vars_.end(), name) == vars_.end() && name.size() > 1) {
      pos_ = start + 1;
      name = name.substr(0, 1);
    }
    return Poly::variable(vars_, name);
  }

  std::string_view s_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an integer/rational-coefficient polynomial expression in the given context.
inline Poly parse_poly(std::string_view text, const VarList& vars) {
  return detail::PolyReader(text, vars).parse();
}

}  // namespace foldmap
