/*
 * Copyright 2026 The varord authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "varord/parser.hpp"

#include <cctype>
#include <map>

namespace varord {

namespace {

// Exponents live in machine words; anything near this bound is outside the
// tool's problem domain anyway.
constexpr unsigned long kMaxExponent = 1000000;

// Recursive-descent parser for the polynomial grammar.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary
//   primary := INT | IDENT ['^' INT] | '(' expr ')' ['^' INT]
class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), nvars_(variables.size()) {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      var_index_[variables[i]] = i;
    }
  }

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "'",
                       pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (eat('-')) return -factor();
    return primary();
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = integer_literal();
      Polynomial p = Polynomial::constant(nvars_, Rational(n));
      return maybe_power(p);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ident.push_back(text_[pos_++]);
      }
      auto it = var_index_.find(ident);
      if (it == var_index_.end()) {
        throw ParseError("unknown identifier '" + ident + "'", start);
      }
      return maybe_power(Polynomial::variable(nvars_, it->second));
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_ws();
      if (!eat(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return maybe_power(p);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Polynomial maybe_power(Polynomial base) {
    if (!eat('^')) return base;
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("exponent must be a nonnegative integer literal", pos_);
    }
    Integer e = integer_literal();
    if (!e.fits_ulong_p() || e.get_ui() > kMaxExponent) {
      throw ParseError("exponent too large", pos_);
    }
    unsigned long n = e.get_ui();
    Polynomial acc = Polynomial::constant(base.nvars(), Rational(1));
    while (n > 0) {  // square and multiply
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return acc;
  }

  Integer integer_literal() {
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_++]);
    }
    return Integer(digits);
  }

  const std::string& text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> var_index_;
};

}  // namespace

Polynomial parse_poly(const std::string& text,
                      const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

PolySystem parse_system(const std::vector<std::string>& polys,
                        const std::vector<std::string>& variables) {
  PolySystem s;
  s.nvars = variables.size();
  s.var_names = variables;
  s.polys.reserve(polys.size());
  for (const std::string& text : polys) {
    s.polys.push_back(parse_poly(text, variables));
  }
  return s;
}

}  // namespace varord
