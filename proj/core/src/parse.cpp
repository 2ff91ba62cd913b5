// Copyright 2026 The deplocus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deplocus/parse.hpp"

#include <cctype>

namespace deplocus {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ContextPtr& ctx)
      : text_(text), ctx_(ctx) {}

  Polynomial run() {
    Polynomial f = expression();
    skip_spaces();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) +
                                  "'");
    return f;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expression() {
    bool negate = consume('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (consume('+')) {
        acc = acc + term();
      } else if (consume('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (consume('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (consume('^')) {
      skip_spaces();
      std::size_t at = pos_;
      std::uint64_t e = integer_literal(nullptr);
      if (e > ctx_->degree_cap())
        throw CapacityError("exponent " + std::to_string(e) +
                            " exceeds the degree cap at position " +
                            std::to_string(at));
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_spaces();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expression();
      skip_spaces();
      if (!consume(')')) throw SyntaxError(pos_, "expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t reduced = 0;
      integer_literal(&reduced);
      return Polynomial::constant(ctx_, reduced);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      const auto& names = ctx_->var_names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Polynomial::variable(ctx_, i);
      throw UnknownVariableError(name);
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  // Reads digits. Returns the value clamped for exponent use; if reduced is
  // given, also accumulates the literal mod p (coefficients can be huge).
  std::uint64_t integer_literal(std::uint64_t* reduced) {
    skip_spaces();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "expected an integer");
    std::uint64_t value = 0;
    std::uint64_t mod_value = 0;
    std::uint32_t p = ctx_->p();
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint32_t digit = static_cast<std::uint32_t>(text_[pos_] - '0');
      if (value <= (std::uint64_t{1} << 32)) value = value * 10 + digit;
      mod_value = (mod_value * 10 + digit) % p;
      ++pos_;
    }
    if (reduced) *reduced = mod_value;
    return value;
  }

  const std::string& text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace deplocus
