#pragma once

// Small recursive-descent parser shared by every text input format
// (polynomials, rational functions, symmetric functions, alphabets).
//
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := unary { ('*'|'/') unary }
//   unary  := '-' unary | power
//   power  := atom [ '^' integer ]
//   atom   := integer | name [ '[' integers ']' ] | '(' expr ')'
//
// The semantics object supplies the value type and its operations.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "intpoly.hpp"

namespace qtk {

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

template <class Semantics>
class ExprParser {
 public:
  using Value = typename Semantics::Value;

  ExprParser(std::string_view text, Semantics& sem) : text_(text), sem_(sem) {}

  Value parse() {
    try {
      Value v = expr();
      skip_ws();
      if (pos_ != text_.size()) fail("unexpected trailing input");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
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

  Value expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = term();
    if (negate) acc = sem_.neg(acc);
    for (;;) {
      if (accept('+')) acc = sem_.add(acc, term());
      else if (accept('-')) acc = sem_.sub(acc, term());
      else return acc;
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      if (accept('*')) acc = sem_.mul(acc, unary());
      else if (accept('/')) acc = sem_.div(acc, unary());
      else return acc;
    }
  }

  Value unary() {
    if (accept('-')) return sem_.neg(unary());
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      bool paren = accept('(');
      Integer e = integer();
      if (paren && !accept(')')) fail("expected ')'");
      if (e < 0 || e > 4096) fail("unsupported exponent");
      return sem_.pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return sem_.integer(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::optional<std::vector<int>> index;
      if (peek() == '[') {
        ++pos_;
        index.emplace();
        if (!accept(']')) {
          do {
            Integer part = integer();
            if (part > 1000000) fail("index too large");
            index->push_back(static_cast<int>(part));
          } while (accept(','));
          if (!accept(']')) fail("expected ']'");
        }
      }
      try {
        return sem_.name(name, index);
      } catch (const ParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail("unexpected character");
  }

  std::string_view text_;
  Semantics& sem_;
  std::size_t pos_ = 0;
};

}  // namespace qtk
