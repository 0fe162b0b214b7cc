// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qb/script/lexer.hpp"
#include "qb/weyl.hpp"

namespace qb::script {

namespace detail {

// expr := [+|-] term ((+|-) term)* ; term := factor (* factor)* ;
// factor := INT [/ INT] | x [^ [-] INT] | d [^ INT] | ( expr )
class ElementParser {
 public:
  ElementParser(std::vector<Token> toks, std::size_t end) : toks_(std::move(toks)), end_(end) {}

  weyl::WeylElement parse() {
    auto e = expr();
    if (pos_ < toks_.size()) fail("unexpected '" + toks_[pos_].lexeme + "'", "+, - or end of input");
    return e;
  }

 private:
  bool at(std::string_view s) const { return pos_ < toks_.size() && toks_[pos_].lexeme == s; }
  bool accept(std::string_view s) {
    if (!at(s)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    Span s = pos_ < toks_.size() ? toks_[pos_].span : Span{end_, 0, 1, end_ + 1};
    throw ScriptError({"error", msg, s, expected});
  }
  std::string integer() {
    if (pos_ >= toks_.size() || !detail::digit(toks_[pos_].lexeme[0])) fail("expected integer", "integer");
    return toks_[pos_++].lexeme;
  }

  weyl::WeylElement expr() {
    bool neg = false;
    if (accept("-")) neg = true;
    else accept("+");
    auto acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept("+")) acc = acc + term();
      else if (accept("-")) acc = acc - term();
      else return acc;
    }
  }

  weyl::WeylElement term() {
    auto acc = factor();
    while (accept("*")) acc = acc * factor();
    return acc;
  }

  weyl::WeylElement factor() {
    if (accept("(")) {
      auto e = expr();
      if (!accept(")")) fail("expected ')'", ")");
      return e;
    }
    if (accept("x")) {
      std::int64_t k = 1;
      if (accept("^")) {
        bool neg = accept("-");
        k = std::stoll(integer());
        if (neg) k = -k;
      }
      return weyl::WeylElement::monomial(k, 0);
    }
    if (accept("d")) {
      std::uint32_t j = 1;
      if (accept("^")) j = static_cast<std::uint32_t>(std::stoul(integer()));
      return weyl::WeylElement::monomial(0, j);
    }
    if (pos_ < toks_.size() && detail::digit(toks_[pos_].lexeme[0])) {
      std::string num = integer(), den = "1";
      if (accept("/")) den = integer();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", "nonzero integer");
      return weyl::WeylElement::scalar(make_rational(Integer(num), Integer(den)));
    }
    fail(pos_ < toks_.size() ? "unexpected '" + toks_[pos_].lexeme + "'" : "unexpected end of input",
         "integer, x, d or '('");
  }

  std::vector<Token> toks_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the textual element syntax, e.g. "x*d + 1", "x^-1", "-3/2*d^2".
inline weyl::WeylElement parse_weyl_element(std::string_view text) {
  auto toks = tokenize(text, LexMode::element);
  if (toks.empty()) throw ScriptError({"error", "empty element literal", {0, 0, 1, 1}, "integer, x, d or '('"});
  return detail::ElementParser(std::move(toks), text.size()).parse();
}

}  // namespace qb::script
