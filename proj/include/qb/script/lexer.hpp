// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qb/script/token.hpp"

namespace qb::script {

inline constexpr std::array<std::string_view, 5> kKeywords = {"ring", "bimodule", "module", "check", "assert"};

enum class LexMode { statements, element };

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  Span here() const { return {pos_, 0, line_, col_}; }
  std::size_t pos() const { return pos_; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline std::size_t utf8_width(char lead) {
  auto c = static_cast<unsigned char>(lead);
  if (c >= 0xF0) return 4;
  if (c >= 0xE0) return 3;
  if (c >= 0xC0) return 2;
  return 1;
}

}  // namespace detail

/// Maximal-munch tokenizer. `#` starts a line comment in both modes.
inline std::vector<Token> tokenize(std::string_view text, LexMode mode = LexMode::statements) {
  std::vector<Token> out;
  detail::Cursor cur(text);
  auto emit = [&](TokenKind k, Span s) {
    s.length = cur.pos() - s.offset;
    out.push_back({k, std::string(text.substr(s.offset, s.length)), s});
  };
  while (!cur.done()) {
    char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (c == '#') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }
    auto start = cur.here();
    if (mode == LexMode::element) {
      if (detail::digit(c)) {
        while (detail::digit(cur.peek())) cur.advance();
      } else if (c == 'x' || c == 'd' || std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        cur.advance();
      } else {
        start.length = std::min(detail::utf8_width(c), text.size() - start.offset);
        throw ScriptError({"error", "illegal character in element literal", start, "x, d, integer or one of + - * / ^"});
      }
      emit(TokenKind::element_literal, start);
      continue;
    }
    if (detail::ident_start(c)) {
      while (detail::ident_char(cur.peek())) cur.advance();
      std::string_view word = text.substr(start.offset, cur.pos() - start.offset);
      bool kw = std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
      emit(kw ? TokenKind::keyword : TokenKind::identifier, start);
    } else if (detail::digit(c)) {
      while (detail::digit(cur.peek())) cur.advance();
      emit(TokenKind::integer, start);
    } else if (c == '=' && cur.peek(1) == '=') {
      cur.advance();
      cur.advance();
      emit(TokenKind::symbol, start);
    } else if (std::string_view("=(),;").find(c) != std::string_view::npos) {
      cur.advance();
      emit(TokenKind::symbol, start);
    } else {
      start.length = std::min(detail::utf8_width(c), text.size() - start.offset);
      throw ScriptError({"error", std::string("illegal character '") + std::string(text.substr(start.offset, start.length)) + "'",
                         start, ""});
    }
  }
  return out;
}

}  // namespace qb::script
