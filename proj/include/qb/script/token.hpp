// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb::script {

/// Byte offset plus 1-based line and column of the first byte.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { keyword, identifier, integer, symbol, element_literal };

inline const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::identifier: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::symbol: return "symbol";
    case TokenKind::element_literal: return "element-literal";
  }
  return "?";
}

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;
  friend bool operator==(const Token&, const Token&) = default;
};

struct Diagnostic {
  std::string severity = "error";
  std::string message;
  Span span;
  std::string expected;  // empty when there is no hint

  /// "file:line:col: error: message (expected ...)" followed by the source line and a caret.
  std::string render(const std::string& source, const std::string& path = "<input>") const {
    std::string out = path + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + severity +
                      ": " + message;
    if (!expected.empty() && message.find("expected " + expected) == std::string::npos)
      out += " (expected " + expected + ")";
    out += "\n";
    auto begin = span.offset - std::min(span.offset, span.column - 1);
    auto end = source.find('\n', begin);
    out += source.substr(begin, end == std::string::npos ? std::string::npos : end - begin) + "\n";
    out += std::string(span.column - 1, ' ') + std::string(std::max<std::size_t>(span.length, 1), '^') + "\n";
    return out;
  }
};

/// Raised by the lexer, parser and resolver.
class ScriptError : public std::runtime_error {
 public:
  explicit ScriptError(Diagnostic d) : std::runtime_error(d.message), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

}  // namespace qb::script
