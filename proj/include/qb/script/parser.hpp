// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qb/script/ast.hpp"
#include "qb/script/lexer.hpp"

namespace qb::script {

namespace detail {

class Parser {
 public:
  Parser(const std::vector<Token>& toks, std::size_t input_length) : toks_(toks), input_length_(input_length) {}

  Program program() {
    Program p;
    while (pos_ < toks_.size()) {
      p.statements.push_back(statement());
      while (accept_symbol(";")) {
      }
    }
    return p;
  }

 private:
  const Token* current() const { return pos_ < toks_.size() ? &toks_[pos_] : nullptr; }

  Span end_span() const {
    if (toks_.empty()) return {0, 0, 1, 1};
    auto s = toks_.back().span;
    return {s.offset + s.length, 0, s.line, s.column + s.length};
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token* t = current();
    if (!t) throw ScriptError({"error", "unexpected end of input", end_span(), expected});
    throw ScriptError({"error", "expected " + expected + ", found '" + t->lexeme + "'", t->span, expected});
  }

  bool accept_symbol(std::string_view s) {
    auto t = current();
    if (t && t->kind == TokenKind::symbol && t->lexeme == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail("'" + std::string(s) + "'");
    return toks_[pos_ - 1];
  }
  const Token& expect_identifier(const std::string& what = "identifier") {
    auto t = current();
    if (!t || t->kind != TokenKind::identifier) fail(what);
    ++pos_;
    return *t;
  }
  const Token& expect_word(std::initializer_list<std::string_view> words, const std::string& what) {
    auto t = current();
    if (!t || t->kind != TokenKind::identifier ||
        std::find(words.begin(), words.end(), std::string_view(t->lexeme)) == words.end())
      fail(what);
    ++pos_;
    return *t;
  }
  std::uint64_t expect_integer() {
    auto t = current();
    if (!t || t->kind != TokenKind::integer) fail("integer");
    ++pos_;
    if (t->lexeme.size() > 18) throw ScriptError({"error", "integer literal too large", t->span, ""});
    return std::stoull(t->lexeme);
  }

  Span from(const Span& start) const {
    const auto& last = toks_[pos_ - 1].span;
    Span s = start;
    s.length = last.offset + last.length - start.offset;
    return s;
  }

  Statement statement() {
    auto t = current();
    if (!t || t->kind != TokenKind::keyword) fail("one of ring, bimodule, module, check, assert");
    const Span start = t->span;
    const std::string kw = t->lexeme;
    ++pos_;
    if (kw == "ring") {
      RingDecl d;
      const auto& n = expect_identifier();
      d.name = n.lexeme;
      d.name_span = n.span;
      expect_symbol("=");
      d.expr = ring_expr();
      d.span = from(start);
      return d;
    }
    if (kw == "bimodule") {
      BimoduleDecl d;
      const auto& n = expect_identifier();
      d.name = n.lexeme;
      d.name_span = n.span;
      expect_symbol("=");
      d.expr = bimodule_expr();
      d.span = from(start);
      return d;
    }
    if (kw == "module") {
      ModuleDecl d;
      const auto& n = expect_identifier();
      d.name = n.lexeme;
      d.name_span = n.span;
      expect_symbol("=");
      expect_word({"Pair"}, "Pair");
      expect_symbol("(");
      const auto& r = expect_identifier();
      expect_symbol(",");
      const auto& b = expect_identifier();
      expect_symbol(")");
      d.ring = r.lexeme;
      d.ring_span = r.span;
      d.bimodule = b.lexeme;
      d.bimodule_span = b.span;
      d.span = from(start);
      return d;
    }
    const auto& name = check_name();
    expect_symbol("(");
    const auto& m = expect_identifier();
    expect_symbol(")");
    if (kw == "check") {
      CheckStmt c{name.lexeme, m.lexeme, {}, m.span};
      c.span = from(start);
      return c;
    }
    expect_symbol("==");
    const auto& e = expect_word({"holds", "fails"}, "holds or fails");
    AssertStmt a{name.lexeme, m.lexeme, e.lexeme, {}, m.span};
    a.span = from(start);
    return a;
  }

  const Token& check_name() {
    auto t = current();
    if (!t || t->kind != TokenKind::identifier ||
        std::find(kCheckNames.begin(), kCheckNames.end(), std::string_view(t->lexeme)) == kCheckNames.end()) {
      std::string names;
      for (auto n : kCheckNames) names += (names.empty() ? "" : ", ") + std::string(n);
      fail("check name (" + names + ")");
    }
    ++pos_;
    return *t;
  }

  RingExpr ring_expr() {
    RingExpr r;
    const auto& w = expect_word({"Zmod", "MatRing", "Weyl", "WeylLoc"}, "ring expression (Zmod, MatRing, Weyl, WeylLoc)");
    const Span start = w.span;
    if (w.lexeme == "Zmod") {
      r.kind = RingExpr::Kind::zmod;
      expect_symbol("(");
      r.n = expect_integer();
      expect_symbol(")");
    } else if (w.lexeme == "MatRing") {
      r.kind = RingExpr::Kind::matring;
      expect_symbol("(");
      r.n = expect_integer();
      expect_symbol(",");
      r.base = std::make_shared<RingExpr>(ring_expr());
      expect_symbol(")");
    } else {
      r.kind = w.lexeme == "Weyl" ? RingExpr::Kind::weyl : RingExpr::Kind::weyl_loc;
    }
    r.span = from(start);
    return r;
  }

  BimoduleExpr bimodule_expr() {
    BimoduleExpr b;
    const auto& w = expect_word({"Regular", "ZmodBimodule", "WeylQuotient"},
                                "bimodule expression (Regular, ZmodBimodule, WeylQuotient)");
    const Span start = w.span;
    if (w.lexeme == "WeylQuotient") {
      b.kind = BimoduleExpr::Kind::weyl_quotient;
    } else {
      b.kind = w.lexeme == "Regular" ? BimoduleExpr::Kind::regular : BimoduleExpr::Kind::zmod_quotient;
      expect_symbol("(");
      const auto& r = expect_identifier();
      b.ring = r.lexeme;
      b.ring_span = r.span;
      if (b.kind == BimoduleExpr::Kind::zmod_quotient) {
        expect_symbol(",");
        b.m = expect_integer();
      }
      expect_symbol(")");
    }
    b.span = from(start);
    return b;
  }

  const std::vector<Token>& toks_;
  std::size_t input_length_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Program parse(const std::vector<Token>& tokens, std::size_t input_length = 0) {
  return detail::Parser(tokens, input_length).program();
}

/// Every use names an earlier declaration of the right sort; names are unique.
inline void resolve(const Program& p) {
  enum class Sort { ring, bimodule, module };
  std::map<std::string, Sort> declared;
  auto declare = [&](const std::string& name, Sort s, const Span& span) {
    if (declared.count(name)) throw ScriptError({"error", "duplicate declaration of '" + name + "'", span, ""});
    declared.emplace(name, s);
  };
  auto use = [&](const std::string& name, Sort s, const Span& span) {
    static const char* sorts[] = {"ring", "bimodule", "module"};
    auto it = declared.find(name);
    if (it == declared.end()) throw ScriptError({"error", "undeclared name '" + name + "'", span, sorts[int(s)]});
    if (it->second != s)
      throw ScriptError({"error", "'" + name + "' is a " + sorts[int(it->second)] + ", not a " + sorts[int(s)], span,
                         sorts[int(s)]});
  };
  for (const auto& st : p.statements) {
    if (auto d = std::get_if<RingDecl>(&st)) {
      declare(d->name, Sort::ring, d->name_span);
    } else if (auto d = std::get_if<BimoduleDecl>(&st)) {
      if (d->expr.kind != BimoduleExpr::Kind::weyl_quotient) use(d->expr.ring, Sort::ring, d->expr.ring_span);
      declare(d->name, Sort::bimodule, d->name_span);
    } else if (auto d = std::get_if<ModuleDecl>(&st)) {
      use(d->ring, Sort::ring, d->ring_span);
      use(d->bimodule, Sort::bimodule, d->bimodule_span);
      declare(d->name, Sort::module, d->name_span);
    } else if (auto c = std::get_if<CheckStmt>(&st)) {
      use(c->module, Sort::module, c->module_span);
    } else if (auto a = std::get_if<AssertStmt>(&st)) {
      use(a->module, Sort::module, a->module_span);
    }
  }
}

/// tokenize + parse + resolve.
inline Program parse_script(std::string_view text) {
  auto p = parse(tokenize(text), text.size());
  resolve(p);
  return p;
}

}  // namespace qb::script
