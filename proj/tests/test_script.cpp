// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qb/demos.hpp"
#include "qb/script/element.hpp"
#include "qb/script/evaluator.hpp"
#include "qb/script/parser.hpp"

using namespace qb;
using namespace qb::script;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> bundled_sources() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(QB_SCRIPTS_DIR))
    if (e.path().extension() == ".qb") out.push_back(slurp(e.path()));
  for (const auto& d : demos()) out.emplace_back(d.script);
  return out;
}

ScriptError parse_error(std::string_view text) {
  try {
    parse_script(text);
  } catch (const ScriptError& e) {
    return e;
  }
  ADD_FAILURE() << "no diagnostic for: " << text;
  return ScriptError({});
}

Config quick() {
  Config c;
  c.samples = 20;
  c.seed = 5;
  return c;
}

}  // namespace

TEST(Lexer, RingDeclaration) {
  auto t = tokenize("ring S = Zmod(4)");
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[0].kind, TokenKind::keyword);
  EXPECT_EQ(t[1].kind, TokenKind::identifier);
  EXPECT_EQ(t[2].lexeme, "=");
  EXPECT_EQ(t[3].lexeme, "Zmod");
  EXPECT_EQ(t[3].kind, TokenKind::identifier);
  EXPECT_EQ(t[5].kind, TokenKind::integer);
  EXPECT_EQ(t[6].lexeme, ")");
}

TEST(Lexer, ElementMode) {
  auto t = tokenize("x^-1 + x*d", LexMode::element);
  ASSERT_EQ(t.size(), 8u);
  for (const auto& k : t) EXPECT_EQ(k.kind, TokenKind::element_literal);
}

TEST(Lexer, IllegalCharacter) {
  try {
    tokenize("ring $ = 3");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.diagnostic().span.offset, 5u);
    EXPECT_EQ(e.diagnostic().span.column, 6u);
    EXPECT_EQ(e.diagnostic().span.length, 1u);
  }
  try {
    tokenize("ring \xc3\xa9");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.diagnostic().span.length, 2u);
  }
}

TEST(Lexer, SpansReproduceInput) {
  for (const auto& src : bundled_sources()) {
    auto toks = tokenize(src);
    std::size_t prev_end = 0;
    for (const auto& t : toks) {
      EXPECT_EQ(src.substr(t.span.offset, t.span.length), t.lexeme);
      EXPECT_GE(t.span.offset, prev_end);
      // the gap holds only whitespace and comments
      auto gap = src.substr(prev_end, t.span.offset - prev_end);
      bool in_comment = false;
      for (char c : gap) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        EXPECT_TRUE(in_comment || std::isspace(static_cast<unsigned char>(c)));
      }
      prev_end = t.span.offset + t.span.length;
      // line/column agree with the offset
      auto line_start = src.rfind('\n', t.span.offset == 0 ? 0 : t.span.offset - 1);
      std::size_t col = t.span.offset - (line_start == std::string::npos || t.span.offset == 0 ? 0 : line_start + 1) + 1;
      if (t.span.offset == 0) col = 1;
      EXPECT_EQ(t.span.column, col);
      EXPECT_EQ(t.span.line, 1u + std::count(src.begin(), src.begin() + t.span.offset, '\n'));
    }
  }
}

TEST(Parser, DemoScriptHasFiveStatements) {
  auto p = parse_script(slurp(std::filesystem::path(QB_SCRIPTS_DIR) / "demo_finite.qb"));
  ASSERT_EQ(p.statements.size(), 5u);
  EXPECT_TRUE(std::holds_alternative<RingDecl>(p.statements[0]));
  EXPECT_TRUE(std::holds_alternative<BimoduleDecl>(p.statements[1]));
  EXPECT_TRUE(std::holds_alternative<ModuleDecl>(p.statements[2]));
  EXPECT_TRUE(std::holds_alternative<CheckStmt>(p.statements[3]));
  EXPECT_EQ(std::get<AssertStmt>(p.statements[4]).expected, "holds");
}

TEST(Parser, EmptyAndComments) {
  EXPECT_TRUE(parse_script("").statements.empty());
  EXPECT_TRUE(parse_script("  # nothing\n\n").statements.empty());
  EXPECT_EQ(parse_script("ring S = Zmod(4); ring T = Weyl;;").statements.size(), 2u);
}

TEST(Parser, Diagnostics) {
  auto e = parse_error("ring = Zmod(4)").diagnostic();
  EXPECT_EQ(e.span.offset, 5u);
  EXPECT_NE(e.message.find("expected identifier"), std::string::npos);

  auto m = parse_error("ring S = Zmod(4)\nmodule M = Pair(S").diagnostic();
  EXPECT_NE(m.message.find("end of input"), std::string::npos);
  EXPECT_EQ(m.span.line, 2u);

  auto c = parse_error("ring S = Zmod(4) check nonsense(S)").diagnostic();
  EXPECT_NE(c.expected.find("quasi_baer"), std::string::npos);
  EXPECT_EQ(c.span.column, 24u);

  EXPECT_NE(parse_error("assert quasi_baer(M) == maybe").diagnostic().expected.find("holds"), std::string::npos);
  EXPECT_NE(parse_error("ring S = Zmod(99999999999999999999)").diagnostic().message.find("too large"), std::string::npos);
}

TEST(Parser, DiagnosticsStayInsideInput) {
  const std::string cases[] = {"ring",          "ring S",           "ring S =",        "module M = Pair(",
                               "check x(M)",    "assert quasi_baer(M) ==", "bimodule N = Regular(", "ring S = MatRing(2,",
                               ")",             "ring S = Zmod(4) ring S = Zmod(2)", "check quasi_baer(M)"};
  for (const auto& src : cases) {
    auto d = parse_error(src).diagnostic();
    EXPECT_LE(d.span.offset + d.span.length, src.size()) << src;
    EXPECT_FALSE(d.render(src).empty());
  }
}

TEST(Resolver, NamesAndSorts) {
  EXPECT_NE(parse_error("check quasi_baer(M)").diagnostic().message.find("undeclared"), std::string::npos);
  EXPECT_NE(parse_error("ring S = Zmod(2)\nring S = Zmod(3)").diagnostic().message.find("duplicate"), std::string::npos);
  auto d = parse_error("ring S = Zmod(2)\ncheck quasi_baer(S)").diagnostic();
  EXPECT_NE(d.message.find("not a module"), std::string::npos);
  EXPECT_EQ(d.span.line, 2u);
}

TEST(Parser, RoundTripOnBundledScripts) {
  for (const auto& src : bundled_sources()) {
    auto p = parse_script(src);
    auto printed = pretty_print(p);
    auto q = parse_script(printed);
    EXPECT_EQ(p, q) << printed;
    EXPECT_EQ(printed, pretty_print(q));
  }
}

TEST(ElementSyntax, ParsesAndRoundTrips) {
  using weyl::WeylElement;
  EXPECT_EQ(parse_weyl_element("x*d + 1"), WeylElement::monomial(1, 1) + WeylElement::one());
  EXPECT_EQ(parse_weyl_element("x^-1"), WeylElement::x_inverse());
  EXPECT_EQ(parse_weyl_element("d*x"), WeylElement::monomial(1, 1) + WeylElement::one());
  EXPECT_EQ(parse_weyl_element("-3/2"), WeylElement::scalar(make_rational(-3, 2)));
  EXPECT_EQ(parse_weyl_element("2*(x + d)"), WeylElement::monomial(1, 0, 2) + WeylElement::monomial(0, 1, 2));
  EXPECT_THROW(parse_weyl_element(""), ScriptError);
  EXPECT_THROW(parse_weyl_element("x^"), ScriptError);
  EXPECT_THROW(parse_weyl_element("1/0"), ScriptError);
  EXPECT_THROW(parse_weyl_element("y"), ScriptError);
  std::mt19937_64 rng(11);
  weyl::ElementBox box;
  box.x_min = -4;
  for (int i = 0; i < 300; ++i) {
    auto a = weyl::random_element(rng, box);
    EXPECT_EQ(parse_weyl_element(weyl::to_string(a)), a) << weyl::to_string(a);
  }
}

TEST(Evaluator, FiniteExamples) {
  auto r = evaluate(parse_script("ring S = Zmod(4); bimodule N = ZmodBimodule(S, 2); module M = Pair(S, N); "
                                 "check quasi_baer(M)\nassert quasi_retractable(M) == holds"),
                    quick());
  ASSERT_EQ(r.status, RunStatus::ok);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].verdict.decision, Decision::fails);
  EXPECT_EQ(r.checks[0].verdict.witness["ideal"]["elements"], json::array({0, 2}));
  EXPECT_TRUE(r.checks[1].passed);

  auto e = evaluate(parse_script("ring F = Zmod(2)\nbimodule N = Regular(F)\nmodule M = Pair(F, N)\ncheck end_ring(M)"), quick());
  ASSERT_EQ(e.checks.size(), 1u);
  EXPECT_EQ(e.checks[0].verdict.decision, Decision::holds);
  EXPECT_EQ(e.checks[0].verdict.certificates[0]["end_size"], 2);
}

TEST(Evaluator, AssertFailureAndErrors) {
  auto a = evaluate(parse_script("ring S = Zmod(4)\nbimodule N = ZmodBimodule(S, 2)\nmodule M = Pair(S, N)\n"
                                 "assert quasi_baer(M) == holds\ncheck torsion_free(M)"),
                    quick());
  EXPECT_EQ(a.status, RunStatus::assert_failed);
  EXPECT_EQ(a.checks.size(), 2u);

  auto err = [&](const std::string& src, std::size_t line) {
    auto r = evaluate(parse_script(src), quick());
    EXPECT_EQ(r.status, RunStatus::error) << src;
    ASSERT_TRUE(r.error.has_value());
    EXPECT_EQ(r.error->span.line, line) << r.error->message;
  };
  err("ring S = Zmod(1)", 1);
  err("ring S = Zmod(4)\nbimodule N = ZmodBimodule(S, 3)", 2);
  err("ring S = WeylLoc\nbimodule N = WeylQuotient\nmodule M = Pair(S, N)", 3);
  err("ring S = Weyl\nbimodule N = WeylQuotient\nmodule M = Pair(S, N)\ncheck smash_structure(M)", 4);
  err("ring S = Zmod(2)\nring T = Zmod(3)\nbimodule N = Regular(T)\nmodule M = Pair(S, N)", 4);
  err("ring S = MatRing(4, Zmod(4))", 1);
  err("ring S = Zmod(5000)", 1);
}

TEST(Evaluator, WeylScript) {
  auto r = evaluate(parse_script(std::string(*demo_script("weyl-counterexample"))), quick());
  ASSERT_EQ(r.status, RunStatus::ok);
  ASSERT_EQ(r.checks.size(), 4u);
  const Decision expect[] = {Decision::holds_by_structure, Decision::holds_by_structure, Decision::fails, Decision::fails};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(r.checks[i].verdict.decision, expect[i]);
  auto m = WeylMorita(WeylRing::weyl, WeylBimodule::quotient);
  EXPECT_TRUE(replay_witness(Instance(m), r.checks[2].verdict));
  EXPECT_TRUE(replay_witness(Instance(m), r.checks[3].verdict));
}

TEST(Replay, FiniteWitnessesReplayAndTamperingIsCaught) {
  FiniteMorita c(FiniteRing::zmod(4), FiniteBimodule::zmod_quotient(FiniteRing::zmod(4), 2));
  Instance inst(c);
  for (const char* name : {"quasi_baer", "q_local_retractable", "local_retractable", "torsion_free"}) {
    auto v = run_check(name, inst);
    ASSERT_EQ(v.decision, Decision::fails) << name;
    EXPECT_TRUE(replay_witness(inst, v)) << name;
    auto bad = v;
    if (bad.witness["kind"] == "ideal") {
      bad.witness["ideal"]["generators"] = json::array({1});
      bad.witness["ideal"]["elements"] = json::array({0, 1, 2, 3});
    } else {
      bad.witness["n"] = 0;
    }
    EXPECT_FALSE(replay_witness(inst, bad)) << name;
  }
  auto w = run_check("quasi_retractable", Instance(WeylMorita(WeylRing::weyl, WeylBimodule::quotient)), quick());
  auto bad = w;
  bad.witness["q"] = "x";
  EXPECT_FALSE(replay_witness(Instance(WeylMorita(WeylRing::weyl, WeylBimodule::quotient)), bad));
}

TEST(Replay, CollapseCertificatesFromJson) {
  auto v = run_check("quasi_baer", Instance(WeylMorita(WeylRing::weyl_loc, WeylBimodule::regular)), quick());
  std::size_t n = 0;
  for (const auto& c : v.certificates)
    if (c["kind"] == "simplicity")
      for (const auto& cert : c["certificates"]) {
        auto parsed = collapse_from_json(cert);
        ASSERT_TRUE(parsed.has_value());
        EXPECT_TRUE(weyl::replay(*parsed));
        auto t = *parsed;
        t.final_scalar += 1;
        EXPECT_FALSE(weyl::replay(t));
        ++n;
      }
  EXPECT_EQ(n, 20u);
}
