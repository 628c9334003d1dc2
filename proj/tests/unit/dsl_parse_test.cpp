// Copyright 2026 The Storyweave Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>

#include "storyweave/dsl/lexer.hpp"
#include "storyweave/dsl/parser.hpp"
#include "storyweave/dsl/printer.hpp"
#include "storyweave/engine/random.hpp"

namespace storyweave::dsl {
namespace {

ParseResult parse_text(const std::string& text) { return parse(SourceFile{"t.story", text}); }

std::string first_error(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::kError) return d.code;
  return "";
}

TEST(Lexer, KeywordsIdentifiersAndLiterals) {
  auto r = lex("story \"s\" { request push(color: \"green\", n: -3) } // tail");
  ASSERT_TRUE(r.diagnostics.empty());
  std::vector<TokenKind> kinds;
  for (const auto& t : r.tokens) kinds.push_back(t.kind);
  EXPECT_EQ(kinds.front(), TokenKind::kStory);
  EXPECT_EQ(kinds.back(), TokenKind::kEof);
  EXPECT_EQ(r.tokens[1].text, "s");
  bool saw_negative = false;
  for (const auto& t : r.tokens) saw_negative = saw_negative || (t.kind == TokenKind::kInt && t.value == -3);
  EXPECT_TRUE(saw_negative);
}

TEST(Lexer, StringEscapes) {
  auto r = lex(R"("a\"b\\c\nd\te")");
  ASSERT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.tokens[0].text, "a\"b\\c\nd\te");
}

TEST(Lexer, ErrorCodes) {
  EXPECT_EQ(first_error(lex("\"open").diagnostics), "unterminated-string");
  EXPECT_EQ(first_error(lex("\"\\q\"").diagnostics), "bad-escape");
  EXPECT_EQ(first_error(lex("99999999999999999999").diagnostics), "int-out-of-range");
  EXPECT_EQ(first_error(lex("story $").diagnostics), "bad-character");
  EXPECT_EQ(first_error(lex("\xc3\x28").diagnostics), "invalid-utf8");
}

TEST(Lexer, PositionsAreOneBased) {
  auto r = lex("story\n  \"x\"");
  ASSERT_GE(r.tokens.size(), 2u);
  EXPECT_EQ(r.tokens[0].span.line, 1u);
  EXPECT_EQ(r.tokens[0].span.column, 1u);
  EXPECT_EQ(r.tokens[1].span.line, 2u);
  EXPECT_EQ(r.tokens[1].span.column, 3u);
}

TEST(Parser, MinimalStory) {
  auto r = parse_text("story \"s\" { request push(color: \"green\") }");
  ASSERT_TRUE(r.ast);
  ASSERT_EQ(r.ast->stories.size(), 1u);
  ASSERT_EQ(r.ast->stories[0].body.size(), 1u);
  const auto* req = std::get_if<RequestStmt>(&r.ast->stories[0].body[0].node);
  ASSERT_NE(req, nullptr);
  EXPECT_EQ(req->event.name, "push");
  EXPECT_EQ(req->event.fields[0].value.text, "green");
}

TEST(Parser, UnexpectedEofAtEnd) {
  std::string text = "story \"s\" {";
  auto r = parse_text(text);
  EXPECT_FALSE(r.ast);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0].code, "unexpected-eof");
  EXPECT_EQ(r.diagnostics[0].span.offset, text.size());
}

TEST(Parser, PizzaSearchStory) {
  auto r = parse_text(R"(
    story "SearchPizzaOnGoogle" {
      session A1 {
        request ComposeQuery(text: "Pizza")
        request StartSearch
      }
    })");
  ASSERT_TRUE(r.ast);
  const auto* ses = std::get_if<SessionStmt>(&r.ast->stories[0].body[0].node);
  ASSERT_NE(ses, nullptr);
  EXPECT_EQ(ses->id, "A1");
  ASSERT_EQ(ses->body.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<RequestStmt>(ses->body[0].node));
  EXPECT_TRUE(std::holds_alternative<RequestStmt>(ses->body[1].node));
}

TEST(Parser, AllStatementForms) {
  auto r = parse_text(R"(
    highlevel HOT, COLD
    event HOT() = [hot_1, hot_2]
    story "s" {
      waitFor a, b(k: 1)
      block a until b
      repeat 3 { request a }
      forever { request b }
      choose { { request a } or { request b } or { request c } }
    })");
  ASSERT_TRUE(r.ast) << first_error(r.diagnostics);
  EXPECT_EQ(r.ast->highlevel[0].names.size(), 2u);
  EXPECT_EQ(r.ast->event_defs[0].body.size(), 2u);
  EXPECT_EQ(r.ast->stories[0].body.size(), 5u);
  const auto* ch = std::get_if<ChooseStmt>(&r.ast->stories[0].body[4].node);
  ASSERT_NE(ch, nullptr);
  EXPECT_EQ(ch->branches.size(), 3u);
}

TEST(Parser, RecoversAndReportsSeveralErrors) {
  auto r = parse_text("story \"a\" { request } story \"b\" { waitFor } story \"c\" { request x }");
  EXPECT_FALSE(r.ast);
  int errors = 0;
  for (const auto& d : r.diagnostics) errors += d.severity == Severity::kError ? 1 : 0;
  EXPECT_GE(errors, 2);
}

TEST(Parser, NestingLimit) {
  std::string text = "story \"s\" {";
  for (int i = 0; i < kMaxNesting + 5; ++i) text += " repeat 1 {";
  text += " request a";
  for (int i = 0; i < kMaxNesting + 5; ++i) text += " }";
  text += " }";
  auto r = parse_text(text);
  EXPECT_FALSE(r.ast);
  EXPECT_EQ(first_error(r.diagnostics), "nesting-too-deep");
}

// Random ASTs for the print/parse round trip.
class AstGenerator {
 public:
  explicit AstGenerator(std::uint64_t seed) : rng_(seed) {}

  ModelAst model() {
    ModelAst m;
    if (rng_.below(3) == 0) m.highlevel.push_back(HighLevelDecl{{ident(), ident()}, {}});
    for (std::uint32_t i = rng_.below(3); i > 0; --i) {
      EventDef d;
      d.name = ident();
      for (std::uint32_t p = rng_.below(3); p > 0; --p) d.params.push_back(ident());
      for (std::uint32_t b = 1 + rng_.below(3); b > 0; --b) d.body.push_back(event());
      m.event_defs.push_back(std::move(d));
    }
    for (std::uint32_t i = 1 + rng_.below(3); i > 0; --i) {
      m.stories.push_back(StoryDef{text(), block(0), {}});
    }
    return m;
  }

 private:
  std::string ident() {
    static const char* words[] = {"a", "push", "hot_1", "Compose", "x9", "until_", "_z"};
    return words[rng_.below(7)];
  }
  std::string text() {
    static const char* words[] = {"s", "", "with \"quotes\"", "back\\slash", "tab\there",
                                  "line\nbreak", "ünï"};
    return words[rng_.below(7)];
  }
  Literal literal() {
    switch (rng_.below(3)) {
      case 0:
        return Literal{Literal::Kind::kString, text(), 0};
      case 1:
        return Literal{Literal::Kind::kInt, "", static_cast<std::int64_t>(rng_.next_u32()) - 2000000000};
      default:
        return Literal{Literal::Kind::kIdent, ident(), 0};
    }
  }
  EventExpr event() {
    EventExpr e;
    e.name = ident();
    for (std::uint32_t i = rng_.below(3); i > 0; --i) e.fields.push_back(FieldExpr{ident(), literal(), {}});
    return e;
  }
  Block block(int depth) {
    Block b;
    for (std::uint32_t i = rng_.below(4); i > 0; --i) b.push_back(stmt(depth));
    return b;
  }
  Stmt stmt(int depth) {
    Stmt s;
    switch (depth > 3 ? 0 : rng_.below(7)) {
      case 0:
        s.node = RequestStmt{event()};
        break;
      case 1: {
        WaitForStmt w;
        for (std::uint32_t i = 1 + rng_.below(2); i > 0; --i) w.patterns.push_back(event());
        s.node = w;
        break;
      }
      case 2: {
        BlockUntilStmt bu;
        for (std::uint32_t i = 1 + rng_.below(2); i > 0; --i) bu.blocked.push_back(event());
        bu.release = event();
        s.node = bu;
        break;
      }
      case 3:
        s.node = RepeatStmt{1 + rng_.below(5), block(depth + 1)};
        break;
      case 4:
        s.node = ForeverStmt{block(depth + 1)};
        break;
      case 5: {
        ChooseStmt c;
        for (std::uint32_t i = 2 + rng_.below(2); i > 0; --i) c.branches.push_back(block(depth + 1));
        s.node = c;
        break;
      }
      default:
        s.node = SessionStmt{ident(), block(depth + 1)};
    }
    return s;
  }

  Pcg32 rng_;
};

TEST(Printer, RoundTripProperty) {
  AstGenerator gen(17);
  for (int i = 0; i < 500; ++i) {
    ModelAst ast = gen.model();
    std::string printed = pretty_print(ast);
    auto r = parse_text(printed);
    ASSERT_TRUE(r.ast) << printed << "\n" << first_error(r.diagnostics);
    ASSERT_EQ(*r.ast, ast) << printed;
    EXPECT_EQ(pretty_print(*r.ast), printed);
  }
}

TEST(Printer, QuoteString) {
  EXPECT_EQ(quote_string("a\"b\\c\n"), "\"a\\\"b\\\\c\\n\"");
}

TEST(Fuzz, RandomBytesNeverCrash) {
  Pcg32 rng(99);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    for (std::uint32_t n = rng.below(120); n > 0; --n) text.push_back(static_cast<char>(rng.next_u32()));
    auto r = parse_text(text);
    EXPECT_TRUE(r.ast.has_value() != has_errors(r.diagnostics));
  }
}

}  // namespace
}  // namespace storyweave::dsl
