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

#include "storyweave/dsl/parser.hpp"

#include <utility>

#include "storyweave/dsl/lexer.hpp"

namespace storyweave::dsl {
namespace {

struct SyntaxError {
  Diagnostic diagnostic;
};

Span join(const Span& a, const Span& b) {
  Span out = a;
  out.length = b.offset + b.length - a.offset;
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ParseResult run() {
    ModelAst ast;
    while (!at(TokenKind::kEof)) {
      try {
        switch (peek().kind) {
          case TokenKind::kStory: ast.stories.push_back(story()); break;
          case TokenKind::kEvent: ast.event_defs.push_back(event_def()); break;
          case TokenKind::kHighlevel: ast.highlevel.push_back(highlevel()); break;
          default: fail("expected 'story', 'event' or 'highlevel'");
        }
      } catch (const SyntaxError& e) {
        result_.diagnostics.push_back(e.diagnostic);
        depth_ = 0;
        recover();
      }
    }
    if (!has_errors(result_.diagnostics)) result_.ast = std::move(ast);
    return std::move(result_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  const Token& advance() {
    const Token& tok = toks_[pos_];
    if (tok.kind != TokenKind::kEof) ++pos_;
    return tok;
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail("expected " + std::string(what));
    return advance();
  }

  [[noreturn]] void fail(const std::string& expectation) {
    const Token& tok = peek();
    Diagnostic d;
    d.span = tok.span;
    if (tok.kind == TokenKind::kEof) {
      d.code = "unexpected-eof";
      d.message = expectation + ", found end of file";
    } else {
      d.code = "unexpected-token";
      d.message = expectation + ", found " + describe(tok);
    }
    throw SyntaxError{std::move(d)};
  }

  static std::string describe(const Token& tok) {
    switch (tok.kind) {
      case TokenKind::kIdent: return "identifier '" + tok.text + "'";
      case TokenKind::kString: return "string literal";
      case TokenKind::kInt: return "integer " + tok.text;
      default: return std::string(token_kind_name(tok.kind));
    }
  }

  void recover() {
    // Skip at least one token, then resynchronize on the next top-level keyword.
    advance();
    while (!at(TokenKind::kEof) && !at(TokenKind::kStory) && !at(TokenKind::kEvent) &&
           !at(TokenKind::kHighlevel)) {
      advance();
    }
  }

  HighLevelDecl highlevel() {
    HighLevelDecl decl;
    Span start = advance().span;
    decl.names.push_back(expect(TokenKind::kIdent, "high-level event name").text);
    while (at(TokenKind::kComma)) {
      advance();
      decl.names.push_back(expect(TokenKind::kIdent, "high-level event name").text);
    }
    decl.span = join(start, toks_[pos_ - 1].span);
    return decl;
  }

  EventDef event_def() {
    EventDef def;
    Span start = advance().span;
    def.name = expect(TokenKind::kIdent, "event name").text;
    expect(TokenKind::kLParen, "'('");
    if (!at(TokenKind::kRParen)) {
      def.params.push_back(expect(TokenKind::kIdent, "parameter name").text);
      while (at(TokenKind::kComma)) {
        advance();
        def.params.push_back(expect(TokenKind::kIdent, "parameter name").text);
      }
    }
    expect(TokenKind::kRParen, "')'");
    expect(TokenKind::kEquals, "'='");
    expect(TokenKind::kLBracket, "'['");
    def.body.push_back(event_expr("low-level event name"));
    while (at(TokenKind::kComma)) {
      advance();
      def.body.push_back(event_expr("low-level event name"));
    }
    def.span = join(start, expect(TokenKind::kRBracket, "',' or ']'").span);
    return def;
  }

  StoryDef story() {
    StoryDef def;
    Span start = advance().span;
    def.name = expect(TokenKind::kString, "story name string").text;
    Span end;
    def.body = block(end);
    def.span = join(start, end);
    return def;
  }

  Block block(Span& end) {
    expect(TokenKind::kLBrace, "'{'");
    if (++depth_ > kMaxNesting) {
      Diagnostic d{Severity::kError, "nesting-too-deep",
                   "blocks nested deeper than " + std::to_string(kMaxNesting), peek().span};
      throw SyntaxError{std::move(d)};
    }
    Block body;
    while (!at(TokenKind::kRBrace)) body.push_back(statement());
    end = advance().span;
    --depth_;
    return body;
  }

  Stmt statement() {
    Stmt stmt;
    Span start = peek().span;
    Span end;
    switch (peek().kind) {
      case TokenKind::kRequest: {
        advance();
        RequestStmt req{event_expr("event name")};
        end = req.event.span;
        stmt.node = std::move(req);
        break;
      }
      case TokenKind::kWaitFor: {
        advance();
        WaitForStmt wait{pattern_set()};
        end = wait.patterns.back().span;
        stmt.node = std::move(wait);
        break;
      }
      case TokenKind::kBlock: {
        advance();
        BlockUntilStmt blk;
        blk.blocked = pattern_set();
        expect(TokenKind::kUntil, "',' or 'until'");
        blk.release = event_expr("event name");
        end = blk.release.span;
        stmt.node = std::move(blk);
        break;
      }
      case TokenKind::kRepeat: {
        advance();
        RepeatStmt rep;
        rep.count = expect(TokenKind::kInt, "repeat count").value;
        rep.body = block(end);
        stmt.node = std::move(rep);
        break;
      }
      case TokenKind::kForever: {
        advance();
        ForeverStmt fe;
        fe.body = block(end);
        stmt.node = std::move(fe);
        break;
      }
      case TokenKind::kChoose: {
        advance();
        ChooseStmt ch;
        expect(TokenKind::kLBrace, "'{'");
        Span ignored;
        ch.branches.push_back(block(ignored));
        expect(TokenKind::kOr, "'or'");
        ch.branches.push_back(block(ignored));
        while (at(TokenKind::kOr)) {
          advance();
          ch.branches.push_back(block(ignored));
        }
        end = expect(TokenKind::kRBrace, "'or' or '}'").span;
        stmt.node = std::move(ch);
        break;
      }
      case TokenKind::kSession: {
        advance();
        SessionStmt ses;
        ses.id = expect(TokenKind::kIdent, "session identifier").text;
        ses.body = block(end);
        stmt.node = std::move(ses);
        break;
      }
      default:
        fail("expected a statement or '}'");
    }
    stmt.span = join(start, end);
    return stmt;
  }

  std::vector<EventExpr> pattern_set() {
    std::vector<EventExpr> patterns;
    patterns.push_back(event_expr("event pattern"));
    while (at(TokenKind::kComma)) {
      advance();
      patterns.push_back(event_expr("event pattern"));
    }
    return patterns;
  }

  EventExpr event_expr(std::string_view what) {
    EventExpr expr;
    const Token& name = expect(TokenKind::kIdent, what);
    expr.name = name.text;
    Span end = name.span;
    if (at(TokenKind::kLParen)) {
      advance();
      if (!at(TokenKind::kRParen)) {
        expr.fields.push_back(field());
        while (at(TokenKind::kComma)) {
          advance();
          expr.fields.push_back(field());
        }
      }
      end = expect(TokenKind::kRParen, "',' or ')'").span;
    }
    expr.span = join(name.span, end);
    return expr;
  }

  FieldExpr field() {
    FieldExpr f;
    if (!at(TokenKind::kIdent) && !is_keyword(peek().kind)) fail("expected field name");
    const Token& key = advance();
    f.key = key.text;
    expect(TokenKind::kColon, "':'");
    const Token& value = peek();
    switch (value.kind) {
      case TokenKind::kString:
        f.value = Literal{Literal::Kind::kString, value.text, 0};
        break;
      case TokenKind::kInt:
        f.value = Literal{Literal::Kind::kInt, {}, value.value};
        break;
      case TokenKind::kIdent:
        f.value = Literal{Literal::Kind::kIdent, value.text, 0};
        break;
      default:
        fail("expected string, integer or identifier");
    }
    f.span = join(key.span, advance().span);
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  ParseResult result_;
};

}  // namespace

ParseResult parse(const SourceFile& source, std::uint32_t file) {
  LexResult lexed = lex(source.content, file);
  if (has_errors(lexed.diagnostics)) {
    return ParseResult{std::nullopt, std::move(lexed.diagnostics)};
  }
  return Parser(std::move(lexed.tokens)).run();
}

}  // namespace storyweave::dsl
