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

#include "storyweave/dsl/lexer.hpp"

#include <array>
#include <limits>
#include <utility>

namespace storyweave::dsl {
namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 12> kKeywords{{
    {"event", TokenKind::kEvent},
    {"story", TokenKind::kStory},
    {"highlevel", TokenKind::kHighlevel},
    {"request", TokenKind::kRequest},
    {"waitFor", TokenKind::kWaitFor},
    {"block", TokenKind::kBlock},
    {"until", TokenKind::kUntil},
    {"repeat", TokenKind::kRepeat},
    {"forever", TokenKind::kForever},
    {"choose", TokenKind::kChoose},
    {"or", TokenKind::kOr},
    {"session", TokenKind::kSession},
}};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Length of the UTF-8 sequence starting at `pos`, or 0 when malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t pos) {
  auto c = static_cast<unsigned char>(s[pos]);
  std::size_t len;
  std::uint32_t min;
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) { len = 2; min = 0x80; }
  else if ((c & 0xF0) == 0xE0) { len = 3; min = 0x800; }
  else if ((c & 0xF8) == 0xF0) { len = 4; min = 0x10000; }
  else return 0;
  if (pos + len > s.size()) return 0;
  std::uint32_t cp = c & (0x7F >> len);
  for (std::size_t i = 1; i < len; ++i) {
    auto cc = static_cast<unsigned char>(s[pos + i]);
    if ((cc & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

class Lexer {
 public:
  Lexer(std::string_view content, std::uint32_t file)
      : src_(content), file_(file), lines_(content) {}

  LexResult run() {
    if (!validate_utf8()) return std::move(result_);
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      lex_token();
    }
    push(TokenKind::kEof, src_.size(), 0);
    return std::move(result_);
  }

 private:
  bool validate_utf8() {
    for (std::size_t i = 0; i < src_.size();) {
      std::size_t len = utf8_sequence_length(src_, i);
      if (len == 0) {
        error("invalid-utf8", "input is not valid UTF-8", i, 1);
        return false;
      }
      i += len;
    }
    return true;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void lex_token() {
    std::size_t start = pos_;
    auto c = static_cast<unsigned char>(src_[pos_]);
    switch (c) {
      case '{': ++pos_; push(TokenKind::kLBrace, start, 1); return;
      case '}': ++pos_; push(TokenKind::kRBrace, start, 1); return;
      case '(': ++pos_; push(TokenKind::kLParen, start, 1); return;
      case ')': ++pos_; push(TokenKind::kRParen, start, 1); return;
      case '[': ++pos_; push(TokenKind::kLBracket, start, 1); return;
      case ']': ++pos_; push(TokenKind::kRBracket, start, 1); return;
      case ',': ++pos_; push(TokenKind::kComma, start, 1); return;
      case ':': ++pos_; push(TokenKind::kColon, start, 1); return;
      case '=': ++pos_; push(TokenKind::kEquals, start, 1); return;
      case '"': lex_string(); return;
      default: break;
    }
    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string word(src_.substr(start, pos_ - start));
      Token& tok = push(keyword_kind(word), start, pos_ - start);
      tok.text = std::move(word);
      return;
    }
    if (is_digit(c) || (c == '-' && pos_ + 1 < src_.size() &&
                        is_digit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      lex_int();
      return;
    }
    std::size_t len = utf8_sequence_length(src_, pos_);
    pos_ += len == 0 ? 1 : len;
    error("bad-character", "unexpected character '" + std::string(src_.substr(start, pos_ - start)) + "'",
          start, pos_ - start);
  }

  void lex_int() {
    std::size_t start = pos_;
    bool negative = src_[pos_] == '-';
    if (negative) ++pos_;
    // Accumulate as a negative number so INT64_MIN is representable.
    std::int64_t value = 0;
    bool overflow = false;
    while (pos_ < src_.size() && is_digit(static_cast<unsigned char>(src_[pos_]))) {
      int digit = src_[pos_] - '0';
      if (value < (std::numeric_limits<std::int64_t>::min() + digit) / 10) overflow = true;
      else value = value * 10 - digit;
      ++pos_;
    }
    if (!negative) {
      if (value == std::numeric_limits<std::int64_t>::min()) overflow = true;
      else value = -value;
    }
    if (pos_ < src_.size() && is_ident_start(static_cast<unsigned char>(src_[pos_]))) {
      while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      error("bad-number", "malformed integer literal", start, pos_ - start);
      return;
    }
    if (overflow) {
      error("int-out-of-range", "integer literal does not fit in 64 bits", start, pos_ - start);
      return;
    }
    Token& tok = push(TokenKind::kInt, start, pos_ - start);
    tok.text = std::string(src_.substr(start, pos_ - start));
    tok.value = value;
  }

  void lex_string() {
    std::size_t start = pos_++;
    std::string text;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        error("unterminated-string", "string literal is not terminated", start, pos_ - start);
        return;
      }
      char c = src_[pos_];
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        if (pos_ + 1 >= src_.size()) {
          ++pos_;
          continue;
        }
        char esc = src_[pos_ + 1];
        switch (esc) {
          case '"': text += '"'; break;
          case '\\': text += '\\'; break;
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          default:
            error("bad-escape", std::string("unknown escape '\\") + esc + "'", pos_, 2);
            break;
        }
        pos_ += 2;
        continue;
      }
      text += c;
      ++pos_;
    }
    Token& tok = push(TokenKind::kString, start, pos_ - start);
    tok.text = std::move(text);
  }

  Token& push(TokenKind kind, std::size_t offset, std::size_t length) {
    Token tok;
    tok.kind = kind;
    tok.span = lines_.span_at(file_, static_cast<std::uint32_t>(offset),
                              static_cast<std::uint32_t>(length));
    result_.tokens.push_back(std::move(tok));
    return result_.tokens.back();
  }

  void error(std::string code, std::string message, std::size_t offset, std::size_t length) {
    result_.diagnostics.push_back(Diagnostic{
        Severity::kError, std::move(code), std::move(message),
        lines_.span_at(file_, static_cast<std::uint32_t>(offset), static_cast<std::uint32_t>(length))});
  }

  std::string_view src_;
  std::uint32_t file_;
  LineIndex lines_;
  std::size_t pos_ = 0;
  LexResult result_;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kString: return "string";
    case TokenKind::kInt: return "integer";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kComma: return "','";
    case TokenKind::kColon: return "':'";
    case TokenKind::kEquals: return "'='";
    case TokenKind::kEof: return "end of file";
    default: break;
  }
  for (const auto& [word, k] : kKeywords) {
    if (k == kind) return word;
  }
  return "token";
}

bool is_keyword(TokenKind kind) {
  return kind >= TokenKind::kEvent && kind <= TokenKind::kSession;
}

TokenKind keyword_kind(std::string_view word) {
  for (const auto& [w, kind] : kKeywords) {
    if (w == word) return kind;
  }
  return TokenKind::kIdent;
}

LexResult lex(std::string_view content, std::uint32_t file) {
  return Lexer(content, file).run();
}

}  // namespace storyweave::dsl
