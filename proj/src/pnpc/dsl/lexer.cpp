// Copyright 2026 The pnpc Authors
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

#include "pnpc/dsl/lexer.hpp"

#include <algorithm>
#include <array>

namespace pnpc::dsl {

namespace {

constexpr std::array<std::string_view, 29> kKeywords = {
    "at",      "color",    "else",   "exists", "foreach",  "frame",    "holding", "if",
    "in",      "joints",   "location", "matching", "mount", "move",    "not",     "object",
    "perceive", "perceived", "pick", "place",  "repeat",   "rgb",      "robot",   "sensor",
    "shape",   "size",     "to",     "type",   "with",
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  Result<Tokens> run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (is_ident_start(c)) {
        lex_word();
      } else if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
        lex_number();
      } else if (std::string_view("{}(),:=;").find(c) != std::string_view::npos) {
        emit(TokenKind::Punct, pos_, 1, line_, col_);
        advance();
      } else {
        SourceSpan span{file_, line_, col_, 1};
        std::string shown = static_cast<unsigned char>(c) < 0x80
                                ? std::string(1, c)
                                : std::string("non-ASCII character");
        diags_.push_back(make_error("E-LEX", "unexpected character '" + shown + "'", span));
        advance();
        while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
          advance();
      }
    }
    tokens_.push_back(Token{TokenKind::End, "", SourceSpan{file_, line_, col_, 0}});
    if (!diags_.empty()) return diags_;
    return std::move(tokens_);
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Columns count code points: UTF-8 continuation bytes do not advance.
  void advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col_;
    }
  }

  void emit(TokenKind kind, std::size_t start, std::size_t len, int line, int col) {
    tokens_.push_back(Token{kind, std::string(src_.substr(start, len)),
                            SourceSpan{file_, line, col, static_cast<int>(len)}});
  }

  void lex_word() {
    std::size_t start = pos_;
    int line = line_, col = col_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
    std::string_view word = src_.substr(start, pos_ - start);
    emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start, pos_ - start,
         line, col);
  }

  void lex_number() {
    std::size_t start = pos_;
    int line = line_, col = col_;
    if (src_[pos_] == '-') advance();
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    TokenKind kind = TokenKind::Integer;
    if (peek(0) == '.' && is_digit(peek(1))) {
      kind = TokenKind::Real;
      advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && is_ident_char(src_[pos_])) {
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
      diags_.push_back(make_error("E-LEX", "malformed number '" + std::string(src_.substr(start, pos_ - start)) + "'",
                                  SourceSpan{file_, line, col, static_cast<int>(pos_ - start)}));
      return;
    }
    emit(kind, start, pos_ - start, line, col);
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Tokens tokens_;
  Diagnostics diags_;
};

}  // namespace

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::Real: return "real";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

Result<Tokens> tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

std::string detokenize(const Tokens& tokens) {
  std::string out;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::End) break;
    if (!out.empty()) out += ' ';
    out += tok.text;
  }
  return out;
}

}  // namespace pnpc::dsl
