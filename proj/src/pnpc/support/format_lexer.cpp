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

#include "pnpc/support/format_lexer.hpp"

namespace pnpc {

namespace {

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool ident_char(char c) { return ident_start(c) || digit(c); }

std::string describe(const FormatToken& tok) {
  switch (tok.kind) {
    case FormatToken::Kind::End: return "end of input";
    case FormatToken::Kind::String: return "string \"" + tok.text + "\"";
    default: return "'" + tok.text + "'";
  }
}

}  // namespace

Result<std::vector<FormatToken>> tokenize_format(std::string_view src, const std::string& file,
                                                 const std::string& error_code) {
  std::vector<FormatToken> out;
  Diagnostics diags;
  std::size_t pos = 0;
  int line = 1, col = 1;
  auto at = [&](std::size_t i) { return i < src.size() ? src[i] : '\0'; };
  auto bump = [&] {
    char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col;
    }
  };
  auto push = [&](FormatToken::Kind kind, std::string text, int l, int c, std::size_t start) {
    out.push_back(FormatToken{kind, std::move(text),
                              SourceSpan{file, l, c, static_cast<int>(pos - start)}});
  };

  while (pos < src.size()) {
    char c = src[pos];
    int l = line, cl = col;
    std::size_t start = pos;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump();
    } else if (c == '/' && at(pos + 1) == '/') {
      while (pos < src.size() && src[pos] != '\n') bump();
    } else if (ident_start(c)) {
      while (pos < src.size() && ident_char(src[pos])) bump();
      push(FormatToken::Kind::Identifier, std::string(src.substr(start, pos - start)), l, cl, start);
    } else if (digit(c) || (c == '-' && digit(at(pos + 1)))) {
      bump();
      while (pos < src.size() && digit(src[pos])) bump();
      auto kind = FormatToken::Kind::Integer;
      if (at(pos) == '.' && digit(at(pos + 1))) {
        kind = FormatToken::Kind::Real;
        bump();
        while (pos < src.size() && digit(src[pos])) bump();
      }
      push(kind, std::string(src.substr(start, pos - start)), l, cl, start);
    } else if (c == '"') {
      bump();
      std::string text;
      bool closed = false;
      while (pos < src.size() && src[pos] != '\n') {
        char s = src[pos];
        if (s == '"') {
          bump();
          closed = true;
          break;
        }
        if (s == '\\' && (at(pos + 1) == '"' || at(pos + 1) == '\\')) {
          bump();
          s = src[pos];
        }
        text += s;
        bump();
      }
      if (!closed) {
        diags.push_back(make_error(error_code, "unterminated string literal", SourceSpan{file, l, cl, 1}));
        continue;
      }
      push(FormatToken::Kind::String, std::move(text), l, cl, start);
    } else {
      std::string_view two = src.substr(pos, 2);
      if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
        bump();
        bump();
        push(FormatToken::Kind::Punct, std::string(two), l, cl, start);
      } else if (std::string_view("{}(),.:;=<>").find(c) != std::string_view::npos) {
        bump();
        push(FormatToken::Kind::Punct, std::string(1, c), l, cl, start);
      } else {
        bump();
        while (pos < src.size() && (static_cast<unsigned char>(src[pos]) & 0xC0) == 0x80) bump();
        diags.push_back(make_error(error_code, "unexpected character '" + std::string(src.substr(start, pos - start)) + "'",
                                   SourceSpan{file, l, cl, 1}));
      }
    }
  }
  out.push_back(FormatToken{FormatToken::Kind::End, "", SourceSpan{file, line, col, 0}});
  if (!diags.empty()) return diags;
  return out;
}

std::string quote_format_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const FormatToken& FormatCursor::peek(std::size_t ahead) const {
  std::size_t i = pos_ + ahead;
  return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

const FormatToken& FormatCursor::advance() {
  const FormatToken& t = tokens_[pos_];
  if (!at_end()) ++pos_;
  return t;
}

bool FormatCursor::accept(std::string_view word) {
  if (!cur().is(word)) return false;
  advance();
  return true;
}

bool FormatCursor::accept_punct(std::string_view p) {
  if (!cur().is_punct(p)) return false;
  advance();
  return true;
}

const FormatToken& FormatCursor::expect(std::string_view word) {
  if (!cur().is(word)) fail("expected '" + std::string(word) + "'");
  return advance();
}

const FormatToken& FormatCursor::expect_punct(std::string_view p) {
  if (!cur().is_punct(p)) fail("expected '" + std::string(p) + "'");
  return advance();
}

const FormatToken& FormatCursor::expect_identifier(const std::string& what) {
  if (cur().kind != FormatToken::Kind::Identifier) fail("expected " + what);
  return advance();
}

FormatError FormatCursor::error(const std::string& what) const {
  return FormatError{make_error(code_, what + ", found " + describe(cur()), cur().span)};
}

void FormatCursor::fail(const std::string& what) const { throw error(what); }

}  // namespace pnpc
