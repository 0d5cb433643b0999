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

// Shared tokenizer for the small configuration formats (.fm, .cfg, .map).
// All three use identifiers, numbers, double-quoted strings, a handful of
// punctuation marks and `//` line comments.

#ifndef PNPC_SUPPORT_FORMAT_LEXER_HPP
#define PNPC_SUPPORT_FORMAT_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pnpc/support/diagnostic.hpp"

namespace pnpc {

struct FormatToken {
  enum class Kind { Identifier, Integer, Real, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;  // string literals are stored unquoted and unescaped
  SourceSpan span;

  bool is(std::string_view word) const { return kind == Kind::Identifier && text == word; }
  bool is_punct(std::string_view p) const { return kind == Kind::Punct && text == p; }
};

/// Punctuation: { } ( ) , . : ; = == != < <= > >=
/// Errors are reported with `error_code` (e.g. "E-FM-PARSE").
Result<std::vector<FormatToken>> tokenize_format(std::string_view source, const std::string& file,
                                                 const std::string& error_code);

/// Double-quoted literal with `"` and `\\` escaped.
std::string quote_format_string(std::string_view text);

/// Thrown by FormatCursor; callers convert it into a diagnostic.
struct FormatError {
  Diagnostic diag;
};

/// Read position over a format token stream with expect/accept helpers.
class FormatCursor {
 public:
  FormatCursor(const std::vector<FormatToken>& tokens, std::string error_code)
      : tokens_(tokens), code_(std::move(error_code)) {}

  const FormatToken& cur() const { return tokens_[pos_]; }
  const FormatToken& peek(std::size_t ahead = 1) const;
  bool at_end() const { return cur().kind == FormatToken::Kind::End; }
  const FormatToken& advance();

  bool accept(std::string_view word);
  bool accept_punct(std::string_view p);
  const FormatToken& expect(std::string_view word);
  const FormatToken& expect_punct(std::string_view p);
  const FormatToken& expect_identifier(const std::string& what);

  [[noreturn]] void fail(const std::string& what) const;
  FormatError error(const std::string& what) const;

  const std::string& code() const { return code_; }

 private:
  const std::vector<FormatToken>& tokens_;
  std::string code_;
  std::size_t pos_ = 0;
};

}  // namespace pnpc

#endif  // PNPC_SUPPORT_FORMAT_LEXER_HPP
