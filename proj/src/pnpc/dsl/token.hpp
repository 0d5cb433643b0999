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

#ifndef PNPC_DSL_TOKEN_HPP
#define PNPC_DSL_TOKEN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pnpc/support/diagnostic.hpp"

namespace pnpc::dsl {

enum class TokenKind {
  Keyword,
  Identifier,
  Integer,
  Real,
  Punct,  // one of { } ( ) , : = ;
  End,
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;

  bool is_keyword(std::string_view kw) const { return kind == TokenKind::Keyword && text == kw; }
  bool is_punct(char c) const {
    return kind == TokenKind::Punct && text.size() == 1 && text[0] == c;
  }
};

using Tokens = std::vector<Token>;

/// Reserved words of the language. Shape names and robot type names are
/// ordinary identifiers checked by the parser in context.
bool is_keyword(std::string_view word);

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_TOKEN_HPP
