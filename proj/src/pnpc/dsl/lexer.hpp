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

#ifndef PNPC_DSL_LEXER_HPP
#define PNPC_DSL_LEXER_HPP

#include <string>
#include <string_view>

#include "pnpc/dsl/token.hpp"

namespace pnpc::dsl {

/// Splits `.pnp` source into tokens. Whitespace (including CR/LF) and `//`
/// line comments are dropped; the returned stream always ends with an End
/// token. Any character outside the token alphabet yields E-LEX.
Result<Tokens> tokenize(std::string_view source, const std::string& file = {});

/// Inverse of tokenize up to spans: token texts joined by single spaces.
std::string detokenize(const Tokens& tokens);

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_LEXER_HPP
