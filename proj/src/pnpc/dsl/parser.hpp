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

#ifndef PNPC_DSL_PARSER_HPP
#define PNPC_DSL_PARSER_HPP

#include <string>
#include <string_view>

#include "pnpc/dsl/ast.hpp"
#include "pnpc/dsl/token.hpp"

namespace pnpc::dsl {

/// LL(1) recursive descent over the token stream. On failure returns E-PARSE
/// diagnostics; after an error the parser skips to the next `;` or `}` and
/// carries on so later statements are still checked.
Result<Program> parse(const Tokens& tokens);

/// tokenize + parse.
Result<Program> parse_source(std::string_view source, const std::string& file = {});

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_PARSER_HPP
