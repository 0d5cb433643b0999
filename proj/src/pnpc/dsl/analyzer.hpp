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

#ifndef PNPC_DSL_ANALYZER_HPP
#define PNPC_DSL_ANALYZER_HPP

#include "pnpc/dsl/ast.hpp"

namespace pnpc::dsl {

/// Name resolution and declaration checks. Returns diagnostics sorted by
/// (line, column); an empty list means the program is well formed.
///
///   E-UNDECLARED       a referenced name has no declaration
///   E-DUPLICATE        a name is declared twice, or a loop variable
///                      shadows a declaration or an enclosing loop variable
///   E-KIND             a name resolves to the wrong kind of declaration
///   E-AMBIGUOUS-ROBOT  pick/place without `with` while the program does not
///                      declare exactly one robot
///   W-JOINTS           (warning) declared joint count differs from the
///                      stock arm of the robot type
Diagnostics analyze(const Program& program);

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_ANALYZER_HPP
