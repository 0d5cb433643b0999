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

#ifndef PNPC_DSL_PRINTER_HPP
#define PNPC_DSL_PRINTER_HPP

#include <string>

#include "pnpc/dsl/ast.hpp"

namespace pnpc::dsl {

/// Canonical source text: one declaration or statement per line, block
/// bodies indented by two spaces per level. Re-parsing the output yields a
/// structurally equal Program.
std::string pretty_print(const Program& program);

std::string format_pose(const Pose& pose);

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_PRINTER_HPP
