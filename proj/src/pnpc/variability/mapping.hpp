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

// Grammar-level variability: language constructs are decorated with feature
// expressions, and a program may only use constructs whose expression holds
// under the active configuration. Pruning happens after parsing so the
// diagnostics can name both the construct and the expression that removed it.

#ifndef PNPC_VARIABILITY_MAPPING_HPP
#define PNPC_VARIABILITY_MAPPING_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pnpc/dsl/ast.hpp"
#include "pnpc/fm/configuration.hpp"
#include "pnpc/fm/expression.hpp"
#include "pnpc/fm/feature_model.hpp"

namespace pnpc::variability {

using dsl::Construct;
using dsl::ConstructSet;

struct MappingTable {
  std::string model_name;
  /// At most one expression per construct; unmapped constructs are always
  /// available.
  std::map<Construct, fm::FeatureExpression> entries;
};

/// `mapping [for <model>] { construct <id> when <expr> ... }`
///
///   E-MAP-PARSE      syntax error
///   E-MAP-CONSTRUCT  unknown construct identifier
///   E-MAP-REF        expression names an unknown feature/attribute, or the
///                    `for` clause names another model
///   E-MAP-DUP        construct mapped twice
Result<MappingTable> parse_mapping(std::string_view source, const fm::FeatureModel& model,
                                   const std::string& file = {});

ConstructSet allowed_constructs(const MappingTable& mapping, const fm::FeatureConfiguration& config);

/// Every place a construct is used, in source order.
struct ConstructUse {
  Construct construct;
  SourceSpan span;
};
std::vector<ConstructUse> construct_uses(const dsl::Program& program);

/// One E-VARIANT per use site of a construct outside allowed_constructs.
Diagnostics check_program(const dsl::Program& program, const MappingTable& mapping,
                          const fm::FeatureConfiguration& config);

}  // namespace pnpc::variability

#endif  // PNPC_VARIABILITY_MAPPING_HPP
