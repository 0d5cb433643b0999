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

#include "pnpc/variability/mapping.hpp"

#include "pnpc/support/format_lexer.hpp"

namespace pnpc::variability {

namespace {

Construct robot_type_construct(dsl::RobotType type) {
  switch (type) {
    case dsl::RobotType::LWR: return Construct::RobotTypeLWR;
    case dsl::RobotType::KR16_2: return Construct::RobotTypeKR16_2;
    case dsl::RobotType::RX130: return Construct::RobotTypeRX130;
  }
  return Construct::RobotTypeLWR;
}

void collect(const dsl::Block& body, std::vector<ConstructUse>& out) {
  for (const dsl::Statement& st : body) {
    out.push_back({st.construct(), st.span});
    if (const auto* r = st.as<dsl::Repeat>()) {
      collect(r->body, out);
    } else if (const auto* i = st.as<dsl::If>()) {
      collect(i->then_body, out);
      if (i->else_body) collect(*i->else_body, out);
    } else if (const auto* f = st.as<dsl::ForEachPerceived>()) {
      collect(f->body, out);
    }
  }
}

}  // namespace

Result<MappingTable> parse_mapping(std::string_view source, const fm::FeatureModel& model,
                                   const std::string& file) {
  auto tokens = tokenize_format(source, file, "E-MAP-PARSE");
  if (!tokens) return tokens.diagnostics();
  FormatCursor cur(*tokens, "E-MAP-PARSE");
  const fm::ExpressionCodes codes{"E-MAP-PARSE", "E-MAP-REF"};

  MappingTable table;
  table.model_name = model.name;
  Diagnostics diags;
  try {
    cur.expect("mapping");
    if (cur.accept("for")) {
      const FormatToken& name = cur.expect_identifier("model name");
      if (name.text != model.name)
        diags.push_back(make_error("E-MAP-REF",
                                   "mapping is for model '" + name.text + "', not '" + model.name + "'",
                                   name.span));
    }
    cur.expect_punct("{");
    while (!cur.cur().is_punct("}")) {
      cur.expect("construct");
      // Construct ids are `name` or `name.Alternative`.
      const FormatToken& head = cur.expect_identifier("construct identifier");
      std::string id = head.text;
      SourceSpan span = head.span;
      if (cur.accept_punct(".")) {
        const FormatToken& tail = cur.expect_identifier("construct alternative");
        id += "." + tail.text;
        span.length = tail.span.column + tail.span.length - head.span.column;
      }
      cur.expect("when");
      fm::FeatureExpression expr = fm::parse_expression(cur, model, diags, codes);

      auto construct = dsl::construct_from_name(id);
      if (!construct) {
        diags.push_back(make_error("E-MAP-CONSTRUCT", "unknown construct '" + id + "'", span));
      } else if (!table.entries.emplace(*construct, std::move(expr)).second) {
        diags.push_back(make_error("E-MAP-DUP", "construct '" + id + "' is mapped more than once", span));
      }
    }
    cur.advance();
    if (!cur.at_end()) cur.fail("expected end of input");
  } catch (const FormatError& e) {
    diags.push_back(e.diag);
  }
  if (!diags.empty()) {
    sort_diagnostics(diags);
    return diags;
  }
  return table;
}

ConstructSet allowed_constructs(const MappingTable& mapping, const fm::FeatureConfiguration& config) {
  ConstructSet allowed(dsl::kAllConstructs.begin(), dsl::kAllConstructs.end());
  for (const auto& [construct, expr] : mapping.entries)
    if (!fm::eval_expression(expr, config)) allowed.erase(construct);
  return allowed;
}

std::vector<ConstructUse> construct_uses(const dsl::Program& program) {
  std::vector<ConstructUse> out;
  for (const dsl::Declaration& d : program.declarations) {
    static constexpr Construct kDecl[] = {Construct::ColorDecl, Construct::ObjectDecl, Construct::SensorDecl,
                                          Construct::RobotDecl, Construct::LocationDecl};
    out.push_back({kDecl[d.node.index()], d.span});
    if (const auto* r = d.as<dsl::RobotDecl>()) out.push_back({robot_type_construct(r->type), r->type_span});
  }
  collect(program.statements, out);
  return out;
}

Diagnostics check_program(const dsl::Program& program, const MappingTable& mapping,
                          const fm::FeatureConfiguration& config) {
  ConstructSet allowed = allowed_constructs(mapping, config);
  Diagnostics diags;
  for (const ConstructUse& use : construct_uses(program)) {
    if (allowed.count(use.construct)) continue;
    const fm::FeatureExpression& expr = mapping.entries.at(use.construct);
    diags.push_back(make_error("E-VARIANT",
                               "construct '" + std::string(dsl::construct_name(use.construct)) +
                                   "' is not available in this product variant: feature expression '" +
                                   fm::to_string(expr) + "' is false",
                               use.span));
  }
  sort_diagnostics(diags);
  return diags;
}

}  // namespace pnpc::variability
