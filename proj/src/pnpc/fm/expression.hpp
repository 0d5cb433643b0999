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

#ifndef PNPC_FM_EXPRESSION_HPP
#define PNPC_FM_EXPRESSION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pnpc/fm/configuration.hpp"
#include "pnpc/fm/feature_model.hpp"

namespace pnpc {
class FormatCursor;
}

namespace pnpc::fm {

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CmpOp op);

/// Boolean expression over features and feature attributes:
///
///   expr    := orExpr
///   orExpr  := andExpr ('or' andExpr)*
///   andExpr := unary ('and' unary)*
///   unary   := 'not' unary | '(' expr ')' | Feature | Feature '.' attr OP literal
///   OP      := = | == | != | < | <= | > | >=
struct FeatureExpression {
  enum class Kind { FeatureRef, Not, And, Or, AttrCmp };
  Kind kind = Kind::FeatureRef;
  std::string feature;    // FeatureRef, AttrCmp
  std::string attribute;  // AttrCmp
  CmpOp op = CmpOp::Eq;   // AttrCmp
  AttrValue literal;      // AttrCmp
  std::vector<FeatureExpression> operands;  // Not: 1, And/Or: 2

  static FeatureExpression ref(std::string feature);
  static FeatureExpression negate(FeatureExpression e);
  static FeatureExpression conj(FeatureExpression a, FeatureExpression b);
  static FeatureExpression disj(FeatureExpression a, FeatureExpression b);
  static FeatureExpression compare(std::string feature, std::string attr, CmpOp op, AttrValue literal);

  friend bool operator==(const FeatureExpression&, const FeatureExpression&) = default;
};

/// Error codes used while parsing and binding an expression; mapping files
/// report E-MAP-PARSE / E-MAP-REF.
struct ExpressionCodes {
  std::string parse = "E-EXPR-PARSE";
  std::string ref = "E-EXPR-REF";
};

/// Parses one expression from `cursor`, leaving it on the first token after
/// the expression. Syntax errors throw FormatError; binding errors (unknown
/// features or attributes, literal of the wrong type) are appended to `diags`.
FeatureExpression parse_expression(FormatCursor& cursor, const FeatureModel& model, Diagnostics& diags,
                                   const ExpressionCodes& codes);

/// Parses a complete expression string.
Result<FeatureExpression> parse_expression(std::string_view text, const FeatureModel& model,
                                           const ExpressionCodes& codes = {});

/// FeatureRef(n) holds iff n is included. AttrCmp on an excluded feature,
/// or on an attribute without a value, is false.
bool eval_expression(const FeatureExpression& expr, const FeatureConfiguration& config);

/// Canonical text with the minimum parentheses needed to re-parse.
std::string to_string(const FeatureExpression& expr);

/// True when the expression contains no Not node.
bool negation_free(const FeatureExpression& expr);

}  // namespace pnpc::fm

#endif  // PNPC_FM_EXPRESSION_HPP
