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

#include "pnpc/fm/expression.hpp"

#include "pnpc/support/format_lexer.hpp"
#include "pnpc/support/number.hpp"

namespace pnpc::fm {

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "=";
}

FeatureExpression FeatureExpression::ref(std::string feature) {
  FeatureExpression e;
  e.kind = Kind::FeatureRef;
  e.feature = std::move(feature);
  return e;
}

FeatureExpression FeatureExpression::negate(FeatureExpression inner) {
  FeatureExpression e;
  e.kind = Kind::Not;
  e.operands.push_back(std::move(inner));
  return e;
}

FeatureExpression FeatureExpression::conj(FeatureExpression a, FeatureExpression b) {
  FeatureExpression e;
  e.kind = Kind::And;
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

FeatureExpression FeatureExpression::disj(FeatureExpression a, FeatureExpression b) {
  FeatureExpression e;
  e.kind = Kind::Or;
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

FeatureExpression FeatureExpression::compare(std::string feature, std::string attr, CmpOp op,
                                             AttrValue literal) {
  FeatureExpression e;
  e.kind = Kind::AttrCmp;
  e.feature = std::move(feature);
  e.attribute = std::move(attr);
  e.op = op;
  e.literal = std::move(literal);
  return e;
}

namespace {

class ExprParser {
 public:
  ExprParser(FormatCursor& cur, const FeatureModel& model, Diagnostics& diags, const ExpressionCodes& codes)
      : cur_(cur), model_(model), diags_(diags), codes_(codes) {}

  FeatureExpression expr() {
    FeatureExpression lhs = conjunction();
    while (cur_.accept("or")) lhs = FeatureExpression::disj(std::move(lhs), conjunction());
    return lhs;
  }

 private:
  FeatureExpression conjunction() {
    FeatureExpression lhs = unary();
    while (cur_.accept("and")) lhs = FeatureExpression::conj(std::move(lhs), unary());
    return lhs;
  }

  FeatureExpression unary() {
    if (cur_.accept("not")) return FeatureExpression::negate(unary());
    if (cur_.accept_punct("(")) {
      FeatureExpression inner = expr();
      cur_.expect_punct(")");
      return inner;
    }
    const FormatToken& name = cur_.expect_identifier("feature name, 'not' or '('");
    const Feature* feature = model_.find(name.text);
    if (!feature)
      diags_.push_back(make_error(codes_.ref, "unknown feature '" + name.text + "'", name.span));
    if (!cur_.accept_punct(".")) return FeatureExpression::ref(name.text);

    const FormatToken& attr = cur_.expect_identifier("attribute name");
    CmpOp op = comparison();
    AttrValue literal = value();
    if (feature) {
      const Attribute* a = feature->find_attribute(attr.text);
      if (!a) {
        diags_.push_back(make_error(codes_.ref, "feature '" + name.text + "' has no attribute '" + attr.text + "'",
                                    attr.span));
      } else {
        bool numeric_attr = a->type != AttrType::String;
        bool numeric_lit = !std::holds_alternative<std::string>(literal);
        if (numeric_attr != numeric_lit)
          diags_.push_back(make_error(codes_.ref,
                                      "'" + name.text + "." + attr.text + "' is of type " +
                                          std::string(to_string(a->type)) + " and cannot be compared with " +
                                          format_value(literal),
                                      attr.span));
      }
    }
    return FeatureExpression::compare(name.text, attr.text, op, std::move(literal));
  }

  CmpOp comparison() {
    const FormatToken& t = cur_.cur();
    CmpOp op;
    if (t.is_punct("=") || t.is_punct("==")) op = CmpOp::Eq;
    else if (t.is_punct("!=")) op = CmpOp::Ne;
    else if (t.is_punct("<")) op = CmpOp::Lt;
    else if (t.is_punct("<=")) op = CmpOp::Le;
    else if (t.is_punct(">")) op = CmpOp::Gt;
    else if (t.is_punct(">=")) op = CmpOp::Ge;
    else cur_.fail("expected a comparison operator");
    cur_.advance();
    return op;
  }

  AttrValue value() {
    const FormatToken& t = cur_.cur();
    AttrValue v;
    if (t.kind == FormatToken::Kind::Integer) {
      auto i = parse_int(t.text);
      if (!i) cur_.fail("integer out of range");
      v = *i;
    } else if (t.kind == FormatToken::Kind::Real) {
      auto d = parse_real(t.text);
      if (!d) cur_.fail("real out of range");
      v = *d;
    } else if (t.kind == FormatToken::Kind::String) {
      v = t.text;
    } else {
      cur_.fail("expected a literal");
    }
    cur_.advance();
    return v;
  }

  FormatCursor& cur_;
  const FeatureModel& model_;
  Diagnostics& diags_;
  const ExpressionCodes& codes_;
};

template <typename T>
bool apply(CmpOp op, const T& a, const T& b) {
  switch (op) {
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ge: return a >= b;
  }
  return false;
}

bool compare_values(const AttrValue& stored, CmpOp op, const AttrValue& literal) {
  const auto* ls = std::get_if<std::string>(&stored);
  const auto* rs = std::get_if<std::string>(&literal);
  if (ls || rs) return ls && rs && apply(op, *ls, *rs);
  const auto* li = std::get_if<std::int64_t>(&stored);
  const auto* ri = std::get_if<std::int64_t>(&literal);
  if (li && ri) return apply(op, *li, *ri);
  auto as_real = [](const AttrValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    return std::get<double>(v);
  };
  return apply(op, as_real(stored), as_real(literal));
}

int precedence(FeatureExpression::Kind kind) {
  switch (kind) {
    case FeatureExpression::Kind::Or: return 1;
    case FeatureExpression::Kind::And: return 2;
    default: return 3;
  }
}

std::string literal_text(const AttrValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return quote_format_string(*s);
  std::string text = format_value(v);
  // Keep reals lexically real so they re-parse with the same type.
  if (std::holds_alternative<double>(v) && text.find('.') == std::string::npos) text += ".0";
  return text;
}

std::string print(const FeatureExpression& e, int min_prec) {
  std::string text;
  switch (e.kind) {
    case FeatureExpression::Kind::FeatureRef:
      return e.feature;
    case FeatureExpression::Kind::AttrCmp:
      return e.feature + "." + e.attribute + " " + std::string(to_string(e.op)) + " " + literal_text(e.literal);
    case FeatureExpression::Kind::Not:
      return "not " + print(e.operands[0], 3);
    case FeatureExpression::Kind::And:
      text = print(e.operands[0], 2) + " and " + print(e.operands[1], 3);
      break;
    case FeatureExpression::Kind::Or:
      text = print(e.operands[0], 1) + " or " + print(e.operands[1], 2);
      break;
  }
  return precedence(e.kind) < min_prec ? "(" + text + ")" : text;
}

}  // namespace

FeatureExpression parse_expression(FormatCursor& cursor, const FeatureModel& model, Diagnostics& diags,
                                   const ExpressionCodes& codes) {
  return ExprParser(cursor, model, diags, codes).expr();
}

Result<FeatureExpression> parse_expression(std::string_view text, const FeatureModel& model,
                                           const ExpressionCodes& codes) {
  auto tokens = tokenize_format(text, {}, codes.parse);
  if (!tokens) return tokens.diagnostics();
  FormatCursor cursor(*tokens, codes.parse);
  Diagnostics diags;
  try {
    FeatureExpression e = parse_expression(cursor, model, diags, codes);
    if (!cursor.at_end()) cursor.fail("expected end of expression");
    if (!diags.empty()) return diags;
    return e;
  } catch (const FormatError& err) {
    return Diagnostics{err.diag};
  }
}

bool eval_expression(const FeatureExpression& expr, const FeatureConfiguration& config) {
  switch (expr.kind) {
    case FeatureExpression::Kind::FeatureRef:
      return config.includes(expr.feature);
    case FeatureExpression::Kind::Not:
      return !eval_expression(expr.operands[0], config);
    case FeatureExpression::Kind::And:
      return eval_expression(expr.operands[0], config) && eval_expression(expr.operands[1], config);
    case FeatureExpression::Kind::Or:
      return eval_expression(expr.operands[0], config) || eval_expression(expr.operands[1], config);
    case FeatureExpression::Kind::AttrCmp: {
      if (!config.includes(expr.feature)) return false;
      auto stored = config.attribute(expr.feature, expr.attribute);
      return stored && compare_values(*stored, expr.op, expr.literal);
    }
  }
  return false;
}

std::string to_string(const FeatureExpression& expr) { return print(expr, 0); }

bool negation_free(const FeatureExpression& expr) {
  if (expr.kind == FeatureExpression::Kind::Not) return false;
  for (const FeatureExpression& op : expr.operands)
    if (!negation_free(op)) return false;
  return true;
}

}  // namespace pnpc::fm
