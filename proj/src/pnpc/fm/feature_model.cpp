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

#include "pnpc/fm/feature_model.hpp"

#include <functional>
#include <set>

#include "pnpc/support/format_lexer.hpp"
#include "pnpc/support/number.hpp"

namespace pnpc::fm {

std::string_view to_string(AttrType type) {
  switch (type) {
    case AttrType::Int: return "int";
    case AttrType::Real: return "real";
    case AttrType::String: return "string";
  }
  return "?";
}

std::string format_value(const AttrValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&value)) return format_real(*d);
  return std::get<std::string>(value);
}

bool value_has_type(const AttrValue& value, AttrType type) {
  switch (type) {
    case AttrType::Int: return std::holds_alternative<std::int64_t>(value);
    case AttrType::Real: return std::holds_alternative<double>(value);
    case AttrType::String: return std::holds_alternative<std::string>(value);
  }
  return false;
}

const Attribute* Feature::find_attribute(std::string_view attr) const {
  for (const Attribute& a : attributes)
    if (a.name == attr) return &a;
  return nullptr;
}

std::vector<const Feature*> FeatureModel::features() const {
  std::vector<const Feature*> out;
  std::function<void(const Feature&)> walk = [&](const Feature& f) {
    out.push_back(&f);
    for (const Feature& c : f.children) walk(c);
  };
  walk(root);
  return out;
}

const Feature* FeatureModel::find(std::string_view name) const {
  for (const Feature* f : features())
    if (f->name == name) return f;
  return nullptr;
}

const Feature* FeatureModel::parent_of(std::string_view name) const {
  for (const Feature* f : features())
    for (const Feature& c : f->children)
      if (c.name == name) return f;
  return nullptr;
}

Diagnostics validate_model(const FeatureModel& model) {
  Diagnostics diags;
  if (model.root.marker == Variability::Optional)
    diags.push_back(make_error("E-FM-ROOT", "root feature '" + model.root.name + "' must be mandatory",
                               model.root.span));

  std::set<std::string> names;
  for (const Feature* f : model.features()) {
    if (!names.insert(f->name).second)
      diags.push_back(make_error("E-FM-DUP", "feature '" + f->name + "' is declared more than once", f->span));

    std::set<std::string> attrs;
    for (const Attribute& a : f->attributes) {
      if (!attrs.insert(a.name).second)
        diags.push_back(make_error("E-FM-DUP",
                                   "attribute '" + f->name + "." + a.name + "' is declared more than once",
                                   a.span));
      if (a.default_value && !value_has_type(*a.default_value, a.type))
        diags.push_back(make_error("E-FM-ATTR",
                                   "default of '" + f->name + "." + a.name + "' is not of type " +
                                       std::string(to_string(a.type)),
                                   a.span));
    }

    if (f->group != Group::None) {
      if (f->children.size() < 2)
        diags.push_back(make_error("E-FM-GROUP",
                                   "group under '" + f->name + "' needs at least two children", f->span));
      for (const Feature& c : f->children)
        if (c.marker)
          diags.push_back(make_error("E-FM-GROUP",
                                     "'" + c.name + "' belongs to a group and cannot be marked " +
                                         (c.mandatory() ? "mandatory" : "optional"),
                                     c.span));
    }
  }

  for (const CrossTreeConstraint& c : model.constraints) {
    for (const std::string* side : {&c.lhs, &c.rhs})
      if (!names.count(*side))
        diags.push_back(make_error("E-FM-REF", "constraint names unknown feature '" + *side + "'", c.span));
    if (c.lhs == c.rhs)
      diags.push_back(make_error("E-FM-REF", "constraint relates '" + c.lhs + "' to itself", c.span));
  }

  for (const CrossTreeConstraint& req : model.constraints) {
    if (req.kind != CrossTreeConstraint::Kind::Requires) continue;
    for (const CrossTreeConstraint& ex : model.constraints) {
      if (ex.kind != CrossTreeConstraint::Kind::Excludes) continue;
      bool same = (ex.lhs == req.lhs && ex.rhs == req.rhs) || (ex.lhs == req.rhs && ex.rhs == req.lhs);
      if (same)
        diags.push_back(make_error("E-FM-CONTRA",
                                   "'" + req.lhs + "' both requires and excludes '" + req.rhs + "'",
                                   ex.span));
    }
  }
  return diags;
}

namespace {

class ModelParser {
 public:
  explicit ModelParser(FormatCursor& cur) : cur_(cur) {}

  FeatureModel run() {
    FeatureModel model;
    cur_.expect("featuremodel");
    model.name = cur_.expect_identifier("model name").text;
    cur_.expect_punct("{");
    bool have_root = false;
    while (!cur_.cur().is_punct("}")) {
      if (cur_.cur().is("feature")) {
        if (have_root) cur_.fail("a feature model has exactly one root feature");
        model.root = feature();
        have_root = true;
      } else if (cur_.cur().is("constraint")) {
        model.constraints.push_back(constraint());
      } else {
        cur_.fail("expected 'feature', 'constraint' or '}'");
      }
    }
    cur_.advance();
    if (!have_root) cur_.fail("feature model has no root feature");
    if (!cur_.at_end()) cur_.fail("expected end of input");
    return model;
  }

 private:
  Feature feature() {
    Feature f;
    f.span = cur_.expect("feature").span;
    const FormatToken& name = cur_.expect_identifier("feature name");
    f.name = name.text;
    f.span = name.span;
    if (cur_.accept("mandatory")) f.marker = Variability::Mandatory;
    else if (cur_.accept("optional")) f.marker = Variability::Optional;
    if (cur_.accept("alternative")) f.group = Group::Alternative;
    else if (cur_.accept("or")) f.group = Group::Or;
    if (!cur_.accept_punct("{")) return f;
    while (!cur_.cur().is_punct("}")) {
      if (cur_.cur().is("feature")) f.children.push_back(feature());
      else if (cur_.cur().is("attribute")) f.attributes.push_back(attribute());
      else cur_.fail("expected 'feature', 'attribute' or '}'");
    }
    cur_.advance();
    return f;
  }

  Attribute attribute() {
    Attribute a;
    cur_.expect("attribute");
    const FormatToken& name = cur_.expect_identifier("attribute name");
    a.name = name.text;
    a.span = name.span;
    cur_.expect_punct(":");
    if (cur_.accept("int")) a.type = AttrType::Int;
    else if (cur_.accept("real")) a.type = AttrType::Real;
    else if (cur_.accept("string")) a.type = AttrType::String;
    else cur_.fail("expected attribute type 'int', 'real' or 'string'");
    if (cur_.accept_punct("=")) a.default_value = literal(a.type);
    return a;
  }

  AttrValue literal(AttrType type) {
    const FormatToken& t = cur_.cur();
    AttrValue v;
    if (t.kind == FormatToken::Kind::Integer) {
      auto i = parse_int(t.text);
      if (!i) cur_.fail("integer out of range");
      if (type == AttrType::Real) v = static_cast<double>(*i);
      else v = *i;
    } else if (t.kind == FormatToken::Kind::Real) {
      auto d = parse_real(t.text);
      if (!d) cur_.fail("real out of range");
      v = *d;
    } else if (t.kind == FormatToken::Kind::String) {
      v = t.text;
    } else {
      cur_.fail("expected a literal value");
    }
    cur_.advance();
    return v;
  }

  CrossTreeConstraint constraint() {
    CrossTreeConstraint c;
    c.span = cur_.expect("constraint").span;
    c.lhs = cur_.expect_identifier("feature name").text;
    if (cur_.accept("requires")) c.kind = CrossTreeConstraint::Kind::Requires;
    else if (cur_.accept("excludes")) c.kind = CrossTreeConstraint::Kind::Excludes;
    else cur_.fail("expected 'requires' or 'excludes'");
    c.rhs = cur_.expect_identifier("feature name").text;
    return c;
  }

  FormatCursor& cur_;
};

}  // namespace

Result<FeatureModel> parse_feature_model(std::string_view source, const std::string& file) {
  auto tokens = tokenize_format(source, file, "E-FM-PARSE");
  if (!tokens) return tokens.diagnostics();
  FormatCursor cursor(*tokens, "E-FM-PARSE");
  FeatureModel model;
  try {
    model = ModelParser(cursor).run();
  } catch (const FormatError& e) {
    return Diagnostics{e.diag};
  }
  Diagnostics diags = validate_model(model);
  if (!diags.empty()) {
    sort_diagnostics(diags);
    return diags;
  }
  return model;
}

}  // namespace pnpc::fm
