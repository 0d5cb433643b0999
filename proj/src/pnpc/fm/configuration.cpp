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

#include "pnpc/fm/configuration.hpp"

#include <map>

#include "pnpc/support/format_lexer.hpp"
#include "pnpc/support/number.hpp"

namespace pnpc::fm {

namespace {

// Flattened view of a model used by the rule evaluator.
struct IndexedModel {
  struct Node {
    const Feature* feature;
    int parent;
    std::vector<int> children;
  };
  struct Constraint {
    CrossTreeConstraint::Kind kind;
    int lhs, rhs;
    const CrossTreeConstraint* source;
  };
  std::vector<Node> nodes;
  std::vector<Constraint> constraints;
  std::map<std::string, int, std::less<>> index;

  explicit IndexedModel(const FeatureModel& model) {
    add(model.root, -1);
    for (const CrossTreeConstraint& c : model.constraints) {
      auto l = index.find(c.lhs), r = index.find(c.rhs);
      if (l != index.end() && r != index.end())
        constraints.push_back({c.kind, l->second, r->second, &c});
    }
  }

  void add(const Feature& f, int parent) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back({&f, parent, {}});
    index.emplace(f.name, id);
    if (parent >= 0) nodes[parent].children.push_back(id);
    for (const Feature& c : f.children) add(c, id);
  }
};

enum class Rule { Mandatory, Orphan, Alternative, Or, Requires, Excludes };

struct Violation {
  Rule rule;
  int feature;  // offending feature, or -1 for constraints
  const CrossTreeConstraint* constraint = nullptr;
};

// Evaluates the structural rules over an include vector. When `out` is null
// it stops at the first violation.
bool check_rules(const IndexedModel& m, const std::vector<char>& in, std::vector<Violation>* out) {
  bool ok = true;
  auto violate = [&](Violation v) {
    ok = false;
    if (out) out->push_back(v);
    return out == nullptr;
  };
  if (!in[0] && violate({Rule::Mandatory, 0})) return false;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const auto& node = m.nodes[i];
    const Feature& f = *node.feature;
    if (in[i]) {
      int selected = 0;
      for (int c : node.children) {
        if (in[c]) ++selected;
        else if (f.group == Group::None && m.nodes[c].feature->mandatory() &&
                 violate({Rule::Mandatory, c}))
          return false;
      }
      if (f.group == Group::Alternative && selected != 1 &&
          violate({Rule::Alternative, static_cast<int>(i)}))
        return false;
      if (f.group == Group::Or && selected == 0 && violate({Rule::Or, static_cast<int>(i)}))
        return false;
    } else {
      for (int c : node.children)
        if (in[c] && violate({Rule::Orphan, c})) return false;
    }
  }
  for (const auto& c : m.constraints) {
    if (c.kind == CrossTreeConstraint::Kind::Requires) {
      if (in[c.lhs] && !in[c.rhs] && violate({Rule::Requires, -1, c.source})) return false;
    } else if (in[c.lhs] && in[c.rhs] && violate({Rule::Excludes, -1, c.source})) {
      return false;
    }
  }
  return ok;
}

SourceSpan span_for(const FeatureConfiguration& config, const std::string& feature) {
  auto it = config.spans.find(feature);
  return it != config.spans.end() ? it->second : config.span;
}

Diagnostic describe(const Violation& v, const IndexedModel& m, const FeatureConfiguration& config) {
  const std::string* name = v.feature >= 0 ? &m.nodes[v.feature].feature->name : nullptr;
  switch (v.rule) {
    case Rule::Mandatory:
      if (v.feature == 0)
        return make_error("E-CFG-MANDATORY", "root feature '" + *name + "' must be included",
                          span_for(config, *name));
      return make_error("E-CFG-MANDATORY",
                        "mandatory feature '" + *name + "' is excluded but its parent '" +
                            m.nodes[m.nodes[v.feature].parent].feature->name + "' is included",
                        span_for(config, *name));
    case Rule::Orphan:
      return make_error("E-CFG-ORPHAN",
                        "'" + *name + "' is included but its parent '" +
                            m.nodes[m.nodes[v.feature].parent].feature->name + "' is excluded",
                        span_for(config, *name));
    case Rule::Alternative:
      return make_error("E-CFG-ALT",
                        "alternative group under '" + *name + "' must have exactly one included child",
                        span_for(config, *name));
    case Rule::Or:
      return make_error("E-CFG-OR", "or group under '" + *name + "' must have at least one included child",
                        span_for(config, *name));
    case Rule::Requires:
      return make_error("E-CFG-REQ",
                        "'" + v.constraint->lhs + "' requires '" + v.constraint->rhs + "', which is excluded",
                        span_for(config, v.constraint->lhs));
    case Rule::Excludes:
      return make_error("E-CFG-EXCL",
                        "'" + v.constraint->lhs + "' and '" + v.constraint->rhs +
                            "' exclude each other but both are included",
                        span_for(config, v.constraint->rhs));
  }
  return {};
}

AttrValue parse_literal(FormatCursor& cur) {
  const FormatToken& t = cur.cur();
  AttrValue v;
  if (t.kind == FormatToken::Kind::Integer) {
    auto i = parse_int(t.text);
    if (!i) cur.fail("integer out of range");
    v = *i;
  } else if (t.kind == FormatToken::Kind::Real) {
    auto d = parse_real(t.text);
    if (!d) cur.fail("real out of range");
    v = *d;
  } else if (t.kind == FormatToken::Kind::String) {
    v = t.text;
  } else {
    cur.fail("expected a value");
  }
  cur.advance();
  return v;
}

struct RawEntry {
  std::string name;
  SourceSpan span;
};

struct RawSetting {
  std::string feature, attr;
  AttrValue value;
  SourceSpan span;
};

struct RawConfig {
  std::string name, model;
  SourceSpan span, model_span;
  std::vector<RawEntry> include, exclude;
  std::vector<RawSetting> settings;
};

RawConfig parse_raw(FormatCursor& cur) {
  RawConfig raw;
  raw.span = cur.expect("configuration").span;
  raw.name = cur.expect_identifier("configuration name").text;
  cur.expect("of");
  const FormatToken& model = cur.expect_identifier("model name");
  raw.model = model.text;
  raw.model_span = model.span;
  cur.expect_punct("{");
  auto name_list = [&](std::vector<RawEntry>& into) {
    do {
      const FormatToken& t = cur.expect_identifier("feature name");
      into.push_back({t.text, t.span});
    } while (cur.accept_punct(","));
  };
  while (!cur.cur().is_punct("}")) {
    if (cur.accept("include")) {
      name_list(raw.include);
    } else if (cur.accept("exclude")) {
      name_list(raw.exclude);
    } else if (cur.accept("set")) {
      RawSetting s;
      const FormatToken& f = cur.expect_identifier("feature name");
      s.feature = f.text;
      s.span = f.span;
      cur.expect_punct(".");
      s.attr = cur.expect_identifier("attribute name").text;
      cur.expect_punct("=");
      s.value = parse_literal(cur);
      raw.settings.push_back(std::move(s));
    } else {
      cur.fail("expected 'include', 'exclude', 'set' or '}'");
    }
  }
  cur.advance();
  if (!cur.at_end()) cur.fail("expected end of input");
  return raw;
}

}  // namespace

std::optional<AttrValue> FeatureConfiguration::attribute(std::string_view feature,
                                                         std::string_view attr) const {
  auto it = attribute_values.find({std::string(feature), std::string(attr)});
  if (it == attribute_values.end()) return std::nullopt;
  return it->second;
}

Result<FeatureConfiguration> parse_configuration(std::string_view source, const FeatureModel& model,
                                                 const std::string& file) {
  auto tokens = tokenize_format(source, file, "E-CFG-PARSE");
  if (!tokens) return tokens.diagnostics();
  FormatCursor cursor(*tokens, "E-CFG-PARSE");
  RawConfig raw;
  try {
    raw = parse_raw(cursor);
  } catch (const FormatError& e) {
    return Diagnostics{e.diag};
  }

  Diagnostics diags;
  FeatureConfiguration config;
  config.name = raw.name;
  config.model_name = raw.model;
  config.span = raw.span;
  if (raw.model != model.name)
    diags.push_back(make_error("E-CFG-UNKNOWN",
                               "configuration is for model '" + raw.model + "', not '" + model.name + "'",
                               raw.model_span));

  auto record = [&](const std::vector<RawEntry>& entries, std::set<std::string>& into) {
    for (const RawEntry& e : entries) {
      if (!model.find(e.name)) {
        diags.push_back(make_error("E-CFG-UNKNOWN", "'" + e.name + "' is not a feature of '" + model.name + "'",
                                   e.span));
        continue;
      }
      into.insert(e.name);
      config.spans.emplace(e.name, e.span);
    }
  };
  record(raw.include, config.included);
  record(raw.exclude, config.excluded);
  for (const RawEntry& e : raw.exclude)
    if (config.included.count(e.name))
      diags.push_back(make_error("E-CFG-CONFLICT", "'" + e.name + "' is both included and excluded", e.span));

  // Implicit exclusion below excluded features; every other feature must be decided.
  IndexedModel index(model);
  std::vector<char> excluded(index.nodes.size(), 0);
  for (std::size_t i = 0; i < index.nodes.size(); ++i) {
    const auto& node = index.nodes[i];
    const std::string& name = node.feature->name;
    if (config.excluded.count(name)) {
      excluded[i] = 1;
    } else if (!config.included.count(name)) {
      if (node.parent >= 0 && excluded[node.parent]) {
        excluded[i] = 1;
        config.excluded.insert(name);
      } else {
        diags.push_back(make_error(
            "E-CFG-INCOMPLETE",
            node.parent < 0 ? "root feature '" + name + "' is neither included nor excluded"
                            : "'" + name + "' must be explicitly included or excluded because its parent '" +
                                  index.nodes[node.parent].feature->name + "' is not excluded",
            raw.span));
      }
    }
  }

  std::set<std::pair<std::string, std::string>> rejected;
  for (const RawSetting& s : raw.settings) {
    const Feature* f = model.find(s.feature);
    const Attribute* a = f ? f->find_attribute(s.attr) : nullptr;
    if (!a) {
      diags.push_back(make_error("E-CFG-UNKNOWN", "'" + s.feature + "." + s.attr + "' is not an attribute of the model",
                                 s.span));
      continue;
    }
    AttrValue value = s.value;
    if (a->type == AttrType::Real && std::holds_alternative<std::int64_t>(value))
      value = static_cast<double>(std::get<std::int64_t>(value));
    if (!value_has_type(value, a->type)) {
      diags.push_back(make_error("E-CFG-ATTR",
                                 "'" + s.feature + "." + s.attr + "' expects a value of type " +
                                     std::string(to_string(a->type)),
                                 s.span));
      rejected.insert({s.feature, s.attr});
      continue;
    }
    if (!config.attribute_values.emplace(std::pair{s.feature, s.attr}, value).second)
      diags.push_back(make_error("E-CFG-ATTR", "'" + s.feature + "." + s.attr + "' is set more than once", s.span));
  }

  for (const Feature* f : model.features()) {
    if (!config.included.count(f->name)) continue;
    for (const Attribute& a : f->attributes) {
      std::pair key{f->name, a.name};
      if (config.attribute_values.count(key) || rejected.count(key)) continue;
      if (a.default_value) {
        config.attribute_values.emplace(key, *a.default_value);
      } else {
        diags.push_back(make_error("E-CFG-ATTR",
                                   "included feature '" + f->name + "' needs a value for attribute '" + a.name +
                                       "'",
                                   span_for(config, f->name)));
      }
    }
  }

  if (!diags.empty()) {
    sort_diagnostics(diags);
    return diags;
  }
  return config;
}

Diagnostics validate_configuration(const FeatureConfiguration& config, const FeatureModel& model) {
  Diagnostics diags;
  IndexedModel index(model);
  if (!config.model_name.empty() && config.model_name != model.name)
    diags.push_back(make_error("E-CFG-UNKNOWN",
                               "configuration is for model '" + config.model_name + "', not '" + model.name + "'",
                               config.span));
  for (const auto* set : {&config.included, &config.excluded})
    for (const std::string& name : *set)
      if (!index.index.count(name))
        diags.push_back(make_error("E-CFG-UNKNOWN", "'" + name + "' is not a feature of '" + model.name + "'",
                                   span_for(config, name)));

  std::vector<char> in(index.nodes.size(), 0);
  for (std::size_t i = 0; i < index.nodes.size(); ++i) {
    const std::string& name = index.nodes[i].feature->name;
    bool inc = config.included.count(name) > 0;
    bool exc = config.excluded.count(name) > 0;
    if (inc && exc)
      diags.push_back(make_error("E-CFG-CONFLICT", "'" + name + "' is both included and excluded",
                                 span_for(config, name)));
    else if (!inc && !exc)
      diags.push_back(make_error("E-CFG-INCOMPLETE", "'" + name + "' is neither included nor excluded", config.span));
    in[i] = inc ? 1 : 0;
  }

  std::vector<Violation> violations;
  check_rules(index, in, &violations);
  for (const Violation& v : violations) diags.push_back(describe(v, index, config));
  return diags;
}

Result<std::vector<FeatureConfiguration>> enumerate_configurations(const FeatureModel& model, std::size_t limit) {
  IndexedModel index(model);
  const std::size_t n = index.nodes.size();
  if (n > kEnumerationFeatureLimit)
    return Diagnostics{make_error("E-FM-TOOBIG",
                                  "model '" + model.name + "' has " + std::to_string(n) +
                                      " features; enumeration is limited to " +
                                      std::to_string(kEnumerationFeatureLimit),
                                  model.root.span)};

  std::vector<FeatureConfiguration> out;
  std::vector<char> in(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total && out.size() < limit; ++mask) {
    // Feature 0 (the root) is the most significant position.
    for (std::size_t i = 0; i < n; ++i) in[i] = static_cast<char>((mask >> (n - 1 - i)) & 1U);
    if (!check_rules(index, in, nullptr)) continue;

    FeatureConfiguration config;
    config.name = model.name + "_" + std::to_string(out.size() + 1);
    config.model_name = model.name;
    for (std::size_t i = 0; i < n; ++i) {
      const Feature& f = *index.nodes[i].feature;
      if (in[i]) {
        config.included.insert(f.name);
        for (const Attribute& a : f.attributes)
          if (a.default_value) config.attribute_values.emplace(std::pair{f.name, a.name}, *a.default_value);
      } else {
        config.excluded.insert(f.name);
      }
    }
    out.push_back(std::move(config));
  }
  return out;
}

std::string format_configuration(const FeatureConfiguration& config, const FeatureModel& model) {
  std::string inc, exc;
  for (const Feature* f : model.features()) {
    std::string& list = config.includes(f->name) ? inc : exc;
    if (!list.empty()) list += ", ";
    list += f->name;
  }
  std::string out = "configuration " + config.name + " of " + model.name + " {";
  if (!inc.empty()) out += " include " + inc;
  if (!exc.empty()) out += " exclude " + exc;
  for (const auto& [key, value] : config.attribute_values) {
    out += " set " + key.first + "." + key.second + " = ";
    if (std::holds_alternative<std::string>(value)) out += quote_format_string(std::get<std::string>(value));
    else out += format_value(value);
  }
  return out + " }";
}

}  // namespace pnpc::fm
