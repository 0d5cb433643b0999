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

#ifndef PNPC_FM_FEATURE_MODEL_HPP
#define PNPC_FM_FEATURE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnpc/support/diagnostic.hpp"

namespace pnpc::fm {

enum class Variability { Mandatory, Optional };

/// Applies to a feature's children: Alternative selects exactly one, Or at
/// least one.
enum class Group { None, Alternative, Or };

enum class AttrType { Int, Real, String };

using AttrValue = std::variant<std::int64_t, double, std::string>;

std::string_view to_string(AttrType type);
std::string format_value(const AttrValue& value);
bool value_has_type(const AttrValue& value, AttrType type);

struct Attribute {
  std::string name;
  AttrType type = AttrType::Int;
  std::optional<AttrValue> default_value;
  SourceSpan span;
};

struct Feature {
  std::string name;
  /// Explicit marker from the source. Unmarked ungrouped children are
  /// optional; children of a group must stay unmarked.
  std::optional<Variability> marker;
  Group group = Group::None;
  std::vector<Feature> children;
  std::vector<Attribute> attributes;
  SourceSpan span;

  bool mandatory() const { return marker == Variability::Mandatory; }
  const Attribute* find_attribute(std::string_view attr) const;
};

struct CrossTreeConstraint {
  enum class Kind { Requires, Excludes };
  Kind kind = Kind::Requires;
  std::string lhs;
  std::string rhs;
  SourceSpan span;
};

struct FeatureModel {
  std::string name;
  Feature root;
  std::vector<CrossTreeConstraint> constraints;

  /// Features in preorder (root first, children in declaration order).
  std::vector<const Feature*> features() const;
  const Feature* find(std::string_view name) const;
  /// nullptr for the root or unknown names.
  const Feature* parent_of(std::string_view name) const;
  std::size_t feature_count() const { return features().size(); }
};

/// Checks the model invariants:
///   E-FM-DUP     feature name used twice, or attribute name twice in a feature
///   E-FM-GROUP   group with fewer than two children, or a marked grouped child
///   E-FM-ROOT    root marked optional
///   E-FM-REF     constraint names an unknown feature or relates a feature to itself
///   E-FM-CONTRA  `A requires B` together with `A excludes B` (either order)
///   E-FM-ATTR    attribute default does not match the declared type
Diagnostics validate_model(const FeatureModel& model);

/// Parses the `.fm` format (see docs/formats.md) and validates the result.
Result<FeatureModel> parse_feature_model(std::string_view source, const std::string& file = {});

}  // namespace pnpc::fm

#endif  // PNPC_FM_FEATURE_MODEL_HPP
