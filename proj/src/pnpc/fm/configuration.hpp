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

#ifndef PNPC_FM_CONFIGURATION_HPP
#define PNPC_FM_CONFIGURATION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnpc/fm/feature_model.hpp"

namespace pnpc::fm {

/// A total include/exclude decision over a model plus attribute values.
struct FeatureConfiguration {
  std::string name;
  std::string model_name;
  std::set<std::string> included;
  std::set<std::string> excluded;
  std::map<std::pair<std::string, std::string>, AttrValue> attribute_values;

  // Source positions of the header and of each listed feature, if parsed.
  SourceSpan span;
  std::map<std::string, SourceSpan> spans;

  bool includes(std::string_view feature) const { return included.count(std::string(feature)) > 0; }
  std::optional<AttrValue> attribute(std::string_view feature, std::string_view attr) const;
};

/// Parses the `.cfg` format against `model`. Features left unlisted are
/// excluded when an ancestor is excluded; any other gap is E-CFG-INCOMPLETE.
/// Attribute defaults are filled in for included features.
///
///   E-CFG-PARSE       syntax error
///   E-CFG-UNKNOWN     feature/attribute not in the model, or wrong model name
///   E-CFG-CONFLICT    feature both included and excluded
///   E-CFG-INCOMPLETE  feature whose parent is included is not decided
///   E-CFG-ATTR        attribute missing, set twice or of the wrong type
Result<FeatureConfiguration> parse_configuration(std::string_view source, const FeatureModel& model,
                                                 const std::string& file = {});

/// Structural validity. One diagnostic per violated rule instance:
///   E-CFG-MANDATORY  root or mandatory child of an included feature excluded
///   E-CFG-ORPHAN     included child of an excluded feature
///   E-CFG-ALT        alternative group under an included feature without exactly one child
///   E-CFG-OR         or group under an included feature without any child
///   E-CFG-REQ        `A requires B` with A included and B excluded
///   E-CFG-EXCL       `A excludes B` with both included
/// plus E-CFG-UNKNOWN / E-CFG-CONFLICT / E-CFG-INCOMPLETE when the
/// configuration is not a total assignment over the model's features.
Diagnostics validate_configuration(const FeatureConfiguration& config, const FeatureModel& model);

inline constexpr std::size_t kEnumerationFeatureLimit = 20;

/// Every valid total configuration, in lexicographic order of the preorder
/// include vector (excluded before included), truncated to `limit` entries.
/// Attribute values are left at their defaults. E-FM-TOOBIG above
/// kEnumerationFeatureLimit features.
Result<std::vector<FeatureConfiguration>> enumerate_configurations(const FeatureModel& model,
                                                                   std::size_t limit);

/// Single-line `.cfg` text for a configuration.
std::string format_configuration(const FeatureConfiguration& config, const FeatureModel& model);

}  // namespace pnpc::fm

#endif  // PNPC_FM_CONFIGURATION_HPP
