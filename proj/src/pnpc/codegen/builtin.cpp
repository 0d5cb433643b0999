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

#include "pnpc/codegen/builtin.hpp"

namespace pnpc::codegen {

Result<tpl::TemplateSet> load_template_set(const std::vector<TemplateSource>& sources) {
  tpl::TemplateSet set;
  Diagnostics diags;
  for (const TemplateSource& src : sources) {
    std::string stem = src.name.substr(src.name.find_last_of('/') + 1);
    stem = stem.substr(0, stem.rfind('.'));
    auto parsed = tpl::parse_template(src.content, src.name, stem);
    if (!parsed) {
      diags.insert(diags.end(), parsed.diagnostics().begin(), parsed.diagnostics().end());
      continue;
    }
    Diagnostics dup = tpl::add_templates(set, std::move(parsed).value());
    diags.insert(diags.end(), dup.begin(), dup.end());
  }
  if (diags.empty()) diags = tpl::link_templates(set);
  if (!diags.empty()) {
    sort_diagnostics(diags);
    return diags;
  }
  return set;
}

Result<tpl::TemplateSet> builtin_templates() { return load_template_set(builtin_template_sources()); }

}  // namespace pnpc::codegen
