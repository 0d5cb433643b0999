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

#ifndef PNPC_CODEGEN_BUILTIN_HPP
#define PNPC_CODEGEN_BUILTIN_HPP

#include <string>
#include <vector>

#include "pnpc/tpl/template.hpp"

namespace pnpc::codegen {

struct TemplateSource {
  std::string name;  // file name, e.g. "main.gt"
  std::string content;
};

/// The template files compiled into the library, sorted by name.
const std::vector<TemplateSource>& builtin_template_sources();

/// Parses and links a set of template files. Files without [template]
/// definitions become a template named after the file stem.
Result<tpl::TemplateSet> load_template_set(const std::vector<TemplateSource>& sources);

/// load_template_set(builtin_template_sources()).
Result<tpl::TemplateSet> builtin_templates();

}  // namespace pnpc::codegen

#endif  // PNPC_CODEGEN_BUILTIN_HPP
