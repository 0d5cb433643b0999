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

// Text templates: static text interleaved with bracketed dynamic fragments.
//
//   [query/]                         emit the query result
//   [if (query)] ... [else] ... [/if]
//   [for (x : query) separator(", ")] ... [/for]
//   [template name(p : kind, ...)] ... [/template]
//   [name(arg, ...)/]                call another template
//   [comment anything /]
//
// A `[` that does not open one of these forms is ordinary text. Block tags
// that sit alone on a line swallow that whole line, newline included. The
// query language is documented in docs/templates.md.

#ifndef PNPC_TPL_TEMPLATE_HPP
#define PNPC_TPL_TEMPLATE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnpc/fm/expression.hpp"
#include "pnpc/support/diagnostic.hpp"
#include "pnpc/tpl/value.hpp"

namespace pnpc::tpl {

struct Query {
  enum class Kind { Var, Literal, Member, Method, Not, And, Or, Compare, Call };
  Kind kind = Kind::Var;
  std::string name;          // Var, Member, Method, Call
  Value literal;             // Literal
  fm::CmpOp op = fm::CmpOp::Eq;  // Compare
  std::vector<Query> args;   // Member/Method: args[0] is the receiver
  SourceSpan span;
};

struct Node;
using Nodes = std::vector<Node>;

struct StaticText {
  std::string text;
};
struct ExprNode {
  Query query;
};
struct IfBlock {
  Query cond;
  Nodes then_nodes;
  Nodes else_nodes;
};
struct ForBlock {
  std::string binder;
  Query collection;
  std::string separator;
  Nodes body;
};
struct CallNode {
  std::string callee;
  std::vector<Query> args;
  SourceSpan span;
};

struct Node {
  std::variant<StaticText, ExprNode, IfBlock, ForBlock, CallNode> node;
};

struct Param {
  std::string name;
  ValueKind kind = ValueKind::Text;
};

struct Template {
  std::string name;
  std::vector<Param> params;
  Nodes body;
  SourceSpan span;
};

/// Templates by name.
using TemplateSet = std::map<std::string, Template, std::less<>>;

/// Parses one template file. A file without `[template]` definitions is a
/// single parameterless template called `default_name`.
/// Errors: E-TPL-PARSE.
Result<std::vector<Template>> parse_template(std::string_view source, const std::string& file = {},
                                             const std::string& default_name = "main");

/// Adds templates to a set; E-TPL-PARSE on duplicate names.
Diagnostics add_templates(TemplateSet& set, std::vector<Template> templates);

/// Link-time checks: every call names a template in the set with the right
/// number of arguments (E-TPL-CALL).
Diagnostics link_templates(const TemplateSet& set);

using RenderContext = std::map<std::string, Value, std::less<>>;

/// Renders `name` from `set` with `context` bound to its parameters. Output
/// is produced only when rendering succeeds.
/// Errors: E-TPL-UNBOUND, E-TPL-KIND, E-TPL-CALL.
Result<std::string> render(const TemplateSet& set, std::string_view name, const RenderContext& context);

/// Renders a standalone template (calls resolve against an empty set).
Result<std::string> render(const Template& tpl, const RenderContext& context);

}  // namespace pnpc::tpl

#endif  // PNPC_TPL_TEMPLATE_HPP
