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

#include "pnpc/support/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace pnpc {

const char* to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

Diagnostic make_error(std::string code, std::string message, SourceSpan span) {
  return Diagnostic{Severity::Error, std::move(code), std::move(message), std::move(span)};
}

Diagnostic make_warning(std::string code, std::string message, SourceSpan span) {
  return Diagnostic{Severity::Warning, std::move(code), std::move(message), std::move(span)};
}

bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void sort_diagnostics(Diagnostics& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.file, a.span.line, a.span.column) <
           std::tie(b.span.file, b.span.line, b.span.column);
  });
}

std::string format_diagnostic(const Diagnostic& diag) {
  std::string out = diag.span.file.empty() ? std::string("<input>") : diag.span.file;
  out += ':' + std::to_string(diag.span.line) + ':' + std::to_string(diag.span.column) + ": ";
  out += to_string(diag.severity);
  out += '[' + diag.code + "]: " + diag.message;
  return out;
}

}  // namespace pnpc
