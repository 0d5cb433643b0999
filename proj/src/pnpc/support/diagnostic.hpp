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

#ifndef PNPC_SUPPORT_DIAGNOSTIC_HPP
#define PNPC_SUPPORT_DIAGNOSTIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pnpc {

/// Location of a construct in a source file. Lines and columns are 1-based,
/// length counts characters.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

const char* to_string(Severity severity);

/// A single finding reported by any stage of the pipeline.
///
/// `code` is drawn from the closed set documented in docs/diagnostics.md,
/// e.g. "E-UNDECLARED" or "E-CFG-ALT".
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_error(std::string code, std::string message, SourceSpan span = {});
Diagnostic make_warning(std::string code, std::string message, SourceSpan span = {});

bool has_errors(const Diagnostics& diags);

/// Stable sort by (file, line, column).
void sort_diagnostics(Diagnostics& diags);

/// `file:line:col: severity[code]: message`
std::string format_diagnostic(const Diagnostic& diag);

/// Either a value or the diagnostics explaining why there is none.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Diagnostics diags) : state_(std::move(diags)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T& value() & { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Diagnostics& diagnostics() const {
    static const Diagnostics kNone;
    if (const auto* d = std::get_if<Diagnostics>(&state_)) return *d;
    return kNone;
  }

 private:
  std::variant<T, Diagnostics> state_;
};

}  // namespace pnpc

#endif  // PNPC_SUPPORT_DIAGNOSTIC_HPP
