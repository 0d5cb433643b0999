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

#ifndef PNPC_TPL_VALUE_HPP
#define PNPC_TPL_VALUE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnpc/dsl/ast.hpp"
#include "pnpc/fm/configuration.hpp"

namespace pnpc::tpl {

/// Kinds a template parameter can declare. `record` values are plain
/// name -> value maps (the codegen target profile is one).
enum class ValueKind {
  Null,
  Bool,
  Int,
  Real,
  Text,
  Program,
  RobotDecl,
  ObjectDecl,
  LocationDecl,
  Config,
  Record,
  List,
};

std::string_view to_string(ValueKind kind);
/// Parameter kind keywords: program, robotDecl, objectDecl, locationDecl,
/// config, profile (a record), record, text, int, real, bool, list.
std::optional<ValueKind> kind_from_keyword(std::string_view word);

struct DeclRef {
  std::shared_ptr<const dsl::Program> program;
  const dsl::Declaration* decl = nullptr;
  int index = 0;  // 1-based position among declarations of the same kind
};

class Value {
 public:
  using List = std::vector<Value>;
  using Record = std::map<std::string, Value, std::less<>>;

  Value() = default;
  Value(bool b) : data_(b) {}                                      // NOLINT
  Value(std::int64_t i) : data_(i) {}                              // NOLINT
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}            // NOLINT
  Value(double d) : data_(d) {}                                    // NOLINT
  Value(std::string s) : data_(std::move(s)) {}                    // NOLINT
  Value(const char* s) : data_(std::string(s)) {}                  // NOLINT
  Value(std::shared_ptr<const dsl::Program> p) : data_(std::move(p)) {}  // NOLINT
  Value(std::shared_ptr<const fm::FeatureConfiguration> c) : data_(std::move(c)) {}  // NOLINT
  Value(DeclRef d) : data_(std::move(d)) {}                        // NOLINT
  Value(Record r) : data_(std::make_shared<const Record>(std::move(r))) {}  // NOLINT
  Value(List l) : data_(std::make_shared<const List>(std::move(l))) {}      // NOLINT

  ValueKind kind() const;

  const bool* as_bool() const { return std::get_if<bool>(&data_); }
  const std::int64_t* as_int() const { return std::get_if<std::int64_t>(&data_); }
  const double* as_real() const { return std::get_if<double>(&data_); }
  const std::string* as_text() const { return std::get_if<std::string>(&data_); }
  const dsl::Program* as_program() const;
  std::shared_ptr<const dsl::Program> program_handle() const;
  const fm::FeatureConfiguration* as_config() const;
  const DeclRef* as_decl() const { return std::get_if<DeclRef>(&data_); }
  const Record* as_record() const;
  const List* as_list() const;

  /// Canonical text for emission: integers in base 10, reals with the
  /// shortest round-tripping digits, booleans as true/false. nullopt for
  /// kinds without a text form.
  std::optional<std::string> render() const;

 private:
  std::variant<std::monostate, bool, std::int64_t, double, std::string,
               std::shared_ptr<const dsl::Program>, std::shared_ptr<const fm::FeatureConfiguration>,
               DeclRef, std::shared_ptr<const Record>, std::shared_ptr<const List>>
      data_;
};

/// Pose as a record with x, y, z, roll, pitch, yaw.
Value pose_value(const dsl::Pose& pose);

/// Wraps declaration `decl` of `program` as a robotDecl/objectDecl/... value.
Value decl_value(const std::shared_ptr<const dsl::Program>& program, const dsl::Declaration& decl);

}  // namespace pnpc::tpl

#endif  // PNPC_TPL_VALUE_HPP
