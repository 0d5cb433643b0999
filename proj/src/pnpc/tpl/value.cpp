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

#include "pnpc/tpl/value.hpp"

#include "pnpc/support/number.hpp"

namespace pnpc::tpl {

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Null: return "null";
    case ValueKind::Bool: return "bool";
    case ValueKind::Int: return "int";
    case ValueKind::Real: return "real";
    case ValueKind::Text: return "text";
    case ValueKind::Program: return "program";
    case ValueKind::RobotDecl: return "robotDecl";
    case ValueKind::ObjectDecl: return "objectDecl";
    case ValueKind::LocationDecl: return "locationDecl";
    case ValueKind::Config: return "config";
    case ValueKind::Record: return "record";
    case ValueKind::List: return "list";
  }
  return "?";
}

std::optional<ValueKind> kind_from_keyword(std::string_view word) {
  if (word == "profile" || word == "record") return ValueKind::Record;
  for (ValueKind k : {ValueKind::Bool, ValueKind::Int, ValueKind::Real, ValueKind::Text, ValueKind::Program,
                      ValueKind::RobotDecl, ValueKind::ObjectDecl, ValueKind::LocationDecl, ValueKind::Config,
                      ValueKind::List})
    if (to_string(k) == word) return k;
  return std::nullopt;
}

ValueKind Value::kind() const {
  switch (data_.index()) {
    case 0: return ValueKind::Null;
    case 1: return ValueKind::Bool;
    case 2: return ValueKind::Int;
    case 3: return ValueKind::Real;
    case 4: return ValueKind::Text;
    case 5: return ValueKind::Program;
    case 6: return ValueKind::Config;
    case 7:
      switch (std::get<DeclRef>(data_).decl->kind()) {
        case dsl::DeclKind::Robot: return ValueKind::RobotDecl;
        case dsl::DeclKind::Object: return ValueKind::ObjectDecl;
        case dsl::DeclKind::Location: return ValueKind::LocationDecl;
        default: return ValueKind::Record;  // colors/sensors are not exposed
      }
    case 8: return ValueKind::Record;
    default: return ValueKind::List;
  }
}

const dsl::Program* Value::as_program() const {
  const auto* p = std::get_if<std::shared_ptr<const dsl::Program>>(&data_);
  return p ? p->get() : nullptr;
}

std::shared_ptr<const dsl::Program> Value::program_handle() const {
  const auto* p = std::get_if<std::shared_ptr<const dsl::Program>>(&data_);
  return p ? *p : nullptr;
}

const fm::FeatureConfiguration* Value::as_config() const {
  const auto* p = std::get_if<std::shared_ptr<const fm::FeatureConfiguration>>(&data_);
  return p ? p->get() : nullptr;
}

const Value::Record* Value::as_record() const {
  const auto* p = std::get_if<std::shared_ptr<const Record>>(&data_);
  return p ? p->get() : nullptr;
}

const Value::List* Value::as_list() const {
  const auto* p = std::get_if<std::shared_ptr<const List>>(&data_);
  return p ? p->get() : nullptr;
}

std::optional<std::string> Value::render() const {
  if (const auto* b = as_bool()) return *b ? "true" : "false";
  if (const auto* i = as_int()) return std::to_string(*i);
  if (const auto* d = as_real()) return format_real(*d);
  if (const auto* s = as_text()) return *s;
  return std::nullopt;
}

Value pose_value(const dsl::Pose& pose) {
  return Value(Value::Record{{"x", pose.x},
                             {"y", pose.y},
                             {"z", pose.z},
                             {"roll", pose.roll},
                             {"pitch", pose.pitch},
                             {"yaw", pose.yaw}});
}

Value decl_value(const std::shared_ptr<const dsl::Program>& program, const dsl::Declaration& decl) {
  int index = 0;
  for (const dsl::Declaration& d : program->declarations) {
    if (d.kind() == decl.kind()) ++index;
    if (&d == &decl) break;
  }
  return Value(DeclRef{program, &decl, index});
}

}  // namespace pnpc::tpl
