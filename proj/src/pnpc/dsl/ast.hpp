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

// Abstract syntax of pick-and-place programs.
//
// Every node is a plain value. Source positions are carried as NodeSpan,
// which never takes part in equality, so `a == b` is structural equality.

#ifndef PNPC_DSL_AST_HPP
#define PNPC_DSL_AST_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnpc/dsl/construct.hpp"
#include "pnpc/support/diagnostic.hpp"

namespace pnpc::dsl {

struct NodeSpan : SourceSpan {
  NodeSpan() = default;
  NodeSpan(SourceSpan s) : SourceSpan(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  friend bool operator==(const NodeSpan&, const NodeSpan&) { return true; }
};

enum class Shape { Box, Cylinder, Sphere };
enum class RobotType { LWR, KR16_2, RX130 };

std::string_view to_string(Shape shape);
std::string_view to_string(RobotType type);
std::optional<Shape> shape_from_name(std::string_view name);
std::optional<RobotType> robot_type_from_name(std::string_view name);

/// Joint count of the stock arm for each robot type.
int default_joints(RobotType type);

/// Position in meters, orientation in radians.
struct Pose {
  double x = 0, y = 0, z = 0;
  double roll = 0, pitch = 0, yaw = 0;

  friend bool operator==(const Pose&, const Pose&) = default;
};

struct NameRef {
  std::string name;
  NodeSpan span;

  friend bool operator==(const NameRef&, const NameRef&) = default;
};

// --- declarations ---------------------------------------------------------

struct ColorDecl {
  NameRef name;
  int r = 0, g = 0, b = 0;
  friend bool operator==(const ColorDecl&, const ColorDecl&) = default;
};

struct ObjectDecl {
  NameRef name;
  Shape shape = Shape::Box;
  std::optional<NameRef> color;
  std::array<double, 3> size{0.05, 0.05, 0.05};
  Pose at;
  friend bool operator==(const ObjectDecl&, const ObjectDecl&) = default;
};

struct SensorDecl {
  NameRef name;
  std::optional<std::string> kind;
  Pose frame;
  friend bool operator==(const SensorDecl&, const SensorDecl&) = default;
};

struct RobotDecl {
  NameRef name;
  RobotType type = RobotType::LWR;
  NodeSpan type_span;
  std::optional<std::int64_t> joints;
  Pose mount;
  friend bool operator==(const RobotDecl&, const RobotDecl&) = default;
};

struct LocationDecl {
  NameRef name;
  Pose pose;
  friend bool operator==(const LocationDecl&, const LocationDecl&) = default;
};

enum class DeclKind { Color, Object, Sensor, Robot, Location };
std::string_view to_string(DeclKind kind);

struct Declaration {
  std::variant<ColorDecl, ObjectDecl, SensorDecl, RobotDecl, LocationDecl> node;
  NodeSpan span;  // the introducing keyword

  DeclKind kind() const { return static_cast<DeclKind>(node.index()); }
  const NameRef& name() const;

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

// --- statements -----------------------------------------------------------

/// Either a location name or a literal pose.
using Target = std::variant<NameRef, Pose>;

struct ByColor {
  NameRef color;
  friend bool operator==(const ByColor&, const ByColor&) = default;
};
struct ByShape {
  Shape shape = Shape::Box;
  friend bool operator==(const ByShape&, const ByShape&) = default;
};
using Matcher = std::variant<ByColor, ByShape>;

struct Condition {
  enum class Kind { Exists, Holding, Not };
  Kind kind = Kind::Exists;
  NameRef name;                  // Exists / Holding
  std::vector<Condition> operand;  // exactly one element for Not
  NodeSpan span;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Statement;
using Block = std::vector<Statement>;

struct Pick {
  NameRef object;
  std::optional<NameRef> robot;
  friend bool operator==(const Pick&, const Pick&) = default;
};
struct Place {
  NameRef object;
  Target target;
  std::optional<NameRef> robot;
  friend bool operator==(const Place&, const Place&) = default;
};
struct Move {
  NameRef robot;
  Target target;
  friend bool operator==(const Move&, const Move&) = default;
};
struct Perceive {
  std::optional<NameRef> sensor;
  std::optional<Matcher> matcher;
  friend bool operator==(const Perceive&, const Perceive&) = default;
};
struct Repeat {
  std::int64_t count = 1;
  Block body;
  friend bool operator==(const Repeat&, const Repeat&) = default;
};
struct If {
  Condition cond;
  Block then_body;
  std::optional<Block> else_body;
  friend bool operator==(const If&, const If&) = default;
};
struct ForEachPerceived {
  NameRef binder;
  std::optional<Matcher> matcher;
  Block body;
  friend bool operator==(const ForEachPerceived&, const ForEachPerceived&) = default;
};

struct Statement {
  std::variant<Pick, Place, Move, Perceive, Repeat, If, ForEachPerceived> node;
  NodeSpan span;  // the introducing keyword

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }

  /// The grammar production this statement instantiates.
  Construct construct() const;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Program {
  std::vector<Declaration> declarations;
  Block statements;
  /// Constructs syntactically present, recorded by the parser.
  ConstructSet constructs_used;

  const Declaration* find(std::string_view name) const;
  std::vector<const RobotDecl*> robots() const;

  friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_AST_HPP
