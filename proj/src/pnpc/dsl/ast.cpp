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

#include "pnpc/dsl/ast.hpp"

namespace pnpc::dsl {

namespace {

constexpr std::array<std::string_view, 15> kConstructNames = {
    "colorDecl",  "objectDecl", "sensorDecl",   "robotDecl",  "locationDecl",
    "pickStmt",   "placeStmt",  "moveStmt",     "perceiveStmt", "repeatStmt",
    "ifStmt",     "foreachStmt", "robotType.LWR", "robotType.KR16_2", "robotType.RX130",
};

}  // namespace

std::string_view construct_name(Construct c) {
  return kConstructNames[static_cast<std::size_t>(c)];
}

std::optional<Construct> construct_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kConstructNames.size(); ++i)
    if (kConstructNames[i] == name) return static_cast<Construct>(i);
  return std::nullopt;
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::Box: return "box";
    case Shape::Cylinder: return "cylinder";
    case Shape::Sphere: return "sphere";
  }
  return "box";
}

std::string_view to_string(RobotType type) {
  switch (type) {
    case RobotType::LWR: return "LWR";
    case RobotType::KR16_2: return "KR16_2";
    case RobotType::RX130: return "RX130";
  }
  return "LWR";
}

std::optional<Shape> shape_from_name(std::string_view name) {
  if (name == "box") return Shape::Box;
  if (name == "cylinder") return Shape::Cylinder;
  if (name == "sphere") return Shape::Sphere;
  return std::nullopt;
}

std::optional<RobotType> robot_type_from_name(std::string_view name) {
  if (name == "LWR") return RobotType::LWR;
  if (name == "KR16_2") return RobotType::KR16_2;
  if (name == "RX130") return RobotType::RX130;
  return std::nullopt;
}

int default_joints(RobotType type) {
  return type == RobotType::LWR ? 7 : 6;
}

std::string_view to_string(DeclKind kind) {
  switch (kind) {
    case DeclKind::Color: return "color";
    case DeclKind::Object: return "object";
    case DeclKind::Sensor: return "sensor";
    case DeclKind::Robot: return "robot";
    case DeclKind::Location: return "location";
  }
  return "?";
}

const NameRef& Declaration::name() const {
  return std::visit([](const auto& d) -> const NameRef& { return d.name; }, node);
}

Construct Statement::construct() const {
  static constexpr std::array<Construct, 7> kByIndex = {
      Construct::PickStmt,     Construct::PlaceStmt,  Construct::MoveStmt,
      Construct::PerceiveStmt, Construct::RepeatStmt, Construct::IfStmt,
      Construct::ForeachStmt,
  };
  return kByIndex[node.index()];
}

const Declaration* Program::find(std::string_view name) const {
  for (const Declaration& d : declarations)
    if (d.name().name == name) return &d;
  return nullptr;
}

std::vector<const RobotDecl*> Program::robots() const {
  std::vector<const RobotDecl*> out;
  for (const Declaration& d : declarations)
    if (const auto* r = d.as<RobotDecl>()) out.push_back(r);
  return out;
}

}  // namespace pnpc::dsl
