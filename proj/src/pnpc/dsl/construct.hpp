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

#ifndef PNPC_DSL_CONSTRUCT_HPP
#define PNPC_DSL_CONSTRUCT_HPP

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace pnpc::dsl {

/// One identifier per grammar production or production alternative. This is
/// the unit that feature mappings can switch on and off.
enum class Construct {
  ColorDecl,
  ObjectDecl,
  SensorDecl,
  RobotDecl,
  LocationDecl,
  PickStmt,
  PlaceStmt,
  MoveStmt,
  PerceiveStmt,
  RepeatStmt,
  IfStmt,
  ForeachStmt,
  RobotTypeLWR,
  RobotTypeKR16_2,
  RobotTypeRX130,
};

inline constexpr std::array<Construct, 15> kAllConstructs = {
    Construct::ColorDecl,    Construct::ObjectDecl,   Construct::SensorDecl,
    Construct::RobotDecl,    Construct::LocationDecl, Construct::PickStmt,
    Construct::PlaceStmt,    Construct::MoveStmt,     Construct::PerceiveStmt,
    Construct::RepeatStmt,   Construct::IfStmt,       Construct::ForeachStmt,
    Construct::RobotTypeLWR, Construct::RobotTypeKR16_2, Construct::RobotTypeRX130,
};

using ConstructSet = std::set<Construct>;

/// "pickStmt", "robotType.KR16_2", ...
std::string_view construct_name(Construct c);
std::optional<Construct> construct_from_name(std::string_view name);

}  // namespace pnpc::dsl

#endif  // PNPC_DSL_CONSTRUCT_HPP
