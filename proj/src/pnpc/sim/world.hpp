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

// Desk-scale world simulator for pick-and-place programs.
//
// Semantics in brief:
//   move R to T     tool := T; R-REACH if T is farther than reach from the mount
//   perceive        every robot's perceived set := the non-held objects
//                   passing the matcher, at their true poses
//   pick O          R-GRIPPER unless the gripper is empty, R-NOTPERCEIVED
//                   unless O was perceived, R-REACH; then O is held and the
//                   tool moves to O
//   place O at T    R-NOTHOLDING, R-REACH, R-OCCUPIED (another object within
//                   kEpsilon of T); then O rests at T and the gripper is empty
//
// A held object travels with the tool. Execution stops at the first error.

#ifndef PNPC_SIM_WORLD_HPP
#define PNPC_SIM_WORLD_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pnpc/dsl/ast.hpp"
#include "pnpc/support/diagnostic.hpp"

namespace pnpc::sim {

inline constexpr double kEpsilon = 1e-3;  // meters

/// Straight-line reach from the mount, in meters.
double reach_of(dsl::RobotType type);

struct ObjectState {
  dsl::Shape shape = dsl::Shape::Box;
  std::string color;  // empty when undeclared
  std::array<double, 3> size{};
  dsl::Pose pose;
  bool held = false;

  friend bool operator==(const ObjectState&, const ObjectState&) = default;
};

struct RobotState {
  dsl::RobotType type = dsl::RobotType::LWR;
  dsl::Pose mount;
  dsl::Pose tool;
  std::optional<std::string> holding;
  double reach = 0;

  friend bool operator==(const RobotState&, const RobotState&) = default;
};

struct WorldState {
  std::map<std::string, ObjectState> objects;
  std::map<std::string, RobotState> robots;
  /// Per robot: object name -> believed pose at the last perceive.
  std::map<std::string, std::map<std::string, dsl::Pose>> perceived;
  /// Number of perceive statements executed so far.
  std::int64_t perceive_count = 0;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

enum class Effect { Moved, Picked, Placed, Perceived, Skipped, LoopEntered };
std::string_view to_string(Effect effect);

struct TraceEvent {
  std::int64_t step = 0;
  dsl::Construct construct = dsl::Construct::MoveStmt;
  SourceSpan span;
  Effect effect = Effect::Moved;
  std::string detail;
};

struct RuntimeError {
  std::string code;  // R-REACH, R-GRIPPER, R-NOTPERCEIVED, R-NOTHOLDING, R-OCCUPIED, R-STEPLIMIT
  std::string message;
  SourceSpan span;
};

struct RunOptions {
  /// Let pick fall back to ground truth when the object was never perceived.
  bool allow_unperceived = false;
  /// Upper bound on executed primitive statements (R-STEPLIMIT).
  std::int64_t max_steps = 1'000'000;
  /// Called with the world after every trace event.
  std::function<void(const WorldState&, const TraceEvent&)> observer;
};

struct RunResult {
  WorldState world;
  std::vector<TraceEvent> trace;
  std::optional<RuntimeError> error;
  Diagnostics warnings;  // W-OVERLAP from initialization
};

/// Objects at their declared poses, tools at the mounts, nothing perceived.
/// Objects closer than kEpsilon to an earlier one get W-OVERLAP warnings.
WorldState init_world(const dsl::Program& program, Diagnostics* warnings = nullptr);

/// Result of executing one statement (recursively, for compound ones).
struct StepResult {
  WorldState world;
  std::vector<TraceEvent> events;
  std::optional<RuntimeError> error;
};

/// Executes `statement` against `world`. `first_step` numbers the emitted
/// events; `bindings` maps foreach binders to object names.
StepResult step(const WorldState& world, const dsl::Statement& statement, const dsl::Program& program,
                std::int64_t first_step = 0, const std::map<std::string, std::string>& bindings = {},
                const RunOptions& options = {});

/// init_world, then every statement in order. Deterministic.
RunResult run(const dsl::Program& program, const RunOptions& options = {});

/// {"name": [x, y, z, roll, pitch, yaw], ...} ordered by name.
std::string final_state_json(const WorldState& world);
/// [{"step", "construct", "line", "column", "effect", "detail"}, ...]
std::string trace_json(const std::vector<TraceEvent>& trace);

}  // namespace pnpc::sim

#endif  // PNPC_SIM_WORLD_HPP
