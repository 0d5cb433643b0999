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

// C++ generation for the GeNBot robot framework.
//
// The generator binds a checked program and a feature configuration to a
// template set. Units are returned in memory; writing them out is left to
// the caller.

#ifndef PNPC_CODEGEN_CODEGEN_HPP
#define PNPC_CODEGEN_CODEGEN_HPP

#include <memory>
#include <string>
#include <vector>

#include "pnpc/dsl/ast.hpp"
#include "pnpc/fm/configuration.hpp"
#include "pnpc/tpl/template.hpp"
#include "pnpc/variability/mapping.hpp"

namespace pnpc::codegen {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kDefaultKinematicsFile = "/path/to/kinematicsFile.xml";

struct TargetProfile {
  dsl::RobotType robot_type = dsl::RobotType::LWR;
  int joints = 0;
  std::string controller_class;
  std::string ik_class;
  std::string fk_class;
  double cycle_time = 0;  // seconds
  std::string kinematics_file;
  bool simulator = false;

  friend bool operator==(const TargetProfile&, const TargetProfile&) = default;
};

/// Reads the robot type from the selected RobotType alternative, the joint
/// count and kinematics file from Hardware's attributes, and the target
/// from whether Simulator is selected. E-GEN-PROFILE when the configuration
/// selects no robot type, lacks Hardware.joints, or a robot in the program
/// has a different type.
Result<TargetProfile> build_profile(const fm::FeatureConfiguration& config, const dsl::Program& program);

/// The profile as a template record: robotType, joints, controllerClass,
/// ikClass, fkClass, cycleTime, kinematicsFile, simulator.
tpl::Value profile_value(const TargetProfile& profile);

struct GeneratedUnit {
  std::string path;  // relative, '/'-separated
  std::string content;

  friend bool operator==(const GeneratedUnit&, const GeneratedUnit&) = default;
};

/// An input file recorded in the manifest by content hash.
struct InputFile {
  std::string path;
  std::string content;
};

/// Produces, in this order: src/controller_init.cpp, src/main.cpp,
/// include/genbot_stub/genbot.hpp and gen-manifest.json. The template set
/// must define controllerInitUnit, mainUnit, genbotStub and the statement
/// call templates pickCall, placeCall, moveCall and perceiveCall.
/// Errors: E-VARIANT from the program check, E-GEN-PROFILE, template errors.
Result<std::vector<GeneratedUnit>> generate(const std::shared_ptr<const dsl::Program>& program,
                                            const fm::FeatureConfiguration& config,
                                            const variability::MappingTable& mapping,
                                            const tpl::TemplateSet& templates,
                                            const std::vector<InputFile>& inputs = {});

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace pnpc::codegen

#endif  // PNPC_CODEGEN_CODEGEN_HPP
