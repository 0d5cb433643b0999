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

#include "pnpc/dsl/parser.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <string>

#include "pnpc/dsl/ast_json.hpp"
#include "support/random_program.hpp"
#include "support/support.hpp"

namespace pnpc::dsl {
namespace {

// Construct names collected by walking the tree directly, keyed by the
// strings of the mapping file format rather than the library enum.
void walk(const Block& body, std::set<std::string>& out);

void walk_statement(const Statement& st, std::set<std::string>& out) {
  if (st.as<Pick>()) out.insert("pickStmt");
  if (st.as<Place>()) out.insert("placeStmt");
  if (st.as<Move>()) out.insert("moveStmt");
  if (st.as<Perceive>()) out.insert("perceiveStmt");
  if (const auto* r = st.as<Repeat>()) {
    out.insert("repeatStmt");
    walk(r->body, out);
  }
  if (const auto* i = st.as<If>()) {
    out.insert("ifStmt");
    walk(i->then_body, out);
    if (i->else_body) walk(*i->else_body, out);
  }
  if (const auto* f = st.as<ForEachPerceived>()) {
    out.insert("foreachStmt");
    walk(f->body, out);
  }
}

void walk(const Block& body, std::set<std::string>& out) {
  for (const Statement& st : body) walk_statement(st, out);
}

std::set<std::string> brute_force_constructs(const Program& p) {
  std::set<std::string> out;
  for (const Declaration& d : p.declarations) {
    if (d.as<ColorDecl>()) out.insert("colorDecl");
    if (d.as<ObjectDecl>()) out.insert("objectDecl");
    if (d.as<SensorDecl>()) out.insert("sensorDecl");
    if (d.as<LocationDecl>()) out.insert("locationDecl");
    if (const auto* r = d.as<RobotDecl>()) {
      out.insert("robotDecl");
      out.insert("robotType." + std::string(to_string(r->type)));
    }
  }
  walk(p.statements, out);
  return out;
}

std::set<std::string> recorded_constructs(const Program& p) {
  std::set<std::string> out;
  for (Construct c : p.constructs_used) out.insert(std::string(construct_name(c)));
  return out;
}

TEST(Parser, RobotAndMove) {
  auto p = parse_source("robot r1 { type: LWR joints: 7 }  move r1 to (0.5, 0.0, 0.4)");
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->declarations.size(), 1u);
  const auto* robot = p->declarations[0].as<RobotDecl>();
  ASSERT_NE(robot, nullptr);
  EXPECT_EQ(robot->type, RobotType::LWR);
  EXPECT_EQ(robot->joints, 7);
  ASSERT_EQ(p->statements.size(), 1u);
  const auto* move = p->statements[0].as<Move>();
  ASSERT_NE(move, nullptr);
  EXPECT_EQ(move->robot.name, "r1");
  const auto* pose = std::get_if<Pose>(&move->target);
  ASSERT_NE(pose, nullptr);
  EXPECT_EQ(*pose, (Pose{0.5, 0.0, 0.4, 0, 0, 0}));
}

TEST(Parser, EmptyInput) {
  auto p = parse_source("");
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p->declarations.empty());
  EXPECT_TRUE(p->statements.empty());
  EXPECT_TRUE(p->constructs_used.empty());
}

TEST(Parser, PlaceWithoutTargetExpectsAt) {
  auto p = parse_source("place cubeA");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics().size(), 1u);
  EXPECT_EQ(p.diagnostics()[0].code, "E-PARSE");
  EXPECT_NE(p.diagnostics()[0].message.find("'at'"), std::string::npos) << p.diagnostics()[0].message;
}

TEST(Parser, ObjectDefaults) {
  auto p = parse_source("object o { }");
  ASSERT_TRUE(p.ok());
  const auto* o = p->declarations[0].as<ObjectDecl>();
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->shape, Shape::Box);
  EXPECT_FALSE(o->color.has_value());
  EXPECT_EQ(o->size, (std::array<double, 3>{0.05, 0.05, 0.05}));
  EXPECT_EQ(o->at, Pose{});
}

TEST(Parser, SixComponentPose) {
  auto p = parse_source("location l = (1, 2, 3, 0.1, 0.2, 0.3)");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->declarations[0].as<LocationDecl>()->pose, (Pose{1, 2, 3, 0.1, 0.2, 0.3}));
}

TEST(Parser, FourComponentPoseIsRejected) {
  auto p = parse_source("location l = (1, 2, 3, 4)");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics()[0].code, "E-PARSE");
}

TEST(Parser, SemicolonsAndNewlinesBothSeparate) {
  auto a = parse_source("robot r { type: LWR }\nmove r to (0,0,0)\nmove r to (1,0,0)\n");
  auto b = parse_source("robot r { type: LWR }; move r to (0,0,0); move r to (1,0,0)");
  ASSERT_TRUE(a.ok());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(*a, *b);
}

TEST(Parser, ControlFlowNesting) {
  auto p = parse_source(
      "object o { }\nrobot r { type: LWR }\n"
      "repeat 2 { if not exists o { move r to (0,0,0) } else { pick o } }\n"
      "foreach x in perceived matching shape sphere { pick x }");
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->statements.size(), 2u);
  const auto* rep = p->statements[0].as<Repeat>();
  ASSERT_NE(rep, nullptr);
  EXPECT_EQ(rep->count, 2);
  const auto* cond = rep->body[0].as<If>();
  ASSERT_NE(cond, nullptr);
  EXPECT_EQ(cond->cond.kind, Condition::Kind::Not);
  EXPECT_EQ(cond->cond.operand[0].kind, Condition::Kind::Exists);
  ASSERT_TRUE(cond->else_body.has_value());
  const auto* each = p->statements[1].as<ForEachPerceived>();
  ASSERT_NE(each, nullptr);
  EXPECT_EQ(each->binder.name, "x");
  ASSERT_TRUE(each->matcher.has_value());
  EXPECT_EQ(std::get<ByShape>(*each->matcher).shape, Shape::Sphere);
}

TEST(Parser, ErrorsResynchronizeAtStatementBoundaries) {
  auto p = parse_source("robot r { type: LWR }\nmove r (0,0,0)\nmove r to (0,0,0)\nplace x\n");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics().size(), 2u);
  for (const Diagnostic& d : p.diagnostics()) EXPECT_EQ(d.code, "E-PARSE");
}

TEST(Parser, ColorComponentOutOfRange) {
  EXPECT_FALSE(parse_source("color c = rgb(256, 0, 0)").ok());
}

TEST(Parser, ConstructsUsedMatchesTreeWalkOnCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(testing::source_dir() / "tests" / "corpus")) {
    SCOPED_TRACE(entry.path().filename().string());
    auto p = parse_source(testing::read_text(entry.path()));
    ASSERT_TRUE(p.ok());
    EXPECT_EQ(recorded_constructs(*p), brute_force_constructs(*p));
  }
}

TEST(Parser, ConstructsUsedMatchesTreeWalkOnRandomPrograms) {
  testing::RandomProgram gen(7);
  for (int i = 0; i < 300; ++i) {
    std::string src = gen.generate();
    auto p = parse_source(src);
    ASSERT_TRUE(p.ok()) << src;
    ASSERT_EQ(recorded_constructs(*p), brute_force_constructs(*p)) << src;
  }
}

TEST(AstJson, NodesCarryKindAndSpan) {
  auto p = parse_source("robot r1 { type: LWR }\nmove r1 to (0.5, 0, 0.4)\n");
  ASSERT_TRUE(p.ok());
  std::string json = ast_to_json(*p);
  EXPECT_NE(json.find("\"kind\""), std::string::npos);
  EXPECT_NE(json.find("\"span\""), std::string::npos);
  EXPECT_NE(json.find("\"RobotDecl\""), std::string::npos) << json;
  EXPECT_NE(json.find("\"Move\""), std::string::npos) << json;
  EXPECT_EQ(json, ast_to_json(*parse_source("robot r1 { type: LWR }\nmove r1 to (0.5, 0, 0.4)\n")));
}

}  // namespace
}  // namespace pnpc::dsl
