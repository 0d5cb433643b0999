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

#include "pnpc/fm/feature_model.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "support/support.hpp"

namespace pnpc::fm {
namespace {

std::multiset<std::string> codes(const Diagnostics& diags) {
  std::multiset<std::string> out;
  for (const Diagnostic& d : diags) out.insert(d.code);
  return out;
}

std::multiset<std::string> parse_codes(const std::string& source) {
  return codes(parse_feature_model(source).diagnostics());
}

TEST(FeatureModel, GenbotModelShape) {
  auto model = parse_feature_model(testing::read_text(testing::data_path("genbot/genbot.fm")));
  ASSERT_TRUE(model.ok());
  EXPECT_TRUE(validate_model(*model).empty());
  EXPECT_EQ(model->name, "GeNBot");
  EXPECT_EQ(model->root.name, "GeNBot");
  EXPECT_EQ(model->feature_count(), 14u);

  const Feature* target = model->find("Target");
  ASSERT_NE(target, nullptr);
  EXPECT_EQ(target->group, Group::Alternative);
  EXPECT_EQ(target->children.size(), 2u);

  const Feature* hardware = model->find("Hardware");
  ASSERT_NE(hardware, nullptr);
  EXPECT_TRUE(hardware->mandatory());
  const Attribute* joints = hardware->find_attribute("joints");
  ASSERT_NE(joints, nullptr);
  EXPECT_EQ(joints->type, AttrType::Int);
  EXPECT_FALSE(joints->default_value.has_value());
  const Attribute* kin = hardware->find_attribute("kinematicsFile");
  ASSERT_NE(kin, nullptr);
  EXPECT_EQ(kin->default_value, AttrValue(std::string("/path/to/kinematicsFile.xml")));

  EXPECT_EQ(model->find("RobotType")->group, Group::Alternative);
  EXPECT_EQ(model->find("Planning")->group, Group::Or);
  EXPECT_FALSE(model->find("Perception")->mandatory());
  EXPECT_EQ(model->parent_of("LWR"), model->find("RobotType"));
  EXPECT_EQ(model->parent_of("GeNBot"), nullptr);
}

TEST(FeatureModel, FeaturesAreInPreorder) {
  auto model = parse_feature_model(
      "featuremodel M { feature R { feature A { feature A1 feature A2 } feature B } }");
  ASSERT_TRUE(model.ok());
  std::vector<std::string> names;
  for (const Feature* f : model->features()) names.push_back(f->name);
  EXPECT_EQ(names, (std::vector<std::string>{"R", "A", "A1", "A2", "B"}));
}

TEST(FeatureModel, AlternativeOfOneChild) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R alternative { feature X } }"),
            std::multiset<std::string>{"E-FM-GROUP"});
}

TEST(FeatureModel, GroupMembersCannotBeMarked) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R or { feature X mandatory feature Y } }"),
            std::multiset<std::string>{"E-FM-GROUP"});
}

TEST(FeatureModel, ConstraintOnUnknownFeature) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R { feature LWR } constraint LWR requires Ghost }"),
            std::multiset<std::string>{"E-FM-REF"});
}

TEST(FeatureModel, RequiresAndExcludesTheSamePair) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R { feature A feature B }"
                        " constraint A requires B constraint A excludes B }"),
            std::multiset<std::string>{"E-FM-CONTRA"});
  EXPECT_EQ(parse_codes("featuremodel M { feature R { feature A feature B }"
                        " constraint A requires B constraint B excludes A }"),
            std::multiset<std::string>{"E-FM-CONTRA"});
}

TEST(FeatureModel, DuplicateNameInTwoSubtrees) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R { feature A { feature X } feature B { feature X } } }"),
            std::multiset<std::string>{"E-FM-DUP"});
}

TEST(FeatureModel, AttributeDefaultMustMatchType) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R { attribute n : int = \"seven\" } }"),
            std::multiset<std::string>{"E-FM-ATTR"});
  EXPECT_TRUE(parse_feature_model("featuremodel M { feature R { attribute v : real = 0.5 } }").ok());
}

TEST(FeatureModel, OptionalRootIsRejected) {
  EXPECT_EQ(parse_codes("featuremodel M { feature R optional { feature A } }"),
            std::multiset<std::string>{"E-FM-ROOT"});
}

TEST(FeatureModel, SyntaxErrorHasPosition) {
  auto model = parse_feature_model("featuremodel M {\n  feature R {\n    feature\n  }\n}\n", "m.fm");
  ASSERT_FALSE(model.ok());
  ASSERT_EQ(model.diagnostics().size(), 1u);
  EXPECT_EQ(model.diagnostics()[0].code, "E-FM-PARSE");
  EXPECT_EQ(model.diagnostics()[0].span.file, "m.fm");
  EXPECT_EQ(model.diagnostics()[0].span.line, 4);
}

TEST(FeatureModel, BundledModelsAreValid) {
  for (const char* name : {"optional_child.fm", "alternative_pair.fm", "fri.fm", "genbot_lite.fm", "workcell.fm"}) {
    SCOPED_TRACE(name);
    auto model = parse_feature_model(testing::read_text(testing::data_path(std::string("models/") + name)));
    ASSERT_TRUE(model.ok());
    EXPECT_LE(model->feature_count(), 12u);
  }
}

}  // namespace
}  // namespace pnpc::fm
