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

#include "pnpc/dsl/analyzer.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "pnpc/dsl/parser.hpp"

namespace pnpc::dsl {
namespace {

std::vector<std::string> codes_for(const std::string& source) {
  auto p = parse_source(source);
  EXPECT_TRUE(p.ok()) << source;
  if (!p.ok()) return {"<parse>"};
  std::vector<std::string> out;
  for (const Diagnostic& d : analyze(*p)) out.push_back(d.code);
  return out;
}

using Codes = std::vector<std::string>;

TEST(Analyzer, WellFormedProgramIsClean) {
  EXPECT_EQ(codes_for("object cubeA { }\nrobot r { type: LWR }\npick cubeA\n"), Codes{});
}

TEST(Analyzer, UndeclaredObject) {
  auto p = parse_source("object cubeA { }\nrobot r { type: LWR }\npick cubeB\n");
  ASSERT_TRUE(p.ok());
  Diagnostics d = analyze(*p);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-UNDECLARED");
  EXPECT_EQ(d[0].span.line, 3);
  EXPECT_EQ(d[0].span.column, 6);
}

TEST(Analyzer, OmittedRobotWithTwoRobotsIsAmbiguous) {
  EXPECT_EQ(codes_for("object cubeA { }\nrobot a { type: LWR }\nrobot b { type: RX130 }\npick cubeA\n"),
            Codes{"E-AMBIGUOUS-ROBOT"});
}

TEST(Analyzer, OmittedRobotWithNoRobot) {
  EXPECT_EQ(codes_for("object cubeA { }\npick cubeA\n"), Codes{"E-AMBIGUOUS-ROBOT"});
}

TEST(Analyzer, DuplicateDeclaration) {
  EXPECT_EQ(codes_for("object a { }\nlocation a = (0, 0, 0)\n"), Codes{"E-DUPLICATE"});
}

TEST(Analyzer, WrongKind) {
  EXPECT_EQ(codes_for("object a { }\nrobot r { type: LWR }\nmove r to a\n"), Codes{"E-KIND"});
  EXPECT_EQ(codes_for("location a = (0, 0, 0)\nobject o { color: a }\n"), Codes{"E-KIND"});
  EXPECT_EQ(codes_for("robot r { type: LWR }\nperceive with r\n"), Codes{"E-KIND"});
}

TEST(Analyzer, LoopVariableActsAsObject) {
  EXPECT_EQ(codes_for("robot r { type: LWR }\nforeach x in perceived { pick x; place x at (0,0,0) }\n"),
            Codes{});
  EXPECT_EQ(codes_for("robot r { type: LWR }\nforeach x in perceived { move r to x }\n"), Codes{"E-KIND"});
  EXPECT_EQ(codes_for("robot r { type: LWR }\nforeach x in perceived { }\npick x\n"), Codes{"E-UNDECLARED"});
}

TEST(Analyzer, LoopVariableMayNotShadow) {
  EXPECT_EQ(codes_for("object o { }\nrobot r { type: LWR }\nforeach o in perceived { }\n"), Codes{"E-DUPLICATE"});
  EXPECT_EQ(codes_for("robot r { type: LWR }\nforeach x in perceived { foreach x in perceived { } }\n"),
            Codes{"E-DUPLICATE"});
}

TEST(Analyzer, JointCountDifferentFromStockIsAWarning) {
  auto p = parse_source("robot r { type: LWR joints: 6 }\n");
  ASSERT_TRUE(p.ok());
  Diagnostics d = analyze(*p);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "W-JOINTS");
  EXPECT_EQ(d[0].severity, Severity::Warning);
  EXPECT_FALSE(has_errors(d));
  EXPECT_EQ(codes_for("robot r { type: LWR joints: 7 }\nrobot s { type: KR16_2 joints: 6 }\n"), Codes{});
}

TEST(Analyzer, DiagnosticsAreSortedByPosition) {
  auto p = parse_source(
      "robot a { type: LWR }\nrobot b { type: LWR }\n"
      "pick zz\nmove q to (0,0,0)\nif holding w { }\n");
  ASSERT_TRUE(p.ok());
  Diagnostics d = analyze(*p);
  ASSERT_GE(d.size(), 4u);
  for (std::size_t i = 1; i < d.size(); ++i) {
    EXPECT_LE(std::make_pair(d[i - 1].span.line, d[i - 1].span.column),
              std::make_pair(d[i].span.line, d[i].span.column));
  }
  EXPECT_EQ(d, analyze(*p));
}

TEST(Analyzer, FormatMatchesDocumentedLine) {
  auto p = parse_source("robot r { type: LWR }\npick cubeB\n", "demo.pnp");
  ASSERT_TRUE(p.ok());
  Diagnostics d = analyze(*p);
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(format_diagnostic(d[0]).rfind("demo.pnp:2:6: error[E-UNDECLARED]: ", 0), 0u)
      << format_diagnostic(d[0]);
}

}  // namespace
}  // namespace pnpc::dsl
