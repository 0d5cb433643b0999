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

#include "pnpc/dsl/printer.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "pnpc/dsl/lexer.hpp"
#include "pnpc/dsl/parser.hpp"
#include "support/random_program.hpp"
#include "support/support.hpp"

namespace pnpc::dsl {
namespace {

Program reparse(const Program& p) {
  auto tokens = tokenize(pretty_print(p));
  EXPECT_TRUE(tokens.ok()) << pretty_print(p);
  auto again = parse(*tokens);
  EXPECT_TRUE(again.ok()) << pretty_print(p);
  return again.ok() ? *again : Program{};
}

TEST(Printer, EmptyProgramPrintsNothing) { EXPECT_EQ(pretty_print(Program{}), ""); }

TEST(Printer, NestedRepeatIsIndented) {
  auto p = parse_source("object o { }\nrobot r { type: LWR }\nrepeat 2 { pick o }");
  ASSERT_TRUE(p.ok());
  std::string text = pretty_print(*p);
  EXPECT_NE(text.find("repeat 2 {\n  pick o\n}\n"), std::string::npos) << text;
}

TEST(Printer, OneItemPerLine) {
  auto p = parse_source("robot r { type: LWR }; move r to (0.1, 0, 0); move r to (0.2, 0, 0)");
  ASSERT_TRUE(p.ok());
  std::string text = pretty_print(*p);
  EXPECT_EQ(testing::count_occurrences(text, "\n"), 3u) << text;
}

TEST(Printer, PosesUseShortestDigits) {
  EXPECT_EQ(format_pose(Pose{0.5, 0, 0.4, 0, 0, 0}), "(0.5, 0, 0.4)");
  EXPECT_EQ(format_pose(Pose{0.1, 0.2, 0.3, 0, 0, 1.5708}), "(0.1, 0.2, 0.3, 0, 0, 1.5708)");
}

TEST(Printer, RoundTripOverCorpus) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(testing::source_dir() / "tests" / "corpus")) {
    SCOPED_TRACE(entry.path().filename().string());
    auto p = parse_source(testing::read_text(entry.path()));
    ASSERT_TRUE(p.ok());
    EXPECT_EQ(reparse(*p), *p);
    ++files;
  }
  EXPECT_GE(files, 20);
}

TEST(Printer, PrintingIsIdempotent) {
  for (const auto& entry : std::filesystem::directory_iterator(testing::source_dir() / "tests" / "corpus")) {
    auto p = parse_source(testing::read_text(entry.path()));
    ASSERT_TRUE(p.ok());
    std::string once = pretty_print(*p);
    EXPECT_EQ(pretty_print(reparse(*p)), once) << entry.path();
  }
}

TEST(Printer, RoundTripOverRandomPrograms) {
  testing::RandomProgram gen(11);
  for (int i = 0; i < 300; ++i) {
    std::string src = gen.generate();
    auto p = parse_source(src);
    ASSERT_TRUE(p.ok()) << src;
    ASSERT_EQ(reparse(*p), *p) << src;
  }
}

}  // namespace
}  // namespace pnpc::dsl
