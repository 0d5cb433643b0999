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

#include "pnpc/tpl/template.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pnpc/dsl/parser.hpp"
#include "pnpc/fm/configuration.hpp"
#include "support/support.hpp"

namespace pnpc::tpl {
namespace {

Template single(const std::string& source) {
  auto parsed = parse_template(source, "t.gt", "main");
  EXPECT_TRUE(parsed.ok()) << source << "\n"
                           << (parsed.ok() ? "" : format_diagnostic(parsed.diagnostics()[0]));
  if (!parsed.ok() || parsed->size() != 1) return Template{};
  return parsed->front();
}

TemplateSet set_of(const std::string& source) {
  TemplateSet set;
  auto parsed = parse_template(source, "t.gt");
  EXPECT_TRUE(parsed.ok()) << (parsed.ok() ? "" : format_diagnostic(parsed.diagnostics()[0]));
  if (!parsed.ok()) return set;
  EXPECT_TRUE(add_templates(set, *parsed).empty());
  EXPECT_TRUE(link_templates(set).empty());
  return set;
}

std::string render_ok(const TemplateSet& set, const std::string& name, const RenderContext& ctx) {
  auto out = render(set, name, ctx);
  EXPECT_TRUE(out.ok()) << (out.ok() ? "" : format_diagnostic(out.diagnostics()[0]));
  return out.ok() ? *out : "";
}

std::string first_error(const Result<std::string>& r) {
  return r.ok() ? "<ok>" : r.diagnostics()[0].code;
}

std::shared_ptr<const dsl::Program> program(const std::string& src) {
  auto p = dsl::parse_source(src);
  EXPECT_TRUE(p.ok()) << src;
  return std::make_shared<const dsl::Program>(p.ok() ? *p : dsl::Program{});
}

TEST(TemplateParse, FragmentSplitting) {
  Template t = single("GeNBot::[robot.typeName/]RobotController");
  ASSERT_EQ(t.body.size(), 3u);
  EXPECT_EQ(std::get<StaticText>(t.body[0].node).text, "GeNBot::");
  const Query& q = std::get<ExprNode>(t.body[1].node).query;
  EXPECT_EQ(q.kind, Query::Kind::Member);
  EXPECT_EQ(q.name, "typeName");
  ASSERT_EQ(q.args.size(), 1u);
  EXPECT_EQ(q.args[0].kind, Query::Kind::Var);
  EXPECT_EQ(q.args[0].name, "robot");
  EXPECT_EQ(std::get<StaticText>(t.body[2].node).text, "RobotController");
}

TEST(TemplateParse, PureStaticTextIsOneNode) {
  Template t = single("int main() { return a[0]; }\n");
  ASSERT_EQ(t.body.size(), 1u);
  EXPECT_EQ(std::get<StaticText>(t.body[0].node).text, "int main() { return a[0]; }\n");
}

TEST(TemplateParse, IfElseHasTwoBranches) {
  Template t = single("[if (cfg.has(\"Simulator\"))]A[else]B[/if]");
  ASSERT_EQ(t.body.size(), 1u);
  const IfBlock& block = std::get<IfBlock>(t.body[0].node);
  EXPECT_EQ(block.cond.kind, Query::Kind::Method);
  EXPECT_EQ(block.cond.name, "has");
  ASSERT_EQ(block.then_nodes.size(), 1u);
  ASSERT_EQ(block.else_nodes.size(), 1u);
  EXPECT_EQ(std::get<StaticText>(block.then_nodes[0].node).text, "A");
  EXPECT_EQ(std::get<StaticText>(block.else_nodes[0].node).text, "B");
}

TEST(TemplateParse, FileWithoutDefinitionsIsNamedByDefault) {
  auto parsed = parse_template("hello", "x.gt", "greeting");
  ASSERT_TRUE(parsed.ok());
  ASSERT_EQ(parsed->size(), 1u);
  EXPECT_EQ(parsed->front().name, "greeting");
}

TEST(TemplateParse, Errors) {
  auto code = [](const std::string& src) {
    auto r = parse_template(src, "t.gt");
    return r.ok() ? std::string("<ok>") : r.diagnostics()[0].code;
  };
  EXPECT_EQ(code("[if (x)]never closed"), "E-TPL-PARSE");
  EXPECT_EQ(code("[/if]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[for (x : xs)]a[/if]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[a.b(/]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[x = = y/]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[template t(a : widget)][/template]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[template t(a : int, a : int)][/template]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[template t(xs : list)][for (x : xs)][for (x : xs)][/for][/for][/template]"), "E-TPL-PARSE");
  EXPECT_EQ(code("[template t()]a[/template]stray"), "E-TPL-PARSE");
}

TEST(TemplateParse, CallToUnknownTemplateFailsAtLink) {
  auto parsed = parse_template("[template a()][b()/][/template]", "t.gt");
  ASSERT_TRUE(parsed.ok());
  TemplateSet set;
  ASSERT_TRUE(add_templates(set, *parsed).empty());
  Diagnostics d = link_templates(set);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-TPL-CALL");
}

TEST(TemplateParse, DuplicateDefinition) {
  TemplateSet set;
  ASSERT_TRUE(add_templates(set, *parse_template("[template a()]x[/template]", "1.gt")).empty());
  Diagnostics d = add_templates(set, *parse_template("[template a()]y[/template]", "2.gt"));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E-TPL-PARSE");
}

TEST(TemplateRender, StaticTextPassthroughIsByteIdentical) {
  // Alphabet without '/', so no fragment can close; brackets still appear.
  const std::string alphabet = "abxyz0123 \t\n\r[](){}<>;:,.=+-*\"'#&|!?";
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    std::string text;
    std::size_t len = rng() % 200;
    for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    Template t = single(text);
    ASSERT_LE(t.body.size(), 1u) << text;
    auto out = render(t, {});
    ASSERT_TRUE(out.ok());
    ASSERT_EQ(*out, text);
  }
  std::string stub = testing::read_text(testing::data_path("templates/genbot_stub.gt"));
  EXPECT_NE(stub.find("[template"), std::string::npos);
}

TEST(TemplateRender, RobotJoints) {
  auto p = program("robot r1 { type: LWR }\nrobot r2 { type: KR16_2 joints: 5 }\n");
  TemplateSet set = set_of(
      "[template j(program : program)][for (r : program.robots) separator(\",\")][r.joints/][/for][/template]");
  EXPECT_EQ(render_ok(set, "j", {{"program", Value(p)}}), "7,5");
}

TEST(TemplateRender, RobotMembers) {
  auto p = program("robot arm { type: KR16_2 mount: (0.5, 0, 0) }\nlocation bin = (0.1, 0.2, 0.3)\n");
  TemplateSet set = set_of(
      "[template t(program : program)]"
      "[for (r : program.robots)][r.index/]:[r.name/]:[r.type/]:[r.typeName/]:[r.mount.x/][/for]|"
      "[for (l : program.locations)][l.name/]=[l.pose.z/][/for]"
      "[/template]");
  EXPECT_EQ(render_ok(set, "t", {{"program", Value(p)}}), "1:arm:KR16_2:KR16:0.5|bin=0.3");
}

TEST(TemplateRender, InterpolatorListInDeclarationOrder) {
  TemplateSet set = set_of(
      "[template t(names : list)]\n"
      "[for (n : names)]\n"
      "[n/]Interpolator\n"
      "[/for]\n"
      "[/template]\n");
  Value names(Value::List{"Halt", "ReflexxesJoint", "ReflexxesNSA6D"});
  EXPECT_EQ(render_ok(set, "t", {{"names", names}}),
            "HaltInterpolator\nReflexxesJointInterpolator\nReflexxesNSA6DInterpolator\n");
}

TEST(TemplateRender, IfElseOnConfiguration) {
  auto model = fm::parse_feature_model(testing::read_text(testing::data_path("genbot/genbot.fm")));
  ASSERT_TRUE(model.ok());
  auto sim = fm::parse_configuration(testing::read_text(testing::data_path("genbot/lwr-sim.cfg")), *model);
  auto real = fm::parse_configuration(testing::read_text(testing::data_path("genbot/lwr-real.cfg")), *model);
  ASSERT_TRUE(sim.ok() && real.ok());
  TemplateSet set = set_of(
      "[template t(cfg : config)][if (cfg.has(\"Simulator\"))]A[else]B[/if]"
      " [cfg.attr(\"Hardware\", \"joints\")/] [cfg.name/][/template]");
  auto sim_cfg = std::make_shared<const fm::FeatureConfiguration>(*sim);
  auto real_cfg = std::make_shared<const fm::FeatureConfiguration>(*real);
  EXPECT_EQ(render_ok(set, "t", {{"cfg", Value(sim_cfg)}}), "A 7 lwr_sim");
  EXPECT_EQ(render_ok(set, "t", {{"cfg", Value(real_cfg)}}), "B 7 lwr_real");
}

TEST(TemplateRender, BooleanOperatorsAndComparisons) {
  TemplateSet set = set_of(
      "[template t(n : int, s : text, b : bool)]"
      "[if (n > 1 and not b)]x[/if][if (s = \"a\" or n <= 0)]y[/if][if (n <> 3)]z[/if][/template]");
  EXPECT_EQ(render_ok(set, "t", {{"n", 2}, {"s", "a"}, {"b", false}}), "xyz");
  EXPECT_EQ(render_ok(set, "t", {{"n", 3}, {"s", "b"}, {"b", true}}), "");
}

TEST(TemplateRender, RealsUseShortestDigits) {
  TemplateSet set = set_of("[template t(x : real)][x/]f[/template]");
  EXPECT_EQ(render_ok(set, "t", {{"x", 0.034}}), "0.034f");
  EXPECT_EQ(render_ok(set, "t", {{"x", 2}}), "2f");
}

TEST(TemplateRender, StandaloneBlockLinesAreSwallowed) {
  TemplateSet set = set_of(
      "[template t(b : bool)]\n"
      "begin\n"
      "  [if (b)]\n"
      "  yes\n"
      "  [else]\n"
      "  no\n"
      "  [/if]\n"
      "  [comment not emitted /]\n"
      "end\n"
      "[/template]\n");
  EXPECT_EQ(render_ok(set, "t", {{"b", true}}), "begin\n  yes\nend\n");
  EXPECT_EQ(render_ok(set, "t", {{"b", false}}), "begin\n  no\nend\n");
}

TEST(TemplateRender, InlineBlocksKeepSurroundingText) {
  TemplateSet set = set_of("[template t(b : bool)]a [if (b)]b[/if] c\n[/template]");
  EXPECT_EQ(render_ok(set, "t", {{"b", true}}), "a b c\n");
}

TEST(TemplateRender, CallEqualsInlinedBody) {
  TemplateSet set = set_of(
      "[template outer(n : int, who : text)]<[inner(n > 0, who)/]>[/template]"
      "[template inner(flag : bool, name : text)][if (flag)]hi [name/][/if][/template]");
  std::string called = render_ok(set, "outer", {{"n", 4}, {"who", "bob"}});
  std::string inlined = "<" + render_ok(set, "inner", {{"flag", true}, {"name", "bob"}}) + ">";
  EXPECT_EQ(called, inlined);
  EXPECT_EQ(called, "<hi bob>");
}

TEST(TemplateRender, Determinism) {
  auto p = program("robot r1 { type: LWR }\nobject a { }\nobject b { }\n");
  TemplateSet set = set_of(
      "[template t(program : program)][for (o : program.objects) separator(\", \")][o.name/][/for][/template]");
  std::string first = render_ok(set, "t", {{"program", Value(p)}});
  EXPECT_EQ(first, "a, b");
  for (int i = 0; i < 10; ++i) EXPECT_EQ(render_ok(set, "t", {{"program", Value(p)}}), first);
}

TEST(TemplateRender, Errors) {
  TemplateSet set = set_of(
      "[template unbound()][missing/][/template]"
      "[template kind(n : int)][n.name/][/template]"
      "[template needs(n : int)][n/][/template]"
      "[template loop(n : int)][loop(n)/][/template]"
      "[template not_list(n : int)][for (x : n)][/for][/template]"
      "[template cond(n : int)][if (n)]x[/if][/template]");
  EXPECT_EQ(first_error(render(set, "unbound", {})), "E-TPL-UNBOUND");
  EXPECT_EQ(first_error(render(set, "kind", {{"n", 1}})), "E-TPL-KIND");
  EXPECT_EQ(first_error(render(set, "needs", {})), "E-TPL-UNBOUND");
  EXPECT_EQ(first_error(render(set, "needs", {{"n", "text"}})), "E-TPL-KIND");
  EXPECT_EQ(first_error(render(set, "loop", {{"n", 1}})), "E-TPL-CALL");
  EXPECT_EQ(first_error(render(set, "not_list", {{"n", 1}})), "E-TPL-KIND");
  EXPECT_EQ(first_error(render(set, "cond", {{"n", 1}})), "E-TPL-KIND");
  EXPECT_EQ(first_error(render(set, "nope", {})), "E-TPL-CALL");
}

TEST(TemplateRender, ErrorAfterOutputReturnsNoText) {
  TemplateSet set = set_of("[template t(xs : list)]header\n[for (x : xs)][x.size/][/for][/template]");
  auto out = render(set, "t", {{"xs", Value(Value::List{"ab", 3})}});
  ASSERT_FALSE(out.ok());
  EXPECT_EQ(out.diagnostics()[0].code, "E-TPL-KIND");
}

}  // namespace
}  // namespace pnpc::tpl
