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

// Randomized checks of the simulator invariants.

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "pnpc/dsl/analyzer.hpp"
#include "pnpc/dsl/parser.hpp"
#include "pnpc/sim/world.hpp"
#include "support/random_program.hpp"

namespace pnpc::sim {
namespace {

constexpr int kPrograms = 1000;

// Empty when the world is consistent, otherwise a description.
std::string exclusivity_violation(const WorldState& w) {
  std::map<std::string, int> holders;
  for (const auto& [rname, r] : w.robots) {
    if (!r.holding) continue;
    auto it = w.objects.find(*r.holding);
    if (it == w.objects.end()) return rname + " holds unknown object " + *r.holding;
    if (!it->second.held) return *r.holding + " is in a gripper but not marked held";
    ++holders[*r.holding];
  }
  for (const auto& [oname, o] : w.objects) {
    int n = holders.count(oname) ? holders.at(oname) : 0;
    if (n > 1) return oname + " is held by " + std::to_string(n) + " robots";
    if (o.held && n == 0) return oname + " is marked held but no robot holds it";
  }
  return "";
}

std::set<std::string> names(const WorldState& w) {
  std::set<std::string> out;
  for (const auto& [name, o] : w.objects) out.insert(name);
  return out;
}

dsl::Program parse_checked(const std::string& src) {
  auto p = dsl::parse_source(src);
  EXPECT_TRUE(p.ok()) << src;
  if (!p.ok()) return {};
  EXPECT_FALSE(has_errors(dsl::analyze(*p))) << src;
  return *p;
}

TEST(SimProperties, ConservationAndGripperExclusivity) {
  testing::RandomProgram gen(2026);
  int events = 0;
  int completed = 0;
  for (int i = 0; i < kPrograms; ++i) {
    std::string src = gen.generate();
    dsl::Program p = parse_checked(src);
    const std::set<std::string> initial = names(init_world(p));
    std::string violation;
    RunOptions opts;
    opts.allow_unperceived = i % 2 == 0;
    opts.max_steps = 10000;
    opts.observer = [&](const WorldState& w, const TraceEvent&) {
      ++events;
      if (!violation.empty()) return;
      if (names(w) != initial) violation = "object set changed";
      else violation = exclusivity_violation(w);
    };
    RunResult r = run(p, opts);
    ASSERT_EQ(violation, "") << src;
    ASSERT_EQ(names(r.world), initial) << src;
    ASSERT_EQ(exclusivity_violation(r.world), "") << src;
    if (!r.error) ++completed;
  }
  // The generator must exercise real executions, not only early failures.
  EXPECT_GT(completed, kPrograms / 10);
  EXPECT_GT(events, kPrograms);
}

TEST(SimProperties, Determinism) {
  testing::RandomProgram gen(99);
  for (int i = 0; i < 200; ++i) {
    dsl::Program p = parse_checked(gen.generate());
    RunOptions opts;
    opts.allow_unperceived = true;
    RunResult a = run(p, opts);
    RunResult b = run(p, opts);
    ASSERT_EQ(trace_json(a.trace), trace_json(b.trace));
    ASSERT_EQ(final_state_json(a.world), final_state_json(b.world));
    ASSERT_EQ(a.world, b.world);
  }
}

TEST(SimProperties, PerceiveIsIdempotent) {
  dsl::Program probes = parse_checked(
      "color red = rgb(255, 0, 0)\n"
      "perceive\nperceive matching color red\nperceive matching shape box\nperceive matching shape sphere\n");
  testing::RandomProgram gen(5);
  for (int i = 0; i < 300; ++i) {
    dsl::Program p = parse_checked(gen.generate());
    RunOptions opts;
    opts.allow_unperceived = true;
    WorldState w = run(p, opts).world;
    for (const dsl::Statement& probe : probes.statements) {
      StepResult once = step(w, probe, probes);
      StepResult twice = step(once.world, probe, probes);
      ASSERT_FALSE(once.error || twice.error);
      ASSERT_EQ(once.world.perceived, twice.world.perceived);
      ASSERT_EQ(once.world.objects, twice.world.objects);
    }
  }
}

}  // namespace
}  // namespace pnpc::sim
