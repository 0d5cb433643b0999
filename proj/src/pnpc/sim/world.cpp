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

#include "pnpc/sim/world.hpp"

#include <cmath>

#include <json.hpp>

#include "pnpc/dsl/printer.hpp"

namespace pnpc::sim {

namespace {

double distance(const dsl::Pose& a, const dsl::Pose& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

bool matches(const ObjectState& o, const std::optional<dsl::Matcher>& m) {
  if (!m) return true;
  if (const auto* c = std::get_if<dsl::ByColor>(&*m)) return o.color == c->color.name;
  return o.shape == std::get<dsl::ByShape>(*m).shape;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

class Executor {
 public:
  Executor(WorldState world, const dsl::Program& program, const RunOptions& options, std::int64_t first_step)
      : world_(std::move(world)), program_(program), options_(options), next_step_(first_step) {}

  void exec(const dsl::Statement& st) {
    if (const auto* s = st.as<dsl::Pick>()) {
      pick(st, *s);
    } else if (const auto* s = st.as<dsl::Place>()) {
      place(st, *s);
    } else if (const auto* s = st.as<dsl::Move>()) {
      move(st, *s);
    } else if (const auto* s = st.as<dsl::Perceive>()) {
      perceive(st, *s);
    } else if (const auto* s = st.as<dsl::Repeat>()) {
      emit(st, Effect::LoopEntered, "repeat " + std::to_string(s->count));
      for (std::int64_t i = 0; i < s->count; ++i) block(s->body);
    } else if (const auto* s = st.as<dsl::If>()) {
      if (condition(s->cond)) {
        block(s->then_body);
      } else if (s->else_body) {
        block(*s->else_body);
      } else {
        emit(st, Effect::Skipped, "condition is false");
      }
    } else if (const auto* s = st.as<dsl::ForEachPerceived>()) {
      std::vector<std::string> items;
      for (const std::string& name : perceived_names())
        if (matches(world_.objects.at(name), s->matcher)) items.push_back(name);
      emit(st, Effect::LoopEntered, "foreach " + s->binder.name + " in [" + join(items) + "]");
      for (const std::string& name : items) {
        auto saved = bindings_;
        bindings_[s->binder.name] = name;
        block(s->body);
        bindings_ = std::move(saved);
      }
    }
  }

  void block(const dsl::Block& body) {
    for (const dsl::Statement& st : body) exec(st);
  }

  WorldState world_;
  std::vector<TraceEvent> events_;
  std::map<std::string, std::string> bindings_;

 private:
  [[noreturn]] static void fail(const char* code, const std::string& msg, const SourceSpan& span) {
    throw RuntimeError{code, msg, span};
  }

  void tick(const dsl::Statement& st) {
    if (++primitive_steps_ > options_.max_steps)
      fail("R-STEPLIMIT", "execution exceeded " + std::to_string(options_.max_steps) + " steps", st.span);
  }

  void emit(const dsl::Statement& st, Effect effect, std::string detail) {
    events_.push_back(TraceEvent{next_step_++, st.construct(), st.span, effect, std::move(detail)});
    if (options_.observer) options_.observer(world_, events_.back());
  }

  std::string object_name(const dsl::NameRef& ref) const {
    auto it = bindings_.find(ref.name);
    return it == bindings_.end() ? ref.name : it->second;
  }

  std::string robot_name(const std::optional<dsl::NameRef>& ref) const {
    if (ref) return ref->name;
    return world_.robots.begin()->first;  // the analyzer guarantees exactly one
  }

  dsl::Pose target_pose(const dsl::Target& t) const {
    if (const auto* p = std::get_if<dsl::Pose>(&t)) return *p;
    const auto* decl = program_.find(std::get<dsl::NameRef>(t).name);
    return decl->as<dsl::LocationDecl>()->pose;
  }

  std::set<std::string> perceived_names() const {
    std::set<std::string> out;
    for (const auto& [robot, seen] : world_.perceived)
      for (const auto& [name, pose] : seen) out.insert(name);
    return out;
  }

  bool condition(const dsl::Condition& c) const {
    switch (c.kind) {
      case dsl::Condition::Kind::Not:
        return !condition(c.operand.front());
      case dsl::Condition::Kind::Holding:
        return world_.robots.at(c.name.name).holding.has_value();
      case dsl::Condition::Kind::Exists: {
        std::string name = object_name(c.name);
        auto it = world_.objects.find(name);
        if (it == world_.objects.end() || it->second.held) return false;
        return world_.perceive_count == 0 || perceived_names().count(name) > 0;
      }
    }
    return false;
  }

  void follow_tool(const RobotState& r) {
    if (r.holding) world_.objects.at(*r.holding).pose = r.tool;
  }

  void move(const dsl::Statement& st, const dsl::Move& s) {
    tick(st);
    RobotState& r = world_.robots.at(s.robot.name);
    dsl::Pose target = target_pose(s.target);
    double d = distance(r.mount, target);
    if (d > r.reach)
      fail("R-REACH", "target " + dsl::format_pose(target) + " is out of reach of '" + s.robot.name + "'",
           st.span);
    r.tool = target;
    follow_tool(r);
    emit(st, Effect::Moved, s.robot.name + " -> " + dsl::format_pose(target));
  }

  void perceive(const dsl::Statement& st, const dsl::Perceive& s) {
    tick(st);
    std::map<std::string, dsl::Pose> snapshot;
    for (const auto& [name, o] : world_.objects)
      if (!o.held && matches(o, s.matcher)) snapshot.emplace(name, o.pose);
    for (const auto& [name, r] : world_.robots) world_.perceived[name] = snapshot;
    if (world_.robots.empty()) world_.perceived[""] = snapshot;
    ++world_.perceive_count;
    std::vector<std::string> names;
    for (const auto& [name, pose] : snapshot) names.push_back(name);
    emit(st, Effect::Perceived, "[" + join(names) + "]");
  }

  void pick(const dsl::Statement& st, const dsl::Pick& s) {
    tick(st);
    std::string rname = robot_name(s.robot);
    std::string oname = object_name(s.object);
    RobotState& r = world_.robots.at(rname);
    ObjectState& o = world_.objects.at(oname);
    if (r.holding)
      fail("R-GRIPPER", "'" + rname + "' already holds '" + *r.holding + "'", st.span);
    if (o.held) fail("R-NOTPERCEIVED", "'" + oname + "' is held by another robot", st.span);
    const auto& seen = world_.perceived[rname];
    if (!options_.allow_unperceived && !seen.count(oname))
      fail("R-NOTPERCEIVED", "'" + oname + "' has not been perceived by '" + rname + "'", st.span);
    if (distance(r.mount, o.pose) > r.reach)
      fail("R-REACH", "'" + oname + "' is out of reach of '" + rname + "'", st.span);
    r.holding = oname;
    r.tool = o.pose;
    o.held = true;
    emit(st, Effect::Picked, rname + " picked " + oname);
  }

  void place(const dsl::Statement& st, const dsl::Place& s) {
    tick(st);
    std::string rname = robot_name(s.robot);
    std::string oname = object_name(s.object);
    RobotState& r = world_.robots.at(rname);
    if (r.holding != oname) fail("R-NOTHOLDING", "'" + rname + "' does not hold '" + oname + "'", st.span);
    dsl::Pose target = target_pose(s.target);
    if (distance(r.mount, target) > r.reach)
      fail("R-REACH", "target " + dsl::format_pose(target) + " is out of reach of '" + rname + "'", st.span);
    for (const auto& [name, other] : world_.objects)
      if (name != oname && distance(other.pose, target) < kEpsilon)
        fail("R-OCCUPIED", "target " + dsl::format_pose(target) + " is occupied by '" + name + "'", st.span);
    ObjectState& o = world_.objects.at(oname);
    o.pose = target;
    o.held = false;
    r.tool = target;
    r.holding.reset();
    emit(st, Effect::Placed, rname + " placed " + oname + " at " + dsl::format_pose(target));
  }

  const dsl::Program& program_;
  const RunOptions& options_;
  std::int64_t next_step_;
  std::int64_t primitive_steps_ = 0;
};

}  // namespace

double reach_of(dsl::RobotType type) {
  switch (type) {
    case dsl::RobotType::LWR: return 0.8;
    case dsl::RobotType::KR16_2: return 1.6;
    case dsl::RobotType::RX130: return 1.4;
  }
  return 0;
}

std::string_view to_string(Effect effect) {
  switch (effect) {
    case Effect::Moved: return "Moved";
    case Effect::Picked: return "Picked";
    case Effect::Placed: return "Placed";
    case Effect::Perceived: return "Perceived";
    case Effect::Skipped: return "Skipped";
    case Effect::LoopEntered: return "LoopEntered";
  }
  return "?";
}

WorldState init_world(const dsl::Program& program, Diagnostics* warnings) {
  WorldState w;
  for (const dsl::Declaration& d : program.declarations) {
    if (const auto* o = d.as<dsl::ObjectDecl>()) {
      if (warnings) {
        for (const auto& [name, other] : w.objects)
          if (distance(other.pose, o->at) < kEpsilon)
            warnings->push_back(make_warning("W-OVERLAP",
                                             "object '" + o->name.name + "' overlaps '" + name + "'", d.span));
      }
      w.objects[o->name.name] =
          ObjectState{o->shape, o->color ? o->color->name : std::string(), o->size, o->at, false};
    } else if (const auto* r = d.as<dsl::RobotDecl>()) {
      w.robots[r->name.name] = RobotState{r->type, r->mount, r->mount, std::nullopt, reach_of(r->type)};
    }
  }
  return w;
}

StepResult step(const WorldState& world, const dsl::Statement& statement, const dsl::Program& program,
                std::int64_t first_step, const std::map<std::string, std::string>& bindings,
                const RunOptions& options) {
  Executor ex(world, program, options, first_step);
  ex.bindings_ = bindings;
  StepResult result;
  try {
    ex.exec(statement);
  } catch (const RuntimeError& e) {
    result.error = e;
  }
  result.world = std::move(ex.world_);
  result.events = std::move(ex.events_);
  return result;
}

RunResult run(const dsl::Program& program, const RunOptions& options) {
  RunResult result;
  Executor ex(init_world(program, &result.warnings), program, options, 0);
  try {
    ex.block(program.statements);
  } catch (const RuntimeError& e) {
    result.error = e;
  }
  result.world = std::move(ex.world_);
  result.trace = std::move(ex.events_);
  return result;
}

std::string final_state_json(const WorldState& world) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, o] : world.objects)
    j[name] = {o.pose.x, o.pose.y, o.pose.z, o.pose.roll, o.pose.pitch, o.pose.yaw};
  return j.dump(2) + "\n";
}

std::string trace_json(const std::vector<TraceEvent>& trace) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const TraceEvent& e : trace) {
    nlohmann::ordered_json ev;
    ev["step"] = e.step;
    ev["construct"] = std::string(dsl::construct_name(e.construct));
    ev["line"] = e.span.line;
    ev["column"] = e.span.column;
    ev["effect"] = std::string(to_string(e.effect));
    ev["detail"] = e.detail;
    j.push_back(std::move(ev));
  }
  return j.dump(2) + "\n";
}

}  // namespace pnpc::sim
