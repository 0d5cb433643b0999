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

#include "pnpc/support/number.hpp"

namespace pnpc::dsl {

namespace {

std::string target_text(const Target& t) {
  if (const auto* ref = std::get_if<NameRef>(&t)) return ref->name;
  return format_pose(std::get<Pose>(t));
}

std::string matcher_text(const std::optional<Matcher>& m) {
  if (!m) return {};
  if (const auto* c = std::get_if<ByColor>(&*m)) return " matching color " + c->color.name;
  return " matching shape " + std::string(to_string(std::get<ByShape>(*m).shape));
}

std::string condition_text(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::Exists: return "exists " + c.name.name;
    case Condition::Kind::Holding: return "holding " + c.name.name;
    case Condition::Kind::Not: return "not " + condition_text(c.operand.front());
  }
  return {};
}

class Printer {
 public:
  std::string run(const Program& p) {
    for (const Declaration& d : p.declarations) declaration(d);
    block(p.statements, 0);
    return std::move(out_);
  }

 private:
  void line(int depth, const std::string& text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void declaration(const Declaration& d) {
    if (const auto* c = d.as<ColorDecl>()) {
      line(0, "color " + c->name.name + " = rgb(" + std::to_string(c->r) + ", " +
                  std::to_string(c->g) + ", " + std::to_string(c->b) + ")");
    } else if (const auto* o = d.as<ObjectDecl>()) {
      std::string text = "object " + o->name.name + " { shape: " + std::string(to_string(o->shape));
      if (o->color) text += " color: " + o->color->name;
      text += " size: (" + format_real(o->size[0]) + ", " + format_real(o->size[1]) + ", " +
              format_real(o->size[2]) + ")";
      text += " at: " + format_pose(o->at) + " }";
      line(0, text);
    } else if (const auto* s = d.as<SensorDecl>()) {
      std::string text = "sensor " + s->name.name + " {";
      if (s->kind) text += " type: " + *s->kind;
      text += " frame: " + format_pose(s->frame) + " }";
      line(0, text);
    } else if (const auto* r = d.as<RobotDecl>()) {
      std::string text = "robot " + r->name.name + " { type: " + std::string(to_string(r->type));
      if (r->joints) text += " joints: " + std::to_string(*r->joints);
      text += " mount: " + format_pose(r->mount) + " }";
      line(0, text);
    } else if (const auto* l = d.as<LocationDecl>()) {
      line(0, "location " + l->name.name + " = " + format_pose(l->pose));
    }
  }

  void block(const Block& body, int depth) {
    for (const Statement& st : body) statement(st, depth);
  }

  void nested(const std::string& head, const Block& body, int depth) {
    line(depth, head + " {");
    block(body, depth + 1);
  }

  void statement(const Statement& st, int depth) {
    auto with = [](const std::optional<NameRef>& r) {
      return r ? " with " + r->name : std::string();
    };
    if (const auto* p = st.as<Pick>()) {
      line(depth, "pick " + p->object.name + with(p->robot));
    } else if (const auto* p = st.as<Place>()) {
      line(depth, "place " + p->object.name + " at " + target_text(p->target) + with(p->robot));
    } else if (const auto* m = st.as<Move>()) {
      line(depth, "move " + m->robot.name + " to " + target_text(m->target));
    } else if (const auto* p = st.as<Perceive>()) {
      line(depth, "perceive" + with(p->sensor) + matcher_text(p->matcher));
    } else if (const auto* r = st.as<Repeat>()) {
      nested("repeat " + std::to_string(r->count), r->body, depth);
      line(depth, "}");
    } else if (const auto* i = st.as<If>()) {
      nested("if " + condition_text(i->cond), i->then_body, depth);
      if (i->else_body) {
        line(depth, "} else {");
        block(*i->else_body, depth + 1);
      }
      line(depth, "}");
    } else if (const auto* f = st.as<ForEachPerceived>()) {
      nested("foreach " + f->binder.name + " in perceived" + matcher_text(f->matcher), f->body,
             depth);
      line(depth, "}");
    }
  }

  std::string out_;
};

}  // namespace

std::string format_pose(const Pose& pose) {
  std::string text = "(" + format_real(pose.x) + ", " + format_real(pose.y) + ", " +
                     format_real(pose.z);
  if (pose.roll != 0 || pose.pitch != 0 || pose.yaw != 0) {
    text += ", " + format_real(pose.roll) + ", " + format_real(pose.pitch) + ", " +
            format_real(pose.yaw);
  }
  return text + ")";
}

std::string pretty_print(const Program& program) { return Printer().run(program); }

}  // namespace pnpc::dsl
