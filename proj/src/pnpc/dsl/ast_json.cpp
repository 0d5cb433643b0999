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

#include "pnpc/dsl/ast_json.hpp"

#include <json.hpp>

namespace pnpc::dsl {

namespace {

using nlohmann::ordered_json;

ordered_json span_json(const SourceSpan& s) {
  return {{"file", s.file}, {"line", s.line}, {"column", s.column}, {"length", s.length}};
}

ordered_json pose_json(const Pose& p) {
  return {{"kind", "Pose"}, {"x", p.x}, {"y", p.y}, {"z", p.z},
          {"roll", p.roll}, {"pitch", p.pitch}, {"yaw", p.yaw}};
}

ordered_json name_json(const NameRef& n) {
  return {{"kind", "Name"}, {"name", n.name}, {"span", span_json(n.span)}};
}

ordered_json opt_name(const std::optional<NameRef>& n) {
  return n ? name_json(*n) : ordered_json(nullptr);
}

ordered_json target_json(const Target& t) {
  if (const auto* ref = std::get_if<NameRef>(&t)) return name_json(*ref);
  return pose_json(std::get<Pose>(t));
}

ordered_json matcher_json(const std::optional<Matcher>& m) {
  if (!m) return nullptr;
  if (const auto* c = std::get_if<ByColor>(&*m))
    return {{"kind", "ByColor"}, {"color", name_json(c->color)}};
  return {{"kind", "ByShape"}, {"shape", to_string(std::get<ByShape>(*m).shape)}};
}

ordered_json condition_json(const Condition& c) {
  ordered_json j;
  switch (c.kind) {
    case Condition::Kind::Exists:
      j = {{"kind", "Exists"}, {"name", name_json(c.name)}};
      break;
    case Condition::Kind::Holding:
      j = {{"kind", "Holding"}, {"robot", name_json(c.name)}};
      break;
    case Condition::Kind::Not:
      j = {{"kind", "Not"}, {"operand", condition_json(c.operand.front())}};
      break;
  }
  j["span"] = span_json(c.span);
  return j;
}

ordered_json block_json(const Block& body);

ordered_json statement_json(const Statement& st) {
  ordered_json j;
  if (const auto* p = st.as<Pick>()) {
    j = {{"kind", "Pick"}, {"object", name_json(p->object)}, {"robot", opt_name(p->robot)}};
  } else if (const auto* p = st.as<Place>()) {
    j = {{"kind", "Place"},
         {"object", name_json(p->object)},
         {"target", target_json(p->target)},
         {"robot", opt_name(p->robot)}};
  } else if (const auto* m = st.as<Move>()) {
    j = {{"kind", "Move"}, {"robot", name_json(m->robot)}, {"target", target_json(m->target)}};
  } else if (const auto* p = st.as<Perceive>()) {
    j = {{"kind", "Perceive"}, {"sensor", opt_name(p->sensor)}, {"matcher", matcher_json(p->matcher)}};
  } else if (const auto* r = st.as<Repeat>()) {
    j = {{"kind", "Repeat"}, {"count", r->count}, {"body", block_json(r->body)}};
  } else if (const auto* i = st.as<If>()) {
    j = {{"kind", "If"},
         {"condition", condition_json(i->cond)},
         {"then", block_json(i->then_body)},
         {"else", i->else_body ? block_json(*i->else_body) : ordered_json(nullptr)}};
  } else if (const auto* f = st.as<ForEachPerceived>()) {
    j = {{"kind", "ForEachPerceived"},
         {"binder", name_json(f->binder)},
         {"matcher", matcher_json(f->matcher)},
         {"body", block_json(f->body)}};
  }
  j["span"] = span_json(st.span);
  return j;
}

ordered_json block_json(const Block& body) {
  ordered_json arr = ordered_json::array();
  for (const Statement& st : body) arr.push_back(statement_json(st));
  return arr;
}

ordered_json declaration_json(const Declaration& d) {
  ordered_json j;
  if (const auto* c = d.as<ColorDecl>()) {
    j = {{"kind", "ColorDecl"}, {"name", name_json(c->name)}, {"r", c->r}, {"g", c->g}, {"b", c->b}};
  } else if (const auto* o = d.as<ObjectDecl>()) {
    j = {{"kind", "ObjectDecl"},
         {"name", name_json(o->name)},
         {"shape", to_string(o->shape)},
         {"color", opt_name(o->color)},
         {"size", {o->size[0], o->size[1], o->size[2]}},
         {"at", pose_json(o->at)}};
  } else if (const auto* s = d.as<SensorDecl>()) {
    j = {{"kind", "SensorDecl"},
         {"name", name_json(s->name)},
         {"type", s->kind ? ordered_json(*s->kind) : ordered_json(nullptr)},
         {"frame", pose_json(s->frame)}};
  } else if (const auto* r = d.as<RobotDecl>()) {
    j = {{"kind", "RobotDecl"},
         {"name", name_json(r->name)},
         {"robotType", to_string(r->type)},
         {"joints", r->joints ? ordered_json(*r->joints) : ordered_json(nullptr)},
         {"mount", pose_json(r->mount)}};
  } else if (const auto* l = d.as<LocationDecl>()) {
    j = {{"kind", "LocationDecl"}, {"name", name_json(l->name)}, {"pose", pose_json(l->pose)}};
  }
  j["span"] = span_json(d.span);
  return j;
}

}  // namespace

std::string ast_to_json(const Program& program) {
  ordered_json decls = ordered_json::array();
  for (const Declaration& d : program.declarations) decls.push_back(declaration_json(d));
  ordered_json used = ordered_json::array();
  for (Construct c : program.constructs_used) used.push_back(construct_name(c));
  ordered_json root = {{"kind", "Program"},
                       {"declarations", std::move(decls)},
                       {"statements", block_json(program.statements)},
                       {"constructsUsed", std::move(used)}};
  return root.dump(2) + "\n";
}

}  // namespace pnpc::dsl
