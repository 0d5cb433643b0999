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

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace pnpc::dsl {

namespace {

class Analyzer {
 public:
  explicit Analyzer(const Program& program) : program_(program) {}

  Diagnostics run() {
    for (const Declaration& d : program_.declarations) {
      const NameRef& name = d.name();
      auto [it, inserted] = symbols_.emplace(name.name, d.kind());
      if (!inserted) {
        error("E-DUPLICATE", "'" + name.name + "' is already declared", name.span);
        continue;
      }
      if (d.kind() == DeclKind::Robot) ++robot_count_;
    }
    for (const Declaration& d : program_.declarations) {
      if (const auto* o = d.as<ObjectDecl>(); o && o->color) expect(*o->color, DeclKind::Color);
      if (const auto* r = d.as<RobotDecl>(); r && r->joints) {
        int stock = default_joints(r->type);
        if (*r->joints != stock) {
          diags_.push_back(make_warning(
              "W-JOINTS",
              "robot '" + r->name.name + "' declares " + std::to_string(*r->joints) +
                  " joints; a stock " + std::string(to_string(r->type)) + " has " +
                  std::to_string(stock),
              r->name.span));
        }
      }
    }
    block(program_.statements);
    std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::tie(a.span.line, a.span.column) < std::tie(b.span.line, b.span.column);
    });
    return std::move(diags_);
  }

 private:
  void error(const char* code, std::string msg, const SourceSpan& span) {
    diags_.push_back(make_error(code, std::move(msg), span));
  }

  bool is_binder(const std::string& name) const {
    return std::find(binders_.begin(), binders_.end(), name) != binders_.end();
  }

  // Loop variables stand for perceived objects.
  void expect(const NameRef& ref, DeclKind want) {
    if (want == DeclKind::Object && is_binder(ref.name)) return;
    auto it = symbols_.find(ref.name);
    if (it == symbols_.end()) {
      if (is_binder(ref.name)) {
        error("E-KIND",
              "'" + ref.name + "' is a loop variable (an object), expected a " +
                  std::string(to_string(want)),
              ref.span);
        return;
      }
      error("E-UNDECLARED",
            "'" + ref.name + "' is not declared (expected a " + std::string(to_string(want)) +
                ")",
            ref.span);
      return;
    }
    if (it->second != want) {
      error("E-KIND",
            "'" + ref.name + "' is a " + std::string(to_string(it->second)) + ", expected a " +
                std::string(to_string(want)),
            ref.span);
    }
  }

  void target(const Target& t) {
    if (const auto* ref = std::get_if<NameRef>(&t)) expect(*ref, DeclKind::Location);
  }

  void acting_robot(const std::optional<NameRef>& robot, const Statement& st) {
    if (robot) {
      expect(*robot, DeclKind::Robot);
    } else if (robot_count_ != 1) {
      error("E-AMBIGUOUS-ROBOT",
            robot_count_ == 0
                ? "no robot is declared to carry out this statement"
                : "program declares " + std::to_string(robot_count_) +
                      " robots; name one with 'with'",
            st.span);
    }
  }

  void matcher(const std::optional<Matcher>& m) {
    if (!m) return;
    if (const auto* c = std::get_if<ByColor>(&*m)) expect(c->color, DeclKind::Color);
  }

  void condition(const Condition& c) {
    switch (c.kind) {
      case Condition::Kind::Exists: expect(c.name, DeclKind::Object); break;
      case Condition::Kind::Holding: expect(c.name, DeclKind::Robot); break;
      case Condition::Kind::Not: condition(c.operand.front()); break;
    }
  }

  void block(const Block& body) {
    for (const Statement& st : body) statement(st);
  }

  void statement(const Statement& st) {
    if (const auto* p = st.as<Pick>()) {
      expect(p->object, DeclKind::Object);
      acting_robot(p->robot, st);
    } else if (const auto* p = st.as<Place>()) {
      expect(p->object, DeclKind::Object);
      target(p->target);
      acting_robot(p->robot, st);
    } else if (const auto* m = st.as<Move>()) {
      expect(m->robot, DeclKind::Robot);
      target(m->target);
    } else if (const auto* p = st.as<Perceive>()) {
      if (p->sensor) expect(*p->sensor, DeclKind::Sensor);
      matcher(p->matcher);
    } else if (const auto* r = st.as<Repeat>()) {
      block(r->body);
    } else if (const auto* i = st.as<If>()) {
      condition(i->cond);
      block(i->then_body);
      if (i->else_body) block(*i->else_body);
    } else if (const auto* f = st.as<ForEachPerceived>()) {
      matcher(f->matcher);
      bool shadows = symbols_.count(f->binder.name) > 0 || is_binder(f->binder.name);
      if (shadows)
        error("E-DUPLICATE", "loop variable '" + f->binder.name + "' shadows another name",
              f->binder.span);
      binders_.push_back(f->binder.name);
      block(f->body);
      binders_.pop_back();
    }
  }

  const Program& program_;
  std::map<std::string, DeclKind> symbols_;
  std::vector<std::string> binders_;
  int robot_count_ = 0;
  Diagnostics diags_;
};

}  // namespace

Diagnostics analyze(const Program& program) { return Analyzer(program).run(); }

}  // namespace pnpc::dsl
