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

namespace pnpc::tpl {

namespace {

constexpr int kMaxCallDepth = 64;

struct RenderError {
  Diagnostic diag;
};

[[noreturn]] void fail(const char* code, const std::string& msg, const SourceSpan& span) {
  throw RenderError{make_error(code, msg, span)};
}

std::string kind_name(const Value& v) { return std::string(to_string(v.kind())); }

Value attr_value(const fm::AttrValue& v) {
  return std::visit([](const auto& x) { return Value(x); }, v);
}

std::string_view type_name(dsl::RobotType t) {
  switch (t) {
    case dsl::RobotType::LWR: return "LWR";
    case dsl::RobotType::KR16_2: return "KR16";
    case dsl::RobotType::RX130: return "RX130";
  }
  return "";
}

Value decl_list(const std::shared_ptr<const dsl::Program>& program, dsl::DeclKind kind) {
  Value::List out;
  int index = 0;
  for (const dsl::Declaration& d : program->declarations)
    if (d.kind() == kind) out.push_back(Value(DeclRef{program, &d, ++index}));
  return Value(std::move(out));
}

std::optional<Value> member(const Value& recv, const std::string& name) {
  if (const DeclRef* ref = recv.as_decl()) {
    const dsl::Declaration& d = *ref->decl;
    if (name == "name") return Value(d.name().name);
    if (name == "index") return Value(ref->index);
    if (const auto* r = d.as<dsl::RobotDecl>()) {
      if (name == "type") return Value(std::string(dsl::to_string(r->type)));
      if (name == "typeName") return Value(std::string(type_name(r->type)));
      if (name == "joints") return Value(r->joints.value_or(dsl::default_joints(r->type)));
      if (name == "mount") return pose_value(r->mount);
    } else if (const auto* o = d.as<dsl::ObjectDecl>()) {
      if (name == "shape") return Value(std::string(dsl::to_string(o->shape)));
      if (name == "color") return Value(o->color ? o->color->name : std::string());
      if (name == "size") return Value(Value::List{o->size[0], o->size[1], o->size[2]});
      if (name == "at") return pose_value(o->at);
    } else if (const auto* l = d.as<dsl::LocationDecl>()) {
      if (name == "pose") return pose_value(l->pose);
    }
    return std::nullopt;
  }
  if (const auto* c = recv.as_config()) {
    if (name == "name") return Value(c->name);
    if (name == "model") return Value(c->model_name);
    return std::nullopt;
  }
  if (const auto* rec = recv.as_record()) {
    auto it = rec->find(name);
    if (it != rec->end()) return it->second;
    return std::nullopt;
  }
  if (const auto* list = recv.as_list()) {
    if (name == "size") return Value(static_cast<std::int64_t>(list->size()));
    if (name == "isEmpty") return Value(list->empty());
    return std::nullopt;
  }
  if (const auto* s = recv.as_text()) {
    if (name == "size") return Value(static_cast<std::int64_t>(s->size()));
    if (name == "isEmpty") return Value(s->empty());
    return std::nullopt;
  }
  return std::nullopt;
}

bool numeric(const Value& v) { return v.as_int() || v.as_real(); }
double to_double(const Value& v) { return v.as_int() ? static_cast<double>(*v.as_int()) : *v.as_real(); }

template <typename T>
bool compare(const T& a, const T& b, fm::CmpOp op) {
  switch (op) {
    case fm::CmpOp::Eq: return a == b;
    case fm::CmpOp::Ne: return a != b;
    case fm::CmpOp::Lt: return a < b;
    case fm::CmpOp::Le: return a <= b;
    case fm::CmpOp::Gt: return a > b;
    case fm::CmpOp::Ge: return a >= b;
  }
  return false;
}

bool accepts(ValueKind param, const Value& v) {
  if (param == v.kind()) return true;
  return param == ValueKind::Real && v.as_int();
}

Value coerce(ValueKind param, Value v) {
  if (param == ValueKind::Real && v.as_int()) return Value(static_cast<double>(*v.as_int()));
  return v;
}

class Renderer {
 public:
  explicit Renderer(const TemplateSet* set) : set_(set) {}

  void render_template(const Template& tpl, RenderContext scope, std::string& out) {
    for (const Param& p : tpl.params) {
      auto it = scope.find(p.name);
      if (it == scope.end())
        fail("E-TPL-UNBOUND", "parameter '" + p.name + "' of template '" + tpl.name + "' is not bound", tpl.span);
      if (!accepts(p.kind, it->second))
        fail("E-TPL-KIND",
             "parameter '" + p.name + "' of template '" + tpl.name + "' expects " +
                 std::string(to_string(p.kind)) + ", got " + kind_name(it->second),
             tpl.span);
      it->second = coerce(p.kind, std::move(it->second));
    }
    scopes_.push_back(std::move(scope));
    render_nodes(tpl.body, out);
    scopes_.pop_back();
  }

 private:
  const Value* lookup(const std::string& name) const {
    const RenderContext& scope = scopes_.back();
    auto it = scope.find(name);
    return it == scope.end() ? nullptr : &it->second;
  }

  bool truth(const Query& q) {
    Value v = eval(q);
    if (const bool* b = v.as_bool()) return *b;
    fail("E-TPL-KIND", "condition must be bool, got " + kind_name(v), q.span);
  }

  Value eval(const Query& q) {
    switch (q.kind) {
      case Query::Kind::Literal:
        return q.literal;
      case Query::Kind::Var: {
        const Value* v = lookup(q.name);
        if (!v) fail("E-TPL-UNBOUND", "'" + q.name + "' is not bound", q.span);
        return *v;
      }
      case Query::Kind::Member: {
        Value recv = eval(q.args[0]);
        if (recv.as_program()) return program_member(recv, q);
        if (auto v = member(recv, q.name)) return *v;
        fail("E-TPL-KIND", kind_name(recv) + " has no member '" + q.name + "'", q.span);
      }
      case Query::Kind::Method:
        return method(q);
      case Query::Kind::Not:
        return Value(!truth(q.args[0]));
      case Query::Kind::And:
        return Value(truth(q.args[0]) && truth(q.args[1]));
      case Query::Kind::Or:
        return Value(truth(q.args[0]) || truth(q.args[1]));
      case Query::Kind::Compare: {
        Value a = eval(q.args[0]);
        Value b = eval(q.args[1]);
        if (numeric(a) && numeric(b)) {
          if (a.as_int() && b.as_int()) return Value(compare(*a.as_int(), *b.as_int(), q.op));
          return Value(compare(to_double(a), to_double(b), q.op));
        }
        if (a.as_text() && b.as_text()) return Value(compare(*a.as_text(), *b.as_text(), q.op));
        if (a.as_bool() && b.as_bool() && (q.op == fm::CmpOp::Eq || q.op == fm::CmpOp::Ne))
          return Value(compare(*a.as_bool(), *b.as_bool(), q.op));
        fail("E-TPL-KIND", "cannot compare " + kind_name(a) + " with " + kind_name(b), q.span);
      }
      case Query::Kind::Call:
        fail("E-TPL-CALL", "template call '" + q.name + "' used as a value", q.span);
    }
    fail("E-TPL-KIND", "unsupported query", q.span);
  }

  Value program_member(const Value& recv, const Query& q) {
    auto program = recv.program_handle();
    if (q.name == "robots") return decl_list(program, dsl::DeclKind::Robot);
    if (q.name == "objects") return decl_list(program, dsl::DeclKind::Object);
    if (q.name == "locations") return decl_list(program, dsl::DeclKind::Location);
    fail("E-TPL-KIND", "program has no member '" + q.name + "'", q.span);
  }

  Value method(const Query& q) {
    Value recv = eval(q.args[0]);
    std::vector<Value> args;
    for (std::size_t i = 1; i < q.args.size(); ++i) args.push_back(eval(q.args[i]));
    auto text_arg = [&](std::size_t i) -> const std::string& {
      if (i >= args.size() || !args[i].as_text())
        fail("E-TPL-KIND", "'" + q.name + "' expects text argument " + std::to_string(i + 1), q.span);
      return *args[i].as_text();
    };
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        fail("E-TPL-KIND", "'" + q.name + "' takes " + std::to_string(n) + " argument(s)", q.span);
    };
    if (const auto* c = recv.as_config()) {
      if (q.name == "has") {
        arity(1);
        return Value(c->includes(text_arg(0)));
      }
      if (q.name == "attr") {
        arity(2);
        auto v = c->attribute(text_arg(0), text_arg(1));
        if (!v) fail("E-TPL-UNBOUND", "attribute '" + text_arg(0) + "." + text_arg(1) + "' has no value", q.span);
        return attr_value(*v);
      }
    }
    // Zero-argument methods and members are interchangeable: `xs.size()` is `xs.size`.
    if (args.empty()) {
      if (recv.as_program()) return program_member(recv, q);
      if (auto v = member(recv, q.name)) return *v;
    }
    fail("E-TPL-KIND", kind_name(recv) + " has no method '" + q.name + "'", q.span);
  }

  void render_nodes(const Nodes& nodes, std::string& out) {
    for (const Node& n : nodes) {
      if (const auto* s = std::get_if<StaticText>(&n.node)) {
        out += s->text;
      } else if (const auto* e = std::get_if<ExprNode>(&n.node)) {
        Value v = eval(e->query);
        auto text = v.render();
        if (!text) fail("E-TPL-KIND", "cannot emit a value of kind " + kind_name(v), e->query.span);
        out += *text;
      } else if (const auto* i = std::get_if<IfBlock>(&n.node)) {
        render_nodes(truth(i->cond) ? i->then_nodes : i->else_nodes, out);
      } else if (const auto* f = std::get_if<ForBlock>(&n.node)) {
        Value coll = eval(f->collection);
        const Value::List* list = coll.as_list();
        if (!list) fail("E-TPL-KIND", "[for] expects a list, got " + kind_name(coll), f->collection.span);
        bool first = true;
        for (const Value& item : *list) {
          if (!first) out += f->separator;
          first = false;
          RenderContext scope = scopes_.back();
          scope[f->binder] = item;
          scopes_.push_back(std::move(scope));
          render_nodes(f->body, out);
          scopes_.pop_back();
        }
      } else if (const auto* c = std::get_if<CallNode>(&n.node)) {
        call(*c, out);
      }
    }
  }

  void call(const CallNode& c, std::string& out) {
    const Template* callee = nullptr;
    if (set_) {
      auto it = set_->find(c.callee);
      if (it != set_->end()) callee = &it->second;
    }
    if (!callee) fail("E-TPL-CALL", "call to unknown template '" + c.callee + "'", c.span);
    if (callee->params.size() != c.args.size())
      fail("E-TPL-CALL",
           "template '" + c.callee + "' takes " + std::to_string(callee->params.size()) + " argument(s), " +
               std::to_string(c.args.size()) + " given",
           c.span);
    if (++depth_ > kMaxCallDepth) fail("E-TPL-CALL", "template calls nested too deeply", c.span);
    RenderContext scope;
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      const Param& p = callee->params[i];
      Value v = eval(c.args[i]);
      if (!accepts(p.kind, v))
        fail("E-TPL-KIND",
             "argument " + std::to_string(i + 1) + " of '" + c.callee + "' expects " +
                 std::string(to_string(p.kind)) + ", got " + kind_name(v),
             c.args[i].span);
      scope.emplace(p.name, coerce(p.kind, std::move(v)));
    }
    scopes_.push_back(std::move(scope));
    render_nodes(callee->body, out);
    scopes_.pop_back();
    --depth_;
  }

  const TemplateSet* set_;
  std::vector<RenderContext> scopes_;
  int depth_ = 0;
};

}  // namespace

Result<std::string> render(const TemplateSet& set, std::string_view name, const RenderContext& context) {
  auto it = set.find(name);
  if (it == set.end())
    return Diagnostics{make_error("E-TPL-CALL", "no template named '" + std::string(name) + "'", {})};
  std::string out;
  try {
    Renderer(&set).render_template(it->second, context, out);
  } catch (const RenderError& e) {
    return Diagnostics{e.diag};
  }
  return out;
}

Result<std::string> render(const Template& tpl, const RenderContext& context) {
  std::string out;
  try {
    Renderer(nullptr).render_template(tpl, context, out);
  } catch (const RenderError& e) {
    return Diagnostics{e.diag};
  }
  return out;
}

}  // namespace pnpc::tpl
