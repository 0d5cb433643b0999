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

#include "pnpc/dsl/parser.hpp"

#include <cmath>

#include "pnpc/dsl/lexer.hpp"
#include "pnpc/support/number.hpp"

namespace pnpc::dsl {

namespace {

// Thrown inside the parser only; converted to a diagnostic at the
// statement/declaration boundary where resynchronization happens.
struct SyntaxError {
  Diagnostic diag;
};

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::End) return "end of input";
  return "'" + tok.text + "'";
}

bool starts_declaration(const Token& tok) {
  return tok.is_keyword("color") || tok.is_keyword("object") || tok.is_keyword("sensor") ||
         tok.is_keyword("robot") || tok.is_keyword("location");
}

bool starts_statement(const Token& tok) {
  return tok.is_keyword("pick") || tok.is_keyword("place") || tok.is_keyword("move") ||
         tok.is_keyword("perceive") || tok.is_keyword("repeat") || tok.is_keyword("if") ||
         tok.is_keyword("foreach");
}

class Parser {
 public:
  explicit Parser(const Tokens& tokens) : toks_(tokens) {}

  Result<Program> run() {
    Program program;
    skip_separators();
    while (!at_end() && !starts_statement(cur())) {
      if (starts_declaration(cur())) {
        guarded([&] { program.declarations.push_back(declaration()); });
      } else {
        report(error_here("expected a declaration or statement"));
        advance();
      }
      skip_separators();
    }
    while (!at_end()) {
      if (starts_statement(cur())) {
        guarded([&] { program.statements.push_back(statement()); });
      } else if (starts_declaration(cur())) {
        report(error_here("declarations must precede all statements"));
        resync(cur().span.line);
      } else {
        report(error_here("expected a statement"));
        advance();
      }
      skip_separators();
    }
    if (!diags_.empty()) return diags_;
    program.constructs_used = std::move(used_);
    return program;
  }

 private:
  // --- token plumbing -----------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  bool at_end() const { return cur().kind == TokenKind::End; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (!at_end()) ++pos_;
    return t;
  }

  SyntaxError error_here(const std::string& what) const {
    SourceSpan span = cur().span;
    if (at_end() && pos_ > 0) {
      const SourceSpan& last = toks_[pos_ - 1].span;
      span = SourceSpan{last.file, last.line, last.column + last.length, 0};
    }
    return SyntaxError{make_error("E-PARSE", what + ", found " + describe(cur()), span)};
  }

  const Token& expect_keyword(std::string_view kw) {
    if (!cur().is_keyword(kw)) throw error_here("expected '" + std::string(kw) + "'");
    return advance();
  }
  const Token& expect_punct(char c) {
    if (!cur().is_punct(c)) throw error_here(std::string("expected '") + c + "'");
    return advance();
  }
  bool accept_keyword(std::string_view kw) {
    if (!cur().is_keyword(kw)) return false;
    advance();
    return true;
  }
  NameRef expect_ident(const char* what) {
    if (cur().kind != TokenKind::Identifier)
      throw error_here(std::string("expected ") + what);
    const Token& t = advance();
    return NameRef{t.text, t.span};
  }

  double number() {
    if (cur().kind != TokenKind::Integer && cur().kind != TokenKind::Real)
      throw error_here("expected a number");
    const Token& t = cur();
    auto v = parse_real(t.text);
    if (!v) throw error_here("number out of range");
    advance();
    return *v;
  }

  std::int64_t integer(const char* what) {
    if (cur().kind != TokenKind::Integer) throw error_here(std::string("expected ") + what);
    auto v = parse_int(cur().text);
    if (!v) throw error_here("integer out of range");
    advance();
    return *v;
  }

  void skip_separators() {
    while (cur().is_punct(';')) advance();
  }

  // Skips to the next `;`, the `}` closing the current block, or a
  // statement or declaration keyword on a line after `line`.
  void resync(int line) {
    while (!at_end()) {
      if (cur().span.line > line && (starts_statement(cur()) || starts_declaration(cur()))) return;
      if (cur().is_punct(';')) {
        advance();
        return;
      }
      if (cur().is_punct('}')) {
        if (depth_ == 0) advance();
        return;
      }
      advance();
    }
  }

  void report(const SyntaxError& e) {
    if (diags_.empty() || diags_.back().span != e.diag.span) diags_.push_back(e.diag);
  }

  template <typename F>
  void guarded(F&& f) {
    int depth = depth_;
    std::size_t start = pos_;
    int line = cur().span.line;
    try {
      f();
    } catch (const SyntaxError& e) {
      report(e);
      depth_ = depth;
      if (pos_ == start) advance();
      resync(line);
    }
  }

  // --- declarations -------------------------------------------------------

  Pose pose() {
    Pose p;
    expect_punct('(');
    p.x = number();
    expect_punct(',');
    p.y = number();
    expect_punct(',');
    p.z = number();
    if (cur().is_punct(',')) {
      advance();
      p.roll = number();
      expect_punct(',');
      p.pitch = number();
      expect_punct(',');
      p.yaw = number();
    }
    expect_punct(')');
    return p;
  }

  Declaration declaration() {
    Declaration decl;
    decl.span = cur().span;
    if (accept_keyword("color")) {
      decl.node = color_decl();
      used_.insert(Construct::ColorDecl);
    } else if (accept_keyword("object")) {
      decl.node = object_decl();
      used_.insert(Construct::ObjectDecl);
    } else if (accept_keyword("sensor")) {
      decl.node = sensor_decl();
      used_.insert(Construct::SensorDecl);
    } else if (accept_keyword("robot")) {
      decl.node = robot_decl();
      used_.insert(Construct::RobotDecl);
    } else {
      expect_keyword("location");
      LocationDecl loc;
      loc.name = expect_ident("location name");
      expect_punct('=');
      loc.pose = pose();
      decl.node = std::move(loc);
      used_.insert(Construct::LocationDecl);
    }
    return decl;
  }

  int channel() {
    if (cur().kind != TokenKind::Integer) throw error_here("expected an integer 0..255");
    auto v = parse_int(cur().text);
    if (!v || *v < 0 || *v > 255) throw error_here("expected an integer 0..255");
    advance();
    return static_cast<int>(*v);
  }

  ColorDecl color_decl() {
    ColorDecl c;
    c.name = expect_ident("color name");
    expect_punct('=');
    expect_keyword("rgb");
    expect_punct('(');
    c.r = channel();
    expect_punct(',');
    c.g = channel();
    expect_punct(',');
    c.b = channel();
    expect_punct(')');
    return c;
  }

  ObjectDecl object_decl() {
    ObjectDecl o;
    o.name = expect_ident("object name");
    expect_punct('{');
    bool seen_shape = false, seen_color = false, seen_size = false, seen_at = false;
    auto once = [&](bool& seen, const char* prop) {
      if (seen) throw error_here(std::string("duplicate object property '") + prop + "'");
      seen = true;
    };
    while (!cur().is_punct('}')) {
      if (cur().is_keyword("shape")) {
        once(seen_shape, "shape");
        advance();
        expect_punct(':');
        o.shape = shape_value();
      } else if (cur().is_keyword("color")) {
        once(seen_color, "color");
        advance();
        expect_punct(':');
        o.color = expect_ident("color name");
      } else if (cur().is_keyword("size")) {
        once(seen_size, "size");
        advance();
        expect_punct(':');
        expect_punct('(');
        for (std::size_t i = 0; i < 3; ++i) {
          if (i) expect_punct(',');
          if (cur().kind == TokenKind::Integer || cur().kind == TokenKind::Real) {
            auto v = parse_real(cur().text);
            if (v && *v <= 0) throw error_here("object size components must be > 0");
          }
          o.size[i] = number();
        }
        expect_punct(')');
      } else if (cur().is_keyword("at")) {
        once(seen_at, "at");
        advance();
        expect_punct(':');
        o.at = pose();
      } else {
        throw error_here("expected object property 'shape', 'color', 'size', 'at' or '}'");
      }
    }
    advance();
    return o;
  }

  Shape shape_value() {
    if (cur().kind == TokenKind::Identifier) {
      if (auto s = shape_from_name(cur().text)) {
        advance();
        return *s;
      }
    }
    throw error_here("expected shape 'box', 'cylinder' or 'sphere'");
  }

  SensorDecl sensor_decl() {
    SensorDecl s;
    s.name = expect_ident("sensor name");
    expect_punct('{');
    if (accept_keyword("type")) {
      expect_punct(':');
      s.kind = expect_ident("sensor type").name;
    }
    if (accept_keyword("frame")) {
      expect_punct(':');
      s.frame = pose();
    }
    expect_punct('}');
    return s;
  }

  RobotDecl robot_decl() {
    RobotDecl r;
    r.name = expect_ident("robot name");
    expect_punct('{');
    expect_keyword("type");
    expect_punct(':');
    std::optional<RobotType> type;
    if (cur().kind == TokenKind::Identifier) type = robot_type_from_name(cur().text);
    if (!type) throw error_here("expected robot type 'LWR', 'KR16_2' or 'RX130'");
    r.type = *type;
    r.type_span = advance().span;
    switch (r.type) {
      case RobotType::LWR: used_.insert(Construct::RobotTypeLWR); break;
      case RobotType::KR16_2: used_.insert(Construct::RobotTypeKR16_2); break;
      case RobotType::RX130: used_.insert(Construct::RobotTypeRX130); break;
    }
    if (accept_keyword("joints")) {
      expect_punct(':');
      if (cur().kind == TokenKind::Integer) {
        auto v = parse_int(cur().text);
        if (v && *v < 1) throw error_here("joint count must be positive");
      }
      r.joints = integer("a joint count");
    }
    if (accept_keyword("mount")) {
      expect_punct(':');
      r.mount = pose();
    }
    expect_punct('}');
    return r;
  }

  // --- statements ---------------------------------------------------------

  Target target() {
    if (cur().is_punct('(')) return pose();
    return expect_ident("location name or pose");
  }

  std::optional<NameRef> with_clause(const char* what) {
    if (!accept_keyword("with")) return std::nullopt;
    return expect_ident(what);
  }

  std::optional<Matcher> matcher_clause() {
    if (!accept_keyword("matching")) return std::nullopt;
    if (accept_keyword("color")) return ByColor{expect_ident("color name")};
    if (accept_keyword("shape")) return ByShape{shape_value()};
    throw error_here("expected 'color' or 'shape'");
  }

  Condition condition() {
    Condition c;
    c.span = cur().span;
    if (accept_keyword("not")) {
      c.kind = Condition::Kind::Not;
      c.operand.push_back(condition());
    } else if (accept_keyword("exists")) {
      c.kind = Condition::Kind::Exists;
      c.name = expect_ident("object name");
    } else if (accept_keyword("holding")) {
      c.kind = Condition::Kind::Holding;
      c.name = expect_ident("robot name");
    } else {
      throw error_here("expected condition 'exists', 'holding' or 'not'");
    }
    return c;
  }

  Block block() {
    expect_punct('{');
    ++depth_;
    Block body;
    skip_separators();
    while (!cur().is_punct('}')) {
      if (at_end()) throw error_here("expected '}'");
      if (starts_statement(cur())) {
        guarded([&] { body.push_back(statement()); });
      } else {
        report(error_here("expected a statement or '}'"));
        resync(cur().span.line);
      }
      skip_separators();
    }
    advance();
    --depth_;
    return body;
  }

  Statement statement() {
    Statement st;
    st.span = cur().span;
    if (accept_keyword("pick")) {
      Pick p;
      p.object = expect_ident("object name");
      p.robot = with_clause("robot name");
      st.node = std::move(p);
    } else if (accept_keyword("place")) {
      Place p;
      p.object = expect_ident("object name");
      expect_keyword("at");
      p.target = target();
      p.robot = with_clause("robot name");
      st.node = std::move(p);
    } else if (accept_keyword("move")) {
      Move m;
      m.robot = expect_ident("robot name");
      expect_keyword("to");
      m.target = target();
      st.node = std::move(m);
    } else if (accept_keyword("perceive")) {
      Perceive p;
      p.sensor = with_clause("sensor name");
      p.matcher = matcher_clause();
      st.node = std::move(p);
    } else if (accept_keyword("repeat")) {
      Repeat r;
      if (cur().kind == TokenKind::Integer) {
        auto v = parse_int(cur().text);
        if (v && *v < 1) throw error_here("repeat count must be at least 1");
      }
      r.count = integer("a repeat count");
      r.body = block();
      st.node = std::move(r);
    } else if (accept_keyword("if")) {
      If i;
      i.cond = condition();
      i.then_body = block();
      if (accept_keyword("else")) i.else_body = block();
      st.node = std::move(i);
    } else {
      expect_keyword("foreach");
      ForEachPerceived f;
      f.binder = expect_ident("loop variable");
      expect_keyword("in");
      expect_keyword("perceived");
      f.matcher = matcher_clause();
      f.body = block();
      st.node = std::move(f);
    }
    used_.insert(st.construct());
    return st;
  }

  const Tokens& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  ConstructSet used_;
  Diagnostics diags_;
};

}  // namespace

Result<Program> parse(const Tokens& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::End) {
    Tokens terminated = tokens;
    terminated.push_back(Token{TokenKind::End, "", {}});
    return Parser(terminated).run();
  }
  return Parser(tokens).run();
}

Result<Program> parse_source(std::string_view source, const std::string& file) {
  auto tokens = tokenize(source, file);
  if (!tokens) return tokens.diagnostics();
  return parse(*tokens);
}

}  // namespace pnpc::dsl
