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

#include <algorithm>
#include <functional>
#include <set>

#include "pnpc/support/number.hpp"
#include "pnpc/tpl/template.hpp"

namespace pnpc::tpl {

namespace {

struct TplError {
  Diagnostic diag;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Maps byte offsets of the template source to line/column.
class Positions {
 public:
  Positions(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i] == '\n') starts_.push_back(i + 1);
  }

  SourceSpan at(std::size_t offset, std::size_t length = 1) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    std::size_t start = starts_[line - 1];
    int col = 1;
    for (std::size_t i = start; i < offset && i < src_.size(); ++i)
      if ((static_cast<unsigned char>(src_[i]) & 0xC0) != 0x80) ++col;
    return SourceSpan{file_, static_cast<int>(line), col, static_cast<int>(length)};
  }

 private:
  std::string_view src_;
  std::string file_;
  std::vector<std::size_t> starts_;
};

[[noreturn]] void fail(const SourceSpan& span, const std::string& msg) {
  throw TplError{make_error("E-TPL-PARSE", msg, span)};
}

// --- query language -------------------------------------------------------

struct QTok {
  enum class Kind { Ident, Int, Real, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t offset = 0;  // into the template source
};

std::vector<QTok> lex_query(std::string_view text, std::size_t base, const Positions& pos) {
  std::vector<QTok> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t start = i;
    if (blank(c) || c == '\n') {
      ++i;
    } else if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({QTok::Kind::Ident, std::string(text.substr(start, i - start)), base + start});
    } else if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
      ++i;
      while (i < text.size() && digit(text[i])) ++i;
      auto kind = QTok::Kind::Int;
      if (i + 1 < text.size() && text[i] == '.' && digit(text[i + 1])) {
        kind = QTok::Kind::Real;
        ++i;
        while (i < text.size() && digit(text[i])) ++i;
      }
      out.push_back({kind, std::string(text.substr(start, i - start)), base + start});
    } else if (c == '"' || c == '\'') {
      ++i;
      std::string value;
      while (i < text.size() && text[i] != c) {
        if (text[i] == '\\' && i + 1 < text.size()) {
          char e = text[++i];
          value += e == 'n' ? '\n' : e == 't' ? '\t' : e;
        } else {
          value += text[i];
        }
        ++i;
      }
      if (i >= text.size()) fail(pos.at(base + start), "unterminated string literal");
      ++i;
      out.push_back({QTok::Kind::String, std::move(value), base + start});
    } else {
      std::string_view two = text.substr(i, 2);
      if (two == "<>" || two == "!=" || two == "<=" || two == ">=" || two == "==") {
        out.push_back({QTok::Kind::Punct, std::string(two), base + start});
        i += 2;
      } else if (std::string_view(".,():=<>").find(c) != std::string_view::npos) {
        out.push_back({QTok::Kind::Punct, std::string(1, c), base + start});
        ++i;
      } else {
        fail(pos.at(base + start), std::string("unexpected character '") + c + "' in query");
      }
    }
  }
  out.push_back({QTok::Kind::End, "", base + text.size()});
  return out;
}

class QueryParser {
 public:
  QueryParser(std::vector<QTok> toks, const Positions& pos) : toks_(std::move(toks)), pos_(pos) {}

  Query query() { return disjunction(); }

  const QTok& cur() const { return toks_[i_]; }
  bool at_end() const { return cur().kind == QTok::Kind::End; }
  bool is_punct(std::string_view p) const { return cur().kind == QTok::Kind::Punct && cur().text == p; }
  bool is_word(std::string_view w) const { return cur().kind == QTok::Kind::Ident && cur().text == w; }
  SourceSpan span() const { return pos_.at(cur().offset, std::max<std::size_t>(cur().text.size(), 1)); }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail(span(), "expected '" + std::string(p) + "' in query");
    ++i_;
  }
  std::string expect_ident(const char* what) {
    if (cur().kind != QTok::Kind::Ident) fail(span(), std::string("expected ") + what);
    return toks_[i_++].text;
  }
  std::string expect_string(const char* what) {
    if (cur().kind != QTok::Kind::String) fail(span(), std::string("expected ") + what);
    return toks_[i_++].text;
  }
  void expect_end() {
    if (!at_end()) fail(span(), "unexpected '" + cur().text + "' in query");
  }

 private:
  Query binary(Query::Kind kind, Query lhs, Query rhs, SourceSpan span) {
    Query q;
    q.kind = kind;
    q.span = std::move(span);
    q.args.push_back(std::move(lhs));
    q.args.push_back(std::move(rhs));
    return q;
  }

  Query disjunction() {
    Query lhs = conjunction();
    while (is_word("or")) {
      SourceSpan s = span();
      ++i_;
      lhs = binary(Query::Kind::Or, std::move(lhs), conjunction(), s);
    }
    return lhs;
  }

  Query conjunction() {
    Query lhs = comparison();
    while (is_word("and")) {
      SourceSpan s = span();
      ++i_;
      lhs = binary(Query::Kind::And, std::move(lhs), comparison(), s);
    }
    return lhs;
  }

  Query comparison() {
    Query lhs = unary();
    static const std::pair<std::string_view, fm::CmpOp> kOps[] = {
        {"=", fm::CmpOp::Eq}, {"==", fm::CmpOp::Eq}, {"<>", fm::CmpOp::Ne}, {"!=", fm::CmpOp::Ne},
        {"<", fm::CmpOp::Lt}, {"<=", fm::CmpOp::Le}, {">", fm::CmpOp::Gt},  {">=", fm::CmpOp::Ge},
    };
    for (const auto& [text, op] : kOps) {
      if (is_punct(text)) {
        SourceSpan s = span();
        ++i_;
        Query q = binary(Query::Kind::Compare, std::move(lhs), unary(), s);
        q.op = op;
        return q;
      }
    }
    return lhs;
  }

  Query unary() {
    if (is_word("not")) {
      Query q;
      q.kind = Query::Kind::Not;
      q.span = span();
      ++i_;
      q.args.push_back(unary());
      return q;
    }
    return postfix();
  }

  std::vector<Query> arguments() {
    std::vector<Query> args;
    expect_punct("(");
    if (!is_punct(")")) {
      args.push_back(query());
      while (is_punct(",")) {
        ++i_;
        args.push_back(query());
      }
    }
    expect_punct(")");
    return args;
  }

  Query postfix() {
    Query q = primary();
    while (is_punct(".")) {
      ++i_;
      Query m;
      m.span = span();
      m.name = expect_ident("member name");
      m.args.push_back(std::move(q));
      if (is_punct("(")) {
        m.kind = Query::Kind::Method;
        for (Query& a : arguments()) m.args.push_back(std::move(a));
      } else {
        m.kind = Query::Kind::Member;
      }
      q = std::move(m);
    }
    return q;
  }

  Query primary() {
    Query q;
    q.span = span();
    const QTok& t = cur();
    switch (t.kind) {
      case QTok::Kind::Ident:
        ++i_;
        if (t.text == "true" || t.text == "false") {
          q.kind = Query::Kind::Literal;
          q.literal = Value(t.text == "true");
        } else if (is_punct("(")) {
          q.kind = Query::Kind::Call;
          q.name = t.text;
          q.args = arguments();
        } else {
          q.kind = Query::Kind::Var;
          q.name = t.text;
        }
        return q;
      case QTok::Kind::Int: {
        auto v = parse_int(t.text);
        if (!v) fail(q.span, "integer out of range");
        ++i_;
        q.kind = Query::Kind::Literal;
        q.literal = Value(*v);
        return q;
      }
      case QTok::Kind::Real: {
        auto v = parse_real(t.text);
        if (!v) fail(q.span, "real out of range");
        ++i_;
        q.kind = Query::Kind::Literal;
        q.literal = Value(*v);
        return q;
      }
      case QTok::Kind::String:
        ++i_;
        q.kind = Query::Kind::Literal;
        q.literal = Value(t.text);
        return q;
      case QTok::Kind::Punct:
        if (t.text == "(") {
          ++i_;
          Query inner = query();
          expect_punct(")");
          return inner;
        }
        break;
      case QTok::Kind::End:
        break;
    }
    fail(q.span, t.kind == QTok::Kind::End ? "expected a query" : "unexpected '" + t.text + "' in query");
  }

  std::vector<QTok> toks_;
  const Positions& pos_;
  std::size_t i_ = 0;
};

bool contains_call(const Query& q) {
  if (q.kind == Query::Kind::Call) return true;
  return std::any_of(q.args.begin(), q.args.end(), contains_call);
}

// --- tag scanning ---------------------------------------------------------

enum class TagType { Expr, If, Else, EndIf, For, EndFor, Template, EndTemplate, Comment };

struct Tag {
  TagType type;
  std::size_t begin;        // offset of '['
  std::size_t end;          // one past ']'
  std::size_t body_offset;  // offset of the tag's payload
  std::string_view body;    // payload after the keyword (query text etc.)
};

bool starts_word(std::string_view content, std::string_view word) {
  if (content.substr(0, word.size()) != word) return false;
  if (content.size() == word.size()) return true;
  char next = content[word.size()];
  return blank(next) || next == '(' || next == '\n' || next == '/';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (blank(s.front()) || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (blank(s.back()) || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::optional<Tag> scan_tag(std::string_view src, std::size_t open) {
  std::size_t i = open + 1;
  char quote = 0;
  for (; i < src.size(); ++i) {
    char c = src[i];
    if (quote) {
      if (c == '\\') ++i;
      else if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == ']') {
      break;
    } else if (c == '[') {
      return std::nullopt;
    }
  }
  if (i >= src.size()) return std::nullopt;
  std::string_view content = src.substr(open + 1, i - open - 1);
  Tag tag{TagType::Expr, open, i + 1, open + 1, content};
  auto payload = [&](std::size_t skip) {
    tag.body_offset = open + 1 + skip;
    tag.body = content.substr(skip);
  };
  if (content.empty()) return std::nullopt;
  std::string_view t = trim(content);
  if (t == "/if") tag.type = TagType::EndIf;
  else if (t == "/for") tag.type = TagType::EndFor;
  else if (t == "/template") tag.type = TagType::EndTemplate;
  else if (t == "else") tag.type = TagType::Else;
  else if (starts_word(content, "comment") && content.back() == '/') tag.type = TagType::Comment;
  else if (starts_word(content, "if")) { tag.type = TagType::If; payload(2); }
  else if (starts_word(content, "for")) { tag.type = TagType::For; payload(3); }
  else if (starts_word(content, "template")) { tag.type = TagType::Template; payload(8); }
  else if (content.back() == '/' && content.size() > 1 &&
           (ident_start(content[0]) || content[0] == '"' || content[0] == '\'' || content[0] == '(')) {
    tag.type = TagType::Expr;
    tag.body = content.substr(0, content.size() - 1);
  } else {
    return std::nullopt;
  }
  return tag;
}

// --- structure ------------------------------------------------------------

class TemplateParser {
 public:
  TemplateParser(std::string_view src, const std::string& file, std::string default_name)
      : src_(src), pos_(src, file), default_name_(std::move(default_name)) {}

  std::vector<Template> run() {
    bool has_defs = false;
    for (std::size_t i = src_.find('['); i != std::string_view::npos; i = src_.find('[', i + 1)) {
      if (auto tag = scan_tag(src_, i); tag && tag->type == TagType::Template) {
        has_defs = true;
        break;
      }
    }
    if (!has_defs) {
      Frame f;
      f.type = Frame::Kind::Template;
      f.tpl.name = default_name_;
      f.tpl.span = pos_.at(0, 0);
      stack_.push_back(std::move(f));
    } else {
      stack_.push_back(Frame{});  // outside any template
    }

    std::size_t pos = 0;
    while (pos < src_.size()) {
      std::size_t open = src_.find('[', pos);
      if (open == std::string_view::npos) {
        text_ += src_.substr(pos);
        break;
      }
      text_ += src_.substr(pos, open - pos);
      auto tag = scan_tag(src_, open);
      if (!tag) {
        text_ += '[';
        pos = open + 1;
        continue;
      }
      std::size_t end = tag->end;
      if (tag->type != TagType::Expr) end = swallow_line(*tag);
      flush();
      handle(*tag);
      pos = end;
    }
    flush();

    if (!has_defs) {
      Frame& f = stack_.back();
      if (stack_.size() != 1) fail(stack_.back().open, "unclosed block at end of template");
      out_.push_back(std::move(f.tpl));
    } else if (stack_.size() != 1) {
      fail(stack_.back().open, "unclosed block at end of template");
    }
    return std::move(out_);
  }

 private:
  struct Frame {
    enum class Kind { Outside, Template, If, For };
    Kind type = Kind::Outside;
    Template tpl;
    IfBlock if_block;
    ForBlock for_block;
    bool in_else = false;
    SourceSpan open;

    Nodes* current() {
      switch (type) {
        case Kind::Template: return &tpl.body;
        case Kind::If: return in_else ? &if_block.else_nodes : &if_block.then_nodes;
        case Kind::For: return &for_block.body;
        case Kind::Outside: return nullptr;
      }
      return nullptr;
    }
  };

  // Block tags alone on their line drop the indentation before them and the
  // line break after them.
  std::size_t swallow_line(const Tag& tag) {
    std::size_t line_start = tag.begin;
    while (line_start > 0 && src_[line_start - 1] != '\n') --line_start;
    for (std::size_t i = line_start; i < tag.begin; ++i)
      if (!blank(src_[i])) return tag.end;
    std::size_t after = tag.end;
    while (after < src_.size() && blank(src_[after])) ++after;
    if (after < src_.size() && src_[after] != '\n') return tag.end;
    // The indentation is the tail of the pending static text.
    std::size_t indent = tag.begin - line_start;
    if (text_.size() >= indent) text_.resize(text_.size() - indent);
    return after < src_.size() ? after + 1 : after;
  }

  void flush() {
    if (text_.empty()) return;
    Nodes* into = stack_.back().current();
    if (!into) {
      if (!trim(text_).empty())
        fail(pos_.at(0, 0), "text outside of a [template] definition");
    } else if (!into->empty() && std::holds_alternative<StaticText>(into->back().node)) {
      std::get<StaticText>(into->back().node).text += text_;
    } else {
      into->push_back(Node{StaticText{text_}});
    }
    text_.clear();
  }

  Nodes& current_nodes(const Tag& tag) {
    Nodes* into = stack_.back().current();
    if (!into) fail(pos_.at(tag.begin), "dynamic fragment outside of a [template] definition");
    return *into;
  }

  QueryParser query_parser(const Tag& tag) const {
    return QueryParser(lex_query(tag.body, tag.body_offset, pos_), pos_);
  }

  void check_binder(const std::string& name, const SourceSpan& span) {
    if (std::find(scope_.begin(), scope_.end(), name) != scope_.end())
      fail(span, "'" + name + "' is already bound in this scope");
  }

  void handle(const Tag& tag) {
    SourceSpan span = pos_.at(tag.begin, tag.end - tag.begin);
    switch (tag.type) {
      case TagType::Comment:
        return;
      case TagType::Expr: {
        QueryParser qp = query_parser(tag);
        Query q = qp.query();
        qp.expect_end();
        if (q.kind == Query::Kind::Call) {
          for (const Query& a : q.args)
            if (contains_call(a)) fail(a.span, "template calls cannot be nested inside queries");
          current_nodes(tag).push_back(Node{CallNode{q.name, std::move(q.args), span}});
        } else {
          if (contains_call(q)) fail(span, "template calls must stand alone in a [.../] fragment");
          current_nodes(tag).push_back(Node{ExprNode{std::move(q)}});
        }
        return;
      }
      case TagType::If: {
        current_nodes(tag);
        QueryParser qp = query_parser(tag);
        Frame f;
        f.type = Frame::Kind::If;
        f.if_block.cond = qp.query();
        qp.expect_end();
        if (contains_call(f.if_block.cond)) fail(span, "template calls are not allowed in conditions");
        f.open = span;
        stack_.push_back(std::move(f));
        return;
      }
      case TagType::Else: {
        Frame& f = stack_.back();
        if (f.type != Frame::Kind::If || f.in_else) fail(span, "[else] without a matching [if]");
        f.in_else = true;
        return;
      }
      case TagType::EndIf: {
        if (stack_.back().type != Frame::Kind::If) fail(span, "[/if] without a matching [if]");
        Frame f = std::move(stack_.back());
        stack_.pop_back();
        stack_.back().current()->push_back(Node{std::move(f.if_block)});
        return;
      }
      case TagType::For: {
        current_nodes(tag);
        QueryParser qp = query_parser(tag);
        Frame f;
        f.type = Frame::Kind::For;
        f.open = span;
        qp.expect_punct("(");
        SourceSpan binder_span = qp.span();
        f.for_block.binder = qp.expect_ident("loop variable");
        check_binder(f.for_block.binder, binder_span);
        qp.expect_punct(":");
        f.for_block.collection = qp.query();
        if (contains_call(f.for_block.collection)) fail(span, "template calls are not allowed in [for]");
        qp.expect_punct(")");
        if (qp.is_word("separator")) {
          qp.expect_ident("separator");
          qp.expect_punct("(");
          f.for_block.separator = qp.expect_string("separator string");
          qp.expect_punct(")");
        }
        qp.expect_end();
        scope_.push_back(f.for_block.binder);
        stack_.push_back(std::move(f));
        return;
      }
      case TagType::EndFor: {
        if (stack_.back().type != Frame::Kind::For) fail(span, "[/for] without a matching [for]");
        Frame f = std::move(stack_.back());
        stack_.pop_back();
        scope_.pop_back();
        stack_.back().current()->push_back(Node{std::move(f.for_block)});
        return;
      }
      case TagType::Template: {
        if (stack_.back().type != Frame::Kind::Outside)
          fail(span, "[template] definitions cannot be nested");
        QueryParser qp = query_parser(tag);
        Frame f;
        f.type = Frame::Kind::Template;
        f.open = span;
        f.tpl.span = span;
        f.tpl.name = qp.expect_ident("template name");
        qp.expect_punct("(");
        while (!qp.is_punct(")")) {
          if (!f.tpl.params.empty()) qp.expect_punct(",");
          Param p;
          SourceSpan ps = qp.span();
          p.name = qp.expect_ident("parameter name");
          qp.expect_punct(":");
          SourceSpan ks = qp.span();
          std::string kind = qp.expect_ident("parameter kind");
          auto k = kind_from_keyword(kind);
          if (!k) fail(ks, "unknown parameter kind '" + kind + "'");
          p.kind = *k;
          for (const Param& other : f.tpl.params)
            if (other.name == p.name) fail(ps, "duplicate parameter '" + p.name + "'");
          f.tpl.params.push_back(std::move(p));
        }
        qp.expect_punct(")");
        qp.expect_end();
        scope_.clear();
        for (const Param& p : f.tpl.params) scope_.push_back(p.name);
        stack_.push_back(std::move(f));
        return;
      }
      case TagType::EndTemplate: {
        if (stack_.back().type != Frame::Kind::Template || stack_.size() != 2)
          fail(span, stack_.back().type == Frame::Kind::Template ? "[/template] without a matching [template]"
                                                                 : "unclosed block before [/template]");
        out_.push_back(std::move(stack_.back().tpl));
        stack_.pop_back();
        scope_.clear();
        return;
      }
    }
  }

  std::string_view src_;
  Positions pos_;
  std::string default_name_;
  std::vector<Frame> stack_;
  std::vector<std::string> scope_;
  std::string text_;
  std::vector<Template> out_;
};

void check_calls(const Nodes& nodes, const TemplateSet& set, Diagnostics& diags) {
  for (const Node& n : nodes) {
    if (const auto* c = std::get_if<CallNode>(&n.node)) {
      auto it = set.find(c->callee);
      if (it == set.end()) {
        diags.push_back(make_error("E-TPL-CALL", "call to unknown template '" + c->callee + "'", c->span));
      } else if (it->second.params.size() != c->args.size()) {
        diags.push_back(make_error("E-TPL-CALL",
                                   "template '" + c->callee + "' takes " + std::to_string(it->second.params.size()) +
                                       " argument(s), " + std::to_string(c->args.size()) + " given",
                                   c->span));
      }
    } else if (const auto* i = std::get_if<IfBlock>(&n.node)) {
      check_calls(i->then_nodes, set, diags);
      check_calls(i->else_nodes, set, diags);
    } else if (const auto* f = std::get_if<ForBlock>(&n.node)) {
      check_calls(f->body, set, diags);
    }
  }
}

}  // namespace

Result<std::vector<Template>> parse_template(std::string_view source, const std::string& file,
                                             const std::string& default_name) {
  try {
    return TemplateParser(source, file, default_name).run();
  } catch (const TplError& e) {
    return Diagnostics{e.diag};
  }
}

Diagnostics add_templates(TemplateSet& set, std::vector<Template> templates) {
  Diagnostics diags;
  for (Template& t : templates) {
    std::string name = t.name;
    SourceSpan span = t.span;
    if (!set.emplace(name, std::move(t)).second)
      diags.push_back(make_error("E-TPL-PARSE", "template '" + name + "' is defined more than once", span));
  }
  return diags;
}

Diagnostics link_templates(const TemplateSet& set) {
  Diagnostics diags;
  for (const auto& [name, tpl] : set) check_calls(tpl.body, set, diags);
  sort_diagnostics(diags);
  return diags;
}

}  // namespace pnpc::tpl
