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

#include "pnpc/codegen/codegen.hpp"

#include <openssl/evp.h>

#include <map>
#include <set>

#include <json.hpp>

#include "pnpc/support/number.hpp"

namespace pnpc::codegen {

namespace {

struct TypeRow {
  dsl::RobotType type;
  const char* feature;
  const char* controller;
  const char* ik;
  const char* fk;
  double cycle_time;
};

// Framework classes and cycle times per robot type. The KR16_2 and RX130
// rows are placeholders.
constexpr TypeRow kTypes[] = {
    {dsl::RobotType::LWR, "LWR", "LWRRobotController", "LWR_ik_AC", "LWRFK", 0.034},
    {dsl::RobotType::KR16_2, "KR16_2", "KR16RobotController", "KR16_ik", "KR16FK", 0.012},
    {dsl::RobotType::RX130, "RX130", "RX130RobotController", "RX130_ik", "RX130FK", 0.016},
};

struct GenError {
  Diagnostics diags;
};

std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

std::string cpp_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_or_throw(const tpl::TemplateSet& templates, std::string_view name,
                            const tpl::RenderContext& ctx) {
  auto text = tpl::render(templates, name, ctx);
  if (!text) throw GenError{text.diagnostics()};
  return std::move(text).value();
}

// Emits the statement body of main(). Control flow is written here; each
// primitive statement goes through its call template.
class BodyWriter {
 public:
  BodyWriter(const dsl::Program& program, const tpl::TemplateSet& templates)
      : program_(program), templates_(templates) {
    int index = 0;
    for (const dsl::RobotDecl* r : program.robots()) robot_vars_[r->name.name] = "rb" + std::to_string(++index);
  }

  std::string run() {
    block(program_.statements, 1);
    return std::move(out_);
  }

 private:
  std::string robot(const std::optional<dsl::NameRef>& name) const {
    if (name) return robot_vars_.at(name->name);
    return "rb1";
  }

  std::string object(const dsl::NameRef& name) const {
    if (binders_.count(name.name)) return "obj_" + name.name;
    return "scene.object(" + cpp_string(name.name) + ")";
  }

  static std::string target(const dsl::Target& t) {
    if (const auto* n = std::get_if<dsl::NameRef>(&t)) return "loc_" + n->name;
    const auto& p = std::get<dsl::Pose>(t);
    return "GeNBot::Pose(" + format_real(p.x) + ", " + format_real(p.y) + ", " + format_real(p.z) + ", " +
           format_real(p.roll) + ", " + format_real(p.pitch) + ", " + format_real(p.yaw) + ")";
  }

  static std::string matcher(const std::optional<dsl::Matcher>& m) {
    if (!m) return "";
    if (const auto* c = std::get_if<dsl::ByColor>(&*m)) return "GeNBot::Match::color(" + cpp_string(c->color.name) + ")";
    return "GeNBot::Match::shape(" + cpp_string(dsl::to_string(std::get<dsl::ByShape>(*m).shape)) + ")";
  }

  std::string condition(const dsl::Condition& c) const {
    switch (c.kind) {
      case dsl::Condition::Kind::Exists:
        return "scene.exists(" + object(c.name) + ")";
      case dsl::Condition::Kind::Holding:
        return robot_vars_.at(c.name.name) + "->holding()";
      case dsl::Condition::Kind::Not:
        return "!(" + condition(c.operand.front()) + ")";
    }
    return "false";
  }

  void line(int depth, const std::string& text) { out_ += indent(depth) + text + "\n"; }

  void call(int depth, std::string_view name, const tpl::RenderContext& ctx) {
    std::string text = render_or_throw(templates_, name, ctx);
    // Multi-line call templates keep their own relative indentation.
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!piece.empty()) line(depth, piece);
      else if (end != std::string::npos) out_ += "\n";
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }

  void block(const dsl::Block& body, int depth) {
    for (const dsl::Statement& st : body) statement(st, depth);
  }

  void statement(const dsl::Statement& st, int depth) {
    if (const auto* s = st.as<dsl::Pick>()) {
      call(depth, "pickCall", {{"robot", robot(s->robot)}, {"object", object(s->object)}});
    } else if (const auto* s = st.as<dsl::Place>()) {
      call(depth, "placeCall",
           {{"robot", robot(s->robot)}, {"object", object(s->object)}, {"target", target(s->target)}});
    } else if (const auto* s = st.as<dsl::Move>()) {
      call(depth, "moveCall", {{"robot", robot(s->robot)}, {"target", target(s->target)}});
    } else if (const auto* s = st.as<dsl::Perceive>()) {
      call(depth, "perceiveCall",
           {{"sensor", s->sensor ? cpp_string(s->sensor->name) : std::string()}, {"matcher", matcher(s->matcher)}});
    } else if (const auto* s = st.as<dsl::Repeat>()) {
      std::string i = "i" + std::to_string(++loops_);
      line(depth, "for (int " + i + " = 0; " + i + " < " + std::to_string(s->count) + "; ++" + i + ") {");
      block(s->body, depth + 1);
      line(depth, "}");
    } else if (const auto* s = st.as<dsl::If>()) {
      line(depth, "if (" + condition(s->cond) + ") {");
      block(s->then_body, depth + 1);
      if (s->else_body) {
        line(depth, "} else {");
        block(*s->else_body, depth + 1);
      }
      line(depth, "}");
    } else if (const auto* s = st.as<dsl::ForEachPerceived>()) {
      std::string m = matcher(s->matcher);
      line(depth, "for (GeNBot::ObjectRef obj_" + s->binder.name + " : scene.perceived(" +
                      (m.empty() ? "GeNBot::Match::any()" : m) + ")) {");
      binders_.insert(s->binder.name);
      block(s->body, depth + 1);
      binders_.erase(s->binder.name);
      line(depth, "}");
    }
  }

  const dsl::Program& program_;
  const tpl::TemplateSet& templates_;
  std::map<std::string, std::string> robot_vars_;
  std::set<std::string> binders_;
  std::string out_;
  int loops_ = 0;
};

std::string manifest(const dsl::Program& program, const TargetProfile& profile,
                     const std::vector<InputFile>& inputs) {
  nlohmann::ordered_json j;
  j["toolVersion"] = kToolVersion;
  std::map<std::string, std::string> hashes;
  for (const InputFile& in : inputs) hashes[in.path] = sha256_hex(in.content);
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [path, hash] : hashes) j["inputs"][path] = hash;
  nlohmann::ordered_json p;
  p["robotType"] = std::string(dsl::to_string(profile.robot_type));
  p["joints"] = profile.joints;
  p["controllerClass"] = profile.controller_class;
  p["ikClass"] = profile.ik_class;
  p["fkClass"] = profile.fk_class;
  p["cycleTime"] = profile.cycle_time;
  p["kinematicsFile"] = profile.kinematics_file;
  p["simulator"] = profile.simulator;
  j["profile"] = std::move(p);
  std::set<std::string> names;
  for (const auto& use : variability::construct_uses(program))
    names.insert(std::string(dsl::construct_name(use.construct)));
  j["constructsUsed"] = names;
  return j.dump(2) + "\n";
}

}  // namespace

Result<TargetProfile> build_profile(const fm::FeatureConfiguration& config, const dsl::Program& program) {
  const TypeRow* row = nullptr;
  for (const TypeRow& r : kTypes)
    if (config.includes(r.feature)) row = &r;
  if (!row)
    return Diagnostics{make_error("E-GEN-PROFILE", "configuration '" + config.name + "' selects no robot type",
                                  config.span)};

  TargetProfile profile;
  profile.robot_type = row->type;
  profile.controller_class = row->controller;
  profile.ik_class = row->ik;
  profile.fk_class = row->fk;
  profile.cycle_time = row->cycle_time;
  profile.simulator = config.includes("Simulator");

  Diagnostics diags;
  auto joints = config.attribute("Hardware", "joints");
  const auto* j = joints ? std::get_if<std::int64_t>(&*joints) : nullptr;
  if (!j || *j < 1 || *j > 64) {
    diags.push_back(make_error("E-GEN-PROFILE", "configuration '" + config.name +
                                                    "' needs a Hardware.joints value between 1 and 64",
                               config.span));
  } else {
    profile.joints = static_cast<int>(*j);
  }
  auto file = config.attribute("Hardware", "kinematicsFile");
  const auto* f = file ? std::get_if<std::string>(&*file) : nullptr;
  profile.kinematics_file = f ? *f : kDefaultKinematicsFile;

  for (const dsl::RobotDecl* r : program.robots()) {
    if (r->type != row->type)
      diags.push_back(make_error("E-GEN-PROFILE",
                                 "robot '" + r->name.name + "' is a " + std::string(dsl::to_string(r->type)) +
                                     " but configuration '" + config.name + "' targets " + row->feature,
                                 r->type_span));
  }
  if (!diags.empty()) {
    sort_diagnostics(diags);
    return diags;
  }
  return profile;
}

tpl::Value profile_value(const TargetProfile& profile) {
  return tpl::Value(tpl::Value::Record{
      {"robotType", std::string(dsl::to_string(profile.robot_type))},
      {"joints", profile.joints},
      {"controllerClass", profile.controller_class},
      {"ikClass", profile.ik_class},
      {"fkClass", profile.fk_class},
      {"cycleTime", profile.cycle_time},
      {"kinematicsFile", profile.kinematics_file},
      {"simulator", profile.simulator},
  });
}

Result<std::vector<GeneratedUnit>> generate(const std::shared_ptr<const dsl::Program>& program,
                                            const fm::FeatureConfiguration& config,
                                            const variability::MappingTable& mapping,
                                            const tpl::TemplateSet& templates,
                                            const std::vector<InputFile>& inputs) {
  if (Diagnostics d = variability::check_program(*program, mapping, config); !d.empty()) return d;
  auto profile = build_profile(config, *program);
  if (!profile) return profile.diagnostics();

  tpl::Value program_value(program);
  tpl::Value profile_rec = profile_value(*profile);
  tpl::Value config_value(std::make_shared<const fm::FeatureConfiguration>(config));

  std::vector<GeneratedUnit> units;
  try {
    units.push_back({"src/controller_init.cpp",
                     render_or_throw(templates, "controllerInitUnit",
                                     {{"program", program_value}, {"profile", profile_rec}})});
    std::string body = BodyWriter(*program, templates).run();
    units.push_back({"src/main.cpp", render_or_throw(templates, "mainUnit",
                                                     {{"program", program_value},
                                                      {"cfg", config_value},
                                                      {"profile", profile_rec},
                                                      {"body", body}})});
    units.push_back({"include/genbot_stub/genbot.hpp", render_or_throw(templates, "genbotStub", {})});
  } catch (const GenError& e) {
    return e.diags;
  }
  units.push_back({"gen-manifest.json", manifest(*program, *profile, inputs)});
  return units;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace pnpc::codegen
