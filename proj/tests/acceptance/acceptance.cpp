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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits non-zero when any of them fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <memory>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "pnpc/codegen/builtin.hpp"
#include "pnpc/codegen/codegen.hpp"
#include "pnpc/dsl/analyzer.hpp"
#include "pnpc/dsl/parser.hpp"
#include "pnpc/dsl/printer.hpp"
#include "pnpc/fm/configuration.hpp"
#include "pnpc/fm/feature_model.hpp"
#include "pnpc/sim/world.hpp"
#include "pnpc/tpl/template.hpp"
#include "pnpc/variability/mapping.hpp"
#include "support/config_oracle.hpp"
#include "support/random_program.hpp"
#include "support/support.hpp"

namespace {

namespace fs = std::filesystem;
using pnpc::testing::data_path;
using pnpc::testing::fixture_path;
using pnpc::testing::read_text;

// Thrown by a criterion body to report the first failed expectation.
struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

struct Outcome {
  int exit_code = -1;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("pnpc-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome cli(const std::string& args) {
  const fs::path err_file = scratch() / "stderr.txt";
  std::string cmd = "PNPC_NO_COLOR=1 '" PNPC_CLI "' " + args + " >/dev/null 2>" + quoted(err_file);
  int status = std::system(cmd.c_str());
  Outcome o;
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.err = fs::exists(err_file) ? read_text(err_file) : "";
  return o;
}

std::string product_args(const std::string& program, const std::string& cfg) {
  return quoted(data_path("genbot/" + program)) + " --model " + quoted(data_path("genbot/genbot.fm")) +
         " --config " + quoted(data_path("genbot/" + cfg)) + " --mapping " + quoted(data_path("genbot/genbot.map"));
}

std::string generate_unit(const std::string& cfg, const std::string& unit, const std::string& tag) {
  fs::path out = scratch() / tag;
  Outcome o = cli("generate " + product_args("pick_place.pnp", cfg) + " -o " + quoted(out));
  require(o.exit_code == 0, "generate exited " + std::to_string(o.exit_code) + ": " + o.err);
  return read_text(out / unit);
}

std::size_t token_diffs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::size_t diffs = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) ++diffs;
  return diffs;
}

pnpc::fm::FeatureModel load_model(const std::string& rel) {
  auto m = pnpc::fm::parse_feature_model(read_text(data_path(rel)), rel);
  require(m.ok(), rel + " does not load");
  return *m;
}

// --- criteria ---------------------------------------------------------------

std::string golden_controller_init() {
  std::string code = generate_unit("lwr-sim.cfg", "src/controller_init.cpp", "lwr");
  std::size_t diffs = token_diffs(pnpc::testing::cpp_tokens(code),
                                  pnpc::testing::cpp_tokens(read_text(fixture_path("golden/controller_init_lwr.txt"))));
  require(diffs == 0, std::to_string(diffs) + " token differences");
  return "0 token differences";
}

std::string joint_arity() {
  std::string code = generate_unit("lwr-sim-6.cfg", "src/controller_init.cpp", "joints6") +
                     generate_unit("lwr-sim-6.cfg", "src/main.cpp", "joints6");
  std::regex arity("<(\\d+)>");
  int total = 0;
  for (auto it = std::sregex_iterator(code.begin(), code.end(), arity); it != std::sregex_iterator(); ++it) {
    require((*it)[1] == "6", "found arity <" + (*it)[1].str() + ">");
    ++total;
  }
  require(total == 3, std::to_string(total) + " templated arities, expected 3");
  return "3 arities, all <6>";
}

std::string oracle_agreement() {
  std::string detail;
  for (const char* rel : {"models/optional_child.fm", "models/alternative_pair.fm", "models/fri.fm",
                          "models/workcell.fm", "models/genbot_lite.fm", "genbot/genbot.fm"}) {
    pnpc::fm::FeatureModel model = load_model(rel);
    pnpc::testing::OracleComparison r = pnpc::testing::compare_with_oracle(model);
    require(r.disagreements == 0, std::string(rel) + ": " + r.first_disagreement);
    auto all = pnpc::fm::enumerate_configurations(model, 1u << 20);
    require(all.ok() && all->size() == r.valid, std::string(rel) + ": enumeration disagrees with the oracle");
    if (!detail.empty()) detail += ", ";
    detail += fs::path(rel).stem().string() + " " + std::to_string(model.feature_count()) + "f/" +
              std::to_string(r.valid) + "v";
  }
  return detail;
}

std::string perceive_check() {
  Outcome without = cli("check " + product_args("sort_by_color.pnp", "lwr-sim.cfg"));
  require(without.exit_code == 1, "lwr-sim exited " + std::to_string(without.exit_code));
  require(without.err.find("error[E-VARIANT]") != std::string::npos, "no E-VARIANT diagnostic");
  require(without.err.find("Perception") != std::string::npos, "diagnostic does not name Perception");
  Outcome with = cli("check " + product_args("sort_by_color.pnp", "lwr-sim-perception.cfg"));
  require(with.exit_code == 0, "lwr-sim-perception exited " + std::to_string(with.exit_code) + ": " + with.err);
  return "exit 1 then 0";
}

std::string sim_golden() {
  fs::path state = scratch() / "final.json";
  Outcome o = cli("simulate " + quoted(fixture_path("sim/two_objects.pnp")) + " --final-state " + quoted(state));
  require(o.exit_code == 0, "simulate exited " + std::to_string(o.exit_code) + ": " + o.err);
  nlohmann::json got = nlohmann::json::parse(read_text(state));
  nlohmann::json want = nlohmann::json::parse(read_text(fixture_path("sim/two_objects.final.json")));
  require(got.size() == want.size(), "object count differs");
  double worst = 0;
  for (const auto& [name, pose] : want.items()) {
    require(got.contains(name) && got[name].size() == pose.size(), "pose of " + name + " missing");
    for (std::size_t i = 0; i < pose.size(); ++i)
      worst = std::max(worst, std::fabs(got[name][i].get<double>() - pose[i].get<double>()));
  }
  require(worst <= 1e-9, "deviation " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3g", worst);
  return buf;
}

bool exclusive(const pnpc::sim::WorldState& w) {
  std::map<std::string, int> holders;
  for (const auto& [rname, r] : w.robots)
    if (r.holding) ++holders[*r.holding];
  for (const auto& [oname, o] : w.objects) {
    int n = holders.count(oname) ? holders.at(oname) : 0;
    if (n > 1 || o.held != (n == 1)) return false;
  }
  return true;
}

std::string properties() {
  using namespace pnpc;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(pnpc::testing::source_dir() / "tests" / "corpus")) {
    auto p = dsl::parse_source(read_text(entry.path()));
    require(p.ok(), entry.path().filename().string() + " does not parse");
    auto again = dsl::parse_source(dsl::pretty_print(*p));
    require(again.ok() && *again == *p, entry.path().filename().string() + " does not round-trip");
    ++files;
  }
  require(files >= 20, "corpus has only " + std::to_string(files) + " files");

  pnpc::testing::RandomProgram gen(2026);
  for (int i = 0; i < 1000; ++i) {
    std::string src = gen.generate();
    auto p = dsl::parse_source(src);
    require(p.ok() && !has_errors(dsl::analyze(*p)), "generator produced an invalid program:\n" + src);
    std::size_t count = sim::init_world(*p).objects.size();
    bool ok = true;
    sim::RunOptions opts;
    opts.allow_unperceived = i % 2 == 0;
    opts.observer = [&](const sim::WorldState& w, const sim::TraceEvent&) {
      ok = ok && w.objects.size() == count && exclusive(w);
    };
    sim::run(*p, opts);
    require(ok, "invariant broken by:\n" + src);
  }

  std::mt19937 rng(7);
  const std::string alphabet = "abxyz0123 \t\n[](){}<>;:,.=+-*\"'#&|!?";
  for (int i = 0; i < 500; ++i) {
    std::string text;
    for (std::size_t k = rng() % 200; k > 0; --k) text += alphabet[rng() % alphabet.size()];
    auto t = tpl::parse_template(text, "t.gt", "main");
    require(t.ok() && t->size() == 1, "static text rejected");
    auto out = tpl::render(t->front(), {});
    require(out.ok() && *out == text, "static text altered");
  }

  auto model = fm::parse_feature_model(read_text(data_path("genbot/genbot.fm")));
  auto cfg = fm::parse_configuration(read_text(data_path("genbot/lwr-sim-perception.cfg")), *model);
  auto mapping = variability::parse_mapping(read_text(data_path("genbot/genbot.map")), *model);
  auto templates = codegen::builtin_templates();
  auto program = dsl::parse_source(read_text(data_path("genbot/sort_by_color.pnp")));
  require(model.ok() && cfg.ok() && mapping.ok() && templates.ok() && program.ok(), "bundled inputs do not load");
  auto shared = std::make_shared<const dsl::Program>(*program);
  auto first = codegen::generate(shared, *cfg, *mapping, *templates);
  require(first.ok(), "generation failed");
  for (int i = 0; i < 10; ++i) {
    auto again = codegen::generate(shared, *cfg, *mapping, *templates);
    require(again.ok() && *again == *first, "generation is not deterministic");
  }
  return std::to_string(files) + " corpus files, 1000 simulations, 500 templates, 10 generations";
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<std::string()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"controller_init matches the golden file token for token", 1.0, golden_controller_init},
      {"joints = 6 sets every templated arity", 1.0, joint_arity},
      {"configuration validator agrees with the oracle", 10.0, oracle_agreement},
      {"perceive is rejected without Perception", 1.0, perceive_check},
      {"two-object simulation matches the golden state", 1.0, sim_golden},
      {"property suites", 60.0, properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      detail += "; over the " + std::to_string(c.budget_s) + " s budget";
    }
    if (!ok) ++failed;
    std::printf("%s [%zu] %s (%.3f s): %s\n", ok ? "PASS" : "FAIL", i + 1, c.name, secs, detail.c_str());
  }
  fs::remove_all(scratch());
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
