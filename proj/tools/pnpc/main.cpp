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

// pnpc: command-line driver for the pick-and-place toolchain.
//
// Exit status: 0 success, 1 diagnostics or runtime error, 2 usage or I/O
// error. Diagnostics go to stderr, one per line, sorted by position.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnpc.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

// Thrown for I/O failures; main() turns it into exit status 2.
struct IoError {
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Diags = Handle<pnpc_diagnostics, pnpc_diagnostics_free>;
using Program = Handle<pnpc_program, pnpc_program_free>;
using Model = Handle<pnpc_feature_model, pnpc_model_free>;
using Config = Handle<pnpc_configuration, pnpc_configuration_free>;
using Mapping = Handle<pnpc_mapping, pnpc_mapping_free>;
using Templates = Handle<pnpc_templates, pnpc_templates_free>;
using Units = Handle<pnpc_units, pnpc_units_free>;
using SimResult = Handle<pnpc_sim_result, pnpc_sim_result_free>;

std::string take(char* s) {
  std::string out = s ? s : "";
  pnpc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError{"cannot read '" + path + "'"};
  return ss.str();
}

// Writes each file to a temporary sibling first and renames only once all
// of them were written, so a failure leaves no partial output behind.
void write_files_atomically(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<std::pair<fs::path, fs::path>> staged;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& [tmp, dest] : staged) fs::remove(tmp, ec);
  };
  for (const auto& [dest, content] : files) {
    std::error_code ec;
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path(), ec);
    if (ec) {
      cleanup();
      throw IoError{"cannot create directory '" + dest.parent_path().string() + "': " + ec.message()};
    }
    fs::path tmp = dest;
    tmp += ".pnpc-tmp-" + std::to_string(::getpid());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) staged.emplace_back(tmp, dest);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw IoError{"cannot write '" + dest.string() + "'"};
    }
  }
  for (const auto& [tmp, dest] : staged) {
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
      cleanup();
      throw IoError{"cannot write '" + dest.string() + "': " + ec.message()};
    }
  }
}

bool use_color() { return std::getenv("PNPC_NO_COLOR") == nullptr && ::isatty(STDERR_FILENO); }

// Prints diagnostics sorted by position and returns the number of errors.
std::size_t print_diagnostics(pnpc_diagnostics* diags) {
  pnpc_diagnostics_sort(diags);
  bool color = use_color();
  for (std::size_t i = 0; i < pnpc_diagnostics_count(diags); ++i) {
    pnpc_diagnostic d;
    pnpc_diagnostics_get(diags, i, &d);
    bool error = d.severity == PNPC_SEVERITY_ERROR;
    const char* severity = error ? "error" : "warning";
    std::string sev = color ? std::string(error ? "\033[1;31m" : "\033[1;33m") + severity + "\033[0m" : severity;
    std::cerr << (*d.file ? d.file : "<input>") << ':' << d.line << ':' << d.column << ": " << sev << '['
              << d.code << "]: " << d.message << '\n';
  }
  return pnpc_diagnostics_error_count(diags);
}

void check_status(pnpc_status status) {
  if (status == PNPC_INTERNAL || status == PNPC_INVALID_ARGUMENT)
    throw IoError{std::string("internal failure: ") + pnpc_status_string(status)};
}

// Loaders return an empty handle when the input was rejected; the reasons
// are in `diags`.
Program load_program(const std::string& path, pnpc_diagnostics* diags) {
  std::string src = read_file(path);
  pnpc_program* p = nullptr;
  check_status(pnpc_program_parse(src.data(), src.size(), path.c_str(), diags, &p));
  return Program(p);
}

Model load_model(const std::string& path, pnpc_diagnostics* diags) {
  std::string src = read_file(path);
  pnpc_feature_model* m = nullptr;
  check_status(pnpc_model_parse(src.data(), src.size(), path.c_str(), diags, &m));
  return Model(m);
}

// Parses and validates a configuration.
Config load_config(const pnpc_feature_model* model, const std::string& path, pnpc_diagnostics* diags) {
  std::string src = read_file(path);
  pnpc_configuration* c = nullptr;
  check_status(pnpc_configuration_parse(model, src.data(), src.size(), path.c_str(), diags, &c));
  Config config(c);
  if (config && pnpc_configuration_validate(config.get(), model, diags) != PNPC_OK) config.reset();
  return config;
}

Mapping load_mapping(const pnpc_feature_model* model, const std::string& path, pnpc_diagnostics* diags) {
  std::string src = read_file(path);
  pnpc_mapping* m = nullptr;
  check_status(pnpc_mapping_parse(model, src.data(), src.size(), path.c_str(), diags, &m));
  return Mapping(m);
}

Templates load_templates(const std::optional<std::string>& dir, pnpc_diagnostics* diags) {
  pnpc_templates* t = nullptr;
  if (!dir) {
    check_status(pnpc_templates_builtin(diags, &t));
    return Templates(t);
  }
  std::vector<fs::path> paths;
  std::error_code ec;
  for (fs::directory_iterator it(*dir, ec), end; !ec && it != end; it.increment(ec))
    if (it->is_regular_file() && it->path().extension() == ".gt") paths.push_back(it->path());
  if (ec) throw IoError{"cannot read template directory '" + *dir + "': " + ec.message()};
  std::sort(paths.begin(), paths.end());
  std::vector<std::string> names, sources;
  for (const fs::path& p : paths) {
    names.push_back(p.string());
    sources.push_back(read_file(p.string()));
  }
  std::vector<const char*> name_ptrs, source_ptrs;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    name_ptrs.push_back(names[i].c_str());
    source_ptrs.push_back(sources[i].c_str());
  }
  check_status(pnpc_templates_load(name_ptrs.data(), source_ptrs.data(), paths.size(), diags, &t));
  return Templates(t);
}

struct Options {
  std::string program, model, config, mapping, output, trace, final_state;
  std::optional<std::string> templates;
  bool ast_json = false;
  bool pretty = false;
  bool allow_unperceived = false;
  std::size_t limit = 1000;
};

int finish(pnpc_diagnostics* diags) { return print_diagnostics(diags) > 0 ? kExitDiagnostics : kExitOk; }

int rejected(pnpc_diagnostics* diags) {
  print_diagnostics(diags);
  return kExitDiagnostics;
}

int cmd_parse(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Program program = load_program(o.program, diags.get());
  if (!program) return rejected(diags.get());
  if (o.ast_json) {
    char* json = nullptr;
    check_status(pnpc_program_ast_json(program.get(), &json));
    std::cout << take(json);
  }
  if (o.pretty) {
    char* text = nullptr;
    check_status(pnpc_program_pretty(program.get(), &text));
    std::cout << take(text);
  }
  return finish(diags.get());
}

int cmd_fm_validate(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Model model = load_model(o.model, diags.get());
  return finish(diags.get());
}

int cmd_fm_config_validate(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Model model = load_model(o.model, diags.get());
  if (model) Config config = load_config(model.get(), o.config, diags.get());
  return finish(diags.get());
}

int cmd_fm_enumerate(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Model model = load_model(o.model, diags.get());
  if (model) {
    char* text = nullptr;
    if (pnpc_model_enumerate(model.get(), o.limit, diags.get(), &text) == PNPC_OK) std::cout << take(text);
  }
  return finish(diags.get());
}

struct Checked {
  Program program;
  Model model;
  Config config;
  Mapping mapping;
};

// Loads every input of check/generate; all handles are set only if every
// input was accepted and the program uses no disabled construct.
Checked load_checked(const Options& o, pnpc_diagnostics* diags) {
  Checked c;
  c.program = load_program(o.program, diags);
  c.model = load_model(o.model, diags);
  if (c.model) {
    c.config = load_config(c.model.get(), o.config, diags);
    c.mapping = load_mapping(c.model.get(), o.mapping, diags);
  }
  if (!c.program || !c.config || !c.mapping) {
    c.program.reset();
    return c;
  }
  if (pnpc_check(c.program.get(), c.config.get(), c.mapping.get(), diags) != PNPC_OK) c.program.reset();
  return c;
}

int cmd_check(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  load_checked(o, diags.get());
  return finish(diags.get());
}

int cmd_generate(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Checked c = load_checked(o, diags.get());
  if (!c.program) return rejected(diags.get());
  Templates templates = load_templates(o.templates, diags.get());
  if (!templates) return rejected(diags.get());

  std::vector<std::string> contents;
  std::vector<std::string> paths = {o.program, o.model, o.config, o.mapping};
  for (const std::string& p : paths) contents.push_back(read_file(p));
  std::vector<pnpc_input> inputs;
  for (std::size_t i = 0; i < paths.size(); ++i)
    inputs.push_back({paths[i].c_str(), contents[i].data(), contents[i].size()});

  pnpc_units* raw = nullptr;
  check_status(pnpc_generate(c.program.get(), c.config.get(), c.mapping.get(), templates.get(), inputs.data(),
                             inputs.size(), diags.get(), &raw));
  Units units(raw);
  if (!units) return rejected(diags.get());

  std::vector<std::pair<fs::path, std::string>> files;
  for (std::size_t i = 0; i < pnpc_units_count(units.get()); ++i) {
    std::size_t len = 0;
    const char* content = pnpc_unit_content(units.get(), i, &len);
    files.emplace_back(fs::path(o.output) / pnpc_unit_path(units.get(), i), std::string(content, len));
  }
  write_files_atomically(files);
  return finish(diags.get());
}

int cmd_simulate(const Options& o) {
  Diags diags(pnpc_diagnostics_new());
  Program program = load_program(o.program, diags.get());
  if (!program) return rejected(diags.get());
  pnpc_sim_options opts{o.allow_unperceived ? 1 : 0, 0};
  pnpc_sim_result* raw = nullptr;
  pnpc_status status = pnpc_simulate(program.get(), &opts, diags.get(), &raw);
  check_status(status);
  SimResult result(raw);
  std::vector<std::pair<fs::path, std::string>> files;
  if (!o.trace.empty()) {
    char* json = nullptr;
    check_status(pnpc_sim_trace_json(result.get(), &json));
    files.emplace_back(o.trace, take(json));
  }
  if (!o.final_state.empty() && !pnpc_sim_failed(result.get())) {
    char* json = nullptr;
    check_status(pnpc_sim_final_state_json(result.get(), &json));
    files.emplace_back(o.final_state, take(json));
  }
  write_files_atomically(files);
  return finish(diags.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pnpc: variability-aware compiler for pick-and-place robot programs"};
  app.set_version_flag("--version", pnpc_version());
  app.require_subcommand(1);
  Options o;
  int (*command)(const Options&) = nullptr;

  auto* parse = app.add_subcommand("parse", "Parse and analyze a program");
  parse->add_option("program", o.program, "Program file (.pnp)")->required();
  parse->add_flag("--ast-json", o.ast_json, "Print the syntax tree as JSON");
  parse->add_flag("--pretty", o.pretty, "Print the program in canonical form");
  parse->callback([&] { command = cmd_parse; });

  auto* fm = app.add_subcommand("fm", "Feature model operations");
  fm->require_subcommand(1);
  auto* fm_validate = fm->add_subcommand("validate", "Validate a feature model");
  fm_validate->add_option("model", o.model, "Feature model (.fm)")->required();
  fm_validate->callback([&] { command = cmd_fm_validate; });
  auto* fm_config = fm->add_subcommand("config", "Configuration operations");
  fm_config->require_subcommand(1);
  auto* fm_config_validate = fm_config->add_subcommand("validate", "Validate a configuration");
  fm_config_validate->add_option("model", o.model, "Feature model (.fm)")->required();
  fm_config_validate->add_option("config", o.config, "Configuration (.cfg)")->required();
  fm_config_validate->callback([&] { command = cmd_fm_config_validate; });
  auto* fm_enumerate = fm->add_subcommand("enumerate", "List valid configurations");
  fm_enumerate->add_option("model", o.model, "Feature model (.fm)")->required();
  fm_enumerate->add_option("--limit", o.limit, "Maximum number of configurations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fm_enumerate->callback([&] { command = cmd_fm_enumerate; });

  auto add_variant_inputs = [&](CLI::App* cmd) {
    cmd->add_option("program", o.program, "Program file (.pnp)")->required();
    cmd->add_option("--model", o.model, "Feature model (.fm)")->required();
    cmd->add_option("--config", o.config, "Configuration (.cfg)")->required();
    cmd->add_option("--mapping", o.mapping, "Construct mapping (.map)")->required();
  };
  auto* check = app.add_subcommand("check", "Check a program against a product configuration");
  add_variant_inputs(check);
  check->callback([&] { command = cmd_check; });

  auto* generate = app.add_subcommand("generate", "Generate C++ sources for a product configuration");
  add_variant_inputs(generate);
  generate->add_option("--templates", o.templates, "Directory of .gt templates replacing the built-in set");
  generate->add_option("-o,--output", o.output, "Output directory")->required();
  generate->callback([&] { command = cmd_generate; });

  auto* simulate = app.add_subcommand("simulate", "Run a program in the world simulator");
  simulate->add_option("program", o.program, "Program file (.pnp)")->required();
  simulate->add_option("--trace", o.trace, "Write the execution trace as JSON");
  simulate->add_option("--final-state", o.final_state, "Write the final object poses as JSON");
  simulate->add_flag("--allow-unperceived", o.allow_unperceived, "Let pick skip the perception check");
  simulate->callback([&] { command = cmd_simulate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return command ? command(o) : kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "pnpc: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pnpc: " << e.what() << '\n';
    return kExitUsage;
  }
}
