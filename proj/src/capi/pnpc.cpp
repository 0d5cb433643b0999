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

#include "pnpc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "pnpc/codegen/builtin.hpp"
#include "pnpc/codegen/codegen.hpp"
#include "pnpc/dsl/analyzer.hpp"
#include "pnpc/dsl/ast_json.hpp"
#include "pnpc/dsl/parser.hpp"
#include "pnpc/dsl/printer.hpp"
#include "pnpc/fm/configuration.hpp"
#include "pnpc/fm/feature_model.hpp"
#include "pnpc/sim/world.hpp"
#include "pnpc/variability/mapping.hpp"

struct pnpc_diagnostics {
  pnpc::Diagnostics list;
};
struct pnpc_program {
  std::shared_ptr<const pnpc::dsl::Program> program;
};
struct pnpc_feature_model {
  pnpc::fm::FeatureModel model;
};
struct pnpc_configuration {
  pnpc::fm::FeatureConfiguration config;
};
struct pnpc_mapping {
  pnpc::variability::MappingTable table;
};
struct pnpc_templates {
  pnpc::tpl::TemplateSet set;
};
struct pnpc_units {
  std::vector<pnpc::codegen::GeneratedUnit> units;
};
struct pnpc_sim_result {
  pnpc::sim::RunResult result;
};

namespace {

using pnpc::Diagnostics;

template <typename F>
pnpc_status guard(F&& body) noexcept {
  try {
    return body();
  } catch (const std::bad_alloc&) {
    return PNPC_INTERNAL;
  } catch (...) {
    return PNPC_INTERNAL;
  }
}

void append(pnpc_diagnostics* diags, const Diagnostics& more) {
  if (diags) diags->list.insert(diags->list.end(), more.begin(), more.end());
}

// Appends `more` and reports whether any of them is an error.
pnpc_status report(pnpc_diagnostics* diags, const Diagnostics& more) {
  append(diags, more);
  return pnpc::has_errors(more) ? PNPC_DIAGNOSTICS : PNPC_OK;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

std::string_view view(const char* source, std::size_t length) { return {source, length}; }
std::string name_of(const char* file) { return file ? file : ""; }

}  // namespace

extern "C" {

const char* pnpc_version(void) { return pnpc::codegen::kToolVersion; }

const char* pnpc_status_string(pnpc_status status) {
  switch (status) {
    case PNPC_OK: return "ok";
    case PNPC_DIAGNOSTICS: return "input rejected";
    case PNPC_INVALID_ARGUMENT: return "invalid argument";
    case PNPC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pnpc_string_free(char* s) { std::free(s); }

// --- diagnostics -----------------------------------------------------------

pnpc_diagnostics* pnpc_diagnostics_new(void) { return new (std::nothrow) pnpc_diagnostics(); }
void pnpc_diagnostics_free(pnpc_diagnostics* diags) { delete diags; }

void pnpc_diagnostics_clear(pnpc_diagnostics* diags) {
  if (diags) diags->list.clear();
}

size_t pnpc_diagnostics_count(const pnpc_diagnostics* diags) { return diags ? diags->list.size() : 0; }

size_t pnpc_diagnostics_error_count(const pnpc_diagnostics* diags) {
  if (!diags) return 0;
  size_t n = 0;
  for (const auto& d : diags->list) n += d.severity == pnpc::Severity::Error;
  return n;
}

pnpc_status pnpc_diagnostics_get(const pnpc_diagnostics* diags, size_t index, pnpc_diagnostic* out) {
  if (!diags || !out || index >= diags->list.size()) return PNPC_INVALID_ARGUMENT;
  const pnpc::Diagnostic& d = diags->list[index];
  out->severity = d.severity == pnpc::Severity::Error ? PNPC_SEVERITY_ERROR : PNPC_SEVERITY_WARNING;
  out->code = d.code.c_str();
  out->message = d.message.c_str();
  out->file = d.span.file.c_str();
  out->line = d.span.line;
  out->column = d.span.column;
  return PNPC_OK;
}

void pnpc_diagnostics_sort(pnpc_diagnostics* diags) {
  if (diags) pnpc::sort_diagnostics(diags->list);
}

pnpc_status pnpc_diagnostics_format(const pnpc_diagnostics* diags, char** out) {
  if (!diags || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    std::string text;
    for (const auto& d : diags->list) text += pnpc::format_diagnostic(d) + "\n";
    *out = copy_string(text);
    return PNPC_OK;
  });
}

// --- programs ------------------------------------------------------------

pnpc_status pnpc_program_parse(const char* source, size_t length, const char* file, pnpc_diagnostics* diags,
                               pnpc_program** out) {
  if (!source || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto parsed = pnpc::dsl::parse_source(view(source, length), name_of(file));
    if (!parsed) return report(diags, parsed.diagnostics());
    Diagnostics findings = pnpc::dsl::analyze(*parsed);
    if (report(diags, findings) != PNPC_OK) return PNPC_DIAGNOSTICS;
    *out = new pnpc_program{std::make_shared<const pnpc::dsl::Program>(std::move(parsed).value())};
    return PNPC_OK;
  });
}

void pnpc_program_free(pnpc_program* program) { delete program; }

pnpc_status pnpc_program_ast_json(const pnpc_program* program, char** out) {
  if (!program || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(pnpc::dsl::ast_to_json(*program->program));
    return PNPC_OK;
  });
}

pnpc_status pnpc_program_pretty(const pnpc_program* program, char** out) {
  if (!program || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(pnpc::dsl::pretty_print(*program->program));
    return PNPC_OK;
  });
}

pnpc_status pnpc_program_equal(const pnpc_program* a, const pnpc_program* b, int* out) {
  if (!a || !b || !out) return PNPC_INVALID_ARGUMENT;
  *out = *a->program == *b->program ? 1 : 0;
  return PNPC_OK;
}

// --- feature models ----------------------------------------------------------

pnpc_status pnpc_model_parse(const char* source, size_t length, const char* file, pnpc_diagnostics* diags,
                             pnpc_feature_model** out) {
  if (!source || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto model = pnpc::fm::parse_feature_model(view(source, length), name_of(file));
    if (!model) return report(diags, model.diagnostics());
    *out = new pnpc_feature_model{std::move(model).value()};
    return PNPC_OK;
  });
}

void pnpc_model_free(pnpc_feature_model* model) { delete model; }

size_t pnpc_model_feature_count(const pnpc_feature_model* model) {
  return model ? model->model.feature_count() : 0;
}

pnpc_status pnpc_model_enumerate(const pnpc_feature_model* model, size_t limit, pnpc_diagnostics* diags,
                                 char** out) {
  if (!model || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto configs = pnpc::fm::enumerate_configurations(model->model, limit);
    if (!configs) return report(diags, configs.diagnostics());
    std::string text;
    for (const auto& c : *configs) text += pnpc::fm::format_configuration(c, model->model) + "\n";
    *out = copy_string(text);
    return PNPC_OK;
  });
}

pnpc_status pnpc_configuration_parse(const pnpc_feature_model* model, const char* source, size_t length,
                                     const char* file, pnpc_diagnostics* diags, pnpc_configuration** out) {
  if (!model || !source || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto config = pnpc::fm::parse_configuration(view(source, length), model->model, name_of(file));
    if (!config) return report(diags, config.diagnostics());
    *out = new pnpc_configuration{std::move(config).value()};
    return PNPC_OK;
  });
}

void pnpc_configuration_free(pnpc_configuration* config) { delete config; }

pnpc_status pnpc_configuration_validate(const pnpc_configuration* config, const pnpc_feature_model* model,
                                        pnpc_diagnostics* diags) {
  if (!config || !model) return PNPC_INVALID_ARGUMENT;
  return guard([&] { return report(diags, pnpc::fm::validate_configuration(config->config, model->model)); });
}

pnpc_status pnpc_configuration_includes(const pnpc_configuration* config, const char* feature, int* out) {
  if (!config || !feature || !out) return PNPC_INVALID_ARGUMENT;
  *out = config->config.includes(feature) ? 1 : 0;
  return PNPC_OK;
}

// --- mappings --------------------------------------------------------------

pnpc_status pnpc_mapping_parse(const pnpc_feature_model* model, const char* source, size_t length,
                               const char* file, pnpc_diagnostics* diags, pnpc_mapping** out) {
  if (!model || !source || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto table = pnpc::variability::parse_mapping(view(source, length), model->model, name_of(file));
    if (!table) return report(diags, table.diagnostics());
    *out = new pnpc_mapping{std::move(table).value()};
    return PNPC_OK;
  });
}

void pnpc_mapping_free(pnpc_mapping* mapping) { delete mapping; }

pnpc_status pnpc_check(const pnpc_program* program, const pnpc_configuration* config,
                       const pnpc_mapping* mapping, pnpc_diagnostics* diags) {
  if (!program || !config || !mapping) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    return report(diags, pnpc::variability::check_program(*program->program, mapping->table, config->config));
  });
}

// --- code generation ---------------------------------------------------------

pnpc_status pnpc_templates_builtin(pnpc_diagnostics* diags, pnpc_templates** out) {
  if (!out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    auto set = pnpc::codegen::builtin_templates();
    if (!set) return report(diags, set.diagnostics());
    *out = new pnpc_templates{std::move(set).value()};
    return PNPC_OK;
  });
}

pnpc_status pnpc_templates_load(const char* const* names, const char* const* sources, size_t count,
                                pnpc_diagnostics* diags, pnpc_templates** out) {
  if (!out || (count > 0 && (!names || !sources))) return PNPC_INVALID_ARGUMENT;
  for (size_t i = 0; i < count; ++i)
    if (!names[i] || !sources[i]) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    std::vector<pnpc::codegen::TemplateSource> files;
    for (size_t i = 0; i < count; ++i) files.push_back({names[i], sources[i]});
    auto set = pnpc::codegen::load_template_set(files);
    if (!set) return report(diags, set.diagnostics());
    *out = new pnpc_templates{std::move(set).value()};
    return PNPC_OK;
  });
}

void pnpc_templates_free(pnpc_templates* templates) { delete templates; }

pnpc_status pnpc_generate(const pnpc_program* program, const pnpc_configuration* config,
                          const pnpc_mapping* mapping, const pnpc_templates* templates, const pnpc_input* inputs,
                          size_t input_count, pnpc_diagnostics* diags, pnpc_units** out) {
  if (!program || !config || !mapping || !templates || !out || (input_count > 0 && !inputs))
    return PNPC_INVALID_ARGUMENT;
  for (size_t i = 0; i < input_count; ++i)
    if (!inputs[i].path || (!inputs[i].content && inputs[i].length > 0)) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    std::vector<pnpc::codegen::InputFile> files;
    for (size_t i = 0; i < input_count; ++i)
      files.push_back({inputs[i].path, std::string(inputs[i].content ? inputs[i].content : "", inputs[i].length)});
    auto units =
        pnpc::codegen::generate(program->program, config->config, mapping->table, templates->set, files);
    if (!units) return report(diags, units.diagnostics());
    *out = new pnpc_units{std::move(units).value()};
    return PNPC_OK;
  });
}

void pnpc_units_free(pnpc_units* units) { delete units; }
size_t pnpc_units_count(const pnpc_units* units) { return units ? units->units.size() : 0; }

const char* pnpc_unit_path(const pnpc_units* units, size_t index) {
  if (!units || index >= units->units.size()) return nullptr;
  return units->units[index].path.c_str();
}

const char* pnpc_unit_content(const pnpc_units* units, size_t index, size_t* length) {
  if (!units || index >= units->units.size()) return nullptr;
  const std::string& c = units->units[index].content;
  if (length) *length = c.size();
  return c.c_str();
}

// --- simulation ------------------------------------------------------------

pnpc_status pnpc_simulate(const pnpc_program* program, const pnpc_sim_options* options, pnpc_diagnostics* diags,
                          pnpc_sim_result** out) {
  if (!program || !out) return PNPC_INVALID_ARGUMENT;
  if (options && options->max_steps < 0) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    pnpc::sim::RunOptions opts;
    if (options) {
      opts.allow_unperceived = options->allow_unperceived != 0;
      if (options->max_steps > 0) opts.max_steps = options->max_steps;
    }
    auto result = std::make_unique<pnpc_sim_result>();
    result->result = pnpc::sim::run(*program->program, opts);
    Diagnostics findings = result->result.warnings;
    if (const auto& e = result->result.error) findings.push_back(pnpc::make_error(e->code, e->message, e->span));
    pnpc_status status = report(diags, findings);
    *out = result.release();
    return status;
  });
}

void pnpc_sim_result_free(pnpc_sim_result* result) { delete result; }

int pnpc_sim_failed(const pnpc_sim_result* result) { return result && result->result.error ? 1 : 0; }

pnpc_status pnpc_sim_final_state_json(const pnpc_sim_result* result, char** out) {
  if (!result || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(pnpc::sim::final_state_json(result->result.world));
    return PNPC_OK;
  });
}

pnpc_status pnpc_sim_trace_json(const pnpc_sim_result* result, char** out) {
  if (!result || !out) return PNPC_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(pnpc::sim::trace_json(result->result.trace));
    return PNPC_OK;
  });
}

}  // extern "C"
