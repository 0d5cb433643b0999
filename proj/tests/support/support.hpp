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

// Shared helpers for the test binaries.

#ifndef PNPC_TESTS_SUPPORT_HPP
#define PNPC_TESTS_SUPPORT_HPP

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnpc::testing {

inline std::filesystem::path source_dir() { return PNPC_SOURCE_DIR; }
inline std::filesystem::path data_path(const std::string& rel) { return source_dir() / "data" / rel; }
inline std::filesystem::path fixture_path(const std::string& rel) {
  return source_dir() / "tests" / "fixtures" / rel;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

/// Splits C-like text into tokens: string literals, identifiers/numbers
/// (with '.', so 0.034f stays whole), and single punctuation characters.
/// Whitespace only separates tokens.
inline std::vector<std::string> cpp_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      out.push_back(text.substr(i, j + 1 - i));
      i = j + 1;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      std::size_t j = text.find("*/", i + 2);
      j = j == std::string::npos ? text.size() : j + 2;
      out.push_back(text.substr(i, j - i));  // comments kept, inner space collapsed below
      std::string& t = out.back();
      std::string collapsed;
      for (char ch : t) {
        bool space = std::isspace(static_cast<unsigned char>(ch));
        if (space && (collapsed.empty() || collapsed.back() == ' ')) continue;
        collapsed += space ? ' ' : ch;
      }
      t = collapsed;
      i = j;
    } else if (word(c)) {
      std::size_t j = i;
      while (j < text.size() && word(text[j])) ++j;
      out.push_back(text.substr(i, j - i));
      i = j;
    } else if (c == ':' && i + 1 < text.size() && text[i + 1] == ':') {
      out.push_back("::");
      i += 2;
    } else {
      out.push_back(std::string(1, c));
      ++i;
    }
  }
  return out;
}

/// Collapses every whitespace run outside string literals to one space and
/// trims both ends.
inline std::string normalize_whitespace(const std::string& text) {
  std::string out;
  bool in_string = false;
  bool pending_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) out += text[++i];
      else if (c == '"') in_string = false;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
    if (c == '"') in_string = true;
  }
  return out;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace pnpc::testing

#endif  // PNPC_TESTS_SUPPORT_HPP
