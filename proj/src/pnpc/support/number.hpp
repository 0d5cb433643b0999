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

#ifndef PNPC_SUPPORT_NUMBER_HPP
#define PNPC_SUPPORT_NUMBER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pnpc {

/// Shortest decimal text that reads back to exactly `value`, never in
/// scientific notation ("0.034", "7", "-0.25").
std::string format_real(double value);

std::optional<double> parse_real(std::string_view text);
std::optional<std::int64_t> parse_int(std::string_view text);

}  // namespace pnpc

#endif  // PNPC_SUPPORT_NUMBER_HPP
