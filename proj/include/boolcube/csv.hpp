// Copyright 2026 The boolcube-vqml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace boolcube::csv {

/// Round-trip double formatting (17 significant digits).
[[nodiscard]] std::string format(double value);

/// Splits one CSV line on commas. No quoting support; fields are plain.
[[nodiscard]] std::vector<std::string> split(std::string_view line);

[[nodiscard]] double parse_double(std::string_view field);

/// Writes `fields` joined by commas plus a newline.
void write_row(std::ostream &out, const std::vector<std::string> &fields);

} // namespace boolcube::csv
