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
#include "boolcube/csv.hpp"

#include "boolcube/error.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace boolcube::csv {

std::string format(double value) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.17g", value == 0.0 ? 0.0 : value);
    return {buf, static_cast<std::size_t>(len)};
}

std::vector<std::string> split(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double(std::string_view field) {
    double value = 0.0;
    const auto *first = field.data();
    const auto *last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw InvalidArgument("not a number: '" + std::string(field) + "'");
    }
    return value;
}

void write_row(std::ostream &out, const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << fields[i];
    }
    out << '\n';
}

} // namespace boolcube::csv
