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
/**
 * @file
 * On-demand property suites for the constructions in this library.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace boolcube::verify {

struct Check {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    /// Counterexample or summary; empty when nothing to report.
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    bool pass = false;
    std::vector<Check> checks;
};

/// fourier, thm1..thm5, appendixA1, appendixA2, appendixB, kernel.
[[nodiscard]] const std::vector<std::string> &suite_names();

/// Throws InvalidArgument for an unknown suite.
[[nodiscard]] SuiteReport run_suite(std::string_view name, std::uint64_t seed = 1);

void write_json(std::ostream &out, const SuiteReport &report);

} // namespace boolcube::verify
