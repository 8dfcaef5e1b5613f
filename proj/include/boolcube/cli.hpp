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
 * Experiment driver behind the `boolcube-vqml` executable.
 *
 * Exit codes: 0 success, 1 numerical failure or unmet hypothesis, 2 usage.
 */
#pragma once

#include "boolcube/embed.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/train.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace boolcube::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Model families accepted in the `embedding` field.
enum class Family { kPhase, kQrac, kQracPermuted, kEnsemblePhase, kEnsembleQrac };

[[nodiscard]] std::string_view family_name(Family f) noexcept;

struct ExperimentConfig {
    std::string target_name; ///< preset name, "inline" or "random"
    fourier::FourierSpectrum target{1};
    Family family = Family::kPhase;
    std::optional<embed::Permutation> permutation;
    std::optional<int> ensemble_degree;
    std::optional<int> layers;
    train::TrainConfig train;
    bool explicit_init = false;
    std::string suite;
    std::uint64_t suite_seed = 1;
    std::string output;
};

/// Parses a JSON document. Throws InvalidArgument naming the offending field.
[[nodiscard]] ExperimentConfig parse_config(std::string_view json_text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

/// Preset spectra: "g3" with 3 coefficients, "g6" with 4.
[[nodiscard]] fourier::FourierSpectrum preset_spectrum(std::string_view name,
                                                       const std::vector<double> &coeffs);

int cmd_fit(const ExperimentConfig &config, const std::filesystem::path &out, std::ostream &log);
int cmd_synth(const ExperimentConfig &config, const std::filesystem::path &out,
              std::ostream &log);
int cmd_verify(const std::string &suite, std::uint64_t seed,
               const std::optional<std::filesystem::path> &out, std::ostream &log);

/// Full command line: `fit|synth|verify --config <path> --out <dir>`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace boolcube::cli
