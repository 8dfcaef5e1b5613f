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
 * Unconstrained minimisers used by the trainer.
 *
 * All minimisers count iterations against `max_iterations`, keep the best point
 * seen, and record the best-so-far objective after every iteration.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace boolcube::opt {

using Objective = std::function<double(std::span<const double>)>;
/// Writes the gradient into `grad` and returns the objective value.
using ObjectiveWithGradient =
    std::function<double(std::span<const double>, std::span<double> grad)>;

struct Result {
    std::vector<double> x;
    double fx = 0.0;
    std::vector<double> trace; ///< best-so-far after each iteration
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

struct NelderMeadOptions {
    std::size_t max_iterations = 500;
    double initial_step = 0.5;
    /// Stop once the best value drops below this.
    double target = 1e-10;
    /// Restart around the best vertex when the simplex diameter falls below this.
    double restart_diameter = 1e-8;
};

/// Nelder-Mead simplex with dimension-adaptive coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n), shrink 1 - 1/n).
[[nodiscard]] Result nelder_mead(const Objective &f, std::vector<double> x0,
                                 const NelderMeadOptions &opts);

struct SpsaOptions {
    std::size_t max_iterations = 500;
    double a = 0.2;
    double c = 0.1;
    double stability = 50.0;
    double alpha = 0.602;
    double gamma = 0.101;
    std::uint64_t seed = 0;
    double target = 1e-10;
};

/// Simultaneous-perturbation stochastic approximation with Rademacher directions.
[[nodiscard]] Result spsa(const Objective &f, std::vector<double> x0, const SpsaOptions &opts);

struct AdamOptions {
    std::size_t max_iterations = 500;
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double target = 1e-10;
};

[[nodiscard]] Result adam(const ObjectiveWithGradient &f, std::vector<double> x0,
                          const AdamOptions &opts);

} // namespace boolcube::opt
