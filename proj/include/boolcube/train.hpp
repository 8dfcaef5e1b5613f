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
 * Variational linear models f(b) = Tr[D W(theta) rho(b) W(theta)^dagger] and
 * their training on the square loss 1/2 (y - f)^2.
 */
#pragma once

#include "boolcube/embed.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/qsim/pauli.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace boolcube::train {

using embed::Embedding;

/// Per layer: RY then RZ on every qubit, then CZ(q, q+1) for q = 0..m-2.
/// Slot of (layer, qubit, rotation) = layer * 2m + 2 qubit + {0 for RY, 1 for RZ}.
class Ansatz {
  public:
    Ansatz(int num_qubits, int layers);

    /// 3 layers up to 3 qubits, 4 beyond.
    [[nodiscard]] static int default_layers(int num_qubits) noexcept;

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] int layers() const noexcept { return layers_; }
    [[nodiscard]] std::size_t num_parameters() const noexcept {
        return static_cast<std::size_t>(2 * m_ * layers_);
    }
    [[nodiscard]] const qsim::Circuit &circuit() const noexcept { return circuit_; }

  private:
    int m_;
    int layers_;
    qsim::Circuit circuit_;
};

struct TrainingSet {
    int n = 0;
    std::vector<BitVector> inputs;
    std::vector<double> labels;

    /// All 2^n points of a table, in mask order.
    [[nodiscard]] static TrainingSet full_cube(const fourier::FunctionTable &g);
    [[nodiscard]] std::size_t size() const noexcept { return inputs.size(); }
};

/// Embedding, optional input permutation (QRAC only), ansatz and diagonal D.
class Model {
  public:
    Model(Embedding embedding, int n, Ansatz ansatz, qsim::PauliSum d,
          std::optional<embed::Permutation> tau = std::nullopt, embed::QracAngles angles = {});

    [[nodiscard]] Embedding embedding() const noexcept { return embedding_; }
    [[nodiscard]] int num_bits() const noexcept { return n_; }
    [[nodiscard]] int num_qubits() const noexcept { return ansatz_.num_qubits(); }
    [[nodiscard]] const Ansatz &ansatz() const noexcept { return ansatz_; }
    [[nodiscard]] const qsim::PauliSum &observable() const noexcept { return d_; }
    [[nodiscard]] const std::optional<embed::Permutation> &permutation() const noexcept {
        return tau_;
    }
    [[nodiscard]] const embed::QracAngles &angles() const noexcept { return angles_; }
    [[nodiscard]] std::span<const double> diagonal() const noexcept { return diag_; }

    /// rho(b) as a statevector (after the permutation, if any).
    [[nodiscard]] qsim::StateVector embedded(const BitVector &b) const;
    /// Model output on an already embedded input.
    [[nodiscard]] double value_on(qsim::StateVector psi, std::span<const double> theta) const;
    [[nodiscard]] double value_on_shots(qsim::StateVector psi, std::span<const double> theta,
                                        std::uint64_t shots, std::uint64_t seed) const;

  private:
    void check_theta(std::span<const double> theta) const;

    Embedding embedding_;
    int n_;
    Ansatz ansatz_;
    qsim::PauliSum d_;
    std::optional<embed::Permutation> tau_;
    embed::QracAngles angles_;
    std::vector<double> diag_;
};

/// f_theta(b). shots = 0 gives the exact expectation.
[[nodiscard]] double model_eval(const Model &model, std::span<const double> theta,
                                const BitVector &b, std::uint64_t shots = 0,
                                std::uint64_t seed = 0);

/// Mean of 1/2 (y - f)^2 over the set.
[[nodiscard]] double empirical_risk(const Model &model, std::span<const double> theta,
                                    const TrainingSet &set, std::uint64_t shots = 0,
                                    std::uint64_t seed = 0);

struct ShiftGradient {
    double value = 0.0;
    /// Set when the estimate is built from shot-sampled expectations.
    bool shot_noise = false;
};

/// 1/2 (f(theta_i + pi/2) - f(theta_i - pi/2)).
[[nodiscard]] ShiftGradient parameter_shift_grad(const Model &model,
                                                 std::span<const double> theta,
                                                 const BitVector &b, std::size_t index,
                                                 std::uint64_t shots = 0,
                                                 std::uint64_t seed = 0);

/// Gradient of empirical_risk by the parameter-shift rule (exact mode).
[[nodiscard]] std::vector<double> risk_gradient(const Model &model,
                                                std::span<const double> theta,
                                                const TrainingSet &set);

enum class OptimizerKind { kNelderMead, kSpsa, kAdam };

[[nodiscard]] std::string_view optimizer_name(OptimizerKind k) noexcept;
/// Accepts "nelder-mead", "spsa" and "adam".
[[nodiscard]] OptimizerKind parse_optimizer(std::string_view text);

struct TrainConfig {
    OptimizerKind optimizer = OptimizerKind::kNelderMead;
    std::size_t budget = 500; ///< optimiser iterations
    std::uint64_t seed = 0;
    std::uint64_t shots = 0; ///< 0 = exact expectation
    /// Explicit starting point; otherwise uniform in [-pi, pi] from `seed`.
    std::vector<double> initial;
    double learning_rate = 0.05; ///< Adam step
    double initial_step = 0.5;   ///< Nelder-Mead simplex edge
};

struct TrainResult {
    std::vector<double> theta;
    std::vector<double> loss_trace; ///< best-so-far risk per iteration
    double final_risk = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

/// Uniform draws in [-pi, pi] from `seed`.
[[nodiscard]] std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed);

[[nodiscard]] TrainResult optimize(const TrainConfig &config, const TrainingSet &set,
                                   const Model &model);

/// One member of a jointly trained sum of models. The selector, if present,
/// restricts the input to nu_w(b) before the member's own embedding.
struct EnsembleTerm {
    std::optional<embed::SubsetSelector> selector;
    Model model;
};

/// Sum of member outputs; theta is the concatenation of member parameters.
[[nodiscard]] double ensemble_model_eval(std::span<const EnsembleTerm> terms,
                                         std::span<const double> theta, const BitVector &b);

/// Trains all members jointly on the risk of their summed output.
[[nodiscard]] TrainResult optimize_ensemble(const TrainConfig &config, const TrainingSet &set,
                                            std::span<const EnsembleTerm> terms);

/// O_theta = W^dagger D W as a dense observable (m <= 10).
[[nodiscard]] qsim::DenseObservable trained_observable(const Model &model,
                                                       std::span<const double> theta);

/// Fourier spectrum of b -> f_theta(b) from the dense O_theta.
[[nodiscard]] fourier::FourierSpectrum extract_trained_spectrum(const Model &model,
                                                                std::span<const double> theta);

} // namespace boolcube::train
