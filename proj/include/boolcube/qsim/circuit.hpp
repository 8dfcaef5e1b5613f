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
 * Gate lists with bound or symbolic rotation angles.
 *
 * Rotations follow R_P(theta) = exp(-i theta P / 2). SWAPROT(beta) is
 * exp(-i beta SWAP / 2); at beta = pi it is SWAP up to a global phase.
 */
#pragma once

#include "boolcube/qsim/matrix.hpp"
#include "boolcube/simd/kernels.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace boolcube::qsim {

/// Library cap on register size.
inline constexpr int kMaxQubits = 14;

enum class GateKind { kX, kZ, kH, kRY, kRZ, kRN, kCZ, kSwapRot };

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;

/// Index into the parameter vector handed to run_circuit.
struct Slot {
    std::size_t index;
    friend bool operator==(const Slot &, const Slot &) = default;
};

/// Either a fixed angle or a symbolic slot.
using Angle = std::variant<double, Slot>;

struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    Angle angle = 0.0;
    std::array<double, 3> axis{0.0, 0.0, 1.0}; ///< only for kRN

    friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    /// One past the largest slot index referenced, i.e. the binding length.
    [[nodiscard]] std::size_t num_parameters() const noexcept { return num_params_; }

    Circuit &x(int q);
    Circuit &z(int q);
    Circuit &h(int q);
    Circuit &ry(int q, Angle theta);
    Circuit &rz(int q, Angle theta);
    /// Rotation about a unit axis; |axis| must be 1 within 1e-12.
    Circuit &rn(int q, std::array<double, 3> axis, Angle theta);
    Circuit &cz(int q0, int q1);
    Circuit &swap_rot(int q0, int q1, Angle beta);

    /// Appends all gates of `other` (same register size).
    Circuit &append(const Circuit &other);

    /// Copy with every slot replaced by its bound value.
    [[nodiscard]] Circuit bind(std::span<const double> params) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    Circuit &push(Gate g);
    void check_qubit(int q) const;

    int m_;
    std::vector<Gate> gates_;
    std::size_t num_params_ = 0;
};

/// Resolves an angle against a binding vector. Throws for unbound slots.
[[nodiscard]] double resolve(const Angle &angle, std::span<const double> params);

/// 2x2 matrix of a single-qubit gate with the given resolved angle.
[[nodiscard]] simd::Mat2 single_qubit_matrix(GateKind kind, double angle,
                                             const std::array<double, 3> &axis);

/// 4x4 matrix of a two-qubit gate on (q0, q1), index = bit(q0) + 2 bit(q1).
[[nodiscard]] CMatrix two_qubit_matrix(GateKind kind, double angle);

} // namespace boolcube::qsim
