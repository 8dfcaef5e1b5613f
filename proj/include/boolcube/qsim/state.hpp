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
 * Pure states, density matrices and circuit execution.
 *
 * Qubit 0 is the least-significant bit of the amplitude index.
 */
#pragma once

#include "boolcube/qsim/circuit.hpp"
#include "boolcube/qsim/matrix.hpp"

#include <span>
#include <vector>

namespace boolcube::qsim {

class StateVector {
  public:
    /// |0...0> on m qubits.
    explicit StateVector(int num_qubits);
    /// Takes ownership of amplitudes; size must be 2^m, norm 1 within 1e-10.
    StateVector(int num_qubits, std::vector<cplx> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] double norm() const;

    /// Applies one gate with its angle resolved against `params`.
    void apply(const Gate &gate, std::span<const double> params = {});
    void apply(const Circuit &circuit, std::span<const double> params = {});

    /// Tensor product; `low` occupies the low-order qubits.
    [[nodiscard]] static StateVector tensor(const StateVector &low, const StateVector &high);

  private:
    int m_;
    std::vector<cplx> amps_;
};

class DensityMatrix {
  public:
    /// |psi><psi|.
    explicit DensityMatrix(const StateVector &psi);
    /// Validates Hermiticity, unit trace and PSD-ness (tolerances 1e-10/1e-9).
    DensityMatrix(int num_qubits, CMatrix rho);

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return rho_; }
    [[nodiscard]] double purity() const;

  private:
    int m_;
    CMatrix rho_;
};

/// Runs `circuit` on |0...0>. Throws if a slot is unbound.
[[nodiscard]] StateVector run_circuit(const Circuit &circuit,
                                      std::span<const double> params = {});

/// Dense unitary of the circuit (column j = circuit applied to |j>).
[[nodiscard]] CMatrix circuit_unitary(const Circuit &circuit,
                                      std::span<const double> params = {});

/// |<a|b>|.
[[nodiscard]] double overlap_magnitude(const StateVector &a, const StateVector &b);

/// Bloch vector (<X>, <Y>, <Z>) of a one-qubit state.
[[nodiscard]] std::array<double, 3> bloch_vector(const StateVector &psi);

} // namespace boolcube::qsim
