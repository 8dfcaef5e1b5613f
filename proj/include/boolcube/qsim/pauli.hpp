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
 * Pauli sums, dense observables and expectation values.
 *
 * A Pauli word is a string over {I,X,Y,Z}; character q acts on qubit q.
 */
#pragma once

#include "boolcube/bitvector.hpp"
#include "boolcube/qsim/circuit.hpp"
#include "boolcube/qsim/matrix.hpp"
#include "boolcube/qsim/state.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace boolcube::qsim {

/// Largest register pauli_to_dense will materialise.
inline constexpr int kMaxDenseQubits = 12;

/// Number of non-identity letters.
[[nodiscard]] int pauli_weight(std::string_view word);

/// Real-weighted sum of Pauli words. Duplicate words are merged on insert.
class PauliSum {
  public:
    explicit PauliSum(int num_qubits);

    [[nodiscard]] static PauliSum identity(int num_qubits, double weight = 1.0);
    /// Z on every qubit.
    [[nodiscard]] static PauliSum all_z(int num_qubits);

    /// Adds weight * word. Throws on bad letters or length.
    PauliSum &add(std::string_view word, double weight);

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] const std::map<std::string, double> &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] double weight(std::string_view word) const;

    /// True when every word is made of I and Z only.
    [[nodiscard]] bool is_diagonal() const;
    /// Diagonal entry at computational basis index j. Throws unless diagonal.
    [[nodiscard]] double diagonal_value(std::size_t j) const;
    /// All 2^m diagonal entries. Throws unless diagonal.
    [[nodiscard]] std::vector<double> diagonal() const;

    PauliSum &operator*=(double s);

  private:
    int m_;
    std::map<std::string, double> terms_;
};

/// Hermitian matrix on m qubits.
class DenseObservable {
  public:
    /// Throws InvalidArgument unless Hermitian within 1e-10 and 2^m square.
    DenseObservable(int num_qubits, CMatrix matrix);

    [[nodiscard]] int num_qubits() const noexcept { return m_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return mat_; }

  private:
    int m_;
    CMatrix mat_;
};

/// Dense matrix of a single word.
[[nodiscard]] CMatrix pauli_word_matrix(std::string_view word);

[[nodiscard]] DenseObservable pauli_to_dense(const PauliSum &p);

/// Expansion O = sum_P (Tr[OP] / 2^m) P; terms below `threshold` are dropped.
[[nodiscard]] PauliSum pauli_decompose(const DenseObservable &o, double threshold = 1e-12);

/// Tr[O P] for a single word, computed without forming P.
[[nodiscard]] cplx trace_with_word(const CMatrix &o, std::string_view word);

[[nodiscard]] double expectation(const DenseObservable &o, const StateVector &psi);
[[nodiscard]] double expectation(const DenseObservable &o, const DensityMatrix &rho);
[[nodiscard]] double expectation(const PauliSum &o, const StateVector &psi);
[[nodiscard]] double expectation(const PauliSum &o, const DensityMatrix &rho);

/// Shot estimate of <d> on the circuit output. `d` must be diagonal.
/// Deterministic in `seed`; shot k uses counter k of the seed's stream.
[[nodiscard]] double sample_expectation(const Circuit &circuit, std::span<const double> params,
                                        const PauliSum &d, std::uint64_t shots,
                                        std::uint64_t seed);

/// Same estimator on an already prepared state.
[[nodiscard]] double sample_expectation(const StateVector &psi, const PauliSum &d,
                                        std::uint64_t shots, std::uint64_t seed);

} // namespace boolcube::qsim
