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
 * Data-encoding circuits for Boolean inputs.
 *
 * Phase embedding: one qubit per bit, H X^{b_i} |0> on qubit i-1.
 *
 * (3,1)-QRAC embedding: bits are grouped into triplets (b_{3i-2}, b_{3i-1},
 * b_{3i}) = (B^X, B^Y, B^Z) of qubit i-1, zero padded to a multiple of three.
 * Each qubit is prepared as RZ(phi_Z) RY(phi_Y) |0>, giving the Bloch vector
 * (f_X (-1)^{B^X}, f_Y (-1)^{B^Y}, f_Z (-1)^{B^Z}).
 */
#pragma once

#include "boolcube/bitvector.hpp"
#include "boolcube/qsim/circuit.hpp"
#include "boolcube/qsim/state.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace boolcube::embed {

enum class Embedding { kPhase, kQrac };

[[nodiscard]] std::string_view embedding_name(Embedding e) noexcept;
/// Accepts "phase" and "qrac".
[[nodiscard]] Embedding parse_embedding(std::string_view text);

struct Triplet {
    bool bx = false;
    bool by = false;
    bool bz = false;

    /// Bits packed as bx | by << 1 | bz << 2.
    [[nodiscard]] Mask mask() const noexcept {
        return Mask{bx} | (Mask{by} << 1U) | (Mask{bz} << 2U);
    }
    [[nodiscard]] static Triplet from_mask(Mask m) noexcept {
        return {(m & 1U) != 0, (m & 2U) != 0, (m & 4U) != 0};
    }
    friend bool operator==(const Triplet &, const Triplet &) = default;
};

class QracAngles {
  public:
    /// alpha1 = pi/4, alpha2 = 2 acos(sqrt(1/2 + 1/(2 sqrt 3))): all factors 1/sqrt 3.
    QracAngles();
    /// Throws InvalidArgument if any Bloch factor is below 1e-9 in magnitude.
    QracAngles(double alpha1, double alpha2);

    [[nodiscard]] double alpha1() const noexcept { return a1_; }
    [[nodiscard]] double alpha2() const noexcept { return a2_; }
    /// (f_X, f_Y, f_Z) = (sin a2 cos a1, sin a2 sin a1, cos a2).
    [[nodiscard]] std::array<double, 3> bloch_factors() const noexcept;

  private:
    double a1_;
    double a2_;
};

struct QracRotation {
    double phi_y;
    double phi_z;
};

/// Strictly increasing 1-based index tuple (w_1 < ... < w_d).
class SubsetSelector {
  public:
    explicit SubsetSelector(std::vector<int> indices);

    [[nodiscard]] const std::vector<int> &indices() const noexcept { return w_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(w_.size()); }
    /// Mask over n bits with the selected positions set.
    [[nodiscard]] Mask support(int n) const;

    friend bool operator==(const SubsetSelector &, const SubsetSelector &) = default;

  private:
    std::vector<int> w_;
};

/// Bijection on [n]; image[i-1] = tau(i), 1-based.
class Permutation {
  public:
    explicit Permutation(std::vector<int> image);
    [[nodiscard]] static Permutation identity(int n);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(tau_.size()); }
    [[nodiscard]] const std::vector<int> &image() const noexcept { return tau_; }
    /// tau(i), 1-based.
    [[nodiscard]] int operator()(int i) const { return tau_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] bool is_identity() const noexcept;

    friend bool operator==(const Permutation &, const Permutation &) = default;

  private:
    std::vector<int> tau_;
};

/// (tau o sigma)(i) = tau(sigma(i)).
[[nodiscard]] Permutation compose(const Permutation &tau, const Permutation &sigma);

/// All selectors of C_{n,d} in lexicographic order.
[[nodiscard]] std::vector<SubsetSelector> all_subsets(int n, int d);
/// All of S_n in lexicographic order of the image array. n <= 8.
[[nodiscard]] std::vector<Permutation> all_permutations(int n);

// Phase embedding ---------------------------------------------------------

[[nodiscard]] qsim::Circuit phase_circuit(const BitVector &b);
[[nodiscard]] qsim::StateVector phase_embed(const BitVector &b);

// QRAC embedding ----------------------------------------------------------

/// Number of qubits used for n bits: ceil(n / 3).
[[nodiscard]] constexpr int qrac_qubits(int n) noexcept { return (n + 2) / 3; }

[[nodiscard]] std::vector<Triplet> qrac_triplets(const BitVector &b);
[[nodiscard]] QracRotation qrac_angles_for(const Triplet &t, const QracAngles &a = {});
[[nodiscard]] qsim::Circuit qrac_circuit(const BitVector &b, const QracAngles &a = {});
[[nodiscard]] qsim::StateVector qrac_embed(const BitVector &b, const QracAngles &a = {});
/// Closed-form single-qubit density matrix 1/2 (I + r . sigma).
[[nodiscard]] qsim::CMatrix qrac_density(const Triplet &t, const QracAngles &a = {});

/// Embedded state for either encoding.
[[nodiscard]] qsim::StateVector embed_state(Embedding e, const BitVector &b,
                                            const QracAngles &a = {});
/// Register size for either encoding.
[[nodiscard]] int embed_qubits(Embedding e, int n);

// Preprocessors -----------------------------------------------------------

/// nu_w(b) = (b_{w_1}, ..., b_{w_d}).
[[nodiscard]] BitVector select_bits(const SubsetSelector &w, const BitVector &b);
/// eta_w: places b' at positions w of an n-bit zero vector.
[[nodiscard]] BitVector embed_bits(const SubsetSelector &w, const BitVector &b_prime, int n);
/// Output position i holds b_{tau(i)}.
[[nodiscard]] BitVector permute_bits(const Permutation &tau, const BitVector &b);
[[nodiscard]] Mask permute_mask(const Permutation &tau, Mask b);

// Repeated and double encodings -------------------------------------------

/// Applies V_1, Z^{nu_{w_1}(b)}, V_2, Z^{nu_{w_2}(b)}, ... in order.
/// V_1 must be exactly one H on each qubit; all selectors have length m.
[[nodiscard]] qsim::Circuit repeated_phase_embed(const BitVector &b,
                                                 std::span<const SubsetSelector> partition,
                                                 std::span<const qsim::Circuit> interleave);

/// U(t), then R_n(pi) with n = (1,1,1)/sqrt 3, then U(t) again.
[[nodiscard]] qsim::Circuit double_qrac_circuit(const Triplet &t, const QracAngles &a = {});
[[nodiscard]] qsim::StateVector double_qrac_embed(const Triplet &t, const QracAngles &a = {});

// SWAP networks -----------------------------------------------------------

/// Pairs (i, j), i < j, in lexicographic order; 0-based qubits.
[[nodiscard]] std::vector<std::array<int, 2>> swap_network_pairs(int m);
/// One SWAPROT per pair, angles taken from `beta` in pair order.
[[nodiscard]] qsim::Circuit swap_network_layer(int m, std::span<const double> beta);

/// True if the layer maps every computational basis state |x> to a basis state
/// (up to phase) whose first |subset| qubits carry x on `subset` (1-based qubit
/// indices, any order).
[[nodiscard]] bool routes_subset(const qsim::Circuit &layer, std::span<const int> subset);

/// First beta in {0, pi}^{C(m,2)} (binary counting order) routing `subset`
/// into the first |subset| qubits, if any.
[[nodiscard]] std::optional<std::vector<double>> find_routing(int m, std::span<const int> subset);

} // namespace boolcube::embed
