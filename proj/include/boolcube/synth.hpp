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
 * Exact observable synthesis from Fourier spectra, model-spectrum extraction
 * and classical ensembles of linear quantum models.
 *
 * Phase models: O_{kj} = ghat(k xor j) gives Tr[O rho(b)] = g(b), and the model
 * spectrum is fhat(s) = 2^-n sum_{k xor j = s} O_{kj}.
 *
 * QRAC models: Pauli word P is paired with the mask Phi(P) that sets bit
 * 3i, 3i+1 or 3i+2 (0-based) when letter i is X, Y or Z. The model value is
 * sum_P c_P F(P) chi_{Phi(P)}(b), where F(P) is the product of the Bloch
 * factors of the letters of P (3^{-|P|/2} at the default angles).
 */
#pragma once

#include "boolcube/embed.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/qsim/pauli.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace boolcube::synth {

using embed::Embedding;
using embed::Permutation;
using embed::QracAngles;
using embed::SubsetSelector;
using fourier::FourierSpectrum;
using qsim::DenseObservable;
using qsim::PauliSum;

/// Largest n accepted by synth_phase_obs (dense 2^n x 2^n matrix).
inline constexpr int kMaxPhaseSynthBits = 12;
/// Largest m accepted by kqe_set.
inline constexpr int kMaxKqeQubits = 8;

// Phase embedding ---------------------------------------------------------

[[nodiscard]] DenseObservable synth_phase_obs(const FourierSpectrum &spec);
[[nodiscard]] FourierSpectrum model_spectrum_phase(const DenseObservable &o);
/// Tr[O rho_PE(b)].
[[nodiscard]] double phase_model_value(const DenseObservable &o, const BitVector &b);

// QRAC embedding ----------------------------------------------------------

/// True if every triplet of s (over 3m bits) has weight <= 1.
[[nodiscard]] bool in_kqe(Mask s, int m) noexcept;
/// All 4^m members in ascending numeric mask order.
[[nodiscard]] std::vector<Mask> kqe_set(int m);

[[nodiscard]] Mask phi_map(std::string_view word);
/// Throws SupportError for masks outside K^QE_m.
[[nodiscard]] std::string phi_inv(Mask s, int m);

/// How the Pauli weight is scaled from the spectrum coefficient.
enum class QracWeighting {
    kExact,     ///< ghat(Phi(P)) / F(P); 3^{|P|/2} ghat at default angles
    kAsPrinted, ///< additionally multiplied by 2^m (overshoots by 2^m)
};

/// Observable on ceil(n/3) qubits with Tr[O rho_QE(b)] = g(b).
/// Throws SupportError if the support leaves K^QE.
[[nodiscard]] PauliSum synth_qrac_obs(const FourierSpectrum &spec, const QracAngles &a = {},
                                      QracWeighting weighting = QracWeighting::kExact);

/// Spectrum over n bits of b -> Tr[O rho_QE(b)]. For n not divisible by 3
/// the padding bits are fixed at zero, so keys that differ only there merge.
[[nodiscard]] FourierSpectrum model_spectrum_qrac(const PauliSum &o, int n,
                                                  const QracAngles &a = {});
[[nodiscard]] FourierSpectrum model_spectrum_qrac(const DenseObservable &o, int n,
                                                  const QracAngles &a = {});
/// Tr[O rho_QE(b)].
[[nodiscard]] double qrac_model_value(const PauliSum &o, const BitVector &b,
                                      const QracAngles &a = {});

struct PermutedObservable {
    Permutation tau;
    PauliSum observable;
};

/// Observable with Tr[O rho_QE(tau(b))] = g(b).
/// Throws SupportError unless every key s has permute_mask(tau, s) in K^QE.
[[nodiscard]] PermutedObservable synth_qrac_permuted(const FourierSpectrum &spec,
                                                     const Permutation &tau,
                                                     const QracAngles &a = {});
/// Spectrum of b -> Tr[O rho_QE(tau(b))].
[[nodiscard]] FourierSpectrum model_spectrum_qrac_permuted(const PauliSum &o,
                                                           const Permutation &tau,
                                                           const QracAngles &a = {});

// Ensembles ---------------------------------------------------------------

struct EnsembleMember {
    std::variant<SubsetSelector, Permutation> preprocessor;
    std::variant<DenseObservable, PauliSum> observable;
};

struct EnsembleModel {
    int n = 0;
    Embedding embedding = Embedding::kPhase;
    std::vector<EnsembleMember> members;
};

[[nodiscard]] std::uint64_t binomial(int n, int k);
/// Number of w in C_{n,d} containing supp(s), counted by enumeration.
[[nodiscard]] std::uint64_t subset_multiplicity(Mask s, int n, int d);
/// Closed form C(n - wt(s), d - wt(s)) of the same count.
[[nodiscard]] std::uint64_t subset_multiplicity_closed_form(Mask s, int n, int d);
/// Number of tau in S_n with permute_mask(tau, s) in K^QE, by enumeration.
[[nodiscard]] std::uint64_t permutation_multiplicity(Mask s, int n);

/// One phase model per w in C_{n,d}, each on d qubits; zero members pruned.
[[nodiscard]] EnsembleModel ensemble_phase(const FourierSpectrum &spec, int d);
/// One permuted QRAC model per tau in S_n (n <= 7); zero members pruned.
[[nodiscard]] EnsembleModel ensemble_qrac(const FourierSpectrum &spec);

/// Sum of member outputs, each on its preprocessed input. Members may be
/// evaluated in parallel; the sum runs in member order.
[[nodiscard]] double ensemble_eval(const EnsembleModel &e, const BitVector &b);

/// JSON document {n, embedding, members: [{preprocessor, pauli_terms | matrix}]}.
void write_ensemble_json(std::ostream &out, const EnsembleModel &e);

} // namespace boolcube::synth
