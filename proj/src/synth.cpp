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
#include "boolcube/synth.hpp"

#include "boolcube/error.hpp"
#include "boolcube/parallel.hpp"

#include <cmath>
#include <map>

namespace boolcube::synth {
namespace {

using qsim::CMatrix;
using qsim::cplx;

constexpr std::string_view kLetters = "XYZ";

int qubits_for(int n) { return embed::qrac_qubits(n); }

/// Product of Bloch factors over the letters of `word`.
double word_factor(std::string_view word, const QracAngles &a) {
    const auto f = a.bloch_factors();
    double prod = 1.0;
    for (char c : word) {
        switch (c) {
        case 'X': prod *= f[0]; break;
        case 'Y': prod *= f[1]; break;
        case 'Z': prod *= f[2]; break;
        default: break;
        }
    }
    return prod;
}

void check_perm_length(const Permutation &tau, int n) {
    if (tau.size() != n) {
        throw InvalidArgument("permutation length " + std::to_string(tau.size()) +
                              " differs from spectrum length " + std::to_string(n));
    }
}

double member_value(const EnsembleMember &member, Embedding embedding, const BitVector &b,
                    const QracAngles &angles) {
    const BitVector input = std::visit(
        [&](const auto &pre) -> BitVector {
            if constexpr (std::is_same_v<std::decay_t<decltype(pre)>, SubsetSelector>) {
                return embed::select_bits(pre, b);
            } else {
                return embed::permute_bits(pre, b);
            }
        },
        member.preprocessor);
    const auto psi = embed::embed_state(embedding, input, angles);
    return std::visit([&](const auto &obs) { return qsim::expectation(obs, psi); },
                      member.observable);
}

} // namespace

DenseObservable synth_phase_obs(const FourierSpectrum &spec) {
    const int n = spec.num_bits();
    if (n > kMaxPhaseSynthBits) {
        throw CapacityError("synth_phase_obs supports n <= " +
                            std::to_string(kMaxPhaseSynthBits));
    }
    const std::size_t dim = std::size_t{1} << n;
    CMatrix o(dim);
    for (const auto &[s, c] : spec) {
        for (std::size_t k = 0; k < dim; ++k) {
            o(k, k ^ s) = c;
        }
    }
    return {n, std::move(o)};
}

FourierSpectrum model_spectrum_phase(const DenseObservable &o) {
    const int n = o.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const double scale = 1.0 / static_cast<double>(dim);
    FourierSpectrum out(n);
    for (std::size_t s = 0; s < dim; ++s) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < dim; ++k) {
            acc += o.matrix()(k, k ^ s);
        }
        out.set(static_cast<Mask>(s), acc.real() * scale);
    }
    return out;
}

double phase_model_value(const DenseObservable &o, const BitVector &b) {
    return qsim::expectation(o, embed::phase_embed(b));
}

bool in_kqe(Mask s, int m) noexcept {
    if (m < 0 || m > 10 || (s >> (3 * m)) != 0) {
        return false;
    }
    for (int i = 0; i < m; ++i) {
        if (weight((s >> (3 * i)) & 7U) > 1) {
            return false;
        }
    }
    return true;
}

std::vector<Mask> kqe_set(int m) {
    if (m < 1 || m > kMaxKqeQubits) {
        throw CapacityError("kqe_set supports 1 <= m <= " + std::to_string(kMaxKqeQubits));
    }
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << (2 * m));
    for (Mask s = 0; s < (Mask{1} << (3 * m)); ++s) {
        if (in_kqe(s, m)) {
            out.push_back(s);
        }
    }
    return out;
}

Mask phi_map(std::string_view word) {
    if (word.empty() || 3 * word.size() > static_cast<std::size_t>(kMaxBits)) {
        throw InvalidArgument("phi_map: word length must be 1..8");
    }
    Mask s = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 'I') {
            continue;
        }
        const auto pos = kLetters.find(word[i]);
        if (pos == std::string_view::npos) {
            throw InvalidArgument("phi_map: invalid Pauli letter");
        }
        s |= Mask{1} << (3 * i + pos);
    }
    return s;
}

std::string phi_inv(Mask s, int m) {
    if (!in_kqe(s, m)) {
        throw SupportError("mask is outside K^QE_" + std::to_string(m),
                           mask_to_string(s, 3 * m));
    }
    std::string word(static_cast<std::size_t>(m), 'I');
    for (int i = 0; i < m; ++i) {
        const Mask t = (s >> (3 * i)) & 7U;
        if (t != 0) {
            word[static_cast<std::size_t>(i)] = kLetters[static_cast<std::size_t>(std::countr_zero(t))];
        }
    }
    return word;
}

PauliSum synth_qrac_obs(const FourierSpectrum &spec, const QracAngles &a,
                        QracWeighting weighting) {
    const int n = spec.num_bits();
    const int m = qubits_for(n);
    const double extra = weighting == QracWeighting::kAsPrinted ? std::ldexp(1.0, m) : 1.0;
    PauliSum out(m);
    for (const auto &[s, c] : spec) {
        if (!in_kqe(s, m)) {
            throw SupportError("spectrum has a triplet of weight > 1", mask_to_string(s, n));
        }
        const std::string word = phi_inv(s, m);
        out.add(word, extra * c / word_factor(word, a));
    }
    return out;
}

FourierSpectrum model_spectrum_qrac(const PauliSum &o, int n, const QracAngles &a) {
    const int m = qubits_for(n);
    if (o.num_qubits() != m) {
        throw InvalidArgument("observable has " + std::to_string(o.num_qubits()) +
                              " qubits, QRAC on " + std::to_string(n) + " bits needs " +
                              std::to_string(m));
    }
    FourierSpectrum out(n);
    for (const auto &[word, w] : o.terms()) {
        out.add(phi_map(word) & low_bits(n), w * word_factor(word, a));
    }
    return out;
}

FourierSpectrum model_spectrum_qrac(const DenseObservable &o, int n, const QracAngles &a) {
    return model_spectrum_qrac(qsim::pauli_decompose(o, 0.0), n, a);
}

double qrac_model_value(const PauliSum &o, const BitVector &b, const QracAngles &a) {
    return qsim::expectation(o, embed::qrac_embed(b, a));
}

PermutedObservable synth_qrac_permuted(const FourierSpectrum &spec, const Permutation &tau,
                                       const QracAngles &a) {
    const int n = spec.num_bits();
    check_perm_length(tau, n);
    const int m = qubits_for(n);
    PauliSum out(m);
    for (const auto &[s, c] : spec) {
        const Mask t = embed::permute_mask(tau, s);
        if (!in_kqe(t, m)) {
            throw SupportError("spectrum support is outside tau(K^QE)", mask_to_string(s, n));
        }
        const std::string word = phi_inv(t, m);
        out.add(word, c / word_factor(word, a));
    }
    return {tau, std::move(out)};
}

FourierSpectrum model_spectrum_qrac_permuted(const PauliSum &o, const Permutation &tau,
                                             const QracAngles &a) {
    const int n = tau.size();
    const auto base = model_spectrum_qrac(o, n, a);
    const Permutation inv = tau.inverse();
    FourierSpectrum out(n);
    for (const auto &[s, c] : base) {
        out.add(embed::permute_mask(inv, s), c);
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t subset_multiplicity(Mask s, int n, int d) {
    if (weight(s) > d) {
        return 0;
    }
    std::uint64_t count = 0;
    for (const auto &w : embed::all_subsets(n, d)) {
        if ((s & ~w.support(n)) == 0) {
            ++count;
        }
    }
    return count;
}

std::uint64_t subset_multiplicity_closed_form(Mask s, int n, int d) {
    return binomial(n - weight(s), d - weight(s));
}

std::uint64_t permutation_multiplicity(Mask s, int n) {
    const int m = qubits_for(n);
    std::uint64_t count = 0;
    for (const auto &tau : embed::all_permutations(n)) {
        if (in_kqe(embed::permute_mask(tau, s), m)) {
            ++count;
        }
    }
    return count;
}

EnsembleModel ensemble_phase(const FourierSpectrum &spec, int d) {
    const int n = spec.num_bits();
    if (d < 1 || d > n) {
        throw InvalidArgument("ensemble degree must satisfy 1 <= d <= n");
    }
    if (d > kMaxPhaseSynthBits) {
        throw CapacityError("ensemble member size exceeds the phase synthesis cap");
    }
    if (fourier::degree(spec) > d) {
        throw InvalidArgument("spectrum degree " + std::to_string(fourier::degree(spec)) +
                              " exceeds ensemble degree " + std::to_string(d));
    }
    const auto subsets = embed::all_subsets(n, d);
    std::map<Mask, std::uint64_t> k;
    for (const auto &[s, c] : spec) {
        k[s] = 0;
    }
    for (const auto &w : subsets) {
        const Mask supp = w.support(n);
        for (auto &[s, count] : k) {
            if ((s & ~supp) == 0) {
                ++count;
            }
        }
    }
    EnsembleModel e{n, Embedding::kPhase, {}};
    for (const auto &w : subsets) {
        const Mask supp = w.support(n);
        FourierSpectrum component(d);
        for (const auto &[s, c] : spec) {
            if ((s & ~supp) != 0) {
                continue;
            }
            const BitVector local = embed::select_bits(w, BitVector(n, s));
            component.add(local.mask(), c / static_cast<double>(k[s]));
        }
        if (!component.empty()) {
            e.members.push_back({w, synth_phase_obs(component)});
        }
    }
    return e;
}

EnsembleModel ensemble_qrac(const FourierSpectrum &spec) {
    const int n = spec.num_bits();
    if (n > 7) {
        throw CapacityError("ensemble_qrac enumerates S_n only for n <= 7");
    }
    const int m = qubits_for(n);
    for (const auto &[s, c] : spec) {
        if (weight(s) > m) {
            throw SupportError("spectrum degree " + std::to_string(weight(s)) +
                                   " exceeds ceil(n/3) = " + std::to_string(m),
                               mask_to_string(s, n));
        }
    }
    const auto perms = embed::all_permutations(n);
    std::map<Mask, std::uint64_t> k;
    for (const auto &[s, c] : spec) {
        k[s] = 0;
    }
    for (const auto &tau : perms) {
        for (auto &[s, count] : k) {
            if (in_kqe(embed::permute_mask(tau, s), m)) {
                ++count;
            }
        }
    }
    for (const auto &[s, count] : k) {
        if (count == 0) {
            throw SupportError("no permutation maps the mask into K^QE", mask_to_string(s, n));
        }
    }
    EnsembleModel e{n, Embedding::kQrac, {}};
    for (const auto &tau : perms) {
        FourierSpectrum component(n);
        for (const auto &[s, c] : spec) {
            if (in_kqe(embed::permute_mask(tau, s), m)) {
                component.add(s, c / static_cast<double>(k[s]));
            }
        }
        if (!component.empty()) {
            e.members.push_back({tau, synth_qrac_permuted(component, tau).observable});
        }
    }
    return e;
}

double ensemble_eval(const EnsembleModel &e, const BitVector &b) {
    if (b.size() != e.n) {
        throw InvalidArgument("ensemble expects " + std::to_string(e.n) + "-bit inputs, got " +
                              std::to_string(b.size()));
    }
    const QracAngles angles;
    std::vector<double> values(e.members.size(), 0.0);
    parallel_for(e.members.size(), [&](std::size_t i) {
        values[i] = member_value(e.members[i], e.embedding, b, angles);
    });
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total;
}

} // namespace boolcube::synth
