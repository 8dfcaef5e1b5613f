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
#include "boolcube/embed.hpp"

#include "boolcube/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace boolcube::embed {
namespace {

using qsim::Circuit;
using qsim::cplx;
using qsim::StateVector;

constexpr double kFactorFloor = 1e-9;

void check_phase_size(int n) {
    if (n > qsim::kMaxQubits) {
        throw CapacityError("phase embedding of " + std::to_string(n) +
                            " bits exceeds the " + std::to_string(qsim::kMaxQubits) +
                            "-qubit cap");
    }
}

void check_qrac_size(int n) {
    if (qrac_qubits(n) > qsim::kMaxQubits) {
        throw CapacityError("QRAC embedding of " + std::to_string(n) + " bits exceeds the " +
                            std::to_string(qsim::kMaxQubits) + "-qubit cap");
    }
}

} // namespace

std::string_view embedding_name(Embedding e) noexcept {
    return e == Embedding::kPhase ? "phase" : "qrac";
}

Embedding parse_embedding(std::string_view text) {
    if (text == "phase") {
        return Embedding::kPhase;
    }
    if (text == "qrac") {
        return Embedding::kQrac;
    }
    throw InvalidArgument("unknown embedding '" + std::string(text) + "'");
}

QracAngles::QracAngles()
    : a1_(std::numbers::pi / 4.0),
      a2_(2.0 * std::acos(std::sqrt(0.5 + 1.0 / (2.0 * std::numbers::sqrt3)))) {}

QracAngles::QracAngles(double alpha1, double alpha2) : a1_(alpha1), a2_(alpha2) {
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
        throw InvalidArgument("QRAC angles must be finite");
    }
    for (double f : bloch_factors()) {
        if (std::abs(f) < kFactorFloor) {
            throw InvalidArgument("QRAC angles give a vanishing Bloch component");
        }
    }
}

std::array<double, 3> QracAngles::bloch_factors() const noexcept {
    return {std::sin(a2_) * std::cos(a1_), std::sin(a2_) * std::sin(a1_), std::cos(a2_)};
}

SubsetSelector::SubsetSelector(std::vector<int> indices) : w_(std::move(indices)) {
    if (w_.empty()) {
        throw InvalidArgument("subset selector must be nonempty");
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] < 1 || (i > 0 && w_[i] <= w_[i - 1])) {
            throw InvalidArgument("subset selector must be strictly increasing and 1-based");
        }
    }
}

Mask SubsetSelector::support(int n) const {
    if (w_.back() > n) {
        throw InvalidArgument("selector index " + std::to_string(w_.back()) +
                              " exceeds input length " + std::to_string(n));
    }
    Mask m = 0;
    for (int i : w_) {
        m |= Mask{1} << (i - 1);
    }
    return m;
}

Permutation::Permutation(std::vector<int> image) : tau_(std::move(image)) {
    const int n = static_cast<int>(tau_.size());
    if (n < 1 || n > kMaxBits) {
        throw InvalidArgument("permutation length must be 1..24");
    }
    std::vector<bool> seen(tau_.size(), false);
    for (int v : tau_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(tau_.size());
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        inv[static_cast<std::size_t>(tau_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < tau_.size(); ++i) {
        if (tau_[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

Permutation compose(const Permutation &tau, const Permutation &sigma) {
    if (tau.size() != sigma.size()) {
        throw InvalidArgument("compose: permutation lengths differ");
    }
    std::vector<int> out(static_cast<std::size_t>(tau.size()));
    for (int i = 1; i <= tau.size(); ++i) {
        out[static_cast<std::size_t>(i - 1)] = tau(sigma(i));
    }
    return Permutation(std::move(out));
}

std::vector<SubsetSelector> all_subsets(int n, int d) {
    if (d < 1 || d > n || n > kMaxBits) {
        throw InvalidArgument("all_subsets needs 1 <= d <= n <= 24");
    }
    std::vector<SubsetSelector> out;
    std::vector<int> w(static_cast<std::size_t>(d));
    std::iota(w.begin(), w.end(), 1);
    while (true) {
        out.emplace_back(w);
        int i = d - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n - d + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++w[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) {
            w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1 || n > 8) {
        throw CapacityError("all_permutations enumerates S_n only for n <= 8");
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

Circuit phase_circuit(const BitVector &b) {
    check_phase_size(b.size());
    Circuit c(b.size());
    for (int q = 0; q < b.size(); ++q) {
        if (b.get(q + 1)) {
            c.x(q);
        }
    }
    for (int q = 0; q < b.size(); ++q) {
        c.h(q);
    }
    return c;
}

StateVector phase_embed(const BitVector &b) {
    check_phase_size(b.size());
    // Product of |+> / |-> factors; sign is the parity of b on the index.
    const int n = b.size();
    const double amp = std::pow(2.0, -0.5 * n);
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const bool odd = (weight(static_cast<Mask>(j) & b.mask()) & 1) != 0;
        amps[j] = odd ? -amp : amp;
    }
    return StateVector(n, std::move(amps));
}

std::vector<Triplet> qrac_triplets(const BitVector &b) {
    const int m = qrac_qubits(b.size());
    std::vector<Triplet> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out.push_back(Triplet::from_mask((b.mask() >> (3 * i)) & 7U));
    }
    return out;
}

QracRotation qrac_angles_for(const Triplet &t, const QracAngles &a) {
    const double pi = std::numbers::pi;
    const double base = t.bx ? pi - a.alpha1() : a.alpha1();
    const double phi_z = t.by ? -base : base;
    const double phi_y = t.bz ? pi - a.alpha2() : a.alpha2();
    return {phi_y, phi_z};
}

Circuit qrac_circuit(const BitVector &b, const QracAngles &a) {
    check_qrac_size(b.size());
    const auto triplets = qrac_triplets(b);
    Circuit c(static_cast<int>(triplets.size()));
    for (std::size_t i = 0; i < triplets.size(); ++i) {
        const auto [phi_y, phi_z] = qrac_angles_for(triplets[i], a);
        c.ry(static_cast<int>(i), phi_y);
        c.rz(static_cast<int>(i), phi_z);
    }
    return c;
}

StateVector qrac_embed(const BitVector &b, const QracAngles &a) {
    return qsim::run_circuit(qrac_circuit(b, a));
}

qsim::CMatrix qrac_density(const Triplet &t, const QracAngles &a) {
    const auto f = a.bloch_factors();
    const double rx = t.bx ? -f[0] : f[0];
    const double ry = t.by ? -f[1] : f[1];
    const double rz = t.bz ? -f[2] : f[2];
    qsim::CMatrix rho(2);
    rho(0, 0) = 0.5 * (1.0 + rz);
    rho(1, 1) = 0.5 * (1.0 - rz);
    rho(0, 1) = 0.5 * cplx{rx, -ry};
    rho(1, 0) = 0.5 * cplx{rx, ry};
    return rho;
}

StateVector embed_state(Embedding e, const BitVector &b, const QracAngles &a) {
    return e == Embedding::kPhase ? phase_embed(b) : qrac_embed(b, a);
}

int embed_qubits(Embedding e, int n) { return e == Embedding::kPhase ? n : qrac_qubits(n); }

BitVector select_bits(const SubsetSelector &w, const BitVector &b) {
    (void)w.support(b.size());
    Mask out = 0;
    for (int k = 0; k < w.size(); ++k) {
        if (b.get(w.indices()[static_cast<std::size_t>(k)])) {
            out |= Mask{1} << k;
        }
    }
    return {w.size(), out};
}

BitVector embed_bits(const SubsetSelector &w, const BitVector &b_prime, int n) {
    if (b_prime.size() != w.size()) {
        throw InvalidArgument("embed_bits: input length differs from selector length");
    }
    (void)w.support(n);
    Mask out = 0;
    for (int k = 0; k < w.size(); ++k) {
        if (b_prime.get(k + 1)) {
            out |= Mask{1} << (w.indices()[static_cast<std::size_t>(k)] - 1);
        }
    }
    return {n, out};
}

Mask permute_mask(const Permutation &tau, Mask b) {
    Mask out = 0;
    for (int i = 1; i <= tau.size(); ++i) {
        if (((b >> (tau(i) - 1)) & 1U) != 0) {
            out |= Mask{1} << (i - 1);
        }
    }
    return out;
}

BitVector permute_bits(const Permutation &tau, const BitVector &b) {
    if (tau.size() != b.size()) {
        throw InvalidArgument("permute_bits: permutation length " + std::to_string(tau.size()) +
                              " differs from input length " + std::to_string(b.size()));
    }
    return {b.size(), permute_mask(tau, b.mask())};
}

Circuit repeated_phase_embed(const BitVector &b, std::span<const SubsetSelector> partition,
                             std::span<const Circuit> interleave) {
    if (partition.empty() || partition.size() != interleave.size()) {
        throw InvalidArgument("repeated_phase_embed needs one interleave block per selector");
    }
    const int m = interleave.front().num_qubits();
    const auto &first = interleave.front().gates();
    std::vector<bool> covered(static_cast<std::size_t>(m), false);
    bool hadamard_layer = static_cast<int>(first.size()) == m;
    for (const auto &g : first) {
        if (g.kind != qsim::GateKind::kH || covered[static_cast<std::size_t>(g.q0)]) {
            hadamard_layer = false;
            break;
        }
        covered[static_cast<std::size_t>(g.q0)] = true;
    }
    if (!hadamard_layer) {
        throw InvalidArgument("first interleave block must be H on every qubit");
    }
    Circuit out(m);
    for (std::size_t j = 0; j < partition.size(); ++j) {
        if (partition[j].size() != m) {
            throw InvalidArgument("selector " + std::to_string(j + 1) + " has length " +
                                  std::to_string(partition[j].size()) + ", expected " +
                                  std::to_string(m));
        }
        if (interleave[j].num_qubits() != m || interleave[j].num_parameters() != 0) {
            throw InvalidArgument("interleave blocks must be bound circuits on m qubits");
        }
        out.append(interleave[j]);
        const BitVector sub = select_bits(partition[j], b);
        for (int q = 0; q < m; ++q) {
            if (sub.get(q + 1)) {
                out.z(q);
            }
        }
    }
    return out;
}

Circuit double_qrac_circuit(const Triplet &t, const QracAngles &a) {
    const auto [phi_y, phi_z] = qrac_angles_for(t, a);
    const double r = 1.0 / std::numbers::sqrt3;
    Circuit c(1);
    c.ry(0, phi_y).rz(0, phi_z);
    c.rn(0, {r, r, r}, std::numbers::pi);
    c.ry(0, phi_y).rz(0, phi_z);
    return c;
}

StateVector double_qrac_embed(const Triplet &t, const QracAngles &a) {
    return qsim::run_circuit(double_qrac_circuit(t, a));
}

std::vector<std::array<int, 2>> swap_network_pairs(int m) {
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

Circuit swap_network_layer(int m, std::span<const double> beta) {
    const auto pairs = swap_network_pairs(m);
    if (beta.size() != pairs.size()) {
        throw InvalidArgument("swap network on " + std::to_string(m) + " qubits needs " +
                              std::to_string(pairs.size()) + " angles, got " +
                              std::to_string(beta.size()));
    }
    Circuit c(m);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        c.swap_rot(pairs[k][0], pairs[k][1], beta[k]);
    }
    return c;
}

bool routes_subset(const Circuit &layer, std::span<const int> subset) {
    const int m = layer.num_qubits();
    const int k = static_cast<int>(subset.size());
    if (k < 1 || k > m) {
        throw InvalidArgument("routes_subset: subset size must be 1..m");
    }
    const std::size_t dim = std::size_t{1} << m;
    // consistent[p][s]: output qubit p equals input qubit s on every basis state so far.
    std::vector<std::vector<bool>> consistent(static_cast<std::size_t>(m),
                                              std::vector<bool>(static_cast<std::size_t>(m), true));
    for (std::size_t x = 0; x < dim; ++x) {
        std::vector<cplx> amps(dim, cplx{0.0, 0.0});
        amps[x] = 1.0;
        StateVector psi(m, std::move(amps));
        psi.apply(layer);
        const auto a = psi.amplitudes();
        const auto it = std::max_element(a.begin(), a.end(), [](cplx u, cplx v) {
            return std::norm(u) < std::norm(v);
        });
        if (std::abs(std::abs(*it) - 1.0) > 1e-10) {
            return false;
        }
        const std::size_t y = static_cast<std::size_t>(it - a.begin());
        for (int p = 0; p < m; ++p) {
            for (int s = 0; s < m; ++s) {
                if (((y >> p) & 1U) != ((x >> s) & 1U)) {
                    consistent[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)] = false;
                }
            }
        }
    }
    std::vector<int> sources;
    for (int p = 0; p < k; ++p) {
        int found = -1;
        for (int s = 0; s < m; ++s) {
            if (consistent[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)]) {
                found = s + 1;
            }
        }
        if (found < 0) {
            return false;
        }
        sources.push_back(found);
    }
    std::vector<int> want(subset.begin(), subset.end());
    std::sort(want.begin(), want.end());
    std::sort(sources.begin(), sources.end());
    return sources == want;
}

std::optional<std::vector<double>> find_routing(int m, std::span<const int> subset) {
    const std::size_t pairs = swap_network_pairs(m).size();
    if (pairs > 20) {
        throw CapacityError("find_routing: too many pairs for exhaustive search");
    }
    for (std::size_t code = 0; code < (std::size_t{1} << pairs); ++code) {
        std::vector<double> beta(pairs, 0.0);
        for (std::size_t k = 0; k < pairs; ++k) {
            if (((code >> k) & 1U) != 0) {
                beta[k] = std::numbers::pi;
            }
        }
        if (routes_subset(swap_network_layer(m, beta), subset)) {
            return beta;
        }
    }
    return std::nullopt;
}

} // namespace boolcube::embed
