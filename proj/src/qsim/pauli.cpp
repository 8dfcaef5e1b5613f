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
#include "boolcube/qsim/pauli.hpp"

#include "boolcube/error.hpp"
#include "boolcube/rng.hpp"
#include "boolcube/simd/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace boolcube::qsim {
namespace {

constexpr double kImagTolerance = 1e-9;

// P|j> = i^ny (-1)^{popcount(j & z)} |j ^ x>
struct WordMasks {
    std::size_t x = 0;
    std::size_t z = 0;
    int ny = 0;
};

WordMasks word_masks(std::string_view word) {
    WordMasks w;
    for (std::size_t q = 0; q < word.size(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        switch (word[q]) {
        case 'I': break;
        case 'X': w.x |= bit; break;
        case 'Y':
            w.x |= bit;
            w.z |= bit;
            ++w.ny;
            break;
        case 'Z': w.z |= bit; break;
        default:
            throw InvalidArgument("Pauli word has invalid letter '" + std::string(1, word[q]) +
                                  "'");
        }
    }
    return w;
}

cplx i_power(int k) {
    switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

double sign_of(std::size_t j, std::size_t z) {
    return (std::popcount(j & z) & 1) != 0 ? -1.0 : 1.0;
}

double real_part_checked(cplx value, const char *what) {
    if (std::abs(value.imag()) > kImagTolerance * std::max(1.0, std::abs(value.real()))) {
        throw NumericalError(std::string(what) + ": expectation has imaginary residue " +
                             std::to_string(value.imag()));
    }
    return value.real();
}

void check_dims(int a, int b) {
    if (a != b) {
        throw InvalidArgument("observable acts on " + std::to_string(a) +
                              " qubits but the state has " + std::to_string(b));
    }
}

} // namespace

int pauli_weight(std::string_view word) {
    return static_cast<int>(std::count_if(word.begin(), word.end(),
                                          [](char c) { return c != 'I'; }));
}

PauliSum::PauliSum(int num_qubits) : m_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("PauliSum register must have 1.." + std::to_string(kMaxQubits) +
                            " qubits");
    }
}

PauliSum PauliSum::identity(int num_qubits, double weight) {
    PauliSum p(num_qubits);
    p.add(std::string(static_cast<std::size_t>(num_qubits), 'I'), weight);
    return p;
}

PauliSum PauliSum::all_z(int num_qubits) {
    PauliSum p(num_qubits);
    p.add(std::string(static_cast<std::size_t>(num_qubits), 'Z'), 1.0);
    return p;
}

PauliSum &PauliSum::add(std::string_view word, double weight) {
    if (static_cast<int>(word.size()) != m_) {
        throw InvalidArgument("Pauli word '" + std::string(word) + "' has length " +
                              std::to_string(word.size()) + ", expected " + std::to_string(m_));
    }
    (void)word_masks(word);
    if (!std::isfinite(weight)) {
        throw InvalidArgument("Pauli weight must be finite");
    }
    auto [it, inserted] = terms_.try_emplace(std::string(word), 0.0);
    it->second += weight;
    if (it->second == 0.0) {
        terms_.erase(it);
    }
    return *this;
}

double PauliSum::weight(std::string_view word) const {
    const auto it = terms_.find(std::string(word));
    return it == terms_.end() ? 0.0 : it->second;
}

bool PauliSum::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) {
        return t.first.find_first_of("XY") == std::string::npos;
    });
}

double PauliSum::diagonal_value(std::size_t j) const {
    if (!is_diagonal()) {
        throw InvalidArgument("observable is not diagonal (contains X or Y)");
    }
    double acc = 0.0;
    for (const auto &[word, w] : terms_) {
        acc += w * sign_of(j, word_masks(word).z);
    }
    return acc;
}

std::vector<double> PauliSum::diagonal() const {
    if (!is_diagonal()) {
        throw InvalidArgument("observable is not diagonal (contains X or Y)");
    }
    const std::size_t dim = std::size_t{1} << m_;
    std::vector<double> out(dim, 0.0);
    for (const auto &[word, w] : terms_) {
        const std::size_t z = word_masks(word).z;
        for (std::size_t j = 0; j < dim; ++j) {
            out[j] += w * sign_of(j, z);
        }
    }
    return out;
}

PauliSum &PauliSum::operator*=(double s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        it = it->second == 0.0 ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

DenseObservable::DenseObservable(int num_qubits, CMatrix matrix)
    : m_(num_qubits), mat_(std::move(matrix)) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("observable register out of range");
    }
    if (mat_.dim() != (std::size_t{1} << num_qubits)) {
        throw InvalidArgument("observable dimension must be 2^m");
    }
    double scale = 1.0;
    for (const auto &z : mat_.data()) {
        scale = std::max(scale, std::abs(z));
    }
    if (mat_.hermitian_defect() > kHermitianTolerance * scale) {
        throw InvalidArgument("observable is not Hermitian");
    }
}

CMatrix pauli_word_matrix(std::string_view word) {
    if (word.empty() || static_cast<int>(word.size()) > kMaxDenseQubits) {
        throw CapacityError("dense Pauli word needs 1.." + std::to_string(kMaxDenseQubits) +
                            " letters");
    }
    const auto w = word_masks(word);
    const std::size_t dim = std::size_t{1} << word.size();
    CMatrix out(dim);
    const cplx phase = i_power(w.ny);
    for (std::size_t j = 0; j < dim; ++j) {
        out(j ^ w.x, j) = phase * sign_of(j, w.z);
    }
    return out;
}

DenseObservable pauli_to_dense(const PauliSum &p) {
    if (p.num_qubits() > kMaxDenseQubits) {
        throw CapacityError("pauli_to_dense supports at most " +
                            std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << p.num_qubits();
    CMatrix out(dim);
    for (const auto &[word, weight] : p.terms()) {
        const auto w = word_masks(word);
        const cplx phase = weight * i_power(w.ny);
        for (std::size_t j = 0; j < dim; ++j) {
            out(j ^ w.x, j) += phase * sign_of(j, w.z);
        }
    }
    return {p.num_qubits(), std::move(out)};
}

cplx trace_with_word(const CMatrix &o, std::string_view word) {
    if (o.dim() != (std::size_t{1} << word.size())) {
        throw InvalidArgument("trace_with_word: dimension mismatch");
    }
    const auto w = word_masks(word);
    // Tr[O P] = sum_j O(j, j^x) P(j^x, j)
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < o.dim(); ++j) {
        acc += o(j, j ^ w.x) * sign_of(j, w.z);
    }
    return acc * i_power(w.ny);
}

PauliSum pauli_decompose(const DenseObservable &o, double threshold) {
    const int m = o.num_qubits();
    if (m > kMaxDenseQubits) {
        throw CapacityError("pauli_decompose: register too large");
    }
    PauliSum out(m);
    const double inv_dim = 1.0 / static_cast<double>(o.matrix().dim());
    const std::size_t words = std::size_t{1} << (2 * m);
    std::string word(static_cast<std::size_t>(m), 'I');
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t code = 0; code < words; ++code) {
        for (int q = 0; q < m; ++q) {
            word[static_cast<std::size_t>(q)] = kLetters[(code >> (2 * q)) & 3U];
        }
        const double c = trace_with_word(o.matrix(), word).real() * inv_dim;
        if (std::abs(c) > threshold) {
            out.add(word, c);
        }
    }
    return out;
}

double expectation(const DenseObservable &o, const StateVector &psi) {
    check_dims(o.num_qubits(), psi.num_qubits());
    const auto y = matvec(o.matrix(), psi.amplitudes());
    return real_part_checked(simd::kernels().inner(psi.amplitudes(), y), "expectation");
}

double expectation(const DenseObservable &o, const DensityMatrix &rho) {
    check_dims(o.num_qubits(), rho.num_qubits());
    return real_part_checked(trace_product(o.matrix(), rho.matrix()), "expectation");
}

double expectation(const PauliSum &o, const StateVector &psi) {
    check_dims(o.num_qubits(), psi.num_qubits());
    const auto a = psi.amplitudes();
    cplx total{0.0, 0.0};
    for (const auto &[word, weight] : o.terms()) {
        const auto w = word_masks(word);
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.size(); ++j) {
            acc += std::conj(a[j ^ w.x]) * a[j] * sign_of(j, w.z);
        }
        total += weight * i_power(w.ny) * acc;
    }
    return real_part_checked(total, "expectation");
}

double expectation(const PauliSum &o, const DensityMatrix &rho) {
    check_dims(o.num_qubits(), rho.num_qubits());
    const CMatrix &r = rho.matrix();
    cplx total{0.0, 0.0};
    for (const auto &[word, weight] : o.terms()) {
        total += weight * trace_with_word(r, word);
    }
    return real_part_checked(total, "expectation");
}

double sample_expectation(const StateVector &psi, const PauliSum &d, std::uint64_t shots,
                          std::uint64_t seed) {
    check_dims(d.num_qubits(), psi.num_qubits());
    if (shots == 0) {
        throw InvalidArgument("sample_expectation needs at least one shot");
    }
    const auto diag = d.diagonal();
    const auto a = psi.amplitudes();
    std::vector<double> cdf(a.size());
    double run = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        run += std::norm(a[j]);
        cdf[j] = run;
    }
    double acc = 0.0;
    for (std::uint64_t k = 0; k < shots; ++k) {
        const double u = to_unit(counter_draw(seed, k)) * run;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        acc += diag[static_cast<std::size_t>(it - cdf.begin())];
    }
    return acc / static_cast<double>(shots);
}

double sample_expectation(const Circuit &circuit, std::span<const double> params,
                          const PauliSum &d, std::uint64_t shots, std::uint64_t seed) {
    if (!d.is_diagonal()) {
        throw InvalidArgument("sample_expectation needs an I/Z observable");
    }
    return sample_expectation(run_circuit(circuit, params), d, shots, seed);
}

} // namespace boolcube::qsim
