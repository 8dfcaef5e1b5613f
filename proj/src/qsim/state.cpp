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
#include "boolcube/qsim/state.hpp"

#include "boolcube/error.hpp"
#include "boolcube/simd/kernels.hpp"

#include <cmath>

namespace boolcube::qsim {
namespace {

void check_register(int m) {
    if (m < 1 || m > kMaxQubits) {
        throw CapacityError("register must have 1.." + std::to_string(kMaxQubits) +
                            " qubits, got " + std::to_string(m));
    }
}

void apply_cz(std::span<cplx> amps, int q0, int q1) {
    const std::size_t both = (std::size_t{1} << q0) | (std::size_t{1} << q1);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
}

void apply_swap_rot(std::span<cplx> amps, int q0, int q1, double beta) {
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const cplx c = std::cos(beta / 2.0);
    const cplx is{0.0, std::sin(beta / 2.0)};
    const cplx diag = c - is;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool x0 = (i & b0) != 0;
        const bool x1 = (i & b1) != 0;
        if (x0 == x1) {
            amps[i] *= diag;
        } else if (x0) {
            // Pair (|..1_q0 0_q1..>, |..0_q0 1_q1..>) handled once from the q0 side.
            const std::size_t j = (i & ~b0) | b1;
            const cplx ai = amps[i];
            const cplx aj = amps[j];
            amps[i] = c * ai - is * aj;
            amps[j] = c * aj - is * ai;
        }
    }
}

} // namespace

StateVector::StateVector(int num_qubits) : m_(num_qubits) {
    check_register(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : m_(num_qubits), amps_(std::move(amplitudes)) {
    check_register(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw InvalidArgument("statevector needs 2^m amplitudes");
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw InvalidArgument("statevector is not normalised");
    }
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::apply(const Gate &gate, std::span<const double> params) {
    if (gate.q0 >= m_ || gate.q1 >= m_) {
        throw InvalidArgument("gate qubit index out of range for this state");
    }
    const double angle = resolve(gate.angle, params);
    switch (gate.kind) {
    case GateKind::kCZ:
        apply_cz(amps_, gate.q0, gate.q1);
        return;
    case GateKind::kSwapRot:
        apply_swap_rot(amps_, gate.q0, gate.q1, angle);
        return;
    case GateKind::kX: {
        const std::size_t bit = std::size_t{1} << gate.q0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & bit) == 0) {
                std::swap(amps_[i], amps_[i | bit]);
            }
        }
        return;
    }
    default:
        simd::kernels().apply_1q(amps_, static_cast<unsigned>(gate.q0),
                                 single_qubit_matrix(gate.kind, angle, gate.axis));
    }
}

void StateVector::apply(const Circuit &circuit, std::span<const double> params) {
    if (circuit.num_qubits() != m_) {
        throw InvalidArgument("circuit and state register sizes differ");
    }
    if (params.size() < circuit.num_parameters()) {
        throw InvalidArgument("circuit has " + std::to_string(circuit.num_parameters()) +
                              " parameter slots but only " +
                              std::to_string(params.size()) + " values were bound");
    }
    for (const auto &g : circuit.gates()) {
        apply(g, params);
    }
}

StateVector StateVector::tensor(const StateVector &low, const StateVector &high) {
    const int m = low.m_ + high.m_;
    check_register(m);
    std::vector<cplx> amps(std::size_t{1} << m);
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < low.dim(); ++l) {
            amps[(h << low.m_) | l] = high.amps_[h] * low.amps_[l];
        }
    }
    StateVector out(m);
    out.amps_ = std::move(amps);
    return out;
}

DensityMatrix::DensityMatrix(const StateVector &psi)
    : m_(psi.num_qubits()), rho_(psi.dim()) {
    const auto a = psi.amplitudes();
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            rho_(r, c) = a[r] * std::conj(a[c]);
        }
    }
}

DensityMatrix::DensityMatrix(int num_qubits, CMatrix rho) : m_(num_qubits), rho_(std::move(rho)) {
    check_register(num_qubits);
    if (rho_.dim() != (std::size_t{1} << num_qubits)) {
        throw InvalidArgument("density matrix dimension must be 2^m");
    }
    if (rho_.hermitian_defect() > 1e-10) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx{1.0, 0.0}) > 1e-10) {
        throw InvalidArgument("density matrix trace is not 1");
    }
    if (eigh(rho_).values.front() < -1e-9) {
        throw InvalidArgument("density matrix is not positive semidefinite");
    }
}

double DensityMatrix::purity() const { return trace_product(rho_, rho_).real(); }

StateVector run_circuit(const Circuit &circuit, std::span<const double> params) {
    StateVector psi(circuit.num_qubits());
    psi.apply(circuit, params);
    return psi;
}

CMatrix circuit_unitary(const Circuit &circuit, std::span<const double> params) {
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    CMatrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<cplx> basis(dim, cplx{0.0, 0.0});
        basis[j] = 1.0;
        StateVector psi(circuit.num_qubits(), std::move(basis));
        psi.apply(circuit, params);
        const auto a = psi.amplitudes();
        for (std::size_t r = 0; r < dim; ++r) {
            u(r, j) = a[r];
        }
    }
    return u;
}

double overlap_magnitude(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("overlap: register sizes differ");
    }
    return std::abs(simd::kernels().inner(a.amplitudes(), b.amplitudes()));
}

std::array<double, 3> bloch_vector(const StateVector &psi) {
    if (psi.num_qubits() != 1) {
        throw InvalidArgument("bloch_vector needs a one-qubit state");
    }
    const cplx a0 = psi.amplitudes()[0];
    const cplx a1 = psi.amplitudes()[1];
    const cplx coh = std::conj(a0) * a1;
    return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(a0) - std::norm(a1)};
}

} // namespace boolcube::qsim
