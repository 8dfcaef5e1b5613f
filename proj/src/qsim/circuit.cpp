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
#include "boolcube/qsim/circuit.hpp"

#include "boolcube/error.hpp"

#include <cmath>
#include <numbers>

namespace boolcube::qsim {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::kX: return "X";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kRN: return "RN";
    case GateKind::kCZ: return "CZ";
    case GateKind::kSwapRot: return "SWAPROT";
    }
    return "?";
}

Circuit::Circuit(int num_qubits) : m_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("circuit register must have 1.." +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(num_qubits));
    }
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= m_) {
        throw InvalidArgument("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(m_) + " qubits");
    }
}

Circuit &Circuit::push(Gate g) {
    check_qubit(g.q0);
    if (g.q1 >= 0 || g.kind == GateKind::kCZ || g.kind == GateKind::kSwapRot) {
        check_qubit(g.q1);
        if (g.q1 == g.q0) {
            throw InvalidArgument("two-qubit gate needs distinct qubits");
        }
    }
    if (const auto *slot = std::get_if<Slot>(&g.angle)) {
        num_params_ = std::max(num_params_, slot->index + 1);
    } else if (!std::isfinite(std::get<double>(g.angle))) {
        throw InvalidArgument("gate angle must be finite");
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::x(int q) { return push({GateKind::kX, q}); }
Circuit &Circuit::z(int q) { return push({GateKind::kZ, q}); }
Circuit &Circuit::h(int q) { return push({GateKind::kH, q}); }
Circuit &Circuit::ry(int q, Angle theta) { return push({GateKind::kRY, q, -1, theta}); }
Circuit &Circuit::rz(int q, Angle theta) { return push({GateKind::kRZ, q, -1, theta}); }

Circuit &Circuit::rn(int q, std::array<double, 3> axis, Angle theta) {
    const double norm =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw InvalidArgument("rotation axis must be a unit vector");
    }
    return push({GateKind::kRN, q, -1, theta, axis});
}

Circuit &Circuit::cz(int q0, int q1) { return push({GateKind::kCZ, q0, q1}); }

Circuit &Circuit::swap_rot(int q0, int q1, Angle beta) {
    return push({GateKind::kSwapRot, q0, q1, beta});
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.m_ != m_) {
        throw InvalidArgument("append: register sizes differ");
    }
    for (const auto &g : other.gates_) {
        push(g);
    }
    return *this;
}

Circuit Circuit::bind(std::span<const double> params) const {
    Circuit out(m_);
    for (Gate g : gates_) {
        g.angle = resolve(g.angle, params);
        out.push(g);
    }
    return out;
}

double resolve(const Angle &angle, std::span<const double> params) {
    if (const auto *slot = std::get_if<Slot>(&angle)) {
        if (slot->index >= params.size()) {
            throw InvalidArgument("unbound parameter slot " + std::to_string(slot->index));
        }
        return params[slot->index];
    }
    return std::get<double>(angle);
}

simd::Mat2 single_qubit_matrix(GateKind kind, double angle,
                               const std::array<double, 3> &axis) {
    using namespace std::complex_literals;
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::kX:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kZ:
        return {1.0, 0.0, 0.0, -1.0};
    case GateKind::kH: {
        const double r = std::numbers::sqrt2 / 2.0;
        return {r, r, r, -r};
    }
    case GateKind::kRY:
        return {c, -s, s, c};
    case GateKind::kRZ:
        return {std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0)};
    case GateKind::kRN: {
        // cos(t/2) I - i sin(t/2) (nx X + ny Y + nz Z)
        const auto [nx, ny, nz] = axis;
        return {cplx{c, -s * nz}, cplx{-s * ny, -s * nx}, cplx{s * ny, -s * nx},
                cplx{c, s * nz}};
    }
    default:
        throw InvalidArgument("not a single-qubit gate");
    }
}

CMatrix two_qubit_matrix(GateKind kind, double angle) {
    CMatrix out(4);
    switch (kind) {
    case GateKind::kCZ:
        out(0, 0) = 1.0;
        out(1, 1) = 1.0;
        out(2, 2) = 1.0;
        out(3, 3) = -1.0;
        return out;
    case GateKind::kSwapRot: {
        // exp(-i b/2 SWAP) = cos(b/2) I - i sin(b/2) SWAP
        const cplx c = std::cos(angle / 2.0);
        const cplx is = cplx{0.0, std::sin(angle / 2.0)};
        out(0, 0) = c - is;
        out(3, 3) = c - is;
        out(1, 1) = c;
        out(2, 2) = c;
        out(1, 2) = -is;
        out(2, 1) = -is;
        return out;
    }
    default:
        throw InvalidArgument("not a two-qubit gate");
    }
}

} // namespace boolcube::qsim
