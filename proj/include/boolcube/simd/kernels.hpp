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
 * Data-parallel inner loops shared by the Fourier engine and the simulator.
 *
 * Each kernel has a scalar reference implementation and, on x86-64, an AVX2
 * variant. kernels() picks the widest variant the running CPU supports; the
 * environment variable BOOLCUBE_SIMD=scalar forces the reference path.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace boolcube::simd {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// Unnormalised in-place Walsh-Hadamard butterfly; size is a power of two.
    void (*fwht)(std::span<double> data);

    /// Applies `u` to qubit `target` of the statevector `amps`.
    void (*apply_1q)(std::span<cplx> amps, unsigned target, const Mat2 &u);

    /// sum_i |amps[i]|^2 * weights[i].
    double (*weighted_norm)(std::span<const cplx> amps,
                            std::span<const double> weights);

    /// <a|b> = sum_i conj(a[i]) * b[i].
    cplx (*inner)(std::span<const cplx> a, std::span<const cplx> b);
};

[[nodiscard]] bool isa_supported(Isa isa) noexcept;

/// Table for a specific ISA. Throws std::runtime_error if unsupported.
[[nodiscard]] const KernelTable &kernels_for(Isa isa);

/// Runtime-selected table; resolved once per process.
[[nodiscard]] const KernelTable &kernels();

namespace scalar {
void fwht(std::span<double> data);
void apply_1q(std::span<cplx> amps, unsigned target, const Mat2 &u);
double weighted_norm(std::span<const cplx> amps, std::span<const double> weights);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
} // namespace scalar

#ifdef BOOLCUBE_HAVE_AVX2
namespace avx2 {
void fwht(std::span<double> data);
void apply_1q(std::span<cplx> amps, unsigned target, const Mat2 &u);
double weighted_norm(std::span<const cplx> amps, std::span<const double> weights);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
} // namespace avx2
#endif

} // namespace boolcube::simd
