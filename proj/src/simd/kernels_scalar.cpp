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
#include "boolcube/simd/kernels.hpp"

namespace boolcube::simd::scalar {

void fwht(std::span<double> data) {
    const std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1U) {
        for (std::size_t i = 0; i < n; i += h << 1U) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = data[j];
                const double b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
}

void apply_1q(std::span<cplx> amps, unsigned target, const Mat2 &u) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amps.size();
    for (std::size_t base = 0; base < n; base += stride << 1U) {
        for (std::size_t i0 = base; i0 < base + stride; ++i0) {
            const std::size_t i1 = i0 + stride;
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = u[0] * a0 + u[1] * a1;
            amps[i1] = u[2] * a0 + u[3] * a1;
        }
    }
}

double weighted_norm(std::span<const cplx> amps, std::span<const double> weights) {
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]) * weights[i];
    }
    return acc;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace boolcube::simd::scalar
