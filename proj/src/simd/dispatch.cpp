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

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace boolcube::simd {
namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, "scalar", &scalar::fwht,
                                   &scalar::apply_1q, &scalar::weighted_norm,
                                   &scalar::inner};

#ifdef BOOLCUBE_HAVE_AVX2
constexpr KernelTable kAvx2Table{Isa::kAvx2, "avx2", &avx2::fwht, &avx2::apply_1q,
                                 &avx2::weighted_norm, &avx2::inner};
#endif

const KernelTable &select() {
    if (const char *forced = std::getenv("BOOLCUBE_SIMD")) {
        if (std::string(forced) == "scalar") {
            return kScalarTable;
        }
    }
#ifdef BOOLCUBE_HAVE_AVX2
    if (isa_supported(Isa::kAvx2)) {
        return kAvx2Table;
    }
#endif
    return kScalarTable;
}

} // namespace

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::kScalar:
        return true;
    case Isa::kAvx2:
#if defined(BOOLCUBE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const KernelTable &kernels_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::runtime_error("requested SIMD variant is not available on this CPU");
    }
#ifdef BOOLCUBE_HAVE_AVX2
    if (isa == Isa::kAvx2) {
        return kAvx2Table;
    }
#endif
    return kScalarTable;
}

const KernelTable &kernels() {
    static const KernelTable &table = select();
    return table;
}

} // namespace boolcube::simd
