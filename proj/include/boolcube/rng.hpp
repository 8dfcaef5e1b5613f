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
#pragma once

#include <cstdint>
#include <random>

namespace boolcube {

/// SplitMix64 finaliser. Used as a counter-based generator: the i-th draw of
/// stream `key` is mix(key, i), so draws are reproducible and order-free.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

[[nodiscard]] constexpr std::uint64_t counter_draw(std::uint64_t key,
                                                   std::uint64_t counter) noexcept {
    return splitmix64(splitmix64(key) ^ (counter * 0xD1B54A32D192ED03ULL));
}

/// Maps 64 random bits to [0, 1) using the top 53 bits.
[[nodiscard]] constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11U) * 0x1.0p-53;
}

/// Uniform double in [lo, hi) from a 64-bit engine. Portable across standard
/// libraries, unlike std::uniform_real_distribution.
[[nodiscard]] inline double uniform(std::mt19937_64 &engine, double lo, double hi) {
    return lo + (hi - lo) * to_unit(engine());
}

/// Uniform integer in [0, n) by rejection; portable across standard libraries.
[[nodiscard]] inline std::uint64_t uniform_index(std::mt19937_64 &engine, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine();
    while (x >= limit) {
        x = engine();
    }
    return x % n;
}

} // namespace boolcube
