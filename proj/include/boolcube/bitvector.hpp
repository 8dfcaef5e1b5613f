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
 * Fixed-length bit vectors over the Boolean cube.
 *
 * Variable b_1 lives in mask bit 0 (least significant), b_i in bit i-1.
 * Textual forms print b_1 leftmost, so "110" has b_1 = b_2 = 1, b_3 = 0.
 * Every module shares this convention; qubit q of a register carries b_{q+1}.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace boolcube {

inline constexpr int kMaxBits = 24;

using Mask = std::uint32_t;

class BitVector {
  public:
    /// Throws InvalidArgument unless 1 <= n <= 24 and `bits` fits in n bits.
    BitVector(int n, Mask bits);

    /// Parses a b1-leftmost string of '0'/'1'.
    static BitVector parse(std::string_view text);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] Mask mask() const noexcept { return bits_; }

    /// Value of b_i, 1-based.
    [[nodiscard]] bool get(int i) const;
    [[nodiscard]] BitVector with(int i, bool value) const;

    [[nodiscard]] int weight() const noexcept { return std::popcount(bits_); }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;

  private:
    int n_;
    Mask bits_;
};

/// Hamming weight of a raw mask.
[[nodiscard]] inline int weight(Mask m) noexcept { return std::popcount(m); }

/// b1-leftmost binary form of the low n bits of `m`.
[[nodiscard]] std::string mask_to_string(Mask m, int n);

/// Inverse of mask_to_string. Throws InvalidArgument on stray characters.
[[nodiscard]] Mask parse_mask(std::string_view text);

/// Mask with the low n bits set.
[[nodiscard]] constexpr Mask low_bits(int n) noexcept {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1U;
}

} // namespace boolcube
