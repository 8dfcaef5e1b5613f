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
#include "boolcube/bitvector.hpp"

#include "boolcube/error.hpp"

namespace boolcube {

BitVector::BitVector(int n, Mask bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxBits) {
        throw InvalidArgument("BitVector length must be in [1, 24], got " +
                              std::to_string(n));
    }
    if ((bits & ~low_bits(n)) != 0U) {
        throw InvalidArgument("BitVector mask has bits beyond length " +
                              std::to_string(n));
    }
}

BitVector BitVector::parse(std::string_view text) {
    return BitVector(static_cast<int>(text.size()), parse_mask(text));
}

bool BitVector::get(int i) const {
    if (i < 1 || i > n_) {
        throw InvalidArgument("bit index out of range");
    }
    return ((bits_ >> (i - 1)) & 1U) != 0U;
}

BitVector BitVector::with(int i, bool value) const {
    if (i < 1 || i > n_) {
        throw InvalidArgument("bit index out of range");
    }
    const Mask bit = Mask{1} << (i - 1);
    return BitVector(n_, value ? (bits_ | bit) : (bits_ & ~bit));
}

std::string BitVector::to_string() const { return mask_to_string(bits_, n_); }

std::string mask_to_string(Mask m, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1U) {
            out[static_cast<std::size_t>(i)] = '1';
        }
    }
    return out;
}

Mask parse_mask(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
        throw InvalidArgument("mask string must have 1..24 characters");
    }
    Mask m = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            m |= Mask{1} << i;
        } else if (text[i] != '0') {
            throw InvalidArgument("mask string may only contain '0' and '1': " +
                                  std::string(text));
        }
    }
    return m;
}

} // namespace boolcube
