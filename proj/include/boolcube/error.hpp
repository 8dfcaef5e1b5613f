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

#include <stdexcept>
#include <string>

namespace boolcube {

/// Inputs violate a documented precondition (sizes, lengths, ranges).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds one of the library's allocation caps.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A numerical routine failed (non-Hermitian input, singular system, ...).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A Fourier spectrum lies outside the support a construction can realise.
/// Carries the first offending mask in b1-leftmost binary form.
class SupportError : public InvalidArgument {
  public:
    SupportError(const std::string &what, std::string mask)
        : InvalidArgument(what + " (offending mask " + mask + ")"),
          mask_(std::move(mask)) {}

    [[nodiscard]] const std::string &mask() const noexcept { return mask_; }

  private:
    std::string mask_;
};

} // namespace boolcube
