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
 * Fidelity kernel k(b, b') = |<psi(b)|psi(b')>|^2 and kernel ridge regression.
 */
#pragma once

#include "boolcube/embed.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace boolcube::kernel {

using embed::Embedding;

/// Default ridge when exact interpolation is requested.
inline constexpr double kDefaultRidge = 1e-8;

/// Symmetric t x t Gram matrix, row-major.
class KernelMatrix {
  public:
    explicit KernelMatrix(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return t_; }
    [[nodiscard]] double &operator()(std::size_t i, std::size_t j) { return k_[i * t_ + j]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return k_[i * t_ + j]; }
    [[nodiscard]] std::span<const double> data() const noexcept { return k_; }

    /// Smallest eigenvalue (Jacobi).
    [[nodiscard]] double min_eigenvalue() const;

  private:
    std::size_t t_;
    std::vector<double> k_;
};

[[nodiscard]] double fidelity_kernel(const BitVector &b1, const BitVector &b2, Embedding e,
                                     const embed::QracAngles &a = {});

/// Diagonal entries are set to exactly 1.
[[nodiscard]] KernelMatrix kernel_matrix(std::span<const BitVector> inputs, Embedding e,
                                         const embed::QracAngles &a = {});

/// Solves (K + beta I) alpha = y by Cholesky. If factorisation fails, diagonal
/// jitter 1e-10, 1e-9, ..., 1e-6 is tried. Throws NumericalError when no
/// attempt succeeds, or when beta = 0 and the solution leaves a residual above
/// 1e-8 (1 + |y|_inf), i.e. y is not reachable through a singular K.
[[nodiscard]] std::vector<double> krr_fit(const KernelMatrix &k, std::span<const double> y,
                                          double beta);

/// sum_i alpha_i k(x_i, query).
[[nodiscard]] double krr_predict(std::span<const double> alpha,
                                 std::span<const BitVector> training, const BitVector &query,
                                 Embedding e, const embed::QracAngles &a = {});

/// Header `mask,<mask_1>,...,<mask_t>`, then one row per input.
void write_csv(std::ostream &out, const KernelMatrix &k, std::span<const BitVector> inputs);

} // namespace boolcube::kernel
