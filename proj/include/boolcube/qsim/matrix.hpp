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
 * Small dense complex matrices and the Hermitian eigensolver.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace boolcube::qsim {

using cplx = std::complex<double>;

/// Square row-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::vector<cplx> data);

    static CMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    [[nodiscard]] const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }
    [[nodiscard]] std::span<const cplx> row(std::size_t r) const {
        return {data_.data() + r * dim_, dim_};
    }
    [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }

    [[nodiscard]] CMatrix adjoint() const;
    [[nodiscard]] cplx trace() const;
    [[nodiscard]] double frobenius_norm() const;

    /// max |A - A^dagger| entrywise.
    [[nodiscard]] double hermitian_defect() const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(cplx s);

    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

/// y = A x.
[[nodiscard]] std::vector<cplx> matvec(const CMatrix &a, std::span<const cplx> x);

/// Kronecker product a (x) b; a acts on the more significant index bits.
[[nodiscard]] CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Tr[A B] without forming the product.
[[nodiscard]] cplx trace_product(const CMatrix &a, const CMatrix &b);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    CMatrix vectors;            ///< columns are the eigenvectors
};

/// Tolerance on |A - A^dagger| accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi eigensolver. Throws NumericalError for
/// non-Hermitian input or if the sweeps fail to converge.
[[nodiscard]] EigenDecomposition eigh(const CMatrix &a);

} // namespace boolcube::qsim
