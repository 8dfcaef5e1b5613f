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
#include "boolcube/qsim/matrix.hpp"

#include "boolcube/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boolcube::qsim {

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t dim, std::vector<cplx> data)
    : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim * dim) {
        throw InvalidArgument("CMatrix: data size does not match dim^2");
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx CMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto &z : data_) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double CMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw InvalidArgument("CMatrix: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw InvalidArgument("CMatrix: dimension mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw InvalidArgument("CMatrix: dimension mismatch");
    }
    const std::size_t n = a.dim_;
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<cplx> matvec(const CMatrix &a, std::span<const cplx> x) {
    if (x.size() != a.dim()) {
        throw InvalidArgument("matvec: dimension mismatch");
    }
    std::vector<cplx> y(a.dim(), cplx{0.0, 0.0});
    for (std::size_t r = 0; r < a.dim(); ++r) {
        const auto row = a.row(r);
        cplx acc{0.0, 0.0};
        for (std::size_t c = 0; c < row.size(); ++c) {
            acc += row[c] * x[c];
        }
        y[r] = acc;
    }
    return y;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const cplx s = a(ra, ca);
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

cplx trace_product(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("trace_product: dimension mismatch");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            acc += a(r, c) * b(c, r);
        }
    }
    return acc;
}

EigenDecomposition eigh(const CMatrix &input) {
    const std::size_t n = input.dim();
    double scale = 1.0;
    for (const auto &z : input.data()) {
        scale = std::max(scale, std::abs(z));
    }
    if (input.hermitian_defect() > kHermitianTolerance * scale) {
        throw NumericalError("eigh: matrix is not Hermitian");
    }

    CMatrix a = input;
    CMatrix v = CMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
    }

    const double target = 1e-15 * std::max(1.0, input.frobenius_norm());
    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(2.0 * off) <= target) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) {
                    continue;
                }
                const cplx phase_conj = std::conj(apq) / r; // e^{-i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on (p, q).
                const cplx upp = c;
                const cplx upq = s;
                const cplx uqp = -s * phase_conj;
                const cplx uqq = c * phase_conj;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged) {
        throw NumericalError("eigh: Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    EigenDecomposition out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

} // namespace boolcube::qsim
