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
#include "boolcube/kernel.hpp"

#include "boolcube/csv.hpp"
#include "boolcube/error.hpp"
#include "boolcube/parallel.hpp"
#include "boolcube/qsim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

namespace boolcube::kernel {
namespace {

// Lower-triangular L with A = L L^T, or nullopt when a pivot is not clearly
// positive relative to the largest diagonal entry.
std::optional<std::vector<double>> cholesky(const std::vector<double> &a, std::size_t n) {
    double diag_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        diag_max = std::max(diag_max, a[i * n + i]);
    }
    const double floor = 1e-14 * diag_max;
    std::vector<double> l(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) {
            d -= l[j * n + k] * l[j * n + k];
        }
        if (!(d > floor)) {
            return std::nullopt;
        }
        const double ljj = std::sqrt(d);
        l[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / ljj;
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const std::vector<double> &l, std::size_t n,
                                   std::span<const double> y) {
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = y[i];
        for (std::size_t k = 0; k < i; ++k) {
            s -= l[i * n + k] * z[k];
        }
        z[i] = s / l[i * n + i];
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = z[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    return x;
}

} // namespace

KernelMatrix::KernelMatrix(std::size_t size) : t_(size), k_(size * size, 0.0) {
    if (size == 0) {
        throw InvalidArgument("kernel matrix needs at least one input");
    }
}

double KernelMatrix::min_eigenvalue() const {
    qsim::CMatrix c(t_);
    for (std::size_t i = 0; i < t_; ++i) {
        for (std::size_t j = 0; j < t_; ++j) {
            c(i, j) = (*this)(i, j);
        }
    }
    return qsim::eigh(c).values.front();
}

double fidelity_kernel(const BitVector &b1, const BitVector &b2, Embedding e,
                       const embed::QracAngles &a) {
    if (b1.size() != b2.size()) {
        throw InvalidArgument("fidelity_kernel: input lengths differ");
    }
    if (e == Embedding::kPhase) {
        // Phase states of distinct inputs are orthogonal.
        return b1 == b2 ? 1.0 : 0.0;
    }
    const auto psi1 = embed::embed_state(e, b1, a);
    const auto psi2 = embed::embed_state(e, b2, a);
    const double ov = qsim::overlap_magnitude(psi1, psi2);
    return std::clamp(ov * ov, 0.0, 1.0);
}

KernelMatrix kernel_matrix(std::span<const BitVector> inputs, Embedding e,
                           const embed::QracAngles &a) {
    KernelMatrix k(inputs.size());
    const std::size_t t = inputs.size();
    for (const auto &b : inputs) {
        if (b.size() != inputs.front().size()) {
            throw InvalidArgument("kernel_matrix: input lengths differ");
        }
    }
    if (e == Embedding::kPhase) {
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                k(i, j) = inputs[i] == inputs[j] ? 1.0 : 0.0;
            }
        }
        return k;
    }
    std::vector<qsim::StateVector> states;
    states.reserve(t);
    for (const auto &b : inputs) {
        states.push_back(embed::embed_state(e, b, a));
    }
    parallel_for(t, [&](std::size_t i) {
        k(i, i) = 1.0;
        for (std::size_t j = i + 1; j < t; ++j) {
            const double ov = qsim::overlap_magnitude(states[i], states[j]);
            k(i, j) = std::clamp(ov * ov, 0.0, 1.0);
        }
    });
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            k(i, j) = k(j, i);
        }
    }
    return k;
}

std::vector<double> krr_fit(const KernelMatrix &k, std::span<const double> y, double beta) {
    const std::size_t n = k.size();
    if (y.size() != n) {
        throw InvalidArgument("krr_fit: label count differs from kernel size");
    }
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw InvalidArgument("ridge parameter must be finite and non-negative");
    }
    std::vector<double> a(k.data().begin(), k.data().end());
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] += beta;
    }
    auto factor = cholesky(a, n);
    for (double jitter = 1e-10; !factor && jitter <= 1e-6 * 1.0001; jitter *= 10.0) {
        auto shifted = a;
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i * n + i] += jitter;
        }
        factor = cholesky(shifted, n);
    }
    if (!factor) {
        throw NumericalError("kernel system is singular (Cholesky failed up to jitter 1e-6)");
    }
    auto alpha = cholesky_solve(*factor, n, y);
    if (beta == 0.0) {
        double residual = 0.0;
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = -y[i];
            for (std::size_t j = 0; j < n; ++j) {
                s += a[i * n + j] * alpha[j];
            }
            residual = std::max(residual, std::abs(s));
            scale = std::max(scale, std::abs(y[i]));
        }
        if (residual > 1e-8 * (1.0 + scale)) {
            throw NumericalError("kernel system is singular: labels are not interpolable "
                                 "at beta = 0 (residual " +
                                 std::to_string(residual) + ")");
        }
    }
    return alpha;
}

double krr_predict(std::span<const double> alpha, std::span<const BitVector> training,
                   const BitVector &query, Embedding e, const embed::QracAngles &a) {
    if (alpha.size() != training.size()) {
        throw InvalidArgument("krr_predict: coefficient count differs from training size");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0.0) {
            acc += alpha[i] * fidelity_kernel(training[i], query, e, a);
        }
    }
    return acc;
}

void write_csv(std::ostream &out, const KernelMatrix &k, std::span<const BitVector> inputs) {
    if (inputs.size() != k.size()) {
        throw InvalidArgument("write_csv: input count differs from kernel size");
    }
    std::vector<std::string> row{"mask"};
    for (const auto &b : inputs) {
        row.push_back(b.to_string());
    }
    csv::write_row(out, row);
    for (std::size_t i = 0; i < k.size(); ++i) {
        row.assign(1, inputs[i].to_string());
        for (std::size_t j = 0; j < k.size(); ++j) {
            row.push_back(csv::format(k(i, j)));
        }
        csv::write_row(out, row);
    }
}

} // namespace boolcube::kernel
