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
 * Brute-force reference computations used by the tests.
 *
 * Nothing here calls into the library: transforms are direct double sums,
 * states are built from explicit Kronecker products, and QRAC expectations
 * come from per-qubit Bloch vectors.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Table = std::vector<double>;
using Spectrum = std::map<std::uint32_t, double>;

inline int popcount(std::uint32_t x) {
    int c = 0;
    for (; x != 0; x &= x - 1) {
        ++c;
    }
    return c;
}

inline int chi(std::uint32_t s, std::uint32_t b) { return (popcount(s & b) % 2 == 0) ? 1 : -1; }

/// fhat(s) = 2^-n sum_b f(b) chi_s(b), O(4^n).
inline Table naive_forward(const Table &f) {
    Table out(f.size(), 0.0);
    for (std::uint32_t s = 0; s < f.size(); ++s) {
        double acc = 0.0;
        for (std::uint32_t b = 0; b < f.size(); ++b) {
            acc += f[b] * chi(s, b);
        }
        out[s] = acc / static_cast<double>(f.size());
    }
    return out;
}

inline Table naive_inverse(const Spectrum &spec, int n) {
    Table out(std::size_t{1} << n, 0.0);
    for (std::uint32_t b = 0; b < out.size(); ++b) {
        for (const auto &[s, c] : spec) {
            out[b] += c * chi(s, b);
        }
    }
    return out;
}

/// Dense complex matrix, row-major.
struct Mat {
    std::size_t dim = 0;
    std::vector<cplx> a;
    explicit Mat(std::size_t d = 0) : dim(d), a(d * d) {}
    cplx &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Mat kron(const Mat &x, const Mat &y) {
    Mat out(x.dim * y.dim);
    for (std::size_t r1 = 0; r1 < x.dim; ++r1) {
        for (std::size_t c1 = 0; c1 < x.dim; ++c1) {
            for (std::size_t r2 = 0; r2 < y.dim; ++r2) {
                for (std::size_t c2 = 0; c2 < y.dim; ++c2) {
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
                }
            }
        }
    }
    return out;
}

inline Mat pauli(char p) {
    Mat m(2);
    switch (p) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = cplx{0, -1}; m(1, 0) = cplx{0, 1}; break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: break;
    }
    return m;
}

/// Matrix of a Pauli word whose letter k acts on qubit k (qubit 0 = index LSB).
inline Mat word_matrix(const std::string &w) {
    Mat out(1);
    out(0, 0) = 1;
    for (char c : w) {
        out = kron(pauli(c), out); // later letters are more significant
    }
    return out;
}

/// <psi|O|psi>.
inline double expect(const Mat &o, const std::vector<cplx> &psi) {
    cplx acc = 0;
    for (std::size_t r = 0; r < o.dim; ++r) {
        for (std::size_t c = 0; c < o.dim; ++c) {
            acc += std::conj(psi[r]) * o(r, c) * psi[c];
        }
    }
    return acc.real();
}

/// H^n X^b |0>: amplitude 2^-n/2 (-1)^{b.j}.
inline std::vector<cplx> phase_state(std::uint32_t b, int n) {
    std::vector<cplx> psi(std::size_t{1} << n);
    const double amp = std::pow(2.0, -n / 2.0);
    for (std::uint32_t j = 0; j < psi.size(); ++j) {
        psi[j] = amp * static_cast<double>(chi(b, j));
    }
    return psi;
}

/// Bloch vector of the 3->1 QRAC qubit for (bx, by, bz) at the symmetric angles.
inline std::array<double, 3> qrac_bloch(int bx, int by, int bz) {
    const double f = 1.0 / std::sqrt(3.0);
    return {f * (bx ? -1.0 : 1.0), f * (by ? -1.0 : 1.0), f * (bz ? -1.0 : 1.0)};
}

/// QRAC model value: sum_P w_P prod_q r_q[P_q], zero-padding b to 3m bits.
inline double qrac_value(const std::map<std::string, double> &terms, std::uint32_t b) {
    double total = 0.0;
    for (const auto &[word, w] : terms) {
        double prod = w;
        for (std::size_t q = 0; q < word.size(); ++q) {
            const auto r = qrac_bloch((b >> (3 * q)) & 1U, (b >> (3 * q + 1)) & 1U,
                                      (b >> (3 * q + 2)) & 1U);
            switch (word[q]) {
            case 'X': prod *= r[0]; break;
            case 'Y': prod *= r[1]; break;
            case 'Z': prod *= r[2]; break;
            default: break;
            }
        }
        total += prod;
    }
    return total;
}

/// C(n, k) by Pascal's triangle.
inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j > 0; --j) {
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
        }
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace oracle
