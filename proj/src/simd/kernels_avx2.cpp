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
 * AVX2/FMA variants. This translation unit is the only one compiled with
 * -mavx2 -mfma; nothing here may run before dispatch has checked the CPU.
 *
 * A __m256d holds two complex doubles laid out as [re0, im0, re1, im1],
 * which matches the storage of std::complex<double>.
 */
#include "boolcube/simd/kernels.hpp"

#include <immintrin.h>

namespace boolcube::simd::avx2 {
namespace {

inline const double *raw(const cplx *p) { return reinterpret_cast<const double *>(p); }
inline double *raw(cplx *p) { return reinterpret_cast<double *>(p); }

/// Lane-wise complex product v * c where c = [cr0, ci0, cr1, ci1] is split
/// into re = [cr0, cr0, cr1, cr1] and signed im = [-ci0, ci0, -ci1, ci1].
inline __m256d cmul(__m256d v, __m256d c_re, __m256d c_im_signed) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmadd_pd(v, c_re, _mm256_mul_pd(swapped, c_im_signed));
}

struct Broadcast {
    __m256d re;
    __m256d im;
};

inline Broadcast broadcast(cplx c) {
    return {_mm256_set1_pd(c.real()),
            _mm256_setr_pd(-c.imag(), c.imag(), -c.imag(), c.imag())};
}

inline Broadcast pair(cplx lo, cplx hi) {
    return {_mm256_setr_pd(lo.real(), lo.real(), hi.real(), hi.real()),
            _mm256_setr_pd(-lo.imag(), lo.imag(), -hi.imag(), hi.imag())};
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void fwht(std::span<double> data) {
    const std::size_t n = data.size();
    double *x = data.data();
    std::size_t h = 1;
    // Strides below one register width stay scalar.
    for (; h < n && h < 4; h <<= 1U) {
        for (std::size_t i = 0; i < n; i += h << 1U) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = x[j];
                const double b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
        }
    }
    for (; h < n; h <<= 1U) {
        for (std::size_t i = 0; i < n; i += h << 1U) {
            for (std::size_t j = i; j < i + h; j += 4) {
                const __m256d a = _mm256_loadu_pd(x + j);
                const __m256d b = _mm256_loadu_pd(x + j + h);
                _mm256_storeu_pd(x + j, _mm256_add_pd(a, b));
                _mm256_storeu_pd(x + j + h, _mm256_sub_pd(a, b));
            }
        }
    }
}

void apply_1q(std::span<cplx> amps, unsigned target, const Mat2 &u) {
    const std::size_t n = amps.size();
    if (n < 2) {
        return;
    }
    double *x = raw(amps.data());
    if (target == 0) {
        // Both amplitudes of a pair share one register: [a0, a1].
        const Broadcast first = pair(u[0], u[2]);  // multiplies a0
        const Broadcast second = pair(u[1], u[3]); // multiplies a1
        for (std::size_t i = 0; i < n; i += 2) {
            const __m256d v = _mm256_loadu_pd(x + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            const __m256d out = _mm256_add_pd(cmul(a0, first.re, first.im),
                                              cmul(a1, second.re, second.im));
            _mm256_storeu_pd(x + 2 * i, out);
        }
        return;
    }
    const Broadcast m00 = broadcast(u[0]);
    const Broadcast m01 = broadcast(u[1]);
    const Broadcast m10 = broadcast(u[2]);
    const Broadcast m11 = broadcast(u[3]);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < n; base += stride << 1U) {
        for (std::size_t i0 = base; i0 < base + stride; i0 += 2) {
            const std::size_t i1 = i0 + stride;
            const __m256d a0 = _mm256_loadu_pd(x + 2 * i0);
            const __m256d a1 = _mm256_loadu_pd(x + 2 * i1);
            const __m256d out0 =
                _mm256_add_pd(cmul(a0, m00.re, m00.im), cmul(a1, m01.re, m01.im));
            const __m256d out1 =
                _mm256_add_pd(cmul(a0, m10.re, m10.im), cmul(a1, m11.re, m11.im));
            _mm256_storeu_pd(x + 2 * i0, out0);
            _mm256_storeu_pd(x + 2 * i1, out1);
        }
    }
}

double weighted_norm(std::span<const cplx> amps, std::span<const double> weights) {
    const std::size_t n = amps.size();
    const double *x = raw(amps.data());
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(x + 2 * i);
        const __m256d w = _mm256_setr_pd(weights[i], weights[i], weights[i + 1],
                                         weights[i + 1]);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), w, acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        total += std::norm(amps[i]) * weights[i];
    }
    return total;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t n = a.size();
    const double *pa = raw(a.data());
    const double *pb = raw(b.data());
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        // [ar*br, ai*bi, ...] sums to Re(conj(a) b).
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        // [ar*bi, ai*br, ...]; Im(conj(a) b) = ar*bi - ai*br.
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
    }
    alignas(32) double im_parts[4];
    _mm256_store_pd(im_parts, acc_im);
    cplx total{hsum(acc_re), im_parts[0] - im_parts[1] + im_parts[2] - im_parts[3]};
    for (; i < n; ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

} // namespace boolcube::simd::avx2
