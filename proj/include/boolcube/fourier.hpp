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
 * Fourier analysis of real-valued functions on the Boolean cube {0,1}^n.
 *
 * The parity basis chi_s(b) = (-1)^{s.b} is orthonormal under the uniform
 * inner product <f, g> = 2^-n sum_b f(b) g(b). The forward transform carries
 * the 2^-n factor; synthesis f(b) = sum_s fhat(s) chi_s(b) is unnormalised.
 */
#pragma once

#include "boolcube/bitvector.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace boolcube::fourier {

/// Coefficients with magnitude below this are not stored.
inline constexpr double kSparsityThreshold = 1e-12;

/// Dense table f(b) for all 2^n inputs, indexed by mask.
class FunctionTable {
  public:
    FunctionTable(int n, std::vector<double> values);
    static FunctionTable zeros(int n);

    [[nodiscard]] int num_bits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](Mask b) const { return values_[b]; }
    [[nodiscard]] double at(const BitVector &b) const;
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  private:
    int n_;
    std::vector<double> values_;
};

/// Sparse map s -> fhat(s). Near-zero coefficients are dropped on insert.
class FourierSpectrum {
  public:
    explicit FourierSpectrum(int n);
    FourierSpectrum(int n, const std::map<Mask, double> &coeffs);

    [[nodiscard]] int num_bits() const noexcept { return n_; }
    [[nodiscard]] bool empty() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient at s; 0 for masks that are not stored.
    [[nodiscard]] double operator[](Mask s) const;

    /// Replaces the coefficient at s (drops it when below the threshold).
    void set(Mask s, double value);
    /// Adds to the coefficient at s.
    void add(Mask s, double value);

    [[nodiscard]] const std::map<Mask, double> &coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] auto begin() const { return coeffs_.begin(); }
    [[nodiscard]] auto end() const { return coeffs_.end(); }

  private:
    int n_;
    std::map<Mask, double> coeffs_;
};

/// (-1)^{s.b}. Throws InvalidArgument on length mismatch.
[[nodiscard]] int parity_chi(const BitVector &s, const BitVector &b);

/// Raw-mask parity, no checks.
[[nodiscard]] inline int chi(Mask s, Mask b) noexcept {
    return (weight(s & b) & 1) != 0 ? -1 : 1;
}

[[nodiscard]] double inner_product(const FunctionTable &f, const FunctionTable &g);

/// Largest n accepted by the dense transforms.
inline constexpr int kMaxTransformBits = 24;

[[nodiscard]] FourierSpectrum wht_forward(const FunctionTable &f);
[[nodiscard]] FunctionTable wht_inverse(const FourierSpectrum &spec);

/// Forward transform without thresholding: all 2^n coefficients.
[[nodiscard]] std::vector<double> wht_forward_dense(const FunctionTable &f);

/// Max Hamming weight of a stored key; 0 for an empty spectrum.
[[nodiscard]] int degree(const FourierSpectrum &spec);

/// 1-based indices i with s_i = 1 for some stored key.
[[nodiscard]] std::set<int> junta_support(const FourierSpectrum &spec);

/// `count_terms` distinct masks of weight <= d, coefficients uniform in
/// [-1, 1]. Deterministic in `seed`.
[[nodiscard]] FourierSpectrum random_low_degree(int n, int d, std::size_t count_terms,
                                                std::uint64_t seed);

/// Sum of the two spectra, coefficient-wise.
[[nodiscard]] FourierSpectrum operator+(const FourierSpectrum &a, const FourierSpectrum &b);

/// Largest coefficient-wise absolute difference over the union of keys.
[[nodiscard]] double max_abs_diff(const FourierSpectrum &a, const FourierSpectrum &b);

// CSV: header `mask_binary,value`, b1 printed leftmost, 17 significant digits.
void write_csv(std::ostream &out, const FunctionTable &f);
void write_csv(std::ostream &out, const FourierSpectrum &spec);
[[nodiscard]] FunctionTable read_table_csv(std::istream &in);
[[nodiscard]] FourierSpectrum read_spectrum_csv(std::istream &in);

} // namespace boolcube::fourier
