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
#include "boolcube/fourier.hpp"

#include "boolcube/csv.hpp"
#include "boolcube/error.hpp"
#include "boolcube/rng.hpp"
#include "boolcube/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

namespace boolcube::fourier {
namespace {

void check_bits(int n) {
    if (n < 1 || n > kMaxTransformBits) {
        throw CapacityError("Boolean cube dimension must be in [1, 24], got " +
                            std::to_string(n));
    }
}

} // namespace

FunctionTable::FunctionTable(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    check_bits(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw InvalidArgument("function table needs exactly 2^n entries");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("function table entries must be finite");
        }
    }
}

FunctionTable FunctionTable::zeros(int n) {
    check_bits(n);
    return {n, std::vector<double>(std::size_t{1} << n, 0.0)};
}

double FunctionTable::at(const BitVector &b) const {
    if (b.size() != n_) {
        throw InvalidArgument("input length does not match table dimension");
    }
    return values_[b.mask()];
}

FourierSpectrum::FourierSpectrum(int n) : n_(n) { check_bits(n); }

FourierSpectrum::FourierSpectrum(int n, const std::map<Mask, double> &coeffs)
    : FourierSpectrum(n) {
    for (const auto &[s, c] : coeffs) {
        set(s, c);
    }
}

double FourierSpectrum::operator[](Mask s) const {
    const auto it = coeffs_.find(s);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void FourierSpectrum::set(Mask s, double value) {
    if ((s & ~low_bits(n_)) != 0U) {
        throw InvalidArgument("spectrum key " + std::to_string(s) +
                              " exceeds dimension " + std::to_string(n_));
    }
    if (!std::isfinite(value)) {
        throw InvalidArgument("spectrum coefficients must be finite");
    }
    if (std::abs(value) < kSparsityThreshold) {
        coeffs_.erase(s);
    } else {
        coeffs_[s] = value;
    }
}

void FourierSpectrum::add(Mask s, double value) { set(s, (*this)[s] + value); }

int parity_chi(const BitVector &s, const BitVector &b) {
    if (s.size() != b.size()) {
        throw InvalidArgument("parity_chi: length mismatch");
    }
    return chi(s.mask(), b.mask());
}

double inner_product(const FunctionTable &f, const FunctionTable &g) {
    if (f.num_bits() != g.num_bits()) {
        throw InvalidArgument("inner_product: dimension mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        acc += f.values()[i] * g.values()[i];
    }
    return acc / static_cast<double>(f.size());
}

std::vector<double> wht_forward_dense(const FunctionTable &f) {
    std::vector<double> work(f.values().begin(), f.values().end());
    simd::kernels().fwht(work);
    const double scale = 1.0 / static_cast<double>(work.size());
    for (double &v : work) {
        v *= scale;
    }
    return work;
}

FourierSpectrum wht_forward(const FunctionTable &f) {
    const auto dense = wht_forward_dense(f);
    FourierSpectrum spec(f.num_bits());
    for (std::size_t s = 0; s < dense.size(); ++s) {
        spec.set(static_cast<Mask>(s), dense[s]);
    }
    return spec;
}

FunctionTable wht_inverse(const FourierSpectrum &spec) {
    std::vector<double> work(std::size_t{1} << spec.num_bits(), 0.0);
    for (const auto &[s, c] : spec) {
        work[s] = c;
    }
    simd::kernels().fwht(work);
    return {spec.num_bits(), std::move(work)};
}

int degree(const FourierSpectrum &spec) {
    int d = 0;
    for (const auto &[s, c] : spec) {
        d = std::max(d, weight(s));
    }
    return d;
}

std::set<int> junta_support(const FourierSpectrum &spec) {
    Mask all = 0;
    for (const auto &[s, c] : spec) {
        all |= s;
    }
    std::set<int> out;
    for (int i = 0; i < spec.num_bits(); ++i) {
        if ((all >> i) & 1U) {
            out.insert(i + 1);
        }
    }
    return out;
}

FourierSpectrum random_low_degree(int n, int d, std::size_t count_terms,
                                  std::uint64_t seed) {
    check_bits(n);
    if (d < 0 || d > n) {
        throw InvalidArgument("random_low_degree: need 0 <= d <= n");
    }
    std::vector<Mask> candidates;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (weight(s) <= d) {
            candidates.push_back(s);
        }
    }
    if (count_terms > candidates.size()) {
        throw InvalidArgument("random_low_degree: " + std::to_string(count_terms) +
                              " terms requested but only " +
                              std::to_string(candidates.size()) +
                              " masks have weight <= " + std::to_string(d));
    }
    std::mt19937_64 engine(seed);
    // Partial Fisher-Yates: the first count_terms entries are the sample.
    for (std::size_t i = 0; i < count_terms; ++i) {
        const auto j = i + uniform_index(engine, candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
    }
    FourierSpectrum spec(n);
    for (std::size_t i = 0; i < count_terms; ++i) {
        double c = 0.0;
        while (std::abs(c) < 1e-3) {
            c = uniform(engine, -1.0, 1.0);
        }
        spec.set(candidates[i], c);
    }
    return spec;
}

FourierSpectrum operator+(const FourierSpectrum &a, const FourierSpectrum &b) {
    if (a.num_bits() != b.num_bits()) {
        throw InvalidArgument("spectrum sum: dimension mismatch");
    }
    FourierSpectrum out = a;
    for (const auto &[s, c] : b) {
        out.add(s, c);
    }
    return out;
}

double max_abs_diff(const FourierSpectrum &a, const FourierSpectrum &b) {
    double worst = 0.0;
    for (const auto &[s, c] : a) {
        worst = std::max(worst, std::abs(c - b[s]));
    }
    for (const auto &[s, c] : b) {
        worst = std::max(worst, std::abs(c - a[s]));
    }
    return worst;
}

void write_csv(std::ostream &out, const FunctionTable &f) {
    out << "mask_binary,value\n";
    for (std::size_t b = 0; b < f.size(); ++b) {
        csv::write_row(out, {mask_to_string(static_cast<Mask>(b), f.num_bits()),
                             csv::format(f.values()[b])});
    }
}

void write_csv(std::ostream &out, const FourierSpectrum &spec) {
    out << "mask_binary,value\n";
    for (const auto &[s, c] : spec) {
        csv::write_row(out, {mask_to_string(s, spec.num_bits()), csv::format(c)});
    }
}

namespace {

std::vector<std::pair<std::string, double>> read_rows(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw InvalidArgument("CSV input is empty");
    }
    const auto header = csv::split(line);
    if (header.size() != 2 || header[0] != "mask_binary" || header[1] != "value") {
        throw InvalidArgument("CSV header must be 'mask_binary,value'");
    }
    std::vector<std::pair<std::string, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = csv::split(line);
        if (fields.size() != 2) {
            throw InvalidArgument("CSV row must have two fields: " + line);
        }
        rows.emplace_back(fields[0], csv::parse_double(fields[1]));
    }
    if (rows.empty()) {
        throw InvalidArgument("CSV has no data rows");
    }
    return rows;
}

} // namespace

FunctionTable read_table_csv(std::istream &in) {
    const auto rows = read_rows(in);
    const int n = static_cast<int>(rows.front().first.size());
    std::vector<double> values(std::size_t{1} << n, 0.0);
    std::vector<bool> seen(values.size(), false);
    for (const auto &[key, v] : rows) {
        if (static_cast<int>(key.size()) != n) {
            throw InvalidArgument("inconsistent mask length in CSV");
        }
        const Mask b = parse_mask(key);
        values[b] = v;
        seen[b] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InvalidArgument("function table CSV must list all 2^n inputs");
    }
    return {n, std::move(values)};
}

FourierSpectrum read_spectrum_csv(std::istream &in) {
    const auto rows = read_rows(in);
    const int n = static_cast<int>(rows.front().first.size());
    FourierSpectrum spec(n);
    for (const auto &[key, v] : rows) {
        if (static_cast<int>(key.size()) != n) {
            throw InvalidArgument("inconsistent mask length in CSV");
        }
        spec.set(parse_mask(key), v);
    }
    return spec;
}

} // namespace boolcube::fourier
