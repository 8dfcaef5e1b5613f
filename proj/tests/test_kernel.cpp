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
#include "boolcube/error.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/kernel.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace boolcube;
using namespace boolcube::kernel;

namespace {

std::vector<BitVector> cube(int n) {
    std::vector<BitVector> out;
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
        out.emplace_back(n, b);
    }
    return out;
}

/// |<psi(b1)|psi(b2)>|^2 for one QRAC qubit: (1 + r1.r2) / 2.
double qrac_fidelity_1q(Mask b1, Mask b2) {
    const auto r1 = oracle::qrac_bloch(b1 & 1U, (b1 >> 1) & 1U, (b1 >> 2) & 1U);
    const auto r2 = oracle::qrac_bloch(b2 & 1U, (b2 >> 1) & 1U, (b2 >> 2) & 1U);
    return 0.5 * (1.0 + r1[0] * r2[0] + r1[1] * r2[1] + r1[2] * r2[2]);
}

} // namespace

TEST_CASE("QRAC fidelity kernel matches Bloch overlaps", "[kernel]") {
    for (Mask a = 0; a < 64; ++a) {
        for (Mask b = 0; b < 64; ++b) {
            const double ref = qrac_fidelity_1q(a & 7U, b & 7U) * qrac_fidelity_1q(a >> 3, b >> 3);
            REQUIRE(std::abs(fidelity_kernel(BitVector(6, a), BitVector(6, b), Embedding::kQrac) -
                             ref) < 1e-13);
        }
    }
}

TEST_CASE("phase kernel is the identity on distinct inputs", "[kernel]") {
    const auto x = cube(5);
    const auto k = kernel_matrix(x, Embedding::kPhase);
    CHECK(fidelity_kernel(x[3], x[7], Embedding::kPhase) == 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            REQUIRE(k(i, j) == (i == j ? 1.0 : 0.0));
        }
    }
}

TEST_CASE("QRAC Gram matrices are PSD", "[kernel]") {
    for (int n : {3, 4, 6}) {
        const auto k = kernel_matrix(cube(n), Embedding::kQrac);
        CHECK(k.min_eigenvalue() >= -1e-10);
        for (std::size_t i = 0; i < k.size(); ++i) {
            CHECK(k(i, i) == 1.0);
        }
    }
}

TEST_CASE("interpolating ridge fit reproduces g3", "[kernel][krr]") {
    const fourier::FourierSpectrum g(
        3, {{parse_mask("100"), 0.5}, {parse_mask("010"), -0.1}, {parse_mask("001"), 0.25}});
    const auto table = fourier::wht_inverse(g);
    const auto x = cube(3);
    const std::vector<double> y(table.values().begin(), table.values().end());
    const auto k = kernel_matrix(x, Embedding::kQrac);
    const auto alpha = krr_fit(k, y, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(krr_predict(alpha, x, x[i], Embedding::kQrac) - y[i]) <= 1e-8);
    }
}

TEST_CASE("ridge fit input checks", "[kernel][krr]") {
    const auto x = cube(2);
    const auto k = kernel_matrix(x, Embedding::kQrac);
    const std::vector<double> y{1.0, 2.0};
    CHECK_THROWS_AS(krr_fit(k, y, 0.1), InvalidArgument);
    const std::vector<double> y4{1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(krr_fit(k, y4, -1.0), InvalidArgument);
    CHECK(krr_fit(k, y4, kDefaultRidge).size() == 4);
}

TEST_CASE("singular Gram matrix with labels outside its range fails at beta = 0",
          "[kernel][krr]") {
    // Two copies of the same input with different labels cannot be interpolated.
    const std::vector<BitVector> x{BitVector(3, 1), BitVector(3, 1)};
    const auto k = kernel_matrix(x, Embedding::kQrac);
    const std::vector<double> y{0.0, 1.0};
    CHECK_THROWS_AS(krr_fit(k, y, 0.0), NumericalError);
    CHECK_NOTHROW(krr_fit(k, y, 1e-3));
}

TEST_CASE("kernel csv layout", "[kernel]") {
    const auto x = cube(1);
    std::ostringstream os;
    write_csv(os, kernel_matrix(x, Embedding::kPhase), x);
    CHECK(os.str().rfind("mask,0,1\n", 0) == 0);
}
