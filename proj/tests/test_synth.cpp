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
#include "boolcube/synth.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

using namespace boolcube;
using namespace boolcube::synth;

namespace {

oracle::Spectrum to_oracle(const FourierSpectrum &s) { return {s.begin(), s.end()}; }

oracle::Mat to_oracle(const qsim::CMatrix &m) {
    oracle::Mat out(m.dim());
    out.a.assign(m.data().begin(), m.data().end());
    return out;
}

/// Output bit i holds input bit tau(i); both 1-based.
std::uint32_t oracle_permute(const std::vector<int> &tau, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if ((b >> (tau[i] - 1)) & 1U) {
            out |= 1U << i;
        }
    }
    return out;
}

bool oracle_in_kqe(std::uint32_t s, int m) {
    if (s >> (3 * m) != 0) {
        return false;
    }
    for (int q = 0; q < m; ++q) {
        if (oracle::popcount((s >> (3 * q)) & 7U) > 1) {
            return false;
        }
    }
    return true;
}

FourierSpectrum random_kqe_spectrum(int n, std::mt19937_64 &rng) {
    const int m = embed::qrac_qubits(n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierSpectrum spec(n);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (oracle_in_kqe(s, m) && u(rng) > 0.0) {
            spec.add(s, u(rng));
        }
    }
    return spec;
}

qsim::CMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    qsim::CMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        h(r, r) = g(rng);
        for (std::size_t c = r + 1; c < dim; ++c) {
            h(r, c) = qsim::cplx{g(rng), g(rng)};
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

} // namespace

TEST_CASE("phase observable reproduces the target", "[synth][phase]") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const auto spec = fourier::random_low_degree(n, n, 1 + trial % 4, rng());
        const auto o = synth_phase_obs(spec);
        const auto om = to_oracle(o.matrix());
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            REQUIRE(std::abs(oracle::expect(om, oracle::phase_state(b, n)) - ref[b]) < 1e-9);
            REQUIRE(std::abs(phase_model_value(o, BitVector(n, b)) - ref[b]) < 1e-9);
        }
    }
}

TEST_CASE("phase spectrum formula matches the transform of the model", "[synth][phase]") {
    std::mt19937_64 rng(2);
    for (int m = 1; m <= 4; ++m) {
        const qsim::DenseObservable o(m, random_hermitian(std::size_t{1} << m, rng));
        const auto om = to_oracle(o.matrix());
        oracle::Table t(std::size_t{1} << m);
        for (std::uint32_t b = 0; b < t.size(); ++b) {
            t[b] = oracle::expect(om, oracle::phase_state(b, m));
        }
        const auto ref = oracle::naive_forward(t);
        const auto spec = model_spectrum_phase(o);
        for (std::uint32_t s = 0; s < ref.size(); ++s) {
            REQUIRE(std::abs(spec[s] - ref[s]) < 1e-9);
        }
    }
}

TEST_CASE("phi map and K^QE", "[synth][qrac]") {
    CHECK(phi_map("XZ") == parse_mask("100001"));
    CHECK(phi_map("IY") == parse_mask("000010"));
    CHECK(phi_inv(parse_mask("100001"), 2) == "XZ");
    CHECK_THROWS_AS(phi_inv(parse_mask("110000"), 2), SupportError);
    for (int m = 1; m <= 3; ++m) {
        const auto set = kqe_set(m);
        CHECK(set.size() == static_cast<std::size_t>(std::pow(4, m)));
        CHECK(std::is_sorted(set.begin(), set.end()));
        for (Mask s = 0; s < (Mask{1} << (3 * m)); ++s) {
            REQUIRE(in_kqe(s, m) == oracle_in_kqe(s, m));
        }
    }
}

TEST_CASE("QRAC observable reproduces K^QE-supported targets", "[synth][qrac]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = (trial % 2 == 0) ? 3 : 6;
        const auto spec = random_kqe_spectrum(n, rng);
        const auto o = synth_qrac_obs(spec);
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            REQUIRE(std::abs(oracle::qrac_value(o.terms(), b) - ref[b]) < 1e-9);
        }
    }
}

TEST_CASE("g3 observable weights are sqrt(3) times the coefficients", "[synth][qrac]") {
    FourierSpectrum g3(3, {{parse_mask("100"), 0.5}, {parse_mask("010"), -0.1},
                           {parse_mask("001"), 0.25}});
    const auto o = synth_qrac_obs(g3);
    CHECK(o.weight("X") == Catch::Approx(0.5 * std::sqrt(3.0)));
    CHECK(o.weight("Y") == Catch::Approx(-0.1 * std::sqrt(3.0)));
    CHECK(o.weight("Z") == Catch::Approx(0.25 * std::sqrt(3.0)));
}

TEST_CASE("printed weighting overshoots by 2^m", "[synth][qrac]") {
    std::mt19937_64 rng(4);
    for (int n : {3, 6}) {
        const int m = embed::qrac_qubits(n);
        const auto spec = random_kqe_spectrum(n, rng);
        const auto printed = synth_qrac_obs(spec, {}, QracWeighting::kAsPrinted);
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            REQUIRE(std::abs(oracle::qrac_value(printed.terms(), b) - std::ldexp(ref[b], m)) <
                    1e-9);
        }
    }
}

TEST_CASE("QRAC rejects keys outside K^QE", "[synth][qrac]") {
    FourierSpectrum bad(3, {{parse_mask("110"), 1.0}});
    try {
        (void)synth_qrac_obs(bad);
        FAIL("expected SupportError");
    } catch (const SupportError &e) {
        CHECK(e.mask() == "110");
    }
}

TEST_CASE("QRAC spectrum formula matches the transform of the model", "[synth][qrac]") {
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 2; ++m) {
        const int n = 3 * m;
        const qsim::DenseObservable o(m, random_hermitian(std::size_t{1} << m, rng));
        const auto p = qsim::pauli_decompose(o, 0.0);
        oracle::Table t(std::size_t{1} << n);
        for (std::uint32_t b = 0; b < t.size(); ++b) {
            t[b] = oracle::qrac_value(p.terms(), b);
        }
        const auto ref = oracle::naive_forward(t);
        const auto dense = model_spectrum_qrac(o, n);
        const auto sparse = model_spectrum_qrac(p, n);
        for (std::uint32_t s = 0; s < ref.size(); ++s) {
            REQUIRE(std::abs(dense[s] - ref[s]) < 1e-9);
            REQUIRE(std::abs(sparse[s] - ref[s]) < 1e-9);
        }
    }
}

TEST_CASE("permuted QRAC synthesis", "[synth][qrac][permutation]") {
    std::mt19937_64 rng(6);
    const int n = 6;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> image{1, 2, 3, 4, 5, 6};
        std::shuffle(image.begin(), image.end(), rng);
        const embed::Permutation tau(image);
        // Pull a K^QE spectrum back through tau so the permuted keys land in K^QE.
        const auto base = random_kqe_spectrum(n, rng);
        FourierSpectrum spec(n);
        for (const auto &[t, c] : base) {
            spec.add(oracle_permute(tau.inverse().image(), t), c);
        }
        const auto po = synth_qrac_permuted(spec, tau);
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            const double v = oracle::qrac_value(po.observable.terms(), oracle_permute(image, b));
            REQUIRE(std::abs(v - ref[b]) < 1e-9);
        }
        const auto back = model_spectrum_qrac_permuted(po.observable, tau);
        CHECK(fourier::max_abs_diff(back, spec) < 1e-9);
    }
}

TEST_CASE("subset multiplicity equals the direct count", "[synth][ensemble]") {
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= n; ++d) {
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                if (weight(s) > d) {
                    continue;
                }
                std::uint64_t count = 0;
                for (Mask w = 0; w < (Mask{1} << n); ++w) {
                    count += (oracle::popcount(w) == d && (w & s) == s) ? 1 : 0;
                }
                REQUIRE(subset_multiplicity(s, n, d) == count);
                REQUIRE(subset_multiplicity_closed_form(s, n, d) == count);
                REQUIRE(count == oracle::choose(n - weight(s), d - weight(s)));
            }
        }
    }
    CHECK(binomial(8, 3) == oracle::choose(8, 3));
}

TEST_CASE("permutation multiplicity equals the direct count", "[synth][ensemble]") {
    for (int n = 1; n <= 6; ++n) {
        const int m = embed::qrac_qubits(n);
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            std::vector<int> image(static_cast<std::size_t>(n));
            std::iota(image.begin(), image.end(), 1);
            std::uint64_t count = 0;
            do {
                count += oracle_in_kqe(oracle_permute(image, s), m) ? 1 : 0;
            } while (std::next_permutation(image.begin(), image.end()));
            REQUIRE(permutation_multiplicity(s, n) == count);
        }
    }
}

TEST_CASE("phase ensemble reproduces g6 from 2-qubit members", "[synth][ensemble]") {
    FourierSpectrum g6(6);
    g6.add(parse_mask("100100"), -0.2);
    g6.add(parse_mask("100010"), -0.2);
    g6.add(parse_mask("010100"), 0.1);
    g6.add(parse_mask("010010"), 0.1);
    const auto e = ensemble_phase(g6, 2);
    CHECK(e.members.size() == 4);
    const auto ref = oracle::naive_inverse(to_oracle(g6), 6);
    for (std::uint32_t b = 0; b < 64; ++b) {
        REQUIRE(std::abs(ensemble_eval(e, BitVector(6, b)) - ref[b]) < 1e-9);
    }
    CHECK_THROWS_AS(ensemble_phase(g6, 1), InvalidArgument);
}

TEST_CASE("QRAC ensemble over S_n reproduces degree-2 targets", "[synth][ensemble]") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto spec = fourier::random_low_degree(6, 2, 6, seed);
        const auto e = ensemble_qrac(spec);
        const auto ref = oracle::naive_inverse(to_oracle(spec), 6);
        for (std::uint32_t b = 0; b < 64; ++b) {
            REQUIRE(std::abs(ensemble_eval(e, BitVector(6, b)) - ref[b]) < 1e-9);
        }
    }
    FourierSpectrum heavy(3, {{parse_mask("111"), 1.0}});
    CHECK_THROWS_AS(ensemble_qrac(heavy), SupportError);
}

TEST_CASE("ensemble JSON layout", "[synth][json]") {
    FourierSpectrum g(3, {{parse_mask("110"), 0.3}});
    std::ostringstream os;
    write_ensemble_json(os, ensemble_phase(g, 2));
    const auto j = nlohmann::json::parse(os.str());
    CHECK(j["n"] == 3);
    CHECK(j["embedding"] == "phase");
    REQUIRE(j["members"].size() == 1);
    CHECK(j["members"][0]["preprocessor"]["kind"] == "subset");
    CHECK(j["members"][0]["preprocessor"]["indices"] == nlohmann::json::array({1, 2}));
    CHECK(j["members"][0]["matrix"]["dim"] == 4);
}

TEST_CASE("permutations cannot lift weight-2 masks into one triplet", "[synth][qrac][permutation]") {
    FourierSpectrum g(3, {{parse_mask("110"), 1.0}});
    for (const auto &tau : embed::all_permutations(3)) {
        CHECK_THROWS_AS(synth_qrac_permuted(g, tau), SupportError);
    }
    CHECK(permutation_multiplicity(parse_mask("110"), 3) == 0);
}
