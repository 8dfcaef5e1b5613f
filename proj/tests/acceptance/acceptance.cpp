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
 * Acceptance suite. Prints one PASS/FAIL line per criterion and exits
 * non-zero if any criterion fails.
 *
 * Reference values come from the brute-force oracles in oracles.hpp, not
 * from the library paths under test.
 */
#include "boolcube/embed.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/kernel.hpp"
#include "boolcube/qsim/pauli.hpp"
#include "boolcube/synth.hpp"
#include "boolcube/train.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace boolcube;
using fourier::FourierSpectrum;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &name, double time_limit_s,
               const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && secs > time_limit_s) {
        r.pass = false;
        r.detail += " [over time limit " + std::to_string(time_limit_s) + " s]";
    }
    std::printf("%s  %2d  %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", id, name.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

oracle::Spectrum to_oracle(const FourierSpectrum &s) { return {s.begin(), s.end()}; }

oracle::Mat to_oracle(const qsim::CMatrix &m) {
    oracle::Mat out(m.dim());
    out.a.assign(m.data().begin(), m.data().end());
    return out;
}

std::vector<oracle::cplx> amps_of(const qsim::StateVector &psi) {
    return {psi.amplitudes().begin(), psi.amplitudes().end()};
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

FourierSpectrum random_spectrum(int n, std::mt19937_64 &rng,
                                const std::function<bool(std::uint32_t)> &allowed) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierSpectrum spec(n);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if (allowed(s) && u(rng) > 0.0) {
            spec.add(s, u(rng));
        }
    }
    return spec;
}

FourierSpectrum g3() {
    return {3, {{parse_mask("100"), 0.5}, {parse_mask("010"), -0.1}, {parse_mask("001"), 0.25}}};
}

FourierSpectrum g6() {
    return {6,
            {{parse_mask("100100"), -0.2},
             {parse_mask("100010"), -0.2},
             {parse_mask("010100"), 0.1},
             {parse_mask("010010"), 0.1}}};
}

Outcome fourier_engine() {
    double roundtrip = 0.0;
    double parseval = 0.0;
    double vs_oracle = 0.0;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 12; ++n) {
        std::vector<double> v(std::size_t{1} << n);
        for (auto &x : v) {
            x = u(rng);
        }
        const fourier::FunctionTable f(n, v);
        const auto spec = fourier::wht_forward(f);
        const auto back = fourier::wht_inverse(spec);
        double sq = 0.0;
        double csq = 0.0;
        for (Mask b = 0; b < f.size(); ++b) {
            roundtrip = std::max(roundtrip, std::abs(back[b] - v[b]));
            sq += v[b] * v[b];
        }
        for (const auto &[s, c] : spec) {
            csq += c * c;
        }
        parseval = std::max(parseval, std::abs(sq / static_cast<double>(v.size()) - csq));
        if (n <= 8) {
            const auto ref = oracle::naive_forward(v);
            for (Mask s = 0; s < ref.size(); ++s) {
                vs_oracle = std::max(vs_oracle, std::abs(spec[s] - ref[s]));
            }
        }
    }
    bool ortho = true;
    for (int n = 1; n <= 6 && ortho; ++n) {
        const Mask size = Mask{1} << n;
        for (Mask s = 0; s < size; ++s) {
            for (Mask t = 0; t < size; ++t) {
                long acc = 0;
                for (Mask b = 0; b < size; ++b) {
                    acc += fourier::chi(s, b) * oracle::chi(t, b);
                }
                ortho = ortho && acc == (s == t ? static_cast<long>(size) : 0);
            }
        }
    }
    return {roundtrip <= 1e-12 && parseval <= 1e-10 && ortho && vs_oracle <= 1e-12,
            "roundtrip " + sci(roundtrip) + ", Parseval " + sci(parseval) + ", vs direct sum " +
                sci(vs_oracle) + ", orthonormal " + (ortho ? "yes" : "no")};
}

Outcome phase_synthesis() {
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 5;
        const auto spec = random_spectrum(n, rng, [](std::uint32_t) { return true; });
        const auto o = to_oracle(synth::synth_phase_obs(spec).matrix());
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            worst = std::max(worst, std::abs(oracle::expect(o, oracle::phase_state(b, n)) - ref[b]));
        }
    }
    return {worst < 1e-9, "200 spectra, max error " + sci(worst)};
}

Outcome subset_ensemble() {
    const auto e = synth::ensemble_phase(g6(), 2);
    const auto ref = oracle::naive_inverse(to_oracle(g6()), 6);
    double worst = 0.0;
    bool two_qubit = true;
    for (const auto &mem : e.members) {
        two_qubit = two_qubit && std::get<qsim::DenseObservable>(mem.observable).num_qubits() == 2;
    }
    for (std::uint32_t b = 0; b < 64; ++b) {
        // Each member sees the selected bits through a 2-qubit phase state.
        double v = 0.0;
        for (const auto &mem : e.members) {
            const auto &w = std::get<embed::SubsetSelector>(mem.preprocessor);
            std::uint32_t sub = 0;
            for (std::size_t k = 0; k < w.indices().size(); ++k) {
                sub |= ((b >> (w.indices()[k] - 1)) & 1U) << k;
            }
            v += oracle::expect(to_oracle(std::get<qsim::DenseObservable>(mem.observable).matrix()),
                                oracle::phase_state(sub, 2));
        }
        worst = std::max(worst, std::abs(v - ref[b]));
    }
    std::size_t mismatches = 0;
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
                mismatches += synth::subset_multiplicity(s, n, d) == count ? 0 : 1;
            }
        }
    }
    const bool ok = worst < 1e-9 && two_qubit && e.members.size() <= 15 && mismatches == 0;
    return {ok, std::to_string(e.members.size()) + " members, max error " + sci(worst) +
                    ", multiplicity mismatches " + std::to_string(mismatches)};
}

Outcome qrac_synthesis() {
    std::mt19937_64 rng(41);
    double worst = 0.0;
    double printed_ratio_dev = 0.0;
    double printed_min_err = INFINITY;
    for (int i = 0; i < 200; ++i) {
        const int n = i % 2 == 0 ? 3 : 6;
        const int m = embed::qrac_qubits(n);
        FourierSpectrum spec(n);
        while (spec.empty()) {
            spec = random_spectrum(n, rng, [m](std::uint32_t s) { return oracle_in_kqe(s, m); });
        }
        const auto exact = synth::synth_qrac_obs(spec);
        const auto printed = synth::synth_qrac_obs(spec, {}, synth::QracWeighting::kAsPrinted);
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        double printed_err = 0.0;
        for (std::uint32_t b = 0; b < ref.size(); ++b) {
            worst = std::max(worst, std::abs(oracle::qrac_value(exact.terms(), b) - ref[b]));
            const double p = oracle::qrac_value(printed.terms(), b);
            printed_err = std::max(printed_err, std::abs(p - ref[b]));
            printed_ratio_dev = std::max(printed_ratio_dev, std::abs(p - std::ldexp(ref[b], m)));
        }
        printed_min_err = std::min(printed_min_err, printed_err);
    }
    const bool ok = worst < 1e-9 && printed_min_err > 1e-3 && printed_ratio_dev < 1e-9;
    return {ok, "200 spectra, max error " + sci(worst) + "; 2^m-weighted variant min error " +
                    sci(printed_min_err) + ", deviation from 2^m g " + sci(printed_ratio_dev)};
}

Outcome permutation_ensembles() {
    std::mt19937_64 rng(51);
    const int n = 6;
    double worst_perm = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::vector<int> image{1, 2, 3, 4, 5, 6};
        std::shuffle(image.begin(), image.end(), rng);
        const embed::Permutation tau(image);
        const auto base = random_spectrum(n, rng, [](std::uint32_t s) { return oracle_in_kqe(s, 2); });
        FourierSpectrum spec(n);
        for (const auto &[t, c] : base) {
            spec.add(oracle_permute(tau.inverse().image(), t), c);
        }
        const auto po = synth::synth_qrac_permuted(spec, tau);
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < 64; ++b) {
            worst_perm = std::max(
                worst_perm,
                std::abs(oracle::qrac_value(po.observable.terms(), oracle_permute(image, b)) - ref[b]));
        }
    }
    double worst_ens = 0.0;
    std::size_t members = 0;
    for (int i = 0; i < 5; ++i) {
        const auto spec = random_spectrum(n, rng, [](std::uint32_t s) { return oracle::popcount(s) <= 2; });
        const auto e = synth::ensemble_qrac(spec);
        members = std::max(members, e.members.size());
        const auto ref = oracle::naive_inverse(to_oracle(spec), n);
        for (std::uint32_t b = 0; b < 64; ++b) {
            double v = 0.0;
            for (const auto &mem : e.members) {
                const auto &tau = std::get<embed::Permutation>(mem.preprocessor);
                v += oracle::qrac_value(std::get<qsim::PauliSum>(mem.observable).terms(),
                                        oracle_permute(tau.image(), b));
            }
            worst_ens = std::max(worst_ens, std::abs(v - ref[b]));
        }
    }
    return {worst_perm < 1e-9 && worst_ens < 1e-9,
            "20 permuted spectra, max error " + sci(worst_perm) +
                "; 5 degree-2 ensembles over S_6 (up to " + std::to_string(members) +
                " members), max error " + sci(worst_ens)};
}

Outcome spectrum_extraction() {
    std::mt19937_64 rng(61);
    double worst_phase = 0.0;
    double worst_qrac = 0.0;
    for (int m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 3; ++trial) {
            const qsim::DenseObservable o(m, random_hermitian(std::size_t{1} << m, rng));
            const auto om = to_oracle(o.matrix());
            oracle::Table tp(std::size_t{1} << m);
            for (std::uint32_t b = 0; b < tp.size(); ++b) {
                tp[b] = oracle::expect(om, oracle::phase_state(b, m));
            }
            const auto ref_p = oracle::naive_forward(tp);
            const auto sp = synth::model_spectrum_phase(o);
            for (std::uint32_t s = 0; s < ref_p.size(); ++s) {
                worst_phase = std::max(worst_phase, std::abs(sp[s] - ref_p[s]));
            }

            const int n = 3 * m;
            const auto terms = qsim::pauli_decompose(o, 0.0).terms();
            oracle::Table tq(std::size_t{1} << n);
            for (std::uint32_t b = 0; b < tq.size(); ++b) {
                tq[b] = oracle::qrac_value(terms, b);
            }
            const auto tq_spec = fourier::wht_forward(fourier::FunctionTable(n, tq));
            const auto sq = synth::model_spectrum_qrac(o, n);
            worst_qrac = std::max(worst_qrac, fourier::max_abs_diff(sq, tq_spec));
        }
    }
    return {worst_phase <= 1e-9 && worst_qrac <= 1e-9,
            "phase " + sci(worst_phase) + ", QRAC " + sci(worst_qrac) + " over m = 1..4"};
}

struct FitCase {
    std::string name;
    FourierSpectrum target;
    embed::Embedding embedding;
    double threshold;
    train::TrainConfig config;
};

Outcome training() {
    std::vector<FitCase> cases;
    train::TrainConfig nm;
    train::TrainConfig adam;
    adam.optimizer = train::OptimizerKind::kAdam;
    adam.learning_rate = 0.1;
    cases.push_back({"g3 QRAC", g3(), embed::Embedding::kQrac, 1e-4, nm});
    cases.push_back({"g6 QRAC", g6(), embed::Embedding::kQrac, 1e-3, nm});
    cases.push_back({"g3 phase", g3(), embed::Embedding::kPhase, 1e-4, nm});
    cases.push_back({"g6 phase", g6(), embed::Embedding::kPhase, 1e-3, adam});
    bool ok = true;
    std::ostringstream detail;
    for (auto &c : cases) {
        const int n = c.target.num_bits();
        const int m = embed::embed_qubits(c.embedding, n);
        const train::Model model(c.embedding, n, train::Ansatz(m, train::Ansatz::default_layers(m)),
                                 qsim::PauliSum::all_z(m));
        const auto set = train::TrainingSet::full_cube(fourier::wht_inverse(c.target));
        int passed = 0;
        double worst_time = 0.0;
        double best_risk = INFINITY;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            c.config.seed = seed;
            const auto start = std::chrono::steady_clock::now();
            const auto r = train::optimize(c.config, set, model);
            worst_time = std::max(worst_time, std::chrono::duration<double>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count());
            // Mean half-squared error, recomputed from the returned parameters.
            double risk = 0.0;
            oracle::Table t(set.size());
            for (std::size_t i = 0; i < set.size(); ++i) {
                t[i] = train::model_eval(model, r.theta, set.inputs[i]);
                risk += 0.5 * (t[i] - set.labels[i]) * (t[i] - set.labels[i]);
            }
            risk /= static_cast<double>(set.size());
            const auto coeffs = oracle::naive_forward(t);
            double dev = 0.0;
            for (const auto &[s, v] : c.target) {
                dev = std::max(dev, std::abs(coeffs[s] - v));
            }
            best_risk = std::min(best_risk, risk);
            passed += (r.iterations <= 500 && risk < c.threshold && dev <= 0.05) ? 1 : 0;
        }
        const bool case_ok = passed >= 3 && worst_time < 300.0;
        ok = ok && case_ok;
        detail << c.name << " " << passed << "/5 (best risk " << sci(best_risk) << ", "
               << train::optimizer_name(c.config.optimizer) << "); ";
    }
    return {ok, detail.str()};
}

Outcome gradient_check() {
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const auto e = draw % 2 == 0 ? embed::Embedding::kPhase : embed::Embedding::kQrac;
        const int n = draw % 3 == 0 ? 3 : 6;
        const int m = embed::embed_qubits(e, n);
        const train::Model model(e, n, train::Ansatz(m, 2), qsim::PauliSum::all_z(m));
        std::vector<double> theta(model.ansatz().num_parameters());
        for (auto &t : theta) {
            t = u(rng);
        }
        const BitVector b(n, static_cast<Mask>(rng() % (1U << n)));
        const std::size_t k = rng() % theta.size();
        const double h = 1e-5;
        auto plus = theta;
        auto minus = theta;
        plus[k] += h;
        minus[k] -= h;
        const double fd =
            (train::model_eval(model, plus, b) - train::model_eval(model, minus, b)) / (2 * h);
        worst = std::max(worst, std::abs(train::parameter_shift_grad(model, theta, b, k).value - fd));
    }
    return {worst < 1e-5, "100 draws, max deviation " + sci(worst)};
}

Outcome richer_embeddings() {
    std::mt19937_64 rng(91);
    double smallest = INFINITY;
    for (int i = 0; i < 20; ++i) {
        const auto o = to_oracle(random_hermitian(2, rng));
        oracle::Table t(8);
        for (Mask b = 0; b < 8; ++b) {
            t[b] = oracle::expect(o, amps_of(embed::double_qrac_embed(embed::Triplet::from_mask(b))));
        }
        for (double c : oracle::naive_forward(t)) {
            smallest = std::min(smallest, std::abs(c));
        }
    }
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    qsim::Circuit h(2);
    h.h(0).h(1);
    qsim::Circuit mid(2);
    mid.ry(0, u(rng)).rz(0, u(rng)).ry(1, u(rng)).rz(1, u(rng)).cz(0, 1).ry(0, u(rng)).ry(1, u(rng));
    const std::vector<qsim::Circuit> blocks{h, mid};
    const std::vector<embed::SubsetSelector> part{embed::SubsetSelector({1, 2}),
                                                  embed::SubsetSelector({3, 4})};
    const auto o = to_oracle(random_hermitian(4, rng));
    oracle::Table t(16);
    for (Mask b = 0; b < 16; ++b) {
        t[b] = oracle::expect(
            o, amps_of(qsim::run_circuit(embed::repeated_phase_embed(BitVector(4, b), part, blocks))));
    }
    const double top = std::abs(oracle::naive_forward(t)[0b1111]);
    return {smallest > 1e-6 && top > 1e-6, "double QRAC smallest |coefficient| " + sci(smallest) +
                                               " over 20 observables; repeated phase weight-4 " +
                                               sci(top)};
}

Outcome routing() {
    int routed = 0;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const std::vector<int> subset{i, j};
            const auto beta = embed::find_routing(4, subset);
            if (!beta) {
                continue;
            }
            const auto layer = embed::swap_network_layer(4, *beta);
            // On every basis state, the bits of qubits i and j end up on qubits 1 and 2.
            bool ok = true;
            for (std::uint32_t x = 0; x < 16; ++x) {
                std::vector<qsim::cplx> amps(16, 0.0);
                amps[x] = 1.0;
                qsim::StateVector psi(4, amps);
                psi.apply(layer);
                const auto a = psi.amplitudes();
                std::size_t arg = 0;
                for (std::size_t k = 0; k < 16; ++k) {
                    arg = std::norm(a[k]) > std::norm(a[arg]) ? k : arg;
                }
                const std::uint32_t want = ((x >> (i - 1)) & 1U) + ((x >> (j - 1)) & 1U);
                const std::uint32_t got = (arg & 1U) + ((arg >> 1) & 1U);
                ok = ok && std::abs(std::norm(a[arg]) - 1.0) < 1e-12 && want == got;
            }
            routed += ok ? 1 : 0;
        }
    }
    return {routed == 6, std::to_string(routed) + "/6 pairs routed"};
}

Outcome kernel_baseline() {
    double min_eig = INFINITY;
    for (int n : {3, 6}) {
        std::vector<BitVector> x;
        for (Mask b = 0; b < (Mask{1} << n); ++b) {
            x.emplace_back(n, b);
        }
        min_eig = std::min(min_eig, kernel::kernel_matrix(x, embed::Embedding::kQrac).min_eigenvalue());
    }
    std::vector<BitVector> x3;
    for (Mask b = 0; b < 8; ++b) {
        x3.emplace_back(3, b);
    }
    const auto table = fourier::wht_inverse(g3());
    const std::vector<double> y(table.values().begin(), table.values().end());
    const auto alpha = kernel::krr_fit(kernel::kernel_matrix(x3, embed::Embedding::kQrac), y, 0.0);
    double interp = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        interp = std::max(interp,
                          std::abs(kernel::krr_predict(alpha, x3, x3[i], embed::Embedding::kQrac) - y[i]));
    }
    std::vector<BitVector> x5;
    for (Mask b = 0; b < 32; ++b) {
        x5.emplace_back(5, b);
    }
    const auto kp = kernel::kernel_matrix(x5, embed::Embedding::kPhase);
    bool identity = true;
    for (std::size_t i = 0; i < 32; ++i) {
        for (std::size_t j = 0; j < 32; ++j) {
            identity = identity && kp(i, j) == (i == j ? 1.0 : 0.0);
        }
    }
    return {min_eig >= -1e-10 && interp <= 1e-8 && identity,
            "min eigenvalue " + sci(min_eig) + ", interpolation error " + sci(interp) +
                ", phase kernel identity " + (identity ? "exact" : "no")};
}

} // namespace

int main() {
    criterion(1, "Fourier engine", 5.0, fourier_engine);
    criterion(2, "phase observable synthesis", 30.0, phase_synthesis);
    criterion(3, "subset ensemble and multiplicities", 0.0, subset_ensemble);
    criterion(4, "QRAC observable synthesis", 0.0, qrac_synthesis);
    criterion(5, "permuted QRAC and S_n ensembles", 120.0, permutation_ensembles);
    criterion(6, "spectrum extraction formulas", 0.0, spectrum_extraction);
    criterion(7, "training reproduction", 0.0, training);
    criterion(8, "parameter-shift gradient", 0.0, gradient_check);
    criterion(9, "double QRAC and repeated phase spectra", 0.0, richer_embeddings);
    criterion(10, "swap network routing", 0.0, routing);
    criterion(11, "kernel baseline", 0.0, kernel_baseline);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
