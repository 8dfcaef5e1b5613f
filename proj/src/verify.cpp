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
#include "boolcube/verify.hpp"

#include "boolcube/error.hpp"
#include "boolcube/fourier.hpp"
#include "boolcube/kernel.hpp"
#include "boolcube/rng.hpp"
#include "boolcube/synth.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>

namespace boolcube::verify {
namespace {

using fourier::FourierSpectrum;
using fourier::FunctionTable;
using qsim::CMatrix;
using qsim::cplx;

struct Worst {
    double error = 0.0;
    std::string where;

    void offer(double err, const std::function<std::string()> &describe) {
        if (err > error || std::isnan(err)) {
            error = err;
            where = describe();
        }
    }
};

Check below(std::string name, const Worst &w, double tol) {
    const bool ok = w.error < tol;
    return {std::move(name), ok, w.error, ok ? std::string{} : w.where};
}

FourierSpectrum random_on(int n, const std::vector<Mask> &allowed, std::size_t count,
                          std::mt19937_64 &rng) {
    std::vector<Mask> pool = allowed;
    count = std::min(count, pool.size());
    FourierSpectrum spec(n);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + uniform_index(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
        double c = 0.0;
        do {
            c = uniform(rng, -1.0, 1.0);
        } while (std::abs(c) < 1e-3);
        spec.set(pool[i], c);
    }
    return spec;
}

std::vector<Mask> all_masks(int n) {
    std::vector<Mask> out(std::size_t{1} << n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<Mask>(i);
    }
    return out;
}

CMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    CMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        h(r, r) = uniform(rng, -1.0, 1.0);
        for (std::size_t c = r + 1; c < dim; ++c) {
            const cplx z{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
            h(r, c) = z;
            h(c, r) = std::conj(z);
        }
    }
    return h;
}

std::string spec_text(const FourierSpectrum &spec) {
    std::string out = "{";
    for (const auto &[s, c] : spec) {
        out += mask_to_string(s, spec.num_bits()) + ":" + std::to_string(c) + " ";
    }
    return out + "}";
}

/// max_b |model(b) - g(b)| over the full cube.
double cube_error(const FourierSpectrum &spec, const std::function<double(const BitVector &)> &model,
                  std::string &where) {
    const auto table = fourier::wht_inverse(spec);
    double worst = 0.0;
    for (Mask b = 0; b < table.size(); ++b) {
        const BitVector bv(spec.num_bits(), b);
        const double err = std::abs(model(bv) - table[b]);
        if (err > worst) {
            worst = err;
            where = "b=" + bv.to_string() + " spectrum=" + spec_text(spec);
        }
    }
    return worst;
}

std::vector<Check> suite_fourier(std::mt19937_64 &rng) {
    Worst roundtrip;
    Worst parseval;
    for (int n = 1; n <= 10; ++n) {
        std::vector<double> v(std::size_t{1} << n);
        for (auto &x : v) {
            x = uniform(rng, -1.0, 1.0);
        }
        const FunctionTable f(n, v);
        const auto spec = fourier::wht_forward(f);
        const auto back = fourier::wht_inverse(spec);
        for (Mask b = 0; b < f.size(); ++b) {
            roundtrip.offer(std::abs(back[b] - f[b]),
                            [&] { return "n=" + std::to_string(n) + " b=" + mask_to_string(b, n); });
        }
        double energy = 0.0;
        for (const auto &[s, c] : spec) {
            energy += c * c;
        }
        parseval.offer(std::abs(energy - fourier::inner_product(f, f)),
                       [&] { return "n=" + std::to_string(n); });
    }
    Worst ortho;
    for (int n = 1; n <= 6; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        std::vector<FunctionTable> basis;
        for (Mask s = 0; s < dim; ++s) {
            basis.push_back(fourier::wht_inverse(FourierSpectrum(n, {{s, 1.0}})));
        }
        for (Mask s = 0; s < dim; ++s) {
            for (Mask t = 0; t < dim; ++t) {
                const double want = s == t ? 1.0 : 0.0;
                ortho.offer(std::abs(fourier::inner_product(basis[s], basis[t]) - want), [&] {
                    return "s=" + mask_to_string(s, n) + " t=" + mask_to_string(t, n);
                });
            }
        }
    }
    return {below("roundtrip", roundtrip, 1e-12), below("parseval", parseval, 1e-10),
            below("orthonormality", ortho, 1e-15)};
}

std::vector<Check> suite_thm1(std::mt19937_64 &rng) {
    Worst w;
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 5;
        const std::size_t count = 1 + uniform_index(rng, std::size_t{1} << n);
        const auto spec = random_on(n, all_masks(n), count, rng);
        const auto o = synth::synth_phase_obs(spec);
        std::string where;
        const double err = cube_error(
            spec, [&](const BitVector &b) { return synth::phase_model_value(o, b); }, where);
        w.offer(err, [&] { return where; });
    }
    return {below("phase synthesis exact on 200 spectra", w, 1e-9)};
}

FourierSpectrum g6_spectrum() {
    return FourierSpectrum(6, {{parse_mask("100100"), -0.2},
                               {parse_mask("100010"), -0.2},
                               {parse_mask("010100"), 0.1},
                               {parse_mask("010010"), 0.1}});
}

std::vector<Check> suite_thm2(std::mt19937_64 &rng) {
    std::vector<Check> out;
    const auto spec = g6_spectrum();
    const auto e = synth::ensemble_phase(spec, 2);
    std::string where;
    const double err = cube_error(
        spec, [&](const BitVector &b) { return synth::ensemble_eval(e, b); }, where);
    out.push_back({"g6 ensemble, d = 2", err < 1e-9 && e.members.size() <= 15, err,
                   err < 1e-9 ? "members=" + std::to_string(e.members.size()) : where});

    Worst counts;
    std::size_t alt_mismatch = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= n; ++d) {
            for (Mask s = 0; s < (Mask{1} << n); ++s) {
                if (weight(s) > d) {
                    continue;
                }
                const auto direct = synth::subset_multiplicity(s, n, d);
                const auto closed = synth::subset_multiplicity_closed_form(s, n, d);
                counts.offer(direct == closed ? 0.0 : 1.0, [&] {
                    return "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                           " s=" + mask_to_string(s, n);
                });
                if (synth::binomial(n, n - d + weight(s)) != direct) {
                    ++alt_mismatch;
                }
            }
        }
    }
    Check kc = below("multiplicity C(n-wt, d-wt) equals enumeration, n <= 8", counts, 0.5);
    kc.detail += (kc.detail.empty() ? "" : "; ") + std::string("C(n, n-d+wt) differs in ") +
                 std::to_string(alt_mismatch) + " cases";
    out.push_back(std::move(kc));

    Worst random_ens;
    for (int i = 0; i < 10; ++i) {
        const int n = 3 + i % 4;
        const int d = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
        std::vector<Mask> allowed;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if (weight(s) <= d) {
                allowed.push_back(s);
            }
        }
        const auto rs = random_on(n, allowed, 1 + uniform_index(rng, allowed.size()), rng);
        const auto re = synth::ensemble_phase(rs, d);
        std::string w2;
        const double e2 = cube_error(
            rs, [&](const BitVector &b) { return synth::ensemble_eval(re, b); }, w2);
        random_ens.offer(e2, [&] { return "d=" + std::to_string(d) + " " + w2; });
    }
    out.push_back(below("random low-degree ensembles", random_ens, 1e-9));
    return out;
}

std::vector<Check> suite_thm3(std::mt19937_64 &rng) {
    Worst exact;
    Worst printed_ratio;
    double printed_min_error = INFINITY;
    for (int i = 0; i < 200; ++i) {
        const int n = i % 2 == 0 ? 3 : 6;
        const int m = n / 3;
        const auto allowed = synth::kqe_set(m);
        const auto spec = random_on(n, allowed, 1 + uniform_index(rng, allowed.size()), rng);
        const auto o = synth::synth_qrac_obs(spec);
        std::string where;
        const double err = cube_error(
            spec, [&](const BitVector &b) { return synth::qrac_model_value(o, b); }, where);
        exact.offer(err, [&] { return where; });

        const auto op = synth::synth_qrac_obs(spec, {}, synth::QracWeighting::kAsPrinted);
        const double scale = std::ldexp(1.0, m);
        FourierSpectrum scaled(n);
        for (const auto &[s, c] : spec) {
            scaled.set(s, scale * c);
        }
        std::string w2;
        const double ratio_err = cube_error(
            scaled, [&](const BitVector &b) { return synth::qrac_model_value(op, b); }, w2);
        printed_ratio.offer(ratio_err, [&] { return w2; });
        std::string w3;
        printed_min_error = std::min(
            printed_min_error,
            cube_error(spec, [&](const BitVector &b) { return synth::qrac_model_value(op, b); },
                       w3));
    }
    Check printed = below("printed 2^m weighting reproduces exactly 2^m g", printed_ratio, 1e-9);
    Check fails{"printed 2^m weighting misses g on every spectrum", printed_min_error > 1e-9,
                printed_min_error, "smallest max-error of the printed variant"};
    return {below("QRAC synthesis exact on 200 spectra", exact, 1e-9), printed, fails};
}

std::vector<Check> suite_thm4(std::mt19937_64 &rng) {
    Worst w;
    for (int i = 0; i < 50; ++i) {
        const int n = i % 2 == 0 ? 6 : 4 + static_cast<int>(uniform_index(rng, 4));
        const int m = embed::qrac_qubits(n);
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            image[static_cast<std::size_t>(k)] = k + 1;
        }
        for (std::size_t k = image.size(); k > 1; --k) {
            std::swap(image[k - 1], image[uniform_index(rng, k)]);
        }
        const embed::Permutation tau(image);
        std::vector<Mask> allowed;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if (synth::in_kqe(embed::permute_mask(tau, s), m)) {
                allowed.push_back(s);
            }
        }
        const auto spec = random_on(n, allowed, 1 + uniform_index(rng, allowed.size()), rng);
        const auto po = synth::synth_qrac_permuted(spec, tau);
        std::string where;
        const double err = cube_error(
            spec,
            [&](const BitVector &b) {
                return synth::qrac_model_value(po.observable, embed::permute_bits(tau, b));
            },
            where);
        w.offer(err, [&] { return where; });
    }
    return {below("permuted QRAC synthesis exact on 50 permutations", w, 1e-9)};
}

std::vector<Check> suite_thm5(std::mt19937_64 &rng) {
    Worst w;
    for (int i = 0; i < 4; ++i) {
        const int n = i == 0 ? 3 : 6;
        const int d = embed::qrac_qubits(n);
        std::vector<Mask> allowed;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if (weight(s) <= d) {
                allowed.push_back(s);
            }
        }
        const auto spec = random_on(n, allowed, 1 + uniform_index(rng, allowed.size()), rng);
        const auto e = synth::ensemble_qrac(spec);
        std::string where;
        const double err = cube_error(
            spec, [&](const BitVector &b) { return synth::ensemble_eval(e, b); }, where);
        w.offer(err, [&] { return where; });
    }
    return {below("permutation ensembles exact on the full cube", w, 1e-9)};
}

qsim::Circuit random_block(int m, std::mt19937_64 &rng) {
    qsim::Circuit c(m);
    for (int layer = 0; layer < 2; ++layer) {
        for (int q = 0; q < m; ++q) {
            c.ry(q, uniform(rng, -3.0, 3.0)).rz(q, uniform(rng, -3.0, 3.0));
        }
        for (int q = 0; q + 1 < m; ++q) {
            c.cz(q, q + 1);
        }
    }
    return c;
}

std::vector<Check> suite_appendix_a1(std::mt19937_64 &rng) {
    const int n = 4;
    const int m = 2;
    std::vector<embed::SubsetSelector> partition{embed::SubsetSelector({1, 2}),
                                                 embed::SubsetSelector({3, 4})};
    qsim::Circuit h(m);
    h.h(0).h(1);
    const std::vector<qsim::Circuit> blocks{h, random_block(m, rng)};
    const qsim::DenseObservable o(m, random_hermitian(4, rng));
    std::vector<double> values(std::size_t{1} << n);
    for (Mask b = 0; b < values.size(); ++b) {
        const auto c = embed::repeated_phase_embed(BitVector(n, b), partition, blocks);
        values[b] = qsim::expectation(o, qsim::run_circuit(c));
    }
    const auto coeffs = fourier::wht_forward_dense(FunctionTable(n, values));
    const double top = std::abs(coeffs[0b1111]);
    Check weight4{"weight-4 coefficient is nonzero", top > 1e-6, top, ""};

    Worst single;
    const std::vector<embed::SubsetSelector> one{embed::SubsetSelector({1, 2})};
    const std::vector<qsim::Circuit> one_block{h};
    for (Mask b = 0; b < 4; ++b) {
        const auto psi = qsim::run_circuit(
            embed::repeated_phase_embed(BitVector(m, b), one, one_block));
        const double ov = qsim::overlap_magnitude(psi, embed::phase_embed(BitVector(m, b)));
        single.offer(std::abs(ov - 1.0), [&] { return "b=" + mask_to_string(b, m); });
    }
    return {weight4, below("r = 1 reduces to the phase embedding", single, 1e-10)};
}

std::vector<Check> suite_appendix_a2(std::mt19937_64 &rng) {
    double smallest = INFINITY;
    std::string where;
    for (int i = 0; i < 20; ++i) {
        const qsim::DenseObservable o(1, random_hermitian(2, rng));
        std::vector<double> values(8);
        for (Mask t = 0; t < 8; ++t) {
            values[t] = qsim::expectation(o, embed::double_qrac_embed(embed::Triplet::from_mask(t)));
        }
        const auto coeffs = fourier::wht_forward_dense(FunctionTable(3, values));
        for (Mask s = 0; s < 8; ++s) {
            if (std::abs(coeffs[s]) < smallest) {
                smallest = std::abs(coeffs[s]);
                where = "observable " + std::to_string(i) + " mask " + mask_to_string(s, 3);
            }
        }
    }
    return {{"all 8 coefficients nonzero for 20 observables", smallest > 1e-6, smallest,
             smallest > 1e-6 ? "" : where}};
}

std::vector<Check> suite_appendix_b() {
    std::vector<Check> out;
    for (const auto &w : embed::all_subsets(4, 2)) {
        const auto beta = embed::find_routing(4, w.indices());
        std::string name = "route {" + std::to_string(w.indices()[0]) + "," +
                           std::to_string(w.indices()[1]) + "} to qubits {1,2}";
        std::string detail;
        if (beta) {
            detail = "beta/pi =";
            for (double b : *beta) {
                detail += b == 0.0 ? " 0" : " 1";
            }
        }
        out.push_back({std::move(name), beta.has_value(), 0.0, detail});
    }
    return out;
}

std::vector<Check> suite_kernel(std::mt19937_64 &rng) {
    std::vector<Check> out;
    auto cube = [](int n) {
        std::vector<BitVector> v;
        for (Mask b = 0; b < (Mask{1} << n); ++b) {
            v.emplace_back(n, b);
        }
        return v;
    };
    Worst psd;
    for (int n : {3, 4, 6}) {
        const auto k = kernel::kernel_matrix(cube(n), embed::Embedding::kQrac);
        psd.offer(std::max(0.0, -k.min_eigenvalue()), [&] { return "n=" + std::to_string(n); });
    }
    out.push_back(below("QRAC Gram matrices are PSD", psd, 1e-9));

    const auto inputs = cube(3);
    const FourierSpectrum g3(3, {{parse_mask("100"), 0.5},
                                 {parse_mask("010"), -0.1},
                                 {parse_mask("001"), 0.25}});
    const auto table = fourier::wht_inverse(g3);
    const std::vector<double> y(table.values().begin(), table.values().end());
    const auto k = kernel::kernel_matrix(inputs, embed::Embedding::kQrac);
    Worst interp;
    try {
        const auto alpha = kernel::krr_fit(k, y, 0.0);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const double pred =
                kernel::krr_predict(alpha, inputs, inputs[i], embed::Embedding::kQrac);
            interp.offer(std::abs(pred - y[i]), [&] { return "b=" + inputs[i].to_string(); });
        }
    } catch (const NumericalError &e) {
        interp.offer(INFINITY, [&] { return std::string(e.what()); });
    }
    out.push_back(below("beta = 0 interpolation of g3 on the QRAC kernel", interp, 1e-8));

    Worst ident;
    std::vector<BitVector> sample;
    for (Mask b = 0; b < 16; ++b) {
        if (uniform_index(rng, 2) == 0 || sample.empty()) {
            sample.emplace_back(4, b);
        }
    }
    const auto kp = kernel::kernel_matrix(sample, embed::Embedding::kPhase);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = 0; j < sample.size(); ++j) {
            ident.offer(std::abs(kp(i, j) - (i == j ? 1.0 : 0.0)), [&] {
                return sample[i].to_string() + "," + sample[j].to_string();
            });
        }
    }
    out.push_back(below("phase kernel is the identity on distinct inputs", ident, 1e-15));
    return out;
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"fourier",    "thm1",       "thm2",
                                                "thm3",       "thm4",       "thm5",
                                                "appendixA1", "appendixA2", "appendixB",
                                                "kernel"};
    return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SuiteReport r;
    r.suite = std::string(name);
    r.seed = seed;
    if (name == "fourier") {
        r.checks = suite_fourier(rng);
    } else if (name == "thm1") {
        r.checks = suite_thm1(rng);
    } else if (name == "thm2") {
        r.checks = suite_thm2(rng);
    } else if (name == "thm3") {
        r.checks = suite_thm3(rng);
    } else if (name == "thm4") {
        r.checks = suite_thm4(rng);
    } else if (name == "thm5") {
        r.checks = suite_thm5(rng);
    } else if (name == "appendixA1") {
        r.checks = suite_appendix_a1(rng);
    } else if (name == "appendixA2") {
        r.checks = suite_appendix_a2(rng);
    } else if (name == "appendixB") {
        r.checks = suite_appendix_b();
    } else if (name == "kernel") {
        r.checks = suite_kernel(rng);
    } else {
        std::string known;
        for (const auto &s : suite_names()) {
            known += (known.empty() ? "" : ", ") + s;
        }
        throw InvalidArgument("unknown suite '" + std::string(name) + "' (known: " + known + ")");
    }
    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Check &c) { return c.pass; });
    return r;
}

void write_json(std::ostream &out, const SuiteReport &report) {
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    doc["seed"] = report.seed;
    doc["pass"] = report.pass;
    auto checks = nlohmann::ordered_json::array();
    for (const auto &c : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["max_error"] = std::isfinite(c.max_error) ? nlohmann::ordered_json(c.max_error)
                                                        : nlohmann::ordered_json(nullptr);
        if (!c.detail.empty()) {
            entry["detail"] = c.detail;
        }
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    out << doc.dump(2) << '\n';
}

} // namespace boolcube::verify
