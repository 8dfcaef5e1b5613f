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
#include "boolcube/train.hpp"

#include "boolcube/error.hpp"
#include "boolcube/optimizers.hpp"
#include "boolcube/parallel.hpp"
#include "boolcube/rng.hpp"
#include "boolcube/simd/kernels.hpp"
#include "boolcube/synth.hpp"

#include <cmath>
#include <numbers>

namespace boolcube::train {
namespace {

constexpr int kMaxDenseExtractQubits = 10;

qsim::Circuit build_ansatz(int m, int layers) {
    qsim::Circuit c(m);
    for (int l = 0; l < layers; ++l) {
        const std::size_t base = static_cast<std::size_t>(l) * 2U * static_cast<std::size_t>(m);
        for (int q = 0; q < m; ++q) {
            const std::size_t slot = base + 2U * static_cast<std::size_t>(q);
            c.ry(q, qsim::Slot{slot});
            c.rz(q, qsim::Slot{slot + 1});
        }
        for (int q = 0; q + 1 < m; ++q) {
            c.cz(q, q + 1);
        }
    }
    return c;
}

// Embedded states are prepared once per member and input. A single model is
// the one-member case.
class RiskEvaluator {
  public:
    RiskEvaluator(std::span<const EnsembleTerm> terms, const TrainingSet &set) : set_(set) {
        if (set.size() == 0) {
            throw InvalidArgument("training set is empty");
        }
        if (terms.empty()) {
            throw InvalidArgument("model has no members");
        }
        std::size_t offset = 0;
        for (const auto &term : terms) {
            const int bits = term.selector ? term.selector->size() : set.n;
            if (bits != term.model.num_bits()) {
                throw InvalidArgument("training inputs have " + std::to_string(bits) +
                                      " bits, the model expects " +
                                      std::to_string(term.model.num_bits()));
            }
            Member mem{&term.model, offset, term.model.ansatz().num_parameters(), {}};
            mem.states.reserve(set.size());
            for (const auto &b : set.inputs) {
                if (b.size() != set.n) {
                    throw InvalidArgument("training inputs have inconsistent lengths");
                }
                mem.states.push_back(
                    term.model.embedded(term.selector ? embed::select_bits(*term.selector, b) : b));
            }
            offset += mem.count;
            members_.push_back(std::move(mem));
        }
        num_params_ = offset;
    }

    [[nodiscard]] std::size_t num_parameters() const noexcept { return num_params_; }

    [[nodiscard]] double member_value(std::size_t k, std::size_t i, std::span<const double> theta,
                                      std::uint64_t shots, std::uint64_t seed) const {
        const Member &mem = members_[k];
        const auto local = theta.subspan(mem.offset, mem.count);
        return shots == 0 ? mem.model->value_on(mem.states[i], local)
                          : mem.model->value_on_shots(mem.states[i], local, shots,
                                                      counter_draw(seed, i * members_.size() + k));
    }

    [[nodiscard]] double value(std::size_t i, std::span<const double> theta, std::uint64_t shots,
                               std::uint64_t seed) const {
        double acc = 0.0;
        for (std::size_t k = 0; k < members_.size(); ++k) {
            acc += member_value(k, i, theta, shots, seed);
        }
        return acc;
    }

    [[nodiscard]] double risk(std::span<const double> theta, std::uint64_t shots,
                              std::uint64_t seed) const {
        check(theta);
        std::vector<double> loss(set_.size());
        parallel_for(set_.size(), [&](std::size_t i) {
            const double r = set_.labels[i] - value(i, theta, shots, seed);
            loss[i] = 0.5 * r * r;
        });
        return mean(loss);
    }

    /// Risk and its parameter-shift gradient.
    double risk_and_gradient(std::span<const double> theta, std::span<double> grad,
                             std::uint64_t shots, std::uint64_t seed) const {
        check(theta);
        const std::size_t p = theta.size();
        const std::size_t t = set_.size();
        std::vector<double> loss(t);
        std::vector<double> partial(t * p);
        parallel_for(t, [&](std::size_t i) {
            std::vector<double> shifted(theta.begin(), theta.end());
            const double r = value(i, theta, shots, seed) - set_.labels[i];
            loss[i] = 0.5 * r * r;
            for (std::size_t k = 0; k < members_.size(); ++k) {
                const Member &mem = members_[k];
                for (std::size_t j = mem.offset; j < mem.offset + mem.count; ++j) {
                    shifted[j] = theta[j] + std::numbers::pi / 2.0;
                    const double up = member_value(k, i, shifted, shots, seed + 2 * j + 1);
                    shifted[j] = theta[j] - std::numbers::pi / 2.0;
                    const double down = member_value(k, i, shifted, shots, seed + 2 * j + 2);
                    shifted[j] = theta[j];
                    partial[i * p + j] = r * 0.5 * (up - down);
                }
            }
        });
        for (std::size_t j = 0; j < p; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < t; ++i) {
                acc += partial[i * p + j];
            }
            grad[j] = acc / static_cast<double>(t);
        }
        return mean(loss);
    }

  private:
    struct Member {
        const Model *model;
        std::size_t offset;
        std::size_t count;
        std::vector<qsim::StateVector> states;
    };

    void check(std::span<const double> theta) const {
        if (theta.size() != num_params_) {
            throw InvalidArgument("expected " + std::to_string(num_params_) +
                                  " parameters, got " + std::to_string(theta.size()));
        }
    }

    static double mean(const std::vector<double> &v) {
        double acc = 0.0;
        for (double x : v) {
            acc += x;
        }
        return acc / static_cast<double>(v.size());
    }

    const TrainingSet &set_;
    std::vector<Member> members_;
    std::size_t num_params_ = 0;
};

std::vector<EnsembleTerm> single(const Model &model) { return {EnsembleTerm{std::nullopt, model}}; }

TrainResult run_optimizer(const TrainConfig &config, const RiskEvaluator &evaluator) {
    if (config.budget < 1) {
        throw InvalidArgument("optimizer budget must be at least 1");
    }
    const std::size_t p = evaluator.num_parameters();
    std::vector<double> theta0 =
        config.initial.empty() ? initial_parameters(p, config.seed) : config.initial;
    if (theta0.size() != p) {
        throw InvalidArgument("initial parameter vector has length " +
                              std::to_string(theta0.size()) + ", expected " + std::to_string(p));
    }
    std::uint64_t calls = 0;
    auto objective = [&](std::span<const double> theta) {
        return evaluator.risk(theta, config.shots, counter_draw(config.seed, calls++));
    };

    opt::Result r;
    switch (config.optimizer) {
    case OptimizerKind::kNelderMead: {
        opt::NelderMeadOptions o;
        o.max_iterations = config.budget;
        o.initial_step = config.initial_step;
        r = opt::nelder_mead(objective, std::move(theta0), o);
        break;
    }
    case OptimizerKind::kSpsa: {
        opt::SpsaOptions o;
        o.max_iterations = config.budget;
        o.seed = config.seed;
        r = opt::spsa(objective, std::move(theta0), o);
        break;
    }
    case OptimizerKind::kAdam: {
        opt::AdamOptions o;
        o.max_iterations = config.budget;
        o.learning_rate = config.learning_rate;
        r = opt::adam(
            [&](std::span<const double> theta, std::span<double> grad) {
                return evaluator.risk_and_gradient(theta, grad, config.shots,
                                                   counter_draw(config.seed, calls++));
            },
            std::move(theta0), o);
        break;
    }
    }
    TrainResult out;
    out.final_risk = config.shots == 0 ? r.fx : evaluator.risk(r.x, 0, 0);
    out.theta = std::move(r.x);
    out.loss_trace = std::move(r.trace);
    out.iterations = r.iterations;
    out.evaluations = r.evaluations;
    return out;
}

} // namespace

Ansatz::Ansatz(int num_qubits, int layers)
    : m_(num_qubits), layers_(layers), circuit_(num_qubits) {
    if (layers < 1) {
        throw InvalidArgument("ansatz needs at least one layer");
    }
    circuit_ = build_ansatz(num_qubits, layers);
}

int Ansatz::default_layers(int num_qubits) noexcept { return num_qubits <= 3 ? 3 : 4; }

TrainingSet TrainingSet::full_cube(const fourier::FunctionTable &g) {
    TrainingSet set;
    set.n = g.num_bits();
    set.inputs.reserve(g.size());
    set.labels.reserve(g.size());
    for (std::size_t b = 0; b < g.size(); ++b) {
        set.inputs.emplace_back(g.num_bits(), static_cast<Mask>(b));
        set.labels.push_back(g[static_cast<Mask>(b)]);
    }
    return set;
}

Model::Model(Embedding embedding, int n, Ansatz ansatz, qsim::PauliSum d,
             std::optional<embed::Permutation> tau, embed::QracAngles angles)
    : embedding_(embedding), n_(n), ansatz_(std::move(ansatz)), d_(std::move(d)),
      tau_(std::move(tau)), angles_(angles) {
    const int m = embed::embed_qubits(embedding, n);
    if (ansatz_.num_qubits() != m) {
        throw InvalidArgument("ansatz has " + std::to_string(ansatz_.num_qubits()) +
                              " qubits, the embedding produces " + std::to_string(m));
    }
    if (d_.num_qubits() != m) {
        throw InvalidArgument("measured observable acts on the wrong number of qubits");
    }
    if (!d_.is_diagonal()) {
        throw InvalidArgument("measured observable must be diagonal (I/Z words only)");
    }
    if (tau_ && tau_->size() != n) {
        throw InvalidArgument("input permutation length differs from n");
    }
    diag_ = d_.diagonal();
}

qsim::StateVector Model::embedded(const BitVector &b) const {
    if (b.size() != n_) {
        throw InvalidArgument("model expects " + std::to_string(n_) + "-bit inputs");
    }
    const BitVector input = tau_ ? embed::permute_bits(*tau_, b) : b;
    return embed::embed_state(embedding_, input, angles_);
}

void Model::check_theta(std::span<const double> theta) const {
    if (theta.size() != ansatz_.num_parameters()) {
        throw InvalidArgument("expected " + std::to_string(ansatz_.num_parameters()) +
                              " parameters, got " + std::to_string(theta.size()));
    }
}

double Model::value_on(qsim::StateVector psi, std::span<const double> theta) const {
    check_theta(theta);
    psi.apply(ansatz_.circuit(), theta);
    return simd::kernels().weighted_norm(psi.amplitudes(), diag_);
}

double Model::value_on_shots(qsim::StateVector psi, std::span<const double> theta,
                             std::uint64_t shots, std::uint64_t seed) const {
    check_theta(theta);
    psi.apply(ansatz_.circuit(), theta);
    return qsim::sample_expectation(psi, d_, shots, seed);
}

double model_eval(const Model &model, std::span<const double> theta, const BitVector &b,
                  std::uint64_t shots, std::uint64_t seed) {
    return shots == 0 ? model.value_on(model.embedded(b), theta)
                      : model.value_on_shots(model.embedded(b), theta, shots, seed);
}

double empirical_risk(const Model &model, std::span<const double> theta,
                      const TrainingSet &set, std::uint64_t shots, std::uint64_t seed) {
    const auto terms = single(model);
    return RiskEvaluator(terms, set).risk(theta, shots, seed);
}

ShiftGradient parameter_shift_grad(const Model &model, std::span<const double> theta,
                                   const BitVector &b, std::size_t index, std::uint64_t shots,
                                   std::uint64_t seed) {
    if (index >= theta.size()) {
        throw InvalidArgument("parameter index out of range");
    }
    std::vector<double> shifted(theta.begin(), theta.end());
    shifted[index] = theta[index] + std::numbers::pi / 2.0;
    const double up = model_eval(model, shifted, b, shots, seed);
    shifted[index] = theta[index] - std::numbers::pi / 2.0;
    const double down = model_eval(model, shifted, b, shots, seed + 1);
    return {0.5 * (up - down), shots != 0};
}

std::vector<double> risk_gradient(const Model &model, std::span<const double> theta,
                                  const TrainingSet &set) {
    std::vector<double> grad(theta.size());
    const auto terms = single(model);
    (void)RiskEvaluator(terms, set).risk_and_gradient(theta, grad, 0, 0);
    return grad;
}

std::string_view optimizer_name(OptimizerKind k) noexcept {
    switch (k) {
    case OptimizerKind::kNelderMead: return "nelder-mead";
    case OptimizerKind::kSpsa: return "spsa";
    case OptimizerKind::kAdam: return "adam";
    }
    return "?";
}

OptimizerKind parse_optimizer(std::string_view text) {
    for (auto k : {OptimizerKind::kNelderMead, OptimizerKind::kSpsa, OptimizerKind::kAdam}) {
        if (text == optimizer_name(k)) {
            return k;
        }
    }
    throw InvalidArgument("unknown optimizer '" + std::string(text) +
                          "' (expected nelder-mead, spsa or adam)");
}

std::vector<double> initial_parameters(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<double> out(count);
    for (auto &x : out) {
        x = uniform(engine, -std::numbers::pi, std::numbers::pi);
    }
    return out;
}

TrainResult optimize(const TrainConfig &config, const TrainingSet &set, const Model &model) {
    const auto terms = single(model);
    return run_optimizer(config, RiskEvaluator(terms, set));
}

double ensemble_model_eval(std::span<const EnsembleTerm> terms, std::span<const double> theta,
                           const BitVector &b) {
    double acc = 0.0;
    std::size_t offset = 0;
    for (const auto &term : terms) {
        const std::size_t count = term.model.ansatz().num_parameters();
        if (offset + count > theta.size()) {
            throw InvalidArgument("parameter vector is shorter than the ensemble needs");
        }
        const BitVector input = term.selector ? embed::select_bits(*term.selector, b) : b;
        acc += model_eval(term.model, theta.subspan(offset, count), input);
        offset += count;
    }
    if (offset != theta.size()) {
        throw InvalidArgument("parameter vector is longer than the ensemble needs");
    }
    return acc;
}

TrainResult optimize_ensemble(const TrainConfig &config, const TrainingSet &set,
                              std::span<const EnsembleTerm> terms) {
    return run_optimizer(config, RiskEvaluator(terms, set));
}

qsim::DenseObservable trained_observable(const Model &model, std::span<const double> theta) {
    if (model.num_qubits() > kMaxDenseExtractQubits) {
        throw CapacityError("dense O_theta supports at most 10 qubits");
    }
    const auto w = qsim::circuit_unitary(model.ansatz().circuit(), theta);
    const auto d = qsim::pauli_to_dense(model.observable());
    qsim::CMatrix o = w.adjoint() * d.matrix() * w;
    // Remove rounding asymmetry before the Hermitian check.
    const qsim::CMatrix sym = 0.5 * (o + o.adjoint());
    return {model.num_qubits(), sym};
}

fourier::FourierSpectrum extract_trained_spectrum(const Model &model,
                                                  std::span<const double> theta) {
    const auto o = trained_observable(model, theta);
    fourier::FourierSpectrum base =
        model.embedding() == Embedding::kPhase
            ? synth::model_spectrum_phase(o)
            : synth::model_spectrum_qrac(o, model.num_bits(), model.angles());
    if (!model.permutation()) {
        return base;
    }
    const auto inv = model.permutation()->inverse();
    fourier::FourierSpectrum out(model.num_bits());
    for (const auto &[s, c] : base) {
        out.add(embed::permute_mask(inv, s), c);
    }
    return out;
}

} // namespace boolcube::train
