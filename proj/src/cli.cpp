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
#include "boolcube/cli.hpp"

#include "boolcube/csv.hpp"
#include "boolcube/error.hpp"
#include "boolcube/synth.hpp"
#include "boolcube/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace boolcube::cli {
namespace {

namespace fs = std::filesystem;
using fourier::FourierSpectrum;
using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string &field, const std::string &message) {
    throw InvalidArgument("config field '" + field + "': " + message);
}

template <class T>
T get_as(const json &node, const std::string &field) {
    try {
        return node.get<T>();
    } catch (const json::exception &) {
        field_error(field, "has the wrong type");
    }
}

std::int64_t get_int(const json &node, const std::string &field, std::int64_t lo,
                     std::int64_t hi) {
    if (!node.is_number_integer()) {
        field_error(field, "expected an integer");
    }
    const auto v = node.get<std::int64_t>();
    if (v < lo || v > hi) {
        field_error(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
}

double get_double(const json &node, const std::string &field) {
    if (!node.is_number()) {
        field_error(field, "expected a number");
    }
    const double v = node.get<double>();
    if (!std::isfinite(v)) {
        field_error(field, "must be finite");
    }
    return v;
}

void reject_unknown(const json &obj, const std::string &where,
                    std::initializer_list<std::string_view> allowed) {
    for (const auto &[key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            field_error(where.empty() ? key : where + "." + key, "unknown field");
        }
    }
}

Family parse_family(std::string_view text) {
    for (auto f : {Family::kPhase, Family::kQrac, Family::kQracPermuted, Family::kEnsemblePhase,
                   Family::kEnsembleQrac}) {
        if (text == family_name(f)) {
            return f;
        }
    }
    field_error("embedding", "expected phase, qrac, qrac-permuted, ensemble-phase or "
                             "ensemble-qrac, got '" + std::string(text) + "'");
}

FourierSpectrum parse_target(const json &node, std::string &name) {
    if (node.is_string()) {
        name = node.get<std::string>();
        return preset_spectrum(name, {});
    }
    if (!node.is_object()) {
        field_error("target", "expected a preset name or an object");
    }
    if (node.contains("preset")) {
        reject_unknown(node, "target", {"preset", "coefficients"});
        name = get_as<std::string>(node["preset"], "target.preset");
        std::vector<double> coeffs;
        if (node.contains("coefficients")) {
            if (!node["coefficients"].is_array()) {
                field_error("target.coefficients", "expected an array of numbers");
            }
            for (std::size_t i = 0; i < node["coefficients"].size(); ++i) {
                coeffs.push_back(get_double(node["coefficients"][i],
                                            "target.coefficients[" + std::to_string(i) + "]"));
            }
        }
        return preset_spectrum(name, coeffs);
    }
    if (node.contains("random")) {
        reject_unknown(node, "target", {"random"});
        const json &r = node["random"];
        reject_unknown(r, "target.random", {"n", "degree", "terms", "seed"});
        name = "random";
        const int n = static_cast<int>(get_int(r.value("n", json()), "target.random.n", 1, 24));
        const int d = static_cast<int>(
            get_int(r.value("degree", json()), "target.random.degree", 0, n));
        const auto terms = static_cast<std::size_t>(
            get_int(r.value("terms", json()), "target.random.terms", 0, 1 << 24));
        const auto seed =
            static_cast<std::uint64_t>(get_int(r.value("seed", json(0)), "target.random.seed", 0,
                                               std::numeric_limits<std::int64_t>::max()));
        try {
            return fourier::random_low_degree(n, d, terms, seed);
        } catch (const InvalidArgument &e) {
            field_error("target.random", e.what());
        }
    }
    reject_unknown(node, "target", {"n", "spectrum"});
    name = "inline";
    const int n = static_cast<int>(get_int(node.value("n", json()), "target.n", 1, 24));
    FourierSpectrum spec(n);
    if (!node.contains("spectrum") || !node["spectrum"].is_object()) {
        field_error("target.spectrum", "expected an object mapping masks to coefficients");
    }
    for (const auto &[key, value] : node["spectrum"].items()) {
        const std::string field = "target.spectrum." + key;
        if (static_cast<int>(key.size()) != n) {
            field_error(field, "mask must have exactly n = " + std::to_string(n) + " digits");
        }
        Mask s = 0;
        try {
            s = parse_mask(key);
        } catch (const InvalidArgument &) {
            field_error(field, "mask must consist of 0 and 1");
        }
        spec.add(s, get_double(value, field));
    }
    return spec;
}

void parse_optimizer(const json &node, ExperimentConfig &c) {
    if (!node.is_object()) {
        field_error("optimizer", "expected an object");
    }
    reject_unknown(node, "optimizer",
                   {"kind", "budget", "seed", "learning_rate", "initial_step", "init"});
    if (node.contains("kind")) {
        try {
            c.train.optimizer =
                train::parse_optimizer(get_as<std::string>(node["kind"], "optimizer.kind"));
        } catch (const InvalidArgument &e) {
            field_error("optimizer.kind", e.what());
        }
    }
    if (node.contains("budget")) {
        c.train.budget =
            static_cast<std::size_t>(get_int(node["budget"], "optimizer.budget", 1, 100000000));
    }
    if (node.contains("seed")) {
        c.train.seed = static_cast<std::uint64_t>(get_int(
            node["seed"], "optimizer.seed", 0, std::numeric_limits<std::int64_t>::max()));
    }
    if (node.contains("learning_rate")) {
        c.train.learning_rate = get_double(node["learning_rate"], "optimizer.learning_rate");
        if (c.train.learning_rate <= 0.0) {
            field_error("optimizer.learning_rate", "must be positive");
        }
    }
    if (node.contains("initial_step")) {
        c.train.initial_step = get_double(node["initial_step"], "optimizer.initial_step");
        if (c.train.initial_step <= 0.0) {
            field_error("optimizer.initial_step", "must be positive");
        }
    }
    if (node.contains("init")) {
        const auto init = get_as<std::string>(node["init"], "optimizer.init");
        if (init != "uniform" && init != "zeros") {
            field_error("optimizer.init", "expected uniform or zeros");
        }
        c.explicit_init = true;
        c.train.initial.clear();
        if (init == "zeros") {
            c.train.initial.push_back(0.0); // expanded to the model size later
        }
    }
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << text;
}

template <class Fn>
void write_file(const fs::path &path, Fn &&fn) {
    std::ostringstream os;
    fn(os);
    write_text(path, os.str());
}

fs::path prepare_out(const ExperimentConfig &config, const fs::path &out) {
    fs::path dir = out.empty() ? fs::path(config.output) : out;
    if (dir.empty()) {
        throw InvalidArgument("no output directory: pass --out or set 'output' in the config");
    }
    fs::create_directories(dir);
    return dir;
}

int first_bit_count(const ExperimentConfig &config) { return config.target.num_bits(); }

/// First tau in S_n (lexicographic) that maps every key into K^QE.
embed::Permutation find_permutation(const FourierSpectrum &spec) {
    const int n = spec.num_bits();
    if (n > 8) {
        throw InvalidArgument("'permutation' must be given explicitly for n > 8");
    }
    const int m = embed::qrac_qubits(n);
    for (const auto &tau : embed::all_permutations(n)) {
        bool ok = true;
        for (const auto &[s, c] : spec) {
            if (!synth::in_kqe(embed::permute_mask(tau, s), m)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return tau;
        }
    }
    Mask worst = 0;
    for (const auto &[s, c] : spec) {
        if (weight(s) > weight(worst)) {
            worst = s;
        }
    }
    throw SupportError("no input permutation maps the whole support into K^QE",
                       mask_to_string(worst, n));
}

embed::Permutation permutation_for(const ExperimentConfig &config) {
    if (config.permutation) {
        if (config.permutation->size() != first_bit_count(config)) {
            field_error("permutation", "length must equal n = " +
                                           std::to_string(first_bit_count(config)));
        }
        return *config.permutation;
    }
    return find_permutation(config.target);
}

int ensemble_degree_for(const ExperimentConfig &config) {
    if (config.ensemble_degree) {
        return *config.ensemble_degree;
    }
    return std::max(1, fourier::degree(config.target));
}

ordered_json spectrum_json(const FourierSpectrum &spec) {
    ordered_json out = ordered_json::object();
    for (const auto &[s, c] : spec) {
        out[mask_to_string(s, spec.num_bits())] = c;
    }
    return out;
}

} // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::kPhase: return "phase";
    case Family::kQrac: return "qrac";
    case Family::kQracPermuted: return "qrac-permuted";
    case Family::kEnsemblePhase: return "ensemble-phase";
    case Family::kEnsembleQrac: return "ensemble-qrac";
    }
    return "?";
}

FourierSpectrum preset_spectrum(std::string_view name, const std::vector<double> &coeffs) {
    if (name == "g3") {
        const std::vector<double> a = coeffs.empty() ? std::vector<double>{0.5, -0.1, 0.25} : coeffs;
        if (a.size() != 3) {
            field_error("target.coefficients", "g3 takes exactly 3 coefficients");
        }
        return FourierSpectrum(3, {{parse_mask("100"), a[0]},
                                   {parse_mask("010"), a[1]},
                                   {parse_mask("001"), a[2]}});
    }
    if (name == "g6") {
        const std::vector<double> d =
            coeffs.empty() ? std::vector<double>{-0.2, -0.2, 0.1, 0.1} : coeffs;
        if (d.size() != 4) {
            field_error("target.coefficients", "g6 takes exactly 4 coefficients");
        }
        FourierSpectrum spec(6);
        spec.add(parse_mask("100100"), d[0]);
        spec.add(parse_mask("100010"), d[1]);
        spec.add(parse_mask("010100"), d[2]);
        spec.add(parse_mask("010010"), d[3]);
        return spec;
    }
    field_error("target.preset", "unknown preset '" + std::string(name) + "' (expected g3 or g6)");
}

ExperimentConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidArgument("config must be a JSON object");
    }
    reject_unknown(doc, "",
                   {"schema", "target", "embedding", "permutation", "ensemble_degree", "ansatz",
                    "optimizer", "shots", "suite", "suite_seed", "output"});
    if (!doc.contains("schema")) {
        field_error("schema", "missing (expected 1)");
    }
    if (get_int(doc["schema"], "schema", 0, 1000) != 1) {
        field_error("schema", "unsupported version (expected 1)");
    }
    ExperimentConfig c;
    if (doc.contains("target")) {
        c.target = parse_target(doc["target"], c.target_name);
    }
    if (doc.contains("embedding")) {
        c.family = parse_family(get_as<std::string>(doc["embedding"], "embedding"));
    }
    if (doc.contains("permutation")) {
        if (!doc["permutation"].is_array()) {
            field_error("permutation", "expected an array of 1-based indices");
        }
        std::vector<int> image;
        for (std::size_t i = 0; i < doc["permutation"].size(); ++i) {
            image.push_back(static_cast<int>(get_int(
                doc["permutation"][i], "permutation[" + std::to_string(i) + "]", 1, 24)));
        }
        try {
            c.permutation = embed::Permutation(image);
        } catch (const InvalidArgument &e) {
            field_error("permutation", e.what());
        }
    }
    if (doc.contains("ensemble_degree")) {
        c.ensemble_degree =
            static_cast<int>(get_int(doc["ensemble_degree"], "ensemble_degree", 1, 24));
    }
    if (doc.contains("ansatz")) {
        const json &a = doc["ansatz"];
        if (!a.is_object()) {
            field_error("ansatz", "expected an object");
        }
        reject_unknown(a, "ansatz", {"layers"});
        if (a.contains("layers")) {
            c.layers = static_cast<int>(get_int(a["layers"], "ansatz.layers", 1, 1000));
        }
    }
    if (doc.contains("optimizer")) {
        parse_optimizer(doc["optimizer"], c);
    }
    if (doc.contains("shots")) {
        c.train.shots = static_cast<std::uint64_t>(
            get_int(doc["shots"], "shots", 0, std::numeric_limits<std::int64_t>::max()));
    }
    if (doc.contains("suite")) {
        c.suite = get_as<std::string>(doc["suite"], "suite");
    }
    if (doc.contains("suite_seed")) {
        c.suite_seed = static_cast<std::uint64_t>(get_int(
            doc["suite_seed"], "suite_seed", 0, std::numeric_limits<std::int64_t>::max()));
    }
    if (doc.contains("output")) {
        c.output = get_as<std::string>(doc["output"], "output");
    }
    return c;
}

ExperimentConfig load_config(const fs::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot read config file " + path.string());
    }
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config(os.str());
}

int cmd_fit(const ExperimentConfig &config, const fs::path &out, std::ostream &log) {
    if (config.target_name.empty()) {
        field_error("target", "missing");
    }
    if (config.family == Family::kEnsembleQrac) {
        field_error("embedding", "ensemble-qrac is available for synth only");
    }
    const auto start = std::chrono::steady_clock::now();
    const int n = config.target.num_bits();
    const auto table = fourier::wht_inverse(config.target);
    const auto set = train::TrainingSet::full_cube(table);

    std::vector<train::EnsembleTerm> terms;
    auto make_model = [&](embed::Embedding e, int bits,
                          std::optional<embed::Permutation> tau) -> train::Model {
        const int m = embed::embed_qubits(e, bits);
        const int layers = config.layers.value_or(train::Ansatz::default_layers(m));
        return {e, bits, train::Ansatz(m, layers), qsim::PauliSum::all_z(m), std::move(tau)};
    };
    switch (config.family) {
    case Family::kPhase:
        terms.push_back({std::nullopt, make_model(embed::Embedding::kPhase, n, std::nullopt)});
        break;
    case Family::kQrac:
        terms.push_back({std::nullopt, make_model(embed::Embedding::kQrac, n, std::nullopt)});
        break;
    case Family::kQracPermuted:
        terms.push_back(
            {std::nullopt, make_model(embed::Embedding::kQrac, n, permutation_for(config))});
        break;
    case Family::kEnsemblePhase: {
        const int d = ensemble_degree_for(config);
        const auto e = synth::ensemble_phase(config.target, d);
        std::vector<embed::SubsetSelector> selectors;
        for (const auto &mem : e.members) {
            selectors.push_back(std::get<embed::SubsetSelector>(mem.preprocessor));
        }
        if (selectors.empty()) {
            selectors = {embed::all_subsets(n, d).front()};
        }
        for (auto &w : selectors) {
            terms.push_back({w, make_model(embed::Embedding::kPhase, d, std::nullopt)});
        }
        break;
    }
    case Family::kEnsembleQrac:
        break;
    }

    train::TrainConfig tc = config.train;
    std::size_t num_params = 0;
    for (const auto &t : terms) {
        num_params += t.model.ansatz().num_parameters();
    }
    const bool zeros =
        (config.explicit_init && !tc.initial.empty()) || (!config.explicit_init && config.target.empty());
    tc.initial = zeros ? std::vector<double>(num_params, 0.0) : std::vector<double>{};
    const auto result = train::optimize_ensemble(tc, set, terms);

    // Model table and spectrum.
    std::vector<double> values(table.size());
    for (Mask b = 0; b < table.size(); ++b) {
        values[b] = train::ensemble_model_eval(terms, result.theta, BitVector(n, b));
    }
    FourierSpectrum model_spec(n);
    if (terms.size() == 1 && !terms.front().selector && terms.front().model.num_qubits() <= 10) {
        model_spec = train::extract_trained_spectrum(terms.front().model, result.theta);
    } else if (terms.front().selector && terms.front().model.num_qubits() <= 10) {
        std::size_t offset = 0;
        for (const auto &t : terms) {
            const std::size_t cnt = t.model.ansatz().num_parameters();
            const auto local = train::extract_trained_spectrum(
                t.model, std::span<const double>(result.theta).subspan(offset, cnt));
            for (const auto &[s, c] : local) {
                model_spec.add(embed::embed_bits(*t.selector, BitVector(t.selector->size(), s), n)
                                   .mask(),
                               c);
            }
            offset += cnt;
        }
    } else {
        model_spec = fourier::wht_forward(fourier::FunctionTable(n, values));
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const fs::path dir = prepare_out(config, out);
    write_file(dir / "loss.csv", [&](std::ostream &os) {
        csv::write_row(os, {"iteration", "loss"});
        for (std::size_t i = 0; i < result.loss_trace.size(); ++i) {
            csv::write_row(os, {std::to_string(i + 1), csv::format(result.loss_trace[i])});
        }
    });
    write_file(dir / "values.csv", [&](std::ostream &os) {
        csv::write_row(os, {"mask_binary", "target", "model"});
        for (Mask b = 0; b < table.size(); ++b) {
            csv::write_row(os, {mask_to_string(b, n), csv::format(table[b]), csv::format(values[b])});
        }
    });
    write_file(dir / "spectrum.csv", [&](std::ostream &os) {
        csv::write_row(os, {"mask_binary", "target_coeff", "model_coeff"});
        std::set<Mask> keys;
        for (const auto &[s, c] : config.target) {
            keys.insert(s);
        }
        for (const auto &[s, c] : model_spec) {
            keys.insert(s);
        }
        for (Mask s : keys) {
            csv::write_row(os, {mask_to_string(s, n), csv::format(config.target[s]),
                                csv::format(model_spec[s])});
        }
    });
    ordered_json summary;
    summary["command"] = "fit";
    summary["target"] = config.target_name;
    summary["n"] = n;
    summary["embedding"] = family_name(config.family);
    summary["members"] = terms.size();
    summary["num_qubits"] = terms.front().model.num_qubits();
    summary["layers"] = terms.front().model.ansatz().layers();
    summary["num_parameters"] = num_params;
    summary["optimizer"] = train::optimizer_name(tc.optimizer);
    summary["budget"] = tc.budget;
    summary["seed"] = tc.seed;
    summary["shots"] = tc.shots;
    summary["iterations"] = result.iterations;
    summary["evaluations"] = result.evaluations;
    summary["final_risk"] = result.final_risk;
    summary["wall_time_s"] = wall;
    if (terms.size() == 1 && terms.front().model.permutation()) {
        summary["permutation"] = terms.front().model.permutation()->image();
    }
    summary["theta"] = result.theta;
    summary["target_spectrum"] = spectrum_json(config.target);
    summary["model_spectrum"] = spectrum_json(model_spec);
    write_text(dir / "summary.json", summary.dump(2) + "\n");
    log << "fit " << family_name(config.family) << ": final risk " << csv::format(result.final_risk)
        << " after " << result.iterations << " iterations\n";
    return kExitOk;
}

int cmd_synth(const ExperimentConfig &config, const fs::path &out, std::ostream &log) {
    if (config.target_name.empty()) {
        field_error("target", "missing");
    }
    const int n = config.target.num_bits();
    synth::EnsembleModel model;
    model.n = n;
    switch (config.family) {
    case Family::kPhase:
        model.embedding = embed::Embedding::kPhase;
        model.members.push_back(
            {embed::Permutation::identity(n), synth::synth_phase_obs(config.target)});
        break;
    case Family::kQrac:
        model.embedding = embed::Embedding::kQrac;
        model.members.push_back(
            {embed::Permutation::identity(n), synth::synth_qrac_obs(config.target)});
        break;
    case Family::kQracPermuted: {
        model.embedding = embed::Embedding::kQrac;
        auto po = synth::synth_qrac_permuted(config.target, permutation_for(config));
        model.members.push_back({po.tau, std::move(po.observable)});
        break;
    }
    case Family::kEnsemblePhase:
        model = synth::ensemble_phase(config.target, ensemble_degree_for(config));
        break;
    case Family::kEnsembleQrac:
        model = synth::ensemble_qrac(config.target);
        break;
    }
    const auto table = fourier::wht_inverse(config.target);
    std::vector<double> values(table.size());
    double max_err = 0.0;
    for (Mask b = 0; b < table.size(); ++b) {
        values[b] = synth::ensemble_eval(model, BitVector(n, b));
        max_err = std::max(max_err, std::abs(values[b] - table[b]));
    }
    const fs::path dir = prepare_out(config, out);
    write_file(dir / "observable.json",
               [&](std::ostream &os) { synth::write_ensemble_json(os, model); });
    write_file(dir / "verify.csv", [&](std::ostream &os) {
        csv::write_row(os, {"mask_binary", "target", "model", "abs_error"});
        for (Mask b = 0; b < table.size(); ++b) {
            csv::write_row(os, {mask_to_string(b, n), csv::format(table[b]),
                                csv::format(values[b]),
                                csv::format(std::abs(values[b] - table[b]))});
        }
    });
    ordered_json summary;
    summary["command"] = "synth";
    summary["target"] = config.target_name;
    summary["n"] = n;
    summary["embedding"] = family_name(config.family);
    summary["members"] = model.members.size();
    summary["max_abs_error"] = max_err;
    write_text(dir / "summary.json", summary.dump(2) + "\n");
    log << "synth " << family_name(config.family) << ": " << model.members.size()
        << " member(s), max abs error " << csv::format(max_err) << "\n";
    return max_err < 1e-9 ? kExitOk : kExitNumerical;
}

int cmd_verify(const std::string &suite, std::uint64_t seed,
               const std::optional<fs::path> &out, std::ostream &log) {
    if (suite.empty()) {
        throw InvalidArgument("verify needs a suite (--suite or config field 'suite')");
    }
    const auto report = verify::run_suite(suite, seed);
    if (out) {
        fs::create_directories(*out);
        write_file(*out / ("verify_" + suite + ".json"),
                   [&](std::ostream &os) { verify::write_json(os, report); });
    } else {
        verify::write_json(log, report);
    }
    for (const auto &c : report.checks) {
        log << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
        if (!c.pass && !c.detail.empty()) {
            log << " [" << c.detail << "]";
        }
        log << "\n";
    }
    log << "suite " << suite << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? kExitOk : kExitNumerical;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Variational linear quantum models on the Boolean cube", "boolcube-vqml"};
    app.require_subcommand(1, 1);
    std::string config_path;
    std::string out_dir;
    std::string suite;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto *fit = app.add_subcommand("fit", "train a variational model on a target function");
    auto *syn = app.add_subcommand("synth", "construct an exact observable or ensemble");
    auto *ver = app.add_subcommand("verify", "run a property suite");
    for (auto *sub : {fit, syn}) {
        sub->add_option("--config", config_path, "JSON experiment config")->required();
        sub->add_option("--out", out_dir, "output directory");
    }
    ver->add_option("--config", config_path, "JSON experiment config");
    ver->add_option("--out", out_dir, "directory for the JSON report");
    ver->add_option("--suite", suite, "suite name (overrides the config)");
    ver->add_option("--seed", seed, "suite seed (overrides the config)")
        ->each([&](const std::string &) { seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (ver->parsed()) {
            ExperimentConfig c;
            if (!config_path.empty()) {
                c = load_config(config_path);
            }
            const std::string name = suite.empty() ? c.suite : suite;
            std::optional<fs::path> dir;
            if (!out_dir.empty()) {
                dir = out_dir;
            } else if (!c.output.empty()) {
                dir = c.output;
            }
            return cmd_verify(name, seed_given ? seed : c.suite_seed, dir, out);
        }
        const auto c = load_config(config_path);
        return fit->parsed() ? cmd_fit(c, out_dir, out) : cmd_synth(c, out_dir, out);
    } catch (const SupportError &e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const InvalidArgument &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace boolcube::cli
