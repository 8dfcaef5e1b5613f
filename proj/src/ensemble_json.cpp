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
#include "boolcube/synth.hpp"

#include <json.hpp>

#include <ostream>

namespace boolcube::synth {
namespace {

using nlohmann::ordered_json;

ordered_json to_json(const SubsetSelector &w) {
    return {{"kind", "subset"}, {"indices", w.indices()}};
}

ordered_json to_json(const Permutation &tau) {
    return {{"kind", "permutation"}, {"image", tau.image()}};
}

ordered_json to_json(const PauliSum &p) {
    ordered_json terms = ordered_json::array();
    for (const auto &[word, w] : p.terms()) {
        terms.push_back({{"word", word}, {"weight", w}});
    }
    return terms;
}

ordered_json to_json(const DenseObservable &o) {
    const auto &mat = o.matrix();
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (std::size_t r = 0; r < mat.dim(); ++r) {
        ordered_json rr = ordered_json::array();
        ordered_json ir = ordered_json::array();
        for (const auto &z : mat.row(r)) {
            rr.push_back(z.real());
            ir.push_back(z.imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return {{"dim", mat.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

} // namespace

void write_ensemble_json(std::ostream &out, const EnsembleModel &e) {
    ordered_json doc;
    doc["n"] = e.n;
    doc["embedding"] = embed::embedding_name(e.embedding);
    ordered_json members = ordered_json::array();
    for (const auto &m : e.members) {
        ordered_json entry;
        entry["preprocessor"] = std::visit([](const auto &p) { return to_json(p); },
                                           m.preprocessor);
        if (const auto *p = std::get_if<PauliSum>(&m.observable)) {
            entry["num_qubits"] = p->num_qubits();
            entry["pauli_terms"] = to_json(*p);
        } else {
            const auto &d = std::get<DenseObservable>(m.observable);
            entry["num_qubits"] = d.num_qubits();
            entry["matrix"] = to_json(d);
        }
        members.push_back(std::move(entry));
    }
    doc["members"] = std::move(members);
    out << doc.dump(2) << '\n';
}

} // namespace boolcube::synth
