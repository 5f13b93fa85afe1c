// Copyright 2026 The qecnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qecnn/benchmark.h"
#include "qecnn/latency.h"
#include "qecnn/model_io.h"
#include "qecnn/pure_error.h"

namespace py = pybind11;
using namespace qecnn;

namespace {

std::vector<int> bits_to_list(const BitVector &bits) {
    std::vector<int> out(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        out[k] = bits.get(k);
    }
    return out;
}

BitVector list_to_bits(const std::vector<int> &values) {
    BitVector bits(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        if (values[k] != 0 && values[k] != 1) {
            throw std::invalid_argument("bits must be 0 or 1");
        }
        bits.set(k, values[k]);
    }
    return bits;
}

/// A code layout bundled with its pure-error table and matcher.
class PyCode {
   public:
    explicit PyCode(int d) : sampler_(d), mwpm_(sampler_.layout()) {
    }

    const CodeLayout &layout() const {
        return sampler_.layout();
    }

    std::vector<std::vector<size_t>> supports(CheckType type) const {
        std::vector<std::vector<size_t>> out;
        for (const auto &s : layout().stabilisers(type)) {
            out.push_back(s.support);
        }
        return out;
    }

    Syndrome to_syndrome(const std::vector<int> &z, const std::vector<int> &x) const {
        size_t n = layout().checks_per_type();
        if (z.size() != n || x.size() != n) {
            throw std::invalid_argument("expected " + std::to_string(n) + " bits per check type");
        }
        Syndrome s;
        s.z_checks = list_to_bits(z);
        s.x_checks = list_to_bits(x);
        return s;
    }

    PauliString to_pauli(const std::string &text) const {
        PauliString e = PauliString::from_str(text);
        if (e.num_qubits() != layout().n_data) {
            throw std::invalid_argument("expected a Pauli string over " + std::to_string(layout().n_data) + " qubits");
        }
        return e;
    }

    std::pair<std::vector<int>, std::vector<int>> syndrome(const std::string &pauli) const {
        Syndrome s = syndrome_of(layout(), to_pauli(pauli));
        return {bits_to_list(s.z_checks), bits_to_list(s.x_checks)};
    }

    std::string simple_decode_str(const std::vector<int> &z, const std::vector<int> &x) const {
        return simple_decode(sampler_.table(), to_syndrome(z, x)).str();
    }

    char label(const std::string &pauli) const {
        return class_char(label_of_error(layout(), sampler_.table(), to_pauli(pauli)));
    }

    char mwpm(const std::vector<int> &z, const std::vector<int> &x) const {
        return class_char(mwpm_.decode(SyndromeRecord{layout().distance, {to_syndrome(z, x)}}).logical);
    }

    py::dict sample(const std::string &model, double p, uint64_t seed) const {
        NoiseModel noise(parse_model(model), p);
        Rng rng(seed);
        Experiment ex = sampler_.sample(noise, rng);
        py::dict out;
        out["input"] = bits_to_list(flatten(Scenario{noise.tag, layout().distance}, ex.record));
        out["error"] = ex.cumulative_error.str();
        out["label"] = std::string(1, class_char(sampler_.label(ex)));
        return out;
    }

    py::dict evaluate(const std::string &decoder, const std::string &model, double p, uint64_t trials, uint64_t seed) const {
        std::unique_ptr<Decoder> dec;
        if (decoder == "mwpm") {
            dec = std::make_unique<MwpmClassDecoder>(layout());
        } else if (decoder == "simple-only") {
            dec = std::make_unique<SimpleOnlyDecoder>();
        } else {
            throw std::invalid_argument("evaluate supports 'mwpm' and 'simple-only', got '" + decoder + "'");
        }
        BenchmarkPoint pt = evaluate_decoder(*dec, sampler_, NoiseModel(parse_model(model), p), trials, seed);
        py::dict out;
        out["failures"] = pt.failures;
        out["trials"] = pt.trials;
        out["rate"] = pt.rate;
        out["ci"] = py::make_tuple(pt.ci_low, pt.ci_high);
        return out;
    }

   private:
    ExperimentSampler sampler_;
    MwpmDecoder mwpm_;
};

class PyModel {
   public:
    explicit PyModel(const std::string &path) : file_(load_model(path)) {
    }
    std::string scenario() const {
        return file_.scenario.name();
    }
    std::vector<double> forward(const std::vector<int> &input) const {
        return qecnn::forward(file_.net, check(input));
    }
    char classify(const std::vector<int> &input) const {
        return class_char(qecnn::classify(file_.net, check(input)));
    }
    const Network &net() const {
        return file_.net;
    }

   private:
    BitVector check(const std::vector<int> &input) const {
        if (input.size() != file_.net.input_size) {
            throw std::invalid_argument("expected " + std::to_string(file_.net.input_size) + " input bits");
        }
        return list_to_bits(input);
    }
    ModelFile file_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Surface-code decoding primitives";

    py::class_<PyCode>(m, "Code")
        .def(py::init<int>(), py::arg("distance"))
        .def_property_readonly("distance", [](const PyCode &c) { return c.layout().distance; })
        .def_property_readonly("n_data", [](const PyCode &c) { return c.layout().n_data; })
        .def_property_readonly("z_supports", [](const PyCode &c) { return c.supports(CheckType::Z); })
        .def_property_readonly("x_supports", [](const PyCode &c) { return c.supports(CheckType::X); })
        .def_property_readonly("logical_x", [](const PyCode &c) { return c.layout().logical_x.str(); })
        .def_property_readonly("logical_z", [](const PyCode &c) { return c.layout().logical_z.str(); })
        .def("diagram", [](const PyCode &c) { return c.layout().diagram(); })
        .def("syndrome", &PyCode::syndrome, py::arg("pauli"), "(z bits, x bits) of a Pauli string such as 'XIIZ...'")
        .def("simple_decode", &PyCode::simple_decode_str, py::arg("z"), py::arg("x"))
        .def("label", &PyCode::label, py::arg("pauli"), "Training label (I, X, Z or Y) of a data error")
        .def("mwpm", &PyCode::mwpm, py::arg("z"), py::arg("x"), "MWPM class for one perfect syndrome round")
        .def("sample", &PyCode::sample, py::arg("model"), py::arg("p"), py::arg("seed") = 1)
        .def("evaluate", &PyCode::evaluate, py::arg("decoder"), py::arg("model"), py::arg("p"),
             py::arg("trials") = 10000, py::arg("seed") = 1);

    py::class_<PyModel>(m, "Model")
        .def(py::init<const std::string &>(), py::arg("path"))
        .def_property_readonly("scenario", &PyModel::scenario)
        .def_property_readonly("input_size", [](const PyModel &p) { return p.net().input_size; })
        .def_property_readonly("hidden_size", [](const PyModel &p) { return p.net().hidden_size; })
        .def_property_readonly("output_size", [](const PyModel &p) { return p.net().output_size; })
        .def("forward", &PyModel::forward, py::arg("input"))
        .def("classify", &PyModel::classify, py::arg("input"));

    m.def("input_size", [](const std::string &model, int d) { return Scenario{parse_model(model), d}.input_size(); },
          py::arg("model"), py::arg("distance"));
    m.def("default_hidden_size",
          [](const std::string &model, int d) { return Scenario{parse_model(model), d}.default_hidden_size(); },
          py::arg("model"), py::arg("distance"));
    m.def("latency_steps", [](size_t inputs, size_t hidden) { return latency_steps({inputs, hidden}); },
          py::arg("inputs"), py::arg("hidden"));
    m.def("parity_depth", &parity_depth, py::arg("bits"));
    m.def("wilson_interval",
          [](uint64_t failures, uint64_t trials) {
              Interval ci = wilson_interval(failures, trials);
              return py::make_tuple(ci.low, ci.high);
          },
          py::arg("failures"), py::arg("trials"));
}
