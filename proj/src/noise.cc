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

#include "qecnn/noise.h"

#include <algorithm>
#include <stdexcept>

namespace qecnn {

std::string_view model_name(NoiseModelTag tag) {
    switch (tag) {
        case NoiseModelTag::ChannelCapacity:
            return "cc";
        case NoiseModelTag::Depolarizing:
            return "depol";
        case NoiseModelTag::ChannelCapacityMeas:
            return "cc-meas";
        case NoiseModelTag::DepolarizingMeas:
            return "depol-meas";
        case NoiseModelTag::Circuit:
            return "circuit";
    }
    throw std::logic_error("unknown noise model tag");
}

NoiseModelTag parse_model(std::string_view name) {
    for (auto tag : {NoiseModelTag::ChannelCapacity, NoiseModelTag::Depolarizing, NoiseModelTag::ChannelCapacityMeas,
                     NoiseModelTag::DepolarizingMeas, NoiseModelTag::Circuit}) {
        if (model_name(tag) == name) {
            return tag;
        }
    }
    throw std::invalid_argument(
        "unknown noise model '" + std::string(name) + "' (expected cc, depol, cc-meas, depol-meas or circuit)");
}

NoiseModel::NoiseModel(NoiseModelTag tag, double p) : tag(tag), p(p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noise probability must lie in [0, 1], got " + std::to_string(p));
    }
}

uint8_t sample_single_qubit_pauli(double p, Rng &rng) {
    double u = rng.uniform();
    if (u >= p) {
        return 0;
    }
    // u/p is uniform on [0, 1) given u < p.
    return static_cast<uint8_t>(1 + std::min<uint64_t>(2, static_cast<uint64_t>(3 * (u / p))));
}

uint8_t sample_two_qubit_pauli(double p, Rng &rng) {
    double u = rng.uniform();
    if (u >= p) {
        return 0;
    }
    return static_cast<uint8_t>(1 + std::min<uint64_t>(14, static_cast<uint64_t>(15 * (u / p))));
}

namespace {

void apply_code(PauliString &frame, size_t q, uint8_t code) {
    if (code & 1) {
        frame.xs.flip(q);
    }
    if (code & 2) {
        frame.zs.flip(q);
    }
}

void add_data_errors(PauliString &error, bool x_only, double p, Rng &rng) {
    for (size_t q = 0; q < error.num_qubits(); q++) {
        if (x_only) {
            if (rng.bernoulli(p)) {
                error.xs.flip(q);
            }
        } else {
            apply_code(error, q, sample_single_qubit_pauli(p, rng));
        }
    }
}

}  // namespace

PauliString sample_qec_error(const CodeLayout &layout, const NoiseModel &model, Rng &rng) {
    if (!is_qec(model.tag)) {
        throw std::invalid_argument(
            "sample_qec_error needs a QEC model, got '" + std::string(model_name(model.tag)) + "'");
    }
    PauliString e(layout.n_data);
    add_data_errors(e, is_x_only(model.tag), model.p, rng);
    return e;
}

Experiment sample_ft_phenomenological(
    const CodeLayout &layout, NoiseModelTag tag, double data_p, double meas_p, Rng &rng) {
    if (tag != NoiseModelTag::ChannelCapacityMeas && tag != NoiseModelTag::DepolarizingMeas) {
        throw std::invalid_argument(
            "phenomenological sampling needs cc-meas or depol-meas, got '" + std::string(model_name(tag)) + "'");
    }
    bool x_only = is_x_only(tag);
    Experiment ex;
    ex.record.distance = layout.distance;
    ex.cumulative_error = PauliString(layout.n_data);
    for (int t = 0; t < layout.distance; t++) {
        add_data_errors(ex.cumulative_error, x_only, data_p, rng);
        Syndrome s = syndrome_of(layout, ex.cumulative_error);
        for (size_t k = 0; k < s.z_checks.size(); k++) {
            if (rng.bernoulli(meas_p)) {
                s.z_checks.flip(k);
            }
        }
        if (!x_only) {
            for (size_t k = 0; k < s.x_checks.size(); k++) {
                if (rng.bernoulli(meas_p)) {
                    s.x_checks.flip(k);
                }
            }
        }
        ex.record.rounds.push_back(std::move(s));
    }
    ex.record.rounds.push_back(syndrome_of(layout, ex.cumulative_error));
    return ex;
}

Experiment sample_ft_phenomenological(const CodeLayout &layout, const NoiseModel &model, Rng &rng) {
    return sample_ft_phenomenological(layout, model.tag, model.p, model.p, rng);
}

CircuitSchedule build_circuit_schedule(const CodeLayout &layout) {
    static constexpr Corner z_order[4] = {kNorthWest, kSouthWest, kNorthEast, kSouthEast};
    static constexpr Corner x_order[4] = {kNorthWest, kNorthEast, kSouthWest, kSouthEast};

    CircuitSchedule schedule;
    size_t m = layout.checks_per_type();
    schedule.n_data = layout.n_data;
    schedule.n_qubits = layout.n_data + 2 * m;
    for (CheckType type : {CheckType::Z, CheckType::X}) {
        const auto &stabs = layout.stabilisers(type);
        const Corner *order = type == CheckType::Z ? z_order : x_order;
        for (size_t k = 0; k < stabs.size(); k++) {
            AncillaSchedule a;
            a.type = type;
            a.check = k;
            a.ancilla = layout.n_data + (type == CheckType::Z ? 0 : m) + k;
            for (int slot = 0; slot < 4; slot++) {
                int q = stabs[k].corners[order[slot]];
                if (q == kNoQubit) {
                    continue;
                }
                size_t data = static_cast<size_t>(q);
                if (type == CheckType::Z) {
                    a.cnots.push_back({data, a.ancilla, slot + 1});
                } else {
                    a.cnots.push_back({a.ancilla, data, slot + 1});
                }
            }
            a.prep_step = a.cnots.front().step - 1;
            a.meas_step = a.cnots.back().step + 1;
            schedule.ancillas.push_back(std::move(a));
        }
    }
    return schedule;
}

void validate_schedule(const CodeLayout &layout, const CircuitSchedule &schedule) {
    if (schedule.n_data != layout.n_data || schedule.n_qubits != layout.n_data + 2 * layout.checks_per_type() ||
        schedule.ancillas.size() != 2 * layout.checks_per_type()) {
        throw std::invalid_argument("circuit schedule does not match the code layout");
    }
    std::vector<std::vector<int>> busy(schedule.num_steps, std::vector<int>(schedule.n_qubits, 0));
    auto use = [&](int step, size_t q) {
        if (step < 0 || step >= schedule.num_steps || q >= schedule.n_qubits) {
            throw std::invalid_argument("circuit schedule refers to an invalid step or qubit");
        }
        if (busy[step][q]++) {
            throw std::invalid_argument(
                "qubit " + std::to_string(q) + " is used twice in step " + std::to_string(step));
        }
    };
    for (const auto &a : schedule.ancillas) {
        const Stabiliser &s = layout.stabilisers(a.type).at(a.check);
        if (a.cnots.size() != s.weight()) {
            throw std::invalid_argument("check has a CNOT count different from its weight");
        }
        std::vector<size_t> touched;
        use(a.prep_step, a.ancilla);
        use(a.meas_step, a.ancilla);
        for (const auto &g : a.cnots) {
            size_t data = a.type == CheckType::Z ? g.control : g.target;
            size_t anc = a.type == CheckType::Z ? g.target : g.control;
            if (anc != a.ancilla || g.step <= a.prep_step || g.step >= a.meas_step) {
                throw std::invalid_argument("CNOT outside its ancilla's active window");
            }
            use(g.step, g.control);
            use(g.step, g.target);
            touched.push_back(data);
        }
        std::sort(touched.begin(), touched.end());
        if (touched != s.support) {
            throw std::invalid_argument("check CNOTs do not cover its support");
        }
    }
}

Syndrome simulate_circuit_round(
    const CodeLayout &layout, const CircuitSchedule &schedule, double p, PauliString &frame, Rng &rng) {
    if (frame.num_qubits() != schedule.n_qubits || schedule.n_data != layout.n_data) {
        throw std::invalid_argument(
            "circuit frame has " + std::to_string(frame.num_qubits()) + " qubits, schedule expects " +
            std::to_string(schedule.n_qubits));
    }
    Syndrome out(layout.checks_per_type());
    auto hadamard = [&](size_t q) {
        bool x = frame.xs.get(q);
        frame.xs.set(q, frame.zs.get(q));
        frame.zs.set(q, x);
        apply_code(frame, q, sample_single_qubit_pauli(p, rng));
    };

    for (int step = 0; step < schedule.num_steps; step++) {
        for (const auto &a : schedule.ancillas) {
            if (a.prep_step != step) {
                continue;
            }
            // Prepare |0>; a failed preparation yields |1>.
            frame.xs.set(a.ancilla, rng.bernoulli(p));
            frame.zs.set(a.ancilla, false);
            if (a.type == CheckType::X) {
                hadamard(a.ancilla);
            }
        }
        for (const auto &a : schedule.ancillas) {
            for (const auto &g : a.cnots) {
                if (g.step != step) {
                    continue;
                }
                if (frame.xs.get(g.control)) {
                    frame.xs.flip(g.target);
                }
                if (frame.zs.get(g.target)) {
                    frame.zs.flip(g.control);
                }
                uint8_t code = sample_two_qubit_pauli(p, rng);
                apply_code(frame, g.control, code & 3);
                apply_code(frame, g.target, code >> 2);
            }
        }
        for (const auto &a : schedule.ancillas) {
            if (a.meas_step != step) {
                continue;
            }
            if (a.type == CheckType::X) {
                hadamard(a.ancilla);
            }
            bool outcome = frame.xs.get(a.ancilla) ^ rng.bernoulli(p);
            out.bits(a.type).set(a.check, outcome);
            frame.xs.set(a.ancilla, false);
            frame.zs.set(a.ancilla, false);
        }
    }
    return out;
}

Experiment run_ft_circuit_experiment(
    const CodeLayout &layout,
    const CircuitSchedule &schedule,
    double p,
    Rng &rng,
    const std::optional<PauliString> &initial_error) {
    PauliString frame(schedule.n_qubits);
    if (initial_error) {
        if (initial_error->num_qubits() != layout.n_data) {
            throw std::invalid_argument("initial error must act on the data qubits only");
        }
        for (size_t q = 0; q < layout.n_data; q++) {
            frame.xs.set(q, initial_error->xs.get(q));
            frame.zs.set(q, initial_error->zs.get(q));
        }
    }
    Experiment ex;
    ex.record.distance = layout.distance;
    for (int t = 0; t < layout.distance; t++) {
        ex.record.rounds.push_back(simulate_circuit_round(layout, schedule, p, frame, rng));
    }
    ex.cumulative_error = PauliString(layout.n_data);
    for (size_t q = 0; q < layout.n_data; q++) {
        ex.cumulative_error.xs.set(q, frame.xs.get(q));
        ex.cumulative_error.zs.set(q, frame.zs.get(q));
    }
    ex.record.rounds.push_back(syndrome_of(layout, ex.cumulative_error));
    return ex;
}

}  // namespace qecnn
