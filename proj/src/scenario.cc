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

#include "qecnn/scenario.h"

#include <stdexcept>

namespace qecnn {

size_t Scenario::rounds() const {
    return is_qec(model) ? 1 : static_cast<size_t>(distance) + 1;
}

size_t Scenario::input_size() const {
    size_t per_type = (static_cast<size_t>(distance) * distance - 1) / 2;
    size_t per_round = is_x_only(model) ? per_type : 2 * per_type;
    return per_round * rounds();
}

size_t Scenario::output_size() const {
    return model == NoiseModelTag::ChannelCapacity ? 2 : 4;
}

size_t Scenario::default_hidden_size() const {
    switch (model) {
        case NoiseModelTag::ChannelCapacity:
            if (distance == 3) return 10;
            if (distance == 5) return 90;
            if (distance == 7) return 512;
            break;
        case NoiseModelTag::Depolarizing:
            if (distance == 3) return 128;
            if (distance == 5) return 660;
            if (distance == 7) return 256;
            break;
        case NoiseModelTag::ChannelCapacityMeas:
        case NoiseModelTag::DepolarizingMeas:
            if (distance == 3) return 768;
            break;
        case NoiseModelTag::Circuit:
            if (distance == 3) return 704;
            break;
    }
    return 16 * input_size();
}

std::string Scenario::name() const {
    return std::string(model_name(model)) + "-d" + std::to_string(distance);
}

BitVector flatten(const Scenario &scenario, const SyndromeRecord &record) {
    if (record.distance != scenario.distance || record.rounds.size() != scenario.rounds()) {
        throw std::invalid_argument(
            "syndrome record (distance " + std::to_string(record.distance) + ", " +
            std::to_string(record.rounds.size()) + " rounds) does not fit scenario " + scenario.name());
    }
    BitVector out;
    bool x_only = is_x_only(scenario.model);
    for (const auto &round : record.rounds) {
        out.append(round.z_checks);
        if (!x_only) {
            out.append(round.x_checks);
        }
    }
    return out;
}

size_t target_index(const Scenario &scenario, LogicalClass c) {
    if (scenario.output_size() == 2) {
        return x_flip(c) ? 1 : 0;
    }
    return class_index(c);
}

LogicalClass class_of_output(size_t output_size, size_t index) {
    if (output_size == 2) {
        return index ? LogicalClass::X : LogicalClass::I;
    }
    if (index >= 4) {
        throw std::invalid_argument("network output index out of range");
    }
    return static_cast<LogicalClass>(index);
}

std::vector<double> target_distribution(const Scenario &scenario, const ClassHistogram &histogram) {
    std::vector<double> out(scenario.output_size(), 0.0);
    double total = 0;
    for (size_t c = 0; c < 4; c++) {
        out[target_index(scenario, static_cast<LogicalClass>(c))] += histogram[c];
        total += histogram[c];
    }
    if (total > 0) {
        for (double &v : out) {
            v /= total;
        }
    }
    return out;
}

LogicalClass modal_class(const ClassHistogram &histogram) {
    size_t best = 0;
    for (size_t c = 1; c < 4; c++) {
        if (histogram[c] > histogram[best]) {
            best = c;
        }
    }
    return static_cast<LogicalClass>(best);
}

}  // namespace qecnn
