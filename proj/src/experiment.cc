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

#include "qecnn/experiment.h"

#include <stdexcept>

namespace qecnn {

ExperimentSampler::ExperimentSampler(int distance)
    : layout_(build_layout(distance)), table_(build_pure_error_table(layout_)), schedule_(build_circuit_schedule(layout_)) {
}

Experiment ExperimentSampler::sample(const NoiseModel &model, Rng &rng) const {
    switch (model.tag) {
        case NoiseModelTag::ChannelCapacity:
        case NoiseModelTag::Depolarizing: {
            Experiment ex;
            ex.cumulative_error = sample_qec_error(layout_, model, rng);
            ex.record.distance = layout_.distance;
            ex.record.rounds.push_back(syndrome_of(layout_, ex.cumulative_error));
            return ex;
        }
        case NoiseModelTag::ChannelCapacityMeas:
        case NoiseModelTag::DepolarizingMeas:
            return sample_ft_phenomenological(layout_, model, rng);
        case NoiseModelTag::Circuit:
            return run_ft_circuit_experiment(layout_, schedule_, model.p, rng);
    }
    throw std::logic_error("unknown noise model");
}

NeuralDecoder::NeuralDecoder(Scenario scenario, Network net) : scenario_(scenario), net_(std::move(net)) {
    net_.validate();
    if (net_.input_size != scenario_.input_size() || net_.output_size != scenario_.output_size()) {
        throw std::invalid_argument(
            "network shape " + std::to_string(net_.input_size) + "x" + std::to_string(net_.output_size) +
            " does not fit scenario " + scenario_.name());
    }
}

}  // namespace qecnn
