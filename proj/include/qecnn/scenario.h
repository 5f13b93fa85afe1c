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

#ifndef QECNN_SCENARIO_H
#define QECNN_SCENARIO_H

#include <array>
#include <string>
#include <vector>

#include "qecnn/noise.h"

namespace qecnn {

/// A noise model at a code distance: fixes the decoder input and output shape.
///
/// Input layout (bit order of the flattened record): rounds in time order;
/// within a round, Z-check bits then X-check bits. Channel-capacity models
/// carry only Z-check bits. Two-output scenarios (channel-capacity QEC)
/// predict {no logical X flip, logical X flip}; the rest predict the class
/// order I, X, Z, Y.
struct Scenario {
    NoiseModelTag model = NoiseModelTag::Depolarizing;
    int distance = 3;

    size_t rounds() const;
    size_t input_size() const;
    size_t output_size() const;
    /// Hidden layer widths used in the reference experiments; other
    /// combinations fall back to 16x the input width.
    size_t default_hidden_size() const;
    std::string name() const;

    bool operator==(const Scenario &other) const = default;
};

/// Throws std::invalid_argument if record does not fit the scenario.
BitVector flatten(const Scenario &scenario, const SyndromeRecord &record);

/// Network output index trained for a true class.
size_t target_index(const Scenario &scenario, LogicalClass c);
/// Decoded class for a winning network output index.
LogicalClass class_of_output(size_t output_size, size_t index);

/// Per-class weight, indexed by class_index (I, X, Z, Y).
using ClassHistogram = std::array<double, 4>;

/// Target distribution over the scenario's outputs; all-zero histograms give
/// all-zero targets.
std::vector<double> target_distribution(const Scenario &scenario, const ClassHistogram &histogram);

/// Highest-weight class, lowest class index on ties; I for an empty histogram.
LogicalClass modal_class(const ClassHistogram &histogram);

}  // namespace qecnn

#endif
