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

#ifndef QECNN_TRAIN_H
#define QECNN_TRAIN_H

#include <span>
#include <string_view>
#include <vector>

#include "qecnn/dataset.h"
#include "qecnn/network.h"

namespace qecnn {

/// Outputs are clamped to at least this before taking a logarithm.
inline constexpr double kLogFloor = 1e-12;

/// kCrossEntropy is -p.ln(y) alone. kBinaryCrossEntropy adds the
/// complementary -(1-p).ln(1-y) terms. With independent sigmoid outputs the
/// first is minimised by driving every output to 1, so training defaults to
/// the second; both share the same argmax optimum y = p.
enum class Objective { kCrossEntropy, kBinaryCrossEntropy };
/// kUniform weighs every distinct input equally; kCount weighs each by how
/// often it was sampled.
enum class RowWeighting { kUniform, kCount };

std::string_view objective_name(Objective objective);
Objective parse_objective(std::string_view name);
std::string_view weighting_name(RowWeighting weighting);
RowWeighting parse_weighting(std::string_view name);

struct TrainingRow {
    std::vector<double> input;
    std::vector<double> target;
    double weight = 1.0;
};

struct TrainConfig {
    double learning_rate = 0.05;
    size_t batch_size = 64;
    size_t max_epochs = 1000;
    /// Stop once the best loss so far improved by less than
    /// plateau_tolerance (relative) over the last plateau_window epochs.
    size_t plateau_window = 5;
    double plateau_tolerance = 1e-4;
    /// Multiplies the default init range 1/sqrt(fan_in).
    double init_scale = 1.0;
    uint64_t seed = 1;
    Objective objective = Objective::kBinaryCrossEntropy;
    RowWeighting weighting = RowWeighting::kUniform;
    /// Use the whole training set as one batch, in order (plain gradient descent).
    bool full_batch = false;

    void validate() const;
};

struct TrainResult {
    /// The parameters with the lowest training loss seen during the run.
    Network net;
    /// Entry 0 is the loss before training, entry e the loss after epoch e.
    std::vector<double> loss_trace;
    size_t epochs = 0;
    bool plateaued = false;
};

/// Mean over rows of -p.ln(max(y, kLogFloor)).
double cross_entropy(
    std::span<const std::vector<double>> targets, std::span<const std::vector<double>> inputs, const Network &net);

/// Row-weighted mean loss.
double objective_loss(const Network &net, std::span<const TrainingRow> rows, Objective objective);

/// Row-weighted mean loss; `grad` is resized to the network shape and filled
/// with the exact gradient of that loss.
double loss_and_gradient(
    const Network &net, std::span<const TrainingRow> rows, Objective objective, Network &grad);

/// Minibatch SGD from `initial`. Throws std::runtime_error if the loss
/// becomes non-finite.
TrainResult train_sgd(Network initial, std::span<const TrainingRow> rows, const TrainConfig &config);

/// One row per distinct input, target = empirical class distribution.
std::vector<TrainingRow> training_rows(const Dataset &dataset, RowWeighting weighting);

/// Fresh network for the scenario, initialised from config.seed.
Network initial_network(const Scenario &scenario, size_t hidden_size, const TrainConfig &config);

}  // namespace qecnn

#endif
