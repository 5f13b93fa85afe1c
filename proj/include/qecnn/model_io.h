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

#ifndef QECNN_MODEL_IO_H
#define QECNN_MODEL_IO_H

#include <filesystem>
#include <string>

#include "qecnn/scenario.h"
#include "qecnn/train.h"

namespace qecnn {

/// A trained network together with what produced it.
struct ModelFile {
    Scenario scenario;
    Network net;
    TrainConfig config;
    size_t epochs_run = 0;
    double final_loss = 0;
    double dataset_p = 0;
    uint64_t dataset_samples = 0;
};

/// Serialises to JSON:
///
///     {"format": "qecnn-model", "version": 1,
///      "scenario": {"name", "model", "distance"},
///      "layers": {"input", "hidden", "output"},
///      "class_order": ["I","X","Z","Y"] | ["no-flip","flip"],
///      "activation": "1/(1+exp(x))",
///      "training": {"learning_rate", "batch_size", "max_epochs", "plateau_window",
///                   "plateau_tolerance", "init_scale", "seed", "objective",
///                   "weighting", "full_batch", "epochs_run", "final_loss",
///                   "dataset_p", "dataset_samples"},
///      "w_hidden": [...], "b_hidden": [...], "w_out": [...], "b_out": [...]}
///
/// Weight matrices are flattened row-major; doubles round-trip exactly.
std::string model_to_json(const ModelFile &model);
/// Throws std::runtime_error on malformed content or shape mismatch.
ModelFile model_from_json(const std::string &text);

void save_model(const std::filesystem::path &path, const ModelFile &model);
ModelFile load_model(const std::filesystem::path &path);

}  // namespace qecnn

#endif
