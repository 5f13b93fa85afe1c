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

#ifndef QECNN_DATASET_H
#define QECNN_DATASET_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>

#include "qecnn/scenario.h"

namespace qecnn {

inline constexpr uint64_t kMaxDatasetSamples = 1'000'000;

/// Training data aggregated per distinct decoder input.
///
/// Sampled datasets hold integer counts. Exhaustive datasets hold the exact
/// probability of each (input, class) pair scaled by `total_samples`, so in
/// both cases the histogram weights sum to `total_samples`.
struct Dataset {
    Scenario scenario;
    double sampling_p = 0;
    uint64_t total_samples = 0;
    uint64_t seed = 0;
    bool exhaustive = false;
    std::map<BitVector, ClassHistogram> rows;

    void add(const BitVector &input, LogicalClass label, double weight = 1.0);
    double histogram_total() const;
    size_t unique_inputs() const {
        return rows.size();
    }
};

/// Line format:
///
///     # qecnn-dataset 1
///     # scenario=<model>-d<d> model=<model> distance=<d> p=<p> samples=<n> seed=<s> mode=<sampled|exhaustive> inputs=<bits>
///     <hex input key> <weight I> <weight X> <weight Z> <weight Y>
///
/// Keys use BitVector::to_hex; rows are sorted by key.
void write_dataset(std::ostream &out, const Dataset &dataset);
Dataset read_dataset(std::istream &in);
void save_dataset(const std::filesystem::path &path, const Dataset &dataset);
Dataset load_dataset(const std::filesystem::path &path);

}  // namespace qecnn

#endif
