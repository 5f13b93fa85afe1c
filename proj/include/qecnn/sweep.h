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

#ifndef QECNN_SWEEP_H
#define QECNN_SWEEP_H

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qecnn/benchmark.h"

namespace qecnn {

enum class DecoderKind { kNeural, kMwpm, kPlut, kSimpleOnly };

/// "nn", "mwpm", "plut", "simple-only".
std::string_view decoder_kind_name(DecoderKind kind);
DecoderKind parse_decoder_kind(std::string_view name);

struct RunConfig {
    Scenario scenario;
    std::vector<DecoderKind> decoders;
    std::vector<double> sweep;
    uint64_t trials = 100'000;
    uint64_t seed = 1;
    std::filesystem::path out;
    std::optional<std::filesystem::path> model_path;    // needed by nn
    std::optional<std::filesystem::path> dataset_path;  // needed by plut
    size_t threads = 0;

    /// Throws std::invalid_argument for sweep values outside (0, 1), zero
    /// trials or no decoders.
    void validate() const;
};

/// Loads whatever each requested decoder needs. Throws std::runtime_error for
/// a missing file or a model/dataset whose scenario differs from the config.
std::vector<std::unique_ptr<Decoder>> make_decoders(const RunConfig &config, const ExperimentSampler &sampler);

/// Results file:
///
///     # qecnn-results 1
///     # scenario=<name> model=<model> distance=<d> trials=<n> seed=<s> decoders=<a,b,...>
///     # generated=<UTC timestamp>
///     decoder,p,trials,failures,rate,ci_low,ci_high
///     <one row per (p, decoder)>
///
/// Everything but the `generated` line is a pure function of the config.
void write_results(
    std::ostream &out, const RunConfig &config, const std::vector<BenchmarkPoint> &rows, const std::string &timestamp);
std::vector<BenchmarkPoint> read_results(std::istream &in);
std::vector<BenchmarkPoint> load_results(const std::filesystem::path &path);

/// Evaluates every decoder at every p on shared experiment streams and writes
/// config.out. Point k uses seed splitmix64(seed + k).
std::vector<BenchmarkPoint> sweep_and_compare(const RunConfig &config);

/// Logical error rate against p on log-log axes, one series per decoder, with
/// confidence intervals as error bars.
void write_svg_plot(std::ostream &out, const std::vector<BenchmarkPoint> &rows, const std::string &title);

std::string utc_timestamp();

}  // namespace qecnn

#endif
