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

#ifndef QECNN_BENCHMARK_H
#define QECNN_BENCHMARK_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qecnn/dataset.h"
#include "qecnn/experiment.h"

namespace qecnn {

/// Two-sided standard normal quantile for 99.9% coverage.
inline constexpr double kZ999 = 3.2905267314919255;

struct Interval {
    double low;
    double high;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(uint64_t failures, uint64_t trials, double z = kZ999);

struct BenchmarkPoint {
    std::string decoder;
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0;
    double ci_low = 0;
    double ci_high = 0;

    static BenchmarkPoint from_counts(std::string decoder, double p, uint64_t failures, uint64_t trials);
};

struct EvaluationOptions {
    uint64_t trials = 100'000;
    uint64_t seed = 1;
    /// 0 picks std::thread::hardware_concurrency().
    size_t threads = 0;
    /// Trials per RNG substream. Results depend on it, not on `threads`.
    size_t block_size = 4096;
    bool record_indicators = false;
};

struct Evaluation {
    std::vector<BenchmarkPoint> points;             // one per decoder
    std::vector<std::vector<uint8_t>> indicators;   // per decoder, per trial (if recorded)
    uint64_t rng_draws = 0;                         // total draws consumed by sampling
};

/// Runs `trials` experiments and hands every sampled record to every decoder
/// (common random numbers). A trial fails for a decoder when its class
/// differs from the ground-truth label.
Evaluation evaluate_decoders(
    const ExperimentSampler &sampler,
    std::span<const Decoder *const> decoders,
    const NoiseModel &model,
    const EvaluationOptions &options);

BenchmarkPoint evaluate_decoder(
    const Decoder &decoder, const ExperimentSampler &sampler, const NoiseModel &model, uint64_t trials, uint64_t seed);

struct CalibrationOptions {
    double p_low = 0.001;
    double p_high = 0.5;
    double target = 0.25;
    double tolerance = 0.02;
    uint64_t trials = 100'000;
    uint64_t seed = 1;
    size_t max_iterations = 40;
};

struct CalibrationProbe {
    double p;
    double rate;
};

struct CalibrationResult {
    double p = 0;
    double rate = 0;
    std::vector<CalibrationProbe> probes;
};

/// Bisection on p until rate_at(p) is within tolerance of the target.
/// Throws std::runtime_error if [p_low, p_high] does not bracket the target
/// or the search does not converge.
CalibrationResult calibrate_training_rate(
    const std::function<double(double)> &rate_at, const CalibrationOptions &options);

/// Calibrates against the MWPM logical error rate; every probe reuses the
/// same seed.
CalibrationResult calibrate_training_rate(
    const ExperimentSampler &sampler, NoiseModelTag model, const CalibrationOptions &options);

/// Direct sampling of n experiments at p. Throws if n exceeds kMaxDatasetSamples.
Dataset generate_dataset(
    const ExperimentSampler &sampler, NoiseModelTag model, double p, uint64_t n_samples, uint64_t seed);

/// Every possible data error of a QEC model, weighted by its probability at
/// p and scaled to `nominal_samples`. Supports up to 12 data qubits.
Dataset exhaustive_dataset(
    const ExperimentSampler &sampler, NoiseModelTag model, double p, uint64_t nominal_samples = kMaxDatasetSamples);

struct Coverage {
    size_t unique_inputs = 0;
    size_t input_bits = 0;
    /// unique / 2^bits when the input space is at most 2^64.
    std::optional<double> fraction;
};

Coverage coverage_stats(const Dataset &dataset);

}  // namespace qecnn

#endif
