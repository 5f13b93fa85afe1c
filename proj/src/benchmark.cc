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

#include "qecnn/benchmark.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qecnn {

Interval wilson_interval(uint64_t failures, uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    if (failures > trials) {
        throw std::invalid_argument("failures exceed trials");
    }
    double n = static_cast<double>(trials);
    double f = static_cast<double>(failures);
    double z2 = z * z;
    double centre = (f + z2 / 2) / (n + z2);
    double half = z / (n + z2) * std::sqrt(f * (n - f) / n + z2 / 4);
    double rate = f / n;
    Interval out{centre - half, centre + half};
    out.low = failures == 0 ? 0.0 : std::clamp(out.low, 0.0, rate);
    out.high = failures == trials ? 1.0 : std::clamp(out.high, rate, 1.0);
    return out;
}

BenchmarkPoint BenchmarkPoint::from_counts(std::string decoder, double p, uint64_t failures, uint64_t trials) {
    BenchmarkPoint point;
    point.decoder = std::move(decoder);
    point.p = p;
    point.trials = trials;
    point.failures = failures;
    point.rate = trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
    Interval ci = wilson_interval(failures, trials);
    point.ci_low = ci.low;
    point.ci_high = ci.high;
    return point;
}

namespace {

struct BlockResult {
    std::vector<uint64_t> failures;
    std::vector<std::vector<uint8_t>> indicators;
    uint64_t draws = 0;
};

}  // namespace

Evaluation evaluate_decoders(
    const ExperimentSampler &sampler,
    std::span<const Decoder *const> decoders,
    const NoiseModel &model,
    const EvaluationOptions &options) {
    if (options.trials == 0) {
        throw std::invalid_argument("evaluation needs at least one trial");
    }
    if (options.block_size == 0) {
        throw std::invalid_argument("evaluation block size must be positive");
    }
    size_t num_blocks = (options.trials + options.block_size - 1) / options.block_size;
    std::vector<BlockResult> blocks(num_blocks);
    Rng root(options.seed);

    auto run_block = [&](size_t b) {
        BlockResult &out = blocks[b];
        out.failures.assign(decoders.size(), 0);
        uint64_t begin = b * options.block_size;
        uint64_t end = std::min<uint64_t>(options.trials, begin + options.block_size);
        if (options.record_indicators) {
            out.indicators.assign(decoders.size(), std::vector<uint8_t>(end - begin, 0));
        }
        Rng rng = root.split(b);
        for (uint64_t t = begin; t < end; t++) {
            Experiment ex = sampler.sample(model, rng);
            LogicalClass truth = sampler.label(ex);
            uint64_t position = rng.position();
            for (size_t k = 0; k < decoders.size(); k++) {
                bool failed = decoders[k]->decode(ex.record) != truth;
                out.failures[k] += failed;
                if (options.record_indicators) {
                    out.indicators[k][t - begin] = failed;
                }
            }
            if (rng.position() != position) {
                throw std::logic_error("a decoder consumed the shared experiment stream");
            }
        }
        out.draws = rng.position();
    };

    size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, num_blocks);
    if (threads <= 1) {
        for (size_t b = 0; b < num_blocks; b++) {
            run_block(b);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (size_t w = 0; w < threads; w++) {
            pool.emplace_back([&] {
                try {
                    for (size_t b = next++; b < num_blocks; b = next++) {
                        run_block(b);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    error = std::current_exception();
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }

    Evaluation result;
    std::vector<uint64_t> failures(decoders.size(), 0);
    if (options.record_indicators) {
        result.indicators.resize(decoders.size());
    }
    for (const auto &block : blocks) {
        for (size_t k = 0; k < decoders.size(); k++) {
            failures[k] += block.failures[k];
            if (options.record_indicators) {
                result.indicators[k].insert(
                    result.indicators[k].end(), block.indicators[k].begin(), block.indicators[k].end());
            }
        }
        result.rng_draws += block.draws;
    }
    for (size_t k = 0; k < decoders.size(); k++) {
        result.points.push_back(BenchmarkPoint::from_counts(decoders[k]->name(), model.p, failures[k], options.trials));
    }
    return result;
}

BenchmarkPoint evaluate_decoder(
    const Decoder &decoder, const ExperimentSampler &sampler, const NoiseModel &model, uint64_t trials, uint64_t seed) {
    const Decoder *list[] = {&decoder};
    EvaluationOptions options;
    options.trials = trials;
    options.seed = seed;
    return evaluate_decoders(sampler, list, model, options).points.front();
}

CalibrationResult calibrate_training_rate(
    const std::function<double(double)> &rate_at, const CalibrationOptions &options) {
    if (!(options.p_low < options.p_high) || options.p_low < 0 || options.p_high > 1) {
        throw std::invalid_argument("calibration range must satisfy 0 <= p_low < p_high <= 1");
    }
    CalibrationResult result;
    auto probe = [&](double p) {
        double rate = rate_at(p);
        result.probes.push_back({p, rate});
        return rate;
    };
    auto accept = [&](double p, double rate) {
        result.p = p;
        result.rate = rate;
        return result;
    };
    double lo = options.p_low;
    double hi = options.p_high;
    double r_lo = probe(lo);
    double r_hi = probe(hi);
    if (std::abs(r_lo - options.target) <= options.tolerance) {
        return accept(lo, r_lo);
    }
    if (std::abs(r_hi - options.target) <= options.tolerance) {
        return accept(hi, r_hi);
    }
    if (!(r_lo < options.target && options.target < r_hi)) {
        std::ostringstream msg;
        msg << "calibration range [" << lo << ", " << hi << "] does not bracket logical rate " << options.target
            << " (rates " << r_lo << ", " << r_hi << ")";
        throw std::runtime_error(msg.str());
    }
    for (size_t it = 0; it < options.max_iterations; it++) {
        double mid = 0.5 * (lo + hi);
        double r = probe(mid);
        if (std::abs(r - options.target) <= options.tolerance) {
            return accept(mid, r);
        }
        if (r < options.target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw std::runtime_error("calibration did not converge");
}

CalibrationResult calibrate_training_rate(
    const ExperimentSampler &sampler, NoiseModelTag model, const CalibrationOptions &options) {
    MwpmClassDecoder mwpm(sampler.layout());
    return calibrate_training_rate(
        [&](double p) { return evaluate_decoder(mwpm, sampler, NoiseModel(model, p), options.trials, options.seed).rate; },
        options);
}

Dataset generate_dataset(
    const ExperimentSampler &sampler, NoiseModelTag model, double p, uint64_t n_samples, uint64_t seed) {
    if (n_samples > kMaxDatasetSamples) {
        throw std::invalid_argument(
            "training sets are capped at " + std::to_string(kMaxDatasetSamples) + " samples, asked for " +
            std::to_string(n_samples));
    }
    NoiseModel noise(model, p);
    Dataset dataset;
    dataset.scenario = Scenario{model, sampler.layout().distance};
    dataset.sampling_p = p;
    dataset.total_samples = n_samples;
    dataset.seed = seed;
    constexpr uint64_t block = 4096;
    Rng root(seed);
    for (uint64_t start = 0, b = 0; start < n_samples; start += block, b++) {
        Rng rng = root.split(b);
        uint64_t end = std::min(n_samples, start + block);
        for (uint64_t t = start; t < end; t++) {
            Experiment ex = sampler.sample(noise, rng);
            dataset.add(flatten(dataset.scenario, ex.record), sampler.label(ex));
        }
    }
    return dataset;
}

Dataset exhaustive_dataset(
    const ExperimentSampler &sampler, NoiseModelTag model, double p, uint64_t nominal_samples) {
    if (!is_qec(model)) {
        throw std::invalid_argument("exhaustive enumeration is only available for QEC models");
    }
    const CodeLayout &layout = sampler.layout();
    size_t n = layout.n_data;
    if (n > 12) {
        throw std::invalid_argument("exhaustive enumeration supports at most 12 data qubits");
    }
    NoiseModel noise(model, p);
    Dataset dataset;
    dataset.scenario = Scenario{model, layout.distance};
    dataset.sampling_p = p;
    dataset.total_samples = nominal_samples;
    dataset.exhaustive = true;

    bool x_only = is_x_only(model);
    size_t bits_per_qubit = x_only ? 1 : 2;
    uint64_t count = uint64_t{1} << (bits_per_qubit * n);
    double p_fault = x_only ? p : p / 3;
    for (uint64_t code = 0; code < count; code++) {
        PauliString e(n);
        double prob = 1;
        for (size_t q = 0; q < n; q++) {
            unsigned pauli = (code >> (bits_per_qubit * q)) & (x_only ? 1u : 3u);
            // Single-qubit encoding: bit 0 = x, bit 1 = z.
            if (pauli & 1) {
                e.xs.set(q, true);
            }
            if (pauli & 2) {
                e.zs.set(q, true);
            }
            prob *= pauli ? p_fault : 1 - p;
        }
        if (prob == 0) {
            continue;
        }
        SyndromeRecord record{layout.distance, {syndrome_of(layout, e)}};
        dataset.add(flatten(dataset.scenario, record), label_of_error(layout, sampler.table(), e),
                    prob * static_cast<double>(nominal_samples));
    }
    return dataset;
}

Coverage coverage_stats(const Dataset &dataset) {
    Coverage c;
    c.unique_inputs = dataset.unique_inputs();
    c.input_bits = dataset.scenario.input_size();
    if (c.input_bits <= 64) {
        c.fraction = std::ldexp(static_cast<double>(c.unique_inputs), -static_cast<int>(c.input_bits));
    }
    return c;
}

}  // namespace qecnn
