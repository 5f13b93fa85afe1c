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

#include <gtest/gtest.h>

#include <cmath>

using namespace qecnn;

namespace {

/// Wilson bounds as the two roots of (phat - pi)^2 = z^2 pi (1 - pi) / n.
Interval wilson_by_quadratic(double f, double n, double z) {
    double phat = f / n;
    double a = 1 + z * z / n;
    double b = -(2 * phat + z * z / n);
    double c = phat * phat;
    double disc = std::sqrt(b * b - 4 * a * c);
    return {(-b - disc) / (2 * a), (-b + disc) / (2 * a)};
}

class ConstantDecoder final : public Decoder {
   public:
    explicit ConstantDecoder(LogicalClass c) : c_(c) {
    }
    std::string name() const override {
        return std::string("const-") + class_char(c_);
    }
    LogicalClass decode(const SyndromeRecord &) const override {
        return c_;
    }

   private:
    LogicalClass c_;
};

}  // namespace

TEST(Wilson, matches_quadratic_roots) {
    for (auto [f, n] : {std::pair<uint64_t, uint64_t>{1, 10}, {5, 100}, {250, 1000}, {999, 1000}, {7, 100000}}) {
        Interval got = wilson_interval(f, n);
        Interval want = wilson_by_quadratic(double(f), double(n), kZ999);
        EXPECT_NEAR(got.low, want.low, 1e-12);
        EXPECT_NEAR(got.high, want.high, 1e-12);
    }
}

TEST(Wilson, zero_failures_has_exact_zero_lower_bound) {
    for (uint64_t n : {1, 10, 1000, 1000000}) {
        Interval ci = wilson_interval(0, n);
        EXPECT_EQ(ci.low, 0.0);
        EXPECT_GT(ci.high, 0.0);
    }
    Interval all = wilson_interval(50, 50);
    EXPECT_EQ(all.high, 1.0);
    EXPECT_LT(all.low, 1.0);
    EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
}

TEST(Wilson, width_shrinks_as_inverse_square_root) {
    auto width = [](uint64_t n) {
        Interval ci = wilson_interval(n / 10, n);
        return ci.high - ci.low;
    };
    double w2 = width(100), w4 = width(10000), w6 = width(1000000);
    EXPECT_NEAR(w2 / w4, 10.0, 0.5);
    EXPECT_NEAR(w4 / w6, 10.0, 0.05);
    // Normal-approximation width for comparison at large n.
    EXPECT_NEAR(w6, 2 * kZ999 * std::sqrt(0.09 / 1e6), 1e-6);
}

TEST(Wilson, every_point_holds_its_rate) {
    for (uint64_t n : {1, 2, 7, 100, 12345}) {
        for (uint64_t f = 0; f <= n; f += std::max<uint64_t>(1, n / 13)) {
            BenchmarkPoint pt = BenchmarkPoint::from_counts("x", 0.1, f, n);
            EXPECT_LE(pt.ci_low, pt.rate);
            EXPECT_LE(pt.rate, pt.ci_high);
            EXPECT_GE(pt.ci_low, 0.0);
            EXPECT_LE(pt.ci_high, 1.0);
        }
    }
}

TEST(Evaluate, identity_decoder_at_zero_noise) {
    ExperimentSampler sampler(3);
    SimpleOnlyDecoder always_i;
    BenchmarkPoint pt = evaluate_decoder(always_i, sampler, NoiseModel(NoiseModelTag::Depolarizing, 0), 5000, 1);
    EXPECT_EQ(pt.failures, 0u);
    EXPECT_EQ(pt.rate, 0.0);
    EXPECT_EQ(pt.ci_low, 0.0);
    EXPECT_GT(pt.ci_high, 0.0);
    EXPECT_EQ(pt.decoder, "simple-only");
}

TEST(Evaluate, always_wrong_decoder_fails_every_trial) {
    ExperimentSampler sampler(3);
    ConstantDecoder wrong(LogicalClass::X);
    BenchmarkPoint pt = evaluate_decoder(wrong, sampler, NoiseModel(NoiseModelTag::ChannelCapacity, 0), 1000, 1);
    EXPECT_EQ(pt.failures, 1000u);
    EXPECT_EQ(pt.rate, 1.0);
    EXPECT_EQ(pt.ci_high, 1.0);
}

TEST(Evaluate, shared_streams_and_thread_independence) {
    ExperimentSampler sampler(3);
    MwpmClassDecoder a(sampler.layout()), b(sampler.layout());
    SimpleOnlyDecoder c;
    const Decoder *list[] = {&a, &b, &c};
    EvaluationOptions options;
    options.trials = 10000;
    options.seed = 5;
    options.record_indicators = true;
    options.block_size = 1000;
    NoiseModel model(NoiseModelTag::DepolarizingMeas, 0.03);
    options.threads = 1;
    Evaluation serial = evaluate_decoders(sampler, list, model, options);
    options.threads = 4;
    Evaluation parallel = evaluate_decoders(sampler, list, model, options);
    // Identical decoders see identical experiments, so their indicators agree.
    EXPECT_EQ(serial.indicators[0], serial.indicators[1]);
    EXPECT_EQ(serial.indicators, parallel.indicators);
    EXPECT_EQ(serial.rng_draws, parallel.rng_draws);
    for (size_t k = 0; k < 3; k++) {
        EXPECT_EQ(serial.points[k].failures, parallel.points[k].failures);
    }
    EXPECT_LT(serial.points[0].rate, serial.points[2].rate);
    // A different seed gives a different stream.
    options.seed = 6;
    EXPECT_NE(evaluate_decoders(sampler, list, model, options).indicators[0], serial.indicators[0]);
    EXPECT_THROW(evaluate_decoders(sampler, list, model, EvaluationOptions{.trials = 0}), std::invalid_argument);
}

TEST(Calibrate, bisection_on_a_known_curve) {
    CalibrationOptions options;
    options.target = 0.25;
    options.tolerance = 0.001;
    CalibrationResult r = calibrate_training_rate([](double p) { return p * p; }, options);
    EXPECT_NEAR(r.rate, 0.25, 0.001);
    EXPECT_NEAR(r.p, 0.5, 0.002);
    EXPECT_GE(r.probes.size(), 2u);
}

TEST(Calibrate, degenerate_rate_is_an_error) {
    EXPECT_THROW(calibrate_training_rate([](double) { return 0.0; }, CalibrationOptions{}), std::runtime_error);
    EXPECT_THROW(calibrate_training_rate([](double) { return 1.0; }, CalibrationOptions{}), std::runtime_error);
    EXPECT_THROW(calibrate_training_rate([](double p) { return p; }, CalibrationOptions{.p_low = 0.4, .p_high = 0.1}),
                 std::invalid_argument);
}

TEST(Calibrate, mwpm_rate_is_monotone_over_probes) {
    ExperimentSampler sampler(3);
    CalibrationOptions options;
    options.trials = 20000;
    CalibrationResult r = calibrate_training_rate(sampler, NoiseModelTag::Depolarizing, options);
    EXPECT_NEAR(r.rate, 0.25, options.tolerance);
    auto probes = r.probes;
    std::sort(probes.begin(), probes.end(), [](auto &a, auto &b) { return a.p < b.p; });
    for (size_t k = 1; k < probes.size(); k++) {
        EXPECT_GE(probes[k].rate, probes[k - 1].rate) << probes[k].p;
    }
}

TEST(Dataset, sampled_totals_and_reproducibility) {
    ExperimentSampler sampler(3);
    Dataset a = generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.1, 10000, 3);
    Dataset b = generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.1, 10000, 3);
    EXPECT_EQ(a.histogram_total(), 10000.0);
    EXPECT_EQ(a.total_samples, 10000u);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_LE(a.unique_inputs(), 256u);
    Dataset c = generate_dataset(sampler, NoiseModelTag::Circuit, 0.01, 5000, 3);
    EXPECT_EQ(c.histogram_total(), 5000.0);
    for (const auto &[k, h] : c.rows) {
        EXPECT_EQ(k.size(), 32u);
    }
}

TEST(Dataset, cap_is_enforced_and_empty_is_fine) {
    ExperimentSampler sampler(3);
    EXPECT_THROW(generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.1, kMaxDatasetSamples + 1, 1),
                 std::invalid_argument);
    Dataset empty = generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.1, 0, 1);
    EXPECT_EQ(empty.unique_inputs(), 0u);
    EXPECT_EQ(plut_build(empty).decode(BitVector(8)), LogicalClass::I);
    Coverage c = coverage_stats(empty);
    ASSERT_TRUE(c.fraction.has_value());
    EXPECT_EQ(*c.fraction, 0.0);
}

TEST(Dataset, exhaustive_d3_covers_the_whole_space) {
    ExperimentSampler sampler(3);
    Dataset cc = exhaustive_dataset(sampler, NoiseModelTag::ChannelCapacity, 0.1);
    EXPECT_EQ(cc.unique_inputs(), 16u);
    EXPECT_NEAR(cc.histogram_total(), double(kMaxDatasetSamples), 1e-6);
    EXPECT_EQ(*coverage_stats(cc).fraction, 1.0);
    Dataset depol = exhaustive_dataset(sampler, NoiseModelTag::Depolarizing, 0.1);
    EXPECT_EQ(depol.unique_inputs(), 256u);
    EXPECT_EQ(*coverage_stats(depol).fraction, 1.0);
    // Probability-weighted rows match direct sampling frequencies.
    Dataset sampled = generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.1, 200000, 4);
    BitVector zero(8);
    double p_exact = depol.rows[zero][0] / depol.histogram_total();
    double p_sampled = sampled.rows[zero][0] / sampled.histogram_total();
    EXPECT_NEAR(p_sampled, p_exact, 3 * std::sqrt(p_exact * (1 - p_exact) / 200000));
    EXPECT_THROW(exhaustive_dataset(sampler, NoiseModelTag::DepolarizingMeas, 0.1), std::invalid_argument);
    EXPECT_THROW(exhaustive_dataset(ExperimentSampler(5), NoiseModelTag::ChannelCapacity, 0.1), std::invalid_argument);
}

TEST(Coverage, d5_channel_capacity_fraction) {
    ExperimentSampler sampler(5);
    Dataset d = generate_dataset(sampler, NoiseModelTag::ChannelCapacity, 0.05, 20000, 5);
    Coverage c = coverage_stats(d);
    EXPECT_EQ(c.input_bits, 12u);
    EXPECT_DOUBLE_EQ(*c.fraction, d.unique_inputs() / 4096.0);
    EXPECT_GT(*c.fraction, 0.05);
    EXPECT_LT(*c.fraction, 1.0);
}

TEST(Coverage, d7_depolarizing_is_a_vanishing_fraction) {
    ExperimentSampler sampler(7);
    Dataset d = generate_dataset(sampler, NoiseModelTag::Depolarizing, 0.15, kMaxDatasetSamples, 7);
    Coverage c = coverage_stats(d);
    EXPECT_EQ(c.input_bits, 48u);
    ASSERT_TRUE(c.fraction.has_value());
    EXPECT_GT(*c.fraction, 1e-10);
    EXPECT_LT(*c.fraction, 1e-8);
}

TEST(Coverage, wide_inputs_report_counts_only) {
    Dataset d;
    d.scenario = {NoiseModelTag::DepolarizingMeas, 5};  // 6 rounds of 24 bits
    Coverage c = coverage_stats(d);
    EXPECT_EQ(c.input_bits, 144u);
    EXPECT_FALSE(c.fraction.has_value());
}
