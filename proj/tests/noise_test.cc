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

#include "qecnn/noise.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "qecnn/scenario.h"
#include "qecnn/experiment.h"

using namespace qecnn;

namespace {

double three_sigma(double p, double n) {
    return 3 * std::sqrt(p * (1 - p) / n);
}

constexpr NoiseModelTag kAllModels[] = {
    NoiseModelTag::ChannelCapacity, NoiseModelTag::Depolarizing, NoiseModelTag::ChannelCapacityMeas,
    NoiseModelTag::DepolarizingMeas, NoiseModelTag::Circuit};

}  // namespace

TEST(NoiseModel, names_round_trip) {
    for (auto tag : kAllModels) {
        EXPECT_EQ(parse_model(model_name(tag)), tag);
    }
    EXPECT_THROW(parse_model("bitflip"), std::invalid_argument);
    EXPECT_TRUE(is_qec(NoiseModelTag::Depolarizing));
    EXPECT_TRUE(is_ft(NoiseModelTag::Circuit));
    EXPECT_TRUE(is_x_only(NoiseModelTag::ChannelCapacityMeas));
    EXPECT_FALSE(is_x_only(NoiseModelTag::DepolarizingMeas));
}

TEST(NoiseModel, rejects_probabilities_outside_unit_interval) {
    EXPECT_THROW(NoiseModel(NoiseModelTag::Depolarizing, -0.01), std::invalid_argument);
    EXPECT_THROW(NoiseModel(NoiseModelTag::Depolarizing, 1.01), std::invalid_argument);
    EXPECT_THROW(NoiseModel(NoiseModelTag::Depolarizing, std::nan("")), std::invalid_argument);
    EXPECT_NO_THROW(NoiseModel(NoiseModelTag::Depolarizing, 0.0));
    EXPECT_NO_THROW(NoiseModel(NoiseModelTag::Depolarizing, 1.0));
}

TEST(NoiseSampling, single_qubit_depolarizing_frequencies) {
    Rng rng(1);
    const double p = 0.3;
    const int n = 1'000'000;
    std::array<int, 4> counts{};
    for (int t = 0; t < n; t++) {
        counts[sample_single_qubit_pauli(p, rng)]++;
    }
    for (int c = 1; c < 4; c++) {
        double f = counts[c] / double(n);
        EXPECT_NEAR(f, p / 3, three_sigma(p / 3, n)) << "class " << c;
        EXPECT_NEAR(f, 0.1, 0.002);
    }
}

TEST(NoiseSampling, two_qubit_channel_frequencies) {
    Rng rng(2);
    const double p = 0.15;
    const int n = 1'000'000;
    std::array<int, 16> counts{};
    for (int t = 0; t < n; t++) {
        counts[sample_two_qubit_pauli(p, rng)]++;
    }
    EXPECT_NEAR(counts[0] / double(n), 1 - p, three_sigma(1 - p, n));
    for (int c = 1; c < 16; c++) {
        double f = counts[c] / double(n);
        EXPECT_NEAR(f, p / 15, three_sigma(p / 15, n)) << "code " << c;
        EXPECT_NEAR(f, 0.01, 0.001);
    }
}

TEST(NoiseSampling, qec_error_extremes) {
    CodeLayout layout = build_layout(5);
    Rng rng(3);
    EXPECT_TRUE(sample_qec_error(layout, NoiseModel(NoiseModelTag::Depolarizing, 0), rng).is_identity());
    PauliString all_x = sample_qec_error(layout, NoiseModel(NoiseModelTag::ChannelCapacity, 1), rng);
    EXPECT_EQ(all_x.xs.popcount(), 25u);
    EXPECT_TRUE(all_x.zs.none());
    EXPECT_THROW(sample_qec_error(layout, NoiseModel(NoiseModelTag::Circuit, 0.1), rng), std::invalid_argument);
}

TEST(NoiseSampling, channel_capacity_only_produces_x) {
    CodeLayout layout = build_layout(3);
    Rng rng(4);
    size_t flips = 0, n = 0;
    for (int t = 0; t < 20000; t++) {
        PauliString e = sample_qec_error(layout, NoiseModel(NoiseModelTag::ChannelCapacity, 0.2), rng);
        ASSERT_TRUE(e.zs.none());
        flips += e.xs.popcount();
        n += 9;
    }
    EXPECT_NEAR(flips / double(n), 0.2, three_sigma(0.2, n));
}

TEST(NoiseSampling, depolarizing_qec_per_qubit_classes) {
    CodeLayout layout = build_layout(3);
    Rng rng(5);
    std::array<size_t, 4> counts{};
    size_t n = 0;
    for (int t = 0; t < 100000; t++) {
        PauliString e = sample_qec_error(layout, NoiseModel(NoiseModelTag::Depolarizing, 0.3), rng);
        for (size_t q = 0; q < 9; q++) {
            counts[e.xs.get(q) | (e.zs.get(q) << 1)]++;
            n++;
        }
    }
    for (int c = 1; c < 4; c++) {
        EXPECT_NEAR(counts[c] / double(n), 0.1, three_sigma(0.1, n));
    }
}

TEST(NoiseSampling, zero_noise_gives_zero_records_for_every_model) {
    ExperimentSampler sampler(3);
    Rng rng(6);
    for (auto tag : kAllModels) {
        for (int t = 0; t < 1000; t++) {
            Experiment ex = sampler.sample(NoiseModel(tag, 0), rng);
            ASSERT_TRUE(ex.cumulative_error.is_identity());
            for (const auto &round : ex.record.rounds) {
                ASSERT_FALSE(round.any());
            }
        }
    }
}

TEST(NoiseSampling, record_shapes_match_scenarios) {
    ExperimentSampler sampler(3);
    Rng rng(7);
    std::array<size_t, 5> expected_bits = {4, 8, 16, 32, 32};
    for (size_t k = 0; k < 5; k++) {
        auto tag = kAllModels[k];
        Experiment ex = sampler.sample(NoiseModel(tag, 0.05), rng);
        EXPECT_EQ(ex.record.rounds.size(), is_qec(tag) ? 1u : 4u);
        EXPECT_EQ(flatten(Scenario{tag, 3}, ex.record).size(), expected_bits[k]) << model_name(tag);
    }
}

TEST(NoiseSampling, final_round_is_perfect_readout) {
    for (int d : {3, 5}) {
        ExperimentSampler sampler(d);
        Rng rng(8);
        for (auto tag : kAllModels) {
            for (int t = 0; t < 10000 / (d * d / 9); t++) {
                Experiment ex = sampler.sample(NoiseModel(tag, 0.08), rng);
                ASSERT_EQ(ex.record.final_round(), syndrome_of(sampler.layout(), ex.cumulative_error));
            }
        }
    }
}

TEST(NoiseSampling, phenomenological_measurement_flip_rate) {
    CodeLayout layout = build_layout(3);
    Rng rng(9);
    const double p = 0.07;
    for (auto tag : {NoiseModelTag::DepolarizingMeas, NoiseModelTag::ChannelCapacityMeas}) {
        size_t flips = 0, bits = 0, x_bits_set = 0;
        while (bits < 1'000'000) {
            Experiment ex = sample_ft_phenomenological(layout, tag, 0.0, p, rng);
            ASSERT_TRUE(ex.cumulative_error.is_identity());
            for (int r = 0; r < 3; r++) {
                flips += ex.record.rounds[r].z_checks.popcount();
                bits += 4;
                if (tag == NoiseModelTag::DepolarizingMeas) {
                    flips += ex.record.rounds[r].x_checks.popcount();
                    bits += 4;
                } else {
                    x_bits_set += ex.record.rounds[r].x_checks.popcount();
                }
            }
            ASSERT_FALSE(ex.record.final_round().any());
        }
        EXPECT_NEAR(flips / double(bits), p, three_sigma(p, bits)) << model_name(tag);
        EXPECT_EQ(x_bits_set, 0u);
    }
}

TEST(NoiseSampling, phenomenological_data_errors_accumulate) {
    CodeLayout layout = build_layout(3);
    Rng rng(10);
    // Without measurement flips every round is the exact syndrome of the
    // error so far, so syndromes change only where new errors landed.
    for (int t = 0; t < 2000; t++) {
        Experiment ex = sample_ft_phenomenological(layout, NoiseModelTag::DepolarizingMeas, 0.1, 0.0, rng);
        ASSERT_EQ(ex.record.rounds[2], ex.record.rounds[3]);
    }
    EXPECT_THROW(sample_ft_phenomenological(layout, NoiseModelTag::Depolarizing, 0.1, 0.1, rng),
                 std::invalid_argument);
}

TEST(Rng, streams_are_reproducible_and_distinct) {
    Rng a(42), b(42), c(43);
    for (int k = 0; k < 10; k++) {
        uint64_t va = a.next();
        EXPECT_EQ(va, b.next());
        EXPECT_NE(va, c.next());
    }
    EXPECT_EQ(a.position(), 10u);
    Rng s1 = a.split(1), s1b = b.split(1), s2 = a.split(2);
    EXPECT_EQ(a.position(), 10u);
    uint64_t v1 = s1.next();
    EXPECT_EQ(v1, s1b.next());
    EXPECT_NE(v1, s2.next());
}

TEST(Rng, uniform_and_below_ranges) {
    Rng rng(12);
    double sum = 0;
    for (int k = 0; k < 100000; k++) {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        ASSERT_LT(rng.below(7), 7u);
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
    EXPECT_FALSE(rng.bernoulli(0.0));
}
