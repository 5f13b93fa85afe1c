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

#include "qecnn/network.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qecnn/scenario.h"

using namespace qecnn;

namespace {

/// A network whose output is the constant vector y, whatever the input.
Network constant_output(size_t input, const std::vector<double> &y) {
    Network net(input, 3, y.size());
    for (size_t k = 0; k < y.size(); k++) {
        net.b_out[k] = std::log(1 / y[k] - 1);  // activation(b) = y
    }
    return net;
}

}  // namespace

TEST(Activation, quoted_form_decreases) {
    EXPECT_DOUBLE_EQ(activation(0), 0.5);
    EXPECT_NEAR(activation(std::log(3.0)), 0.25, 1e-15);
    for (double x = -5; x < 5; x += 0.25) {
        EXPECT_GT(activation(x), activation(x + 0.25));
    }
    // One input, one hidden node with weight 1: the hidden value falls as x
    // grows, and a unit output weight mirrors it back, so the output rises.
    Network net(1, 1, 2);
    net.w_hidden[0] = 1;
    net.w_out[0] = 1;
    double prev = 0;
    for (double x = -3; x <= 3; x += 0.5) {
        double y = forward(net, std::vector<double>{x})[0];
        EXPECT_DOUBLE_EQ(y, activation(activation(x)));
        EXPECT_GT(y, prev);
        prev = y;
    }
}

TEST(Network, zero_weights_give_one_half) {
    Network net(8, 128, 4);
    for (double y : forward(net, std::vector<double>(8, 1.0))) {
        EXPECT_DOUBLE_EQ(y, 0.5);
    }
}

TEST(Network, scenario_shapes) {
    struct Row {
        NoiseModelTag model;
        int d;
        size_t in, hidden, out;
    };
    const Row rows[] = {
        {NoiseModelTag::ChannelCapacity, 3, 4, 10, 2},     {NoiseModelTag::ChannelCapacity, 5, 12, 90, 2},
        {NoiseModelTag::ChannelCapacity, 7, 24, 512, 2},   {NoiseModelTag::Depolarizing, 3, 8, 128, 4},
        {NoiseModelTag::Depolarizing, 5, 24, 660, 4},      {NoiseModelTag::Depolarizing, 7, 48, 256, 4},
        {NoiseModelTag::ChannelCapacityMeas, 3, 16, 768, 4}, {NoiseModelTag::DepolarizingMeas, 3, 32, 768, 4},
        {NoiseModelTag::Circuit, 3, 32, 704, 4},
    };
    for (const auto &r : rows) {
        Scenario s{r.model, r.d};
        EXPECT_EQ(s.input_size(), r.in) << s.name();
        EXPECT_EQ(s.default_hidden_size(), r.hidden) << s.name();
        EXPECT_EQ(s.output_size(), r.out) << s.name();
    }
    EXPECT_EQ((Scenario{NoiseModelTag::Circuit, 5}).default_hidden_size(), 16 * 144u);
    EXPECT_EQ((Scenario{NoiseModelTag::Depolarizing, 3}).name(), "depol-d3");
}

TEST(Network, outputs_stay_inside_unit_interval) {
    Rng rng(1);
    for (int t = 0; t < 20; t++) {
        Network net = Network::random(12, 30, 4, rng);
        std::vector<double> x(12);
        for (auto &v : x) v = rng.next() & 1;
        for (double y : forward(net, x)) {
            EXPECT_GT(y, 0.0);
            EXPECT_LT(y, 1.0);
        }
    }
}

TEST(Network, random_init_range_and_zero_biases) {
    Rng rng(2);
    Network net = Network::random(16, 40, 4, rng, 2.0);
    for (double w : net.w_hidden) EXPECT_LE(std::abs(w), 2.0 / 4.0);
    for (double w : net.w_out) EXPECT_LE(std::abs(w), 2.0 / std::sqrt(40.0));
    for (double b : net.b_hidden) EXPECT_EQ(b, 0.0);
    for (double b : net.b_out) EXPECT_EQ(b, 0.0);
    Rng again(2);
    EXPECT_EQ(Network::random(16, 40, 4, again, 2.0), net);
}

TEST(Network, parameter_view_covers_every_array) {
    Network net(2, 3, 2);
    EXPECT_EQ(net.num_parameters(), 6u + 3u + 6u + 2u);
    for (size_t k = 0; k < net.num_parameters(); k++) {
        net.parameter(k) = static_cast<double>(k);
    }
    EXPECT_EQ(net.w_hidden.front(), 0.0);
    EXPECT_EQ(net.b_hidden.front(), 6.0);
    EXPECT_EQ(net.w_out.front(), 9.0);
    EXPECT_EQ(net.b_out.back(), 16.0);
}

TEST(Network, validation) {
    EXPECT_THROW(Network(4, 10, 3).validate(), std::invalid_argument);
    Network net(4, 10, 2);
    EXPECT_NO_THROW(net.validate());
    net.w_out[3] = std::nan("");
    EXPECT_FALSE(net.all_finite());
    EXPECT_THROW(net.validate(), std::invalid_argument);
    EXPECT_THROW(forward(Network(4, 10, 2), std::vector<double>(5)), std::invalid_argument);
}

TEST(Classify, argmax_examples) {
    EXPECT_EQ(classify(constant_output(4, {0.9, 0.02, 0.05, 0.03}), std::vector<double>(4)), LogicalClass::I);
    EXPECT_EQ(classify(constant_output(4, {0.1, 0.2, 0.05, 0.7}), std::vector<double>(4)), LogicalClass::Y);
    EXPECT_EQ(classify(constant_output(4, {0.1, 0.8}), std::vector<double>(4)), LogicalClass::X);
    EXPECT_EQ(classify(constant_output(4, {0.3, 0.3, 0.1, 0.1}), std::vector<double>(4)), LogicalClass::I);
    EXPECT_EQ(argmax(std::vector<double>{0.2, 0.5, 0.5, 0.1}), 1u);
}

TEST(Classify, argmax_invariant_under_increasing_transforms) {
    Rng rng(3);
    for (int t = 0; t < 200; t++) {
        std::vector<double> v(4), logv(4), cubed(4);
        for (size_t k = 0; k < 4; k++) {
            v[k] = 0.01 + rng.uniform();
            logv[k] = std::log(v[k]);
            cubed[k] = std::pow(v[k], 3) + 7;
        }
        EXPECT_EQ(argmax(v), argmax(logv));
        EXPECT_EQ(argmax(v), argmax(cubed));
    }
}

TEST(Classify, output_mapping) {
    EXPECT_EQ(class_of_output(2, 0), LogicalClass::I);
    EXPECT_EQ(class_of_output(2, 1), LogicalClass::X);
    EXPECT_EQ(class_of_output(4, 2), LogicalClass::Z);
    EXPECT_THROW(class_of_output(4, 4), std::invalid_argument);
    Scenario cc{NoiseModelTag::ChannelCapacity, 3};
    EXPECT_EQ(target_index(cc, LogicalClass::X), 1u);
    EXPECT_EQ(target_index(cc, LogicalClass::Y), 1u);
    EXPECT_EQ(target_index(cc, LogicalClass::Z), 0u);
}

TEST(Classify, target_distribution_and_mode) {
    Scenario depol{NoiseModelTag::Depolarizing, 3};
    auto t = target_distribution(depol, {100, 900, 0, 0});
    EXPECT_DOUBLE_EQ(t[0], 0.1);
    EXPECT_DOUBLE_EQ(t[1], 0.9);
    EXPECT_EQ(modal_class({100, 900, 0, 0}), LogicalClass::X);
    EXPECT_EQ(modal_class({5, 5, 5, 5}), LogicalClass::I);
    EXPECT_EQ(modal_class({0, 0, 0, 0}), LogicalClass::I);
    EXPECT_EQ(target_distribution(depol, {0, 0, 0, 0}), std::vector<double>(4, 0.0));
}
