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

#ifndef QECNN_NETWORK_H
#define QECNN_NETWORK_H

#include <cmath>
#include <span>
#include <vector>

#include "qecnn/bits.h"
#include "qecnn/pauli.h"
#include "qecnn/rng.h"

namespace qecnn {

/// Activation used by every neuron: 1 / (1 + exp(x)).
///
/// This is the logistic function of -x, so it decreases in x. Training is
/// unaffected; the sign is absorbed by the weights.
inline double activation(double x) {
    return 1.0 / (1.0 + std::exp(x));
}

/// Dense network with one hidden layer:
/// y = act(w_out * act(w_hidden * x + b_hidden) + b_out).
/// Matrices are row-major: w_hidden is hidden x input, w_out is output x hidden.
struct Network {
    size_t input_size = 0;
    size_t hidden_size = 0;
    size_t output_size = 0;
    std::vector<double> w_hidden;
    std::vector<double> b_hidden;
    std::vector<double> w_out;
    std::vector<double> b_out;

    Network() = default;
    Network(size_t input, size_t hidden, size_t output);

    /// Weights uniform in [-r, r] with r = scale / sqrt(fan_in); zero biases.
    static Network random(size_t input, size_t hidden, size_t output, Rng &rng, double scale = 1.0);

    size_t num_parameters() const {
        return w_hidden.size() + b_hidden.size() + w_out.size() + b_out.size();
    }
    /// Flat view order: w_hidden, b_hidden, w_out, b_out.
    double &parameter(size_t k);
    double parameter(size_t k) const;

    bool all_finite() const;
    /// Throws std::invalid_argument on inconsistent sizes, an output size other
    /// than 2 or 4, or non-finite weights.
    void validate() const;

    bool operator==(const Network &other) const = default;
};

/// Throws std::invalid_argument if x has the wrong length.
std::vector<double> forward(const Network &net, std::span<const double> x);
std::vector<double> forward(const Network &net, const BitVector &x);

/// Lowest index among the maxima.
size_t argmax(std::span<const double> values);

/// Four outputs map to I, X, Z, Y; two outputs map to {I, X} (no flip, flip).
LogicalClass classify(const Network &net, std::span<const double> x);
LogicalClass classify(const Network &net, const BitVector &x);

std::vector<double> to_reals(const BitVector &bits);

}  // namespace qecnn

#endif
