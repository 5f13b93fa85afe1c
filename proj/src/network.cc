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

#include <stdexcept>
#include <string>

#include "qecnn/scenario.h"

namespace qecnn {

Network::Network(size_t input, size_t hidden, size_t output)
    : input_size(input),
      hidden_size(hidden),
      output_size(output),
      w_hidden(hidden * input, 0.0),
      b_hidden(hidden, 0.0),
      w_out(output * hidden, 0.0),
      b_out(output, 0.0) {
}

Network Network::random(size_t input, size_t hidden, size_t output, Rng &rng, double scale) {
    Network net(input, hidden, output);
    double r_hidden = scale / std::sqrt(static_cast<double>(input));
    double r_out = scale / std::sqrt(static_cast<double>(hidden));
    for (double &w : net.w_hidden) {
        w = (2 * rng.uniform() - 1) * r_hidden;
    }
    for (double &w : net.w_out) {
        w = (2 * rng.uniform() - 1) * r_out;
    }
    return net;
}

double &Network::parameter(size_t k) {
    if (k < w_hidden.size()) {
        return w_hidden[k];
    }
    k -= w_hidden.size();
    if (k < b_hidden.size()) {
        return b_hidden[k];
    }
    k -= b_hidden.size();
    if (k < w_out.size()) {
        return w_out[k];
    }
    k -= w_out.size();
    return b_out.at(k);
}

double Network::parameter(size_t k) const {
    return const_cast<Network *>(this)->parameter(k);
}

bool Network::all_finite() const {
    for (const auto *v : {&w_hidden, &b_hidden, &w_out, &b_out}) {
        for (double x : *v) {
            if (!std::isfinite(x)) {
                return false;
            }
        }
    }
    return true;
}

void Network::validate() const {
    if (input_size == 0 || hidden_size == 0) {
        throw std::invalid_argument("network layers must be nonempty");
    }
    if (output_size != 2 && output_size != 4) {
        throw std::invalid_argument("network output size must be 2 or 4, got " + std::to_string(output_size));
    }
    if (w_hidden.size() != hidden_size * input_size || b_hidden.size() != hidden_size ||
        w_out.size() != output_size * hidden_size || b_out.size() != output_size) {
        throw std::invalid_argument("network weight arrays do not match its layer sizes");
    }
    if (!all_finite()) {
        throw std::invalid_argument("network has non-finite weights");
    }
}

std::vector<double> forward(const Network &net, std::span<const double> x) {
    if (x.size() != net.input_size) {
        throw std::invalid_argument(
            "network input has " + std::to_string(x.size()) + " values, expected " + std::to_string(net.input_size));
    }
    std::vector<double> hidden(net.hidden_size);
    for (size_t h = 0; h < net.hidden_size; h++) {
        const double *row = &net.w_hidden[h * net.input_size];
        double acc = net.b_hidden[h];
        for (size_t i = 0; i < net.input_size; i++) {
            acc += row[i] * x[i];
        }
        hidden[h] = activation(acc);
    }
    std::vector<double> out(net.output_size);
    for (size_t o = 0; o < net.output_size; o++) {
        const double *row = &net.w_out[o * net.hidden_size];
        double acc = net.b_out[o];
        for (size_t h = 0; h < net.hidden_size; h++) {
            acc += row[h] * hidden[h];
        }
        out[o] = activation(acc);
    }
    return out;
}

std::vector<double> to_reals(const BitVector &bits) {
    std::vector<double> out(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        out[k] = bits.get(k) ? 1.0 : 0.0;
    }
    return out;
}

std::vector<double> forward(const Network &net, const BitVector &x) {
    return forward(net, to_reals(x));
}

size_t argmax(std::span<const double> values) {
    size_t best = 0;
    for (size_t k = 1; k < values.size(); k++) {
        if (values[k] > values[best]) {
            best = k;
        }
    }
    return best;
}

LogicalClass classify(const Network &net, std::span<const double> x) {
    return class_of_output(net.output_size, argmax(forward(net, x)));
}

LogicalClass classify(const Network &net, const BitVector &x) {
    return classify(net, to_reals(x));
}

}  // namespace qecnn
