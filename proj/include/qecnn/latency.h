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

#ifndef QECNN_LATENCY_H
#define QECNN_LATENCY_H

#include <cstddef>

namespace qecnn {

/// Smallest k with 2^k >= n. Throws std::invalid_argument for n == 0.
int ceil_log2(size_t n);

struct LatencyShape {
    size_t input_size;
    size_t hidden_size;
};

/// Serial steps for a fully parallel evaluation of a one-hidden-layer network:
/// one multiply per layer, an adder tree per layer and one activation per layer.
int latency_steps(const LatencyShape &shape);

/// Depth of an XOR tree computing the parity of b bits.
int parity_depth(size_t b);

}  // namespace qecnn

#endif
