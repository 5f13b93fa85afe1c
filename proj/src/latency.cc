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

#include "qecnn/latency.h"

#include <bit>
#include <stdexcept>

namespace qecnn {

int ceil_log2(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ceil_log2 needs a positive argument");
    }
    return static_cast<int>(std::bit_width(n - 1));
}

int latency_steps(const LatencyShape &shape) {
    if (shape.input_size == 0 || shape.hidden_size == 0) {
        throw std::invalid_argument("latency shape sizes must be positive");
    }
    constexpr int multiplications = 2;
    constexpr int activations = 2;
    return multiplications + ceil_log2(shape.input_size) + ceil_log2(shape.hidden_size) + activations;
}

int parity_depth(size_t b) {
    if (b == 0) {
        throw std::invalid_argument("parity_depth needs at least one bit");
    }
    return ceil_log2(b);
}

}  // namespace qecnn
