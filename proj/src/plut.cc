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

#include "qecnn/plut.h"

#include <stdexcept>

namespace qecnn {

void PlutDecoder::insert(const BitVector &input, LogicalClass c) {
    if (input.size() != scenario_.input_size()) {
        throw std::invalid_argument("lookup key width does not match scenario " + scenario_.name());
    }
    table_[input] = c;
}

LogicalClass PlutDecoder::decode(const BitVector &input) const {
    if (input.size() != scenario_.input_size()) {
        throw std::invalid_argument("lookup input width does not match scenario " + scenario_.name());
    }
    auto it = table_.find(input);
    return it == table_.end() ? LogicalClass::I : it->second;
}

PlutDecoder plut_build(const Dataset &dataset) {
    PlutDecoder plut(dataset.scenario);
    for (const auto &[key, hist] : dataset.rows) {
        plut.insert(key, modal_class(hist));
    }
    return plut;
}

}  // namespace qecnn
