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

#ifndef QECNN_PLUT_H
#define QECNN_PLUT_H

#include <unordered_map>

#include "qecnn/dataset.h"

namespace qecnn {

/// Partial lookup table: the modal class of every input seen in training,
/// and I for anything else.
class PlutDecoder {
   public:
    explicit PlutDecoder(Scenario scenario) : scenario_(scenario) {
    }

    void insert(const BitVector &input, LogicalClass c);
    LogicalClass decode(const BitVector &input) const;
    bool contains(const BitVector &input) const {
        return table_.contains(input);
    }
    size_t size() const {
        return table_.size();
    }
    const Scenario &scenario() const {
        return scenario_;
    }

   private:
    Scenario scenario_;
    std::unordered_map<BitVector, LogicalClass, BitVectorHash> table_;
};

PlutDecoder plut_build(const Dataset &dataset);

inline LogicalClass plut_decode(const PlutDecoder &plut, const BitVector &input) {
    return plut.decode(input);
}

}  // namespace qecnn

#endif
