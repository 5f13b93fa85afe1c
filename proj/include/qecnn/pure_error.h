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

#ifndef QECNN_PURE_ERROR_H
#define QECNN_PURE_ERROR_H

#include <vector>

#include "qecnn/layout.h"

namespace qecnn {

/// One fixed Pauli per check bit whose syndrome is exactly that bit.
///
/// Z-check chains are X strings running straight up or down (whichever is
/// shorter) to the top or bottom edge; X-check chains are Z strings running
/// left or right. The chain uses the lower-indexed adjacent column (row).
struct PureErrorTable {
    std::vector<PauliString> z_chains;
    std::vector<PauliString> x_chains;

    const std::vector<PauliString> &chains(CheckType type) const {
        return type == CheckType::Z ? z_chains : x_chains;
    }
    size_t size() const {
        return z_chains.size() + x_chains.size();
    }
};

PureErrorTable build_pure_error_table(const CodeLayout &layout);

/// Product of the chains of every set bit. Its syndrome is `s`.
PauliString simple_decode(const PureErrorTable &table, const Syndrome &s);

/// Class of e times the pure error of its syndrome: the training label.
LogicalClass label_of_error(const CodeLayout &layout, const PureErrorTable &table, const PauliString &e);

}  // namespace qecnn

#endif
