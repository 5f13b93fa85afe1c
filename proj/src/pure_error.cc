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

#include "qecnn/pure_error.h"

#include <stdexcept>

namespace qecnn {

PureErrorTable build_pure_error_table(const CodeLayout &layout) {
    const int d = layout.distance;
    PureErrorTable table;
    for (const auto &s : layout.z_stabilisers) {
        // Vertical X string in a column adjacent to the plaquette.
        int col = s.col >= 1 ? s.col - 1 : s.col;
        PauliString chain(layout.n_data);
        if (s.row <= d - s.row) {
            for (int r = 0; r < s.row; r++) {
                chain.xs.set(layout.data_index(r, col), true);
            }
        } else {
            for (int r = s.row; r < d; r++) {
                chain.xs.set(layout.data_index(r, col), true);
            }
        }
        table.z_chains.push_back(std::move(chain));
    }
    for (const auto &s : layout.x_stabilisers) {
        // Horizontal Z string in a row adjacent to the plaquette.
        int row = s.row >= 1 ? s.row - 1 : s.row;
        PauliString chain(layout.n_data);
        if (s.col <= d - s.col) {
            for (int c = 0; c < s.col; c++) {
                chain.zs.set(layout.data_index(row, c), true);
            }
        } else {
            for (int c = s.col; c < d; c++) {
                chain.zs.set(layout.data_index(row, c), true);
            }
        }
        table.x_chains.push_back(std::move(chain));
    }
    return table;
}

PauliString simple_decode(const PureErrorTable &table, const Syndrome &s) {
    if (s.z_checks.size() != table.z_chains.size() || s.x_checks.size() != table.x_chains.size()) {
        throw std::invalid_argument("syndrome size does not match the pure error table");
    }
    PauliString out(table.z_chains.empty() ? 0 : table.z_chains.front().num_qubits());
    for (size_t k : s.z_checks.set_indices()) {
        out *= table.z_chains[k];
    }
    for (size_t k : s.x_checks.set_indices()) {
        out *= table.x_chains[k];
    }
    return out;
}

LogicalClass label_of_error(const CodeLayout &layout, const PureErrorTable &table, const PauliString &e) {
    PauliString residual = multiply(e, simple_decode(table, syndrome_of(layout, e)));
    return logical_class(layout, residual);
}

}  // namespace qecnn
