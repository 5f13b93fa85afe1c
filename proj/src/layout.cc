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

#include "qecnn/layout.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qecnn {

namespace {

bool plaquette_present(int d, int i, int j) {
    bool top_or_bottom = i == 0 || i == d;
    bool left_or_right = j == 0 || j == d;
    if (top_or_bottom && left_or_right) {
        return false;
    }
    bool is_x = (i + j) % 2 == 0;
    if (top_or_bottom) {
        return is_x;
    }
    if (left_or_right) {
        return !is_x;
    }
    return true;
}

}  // namespace

CodeLayout build_layout(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument(
            "surface code distance must be an odd integer >= 3, got " + std::to_string(d));
    }
    CodeLayout layout;
    layout.distance = d;
    layout.n_data = static_cast<size_t>(d) * d;

    for (int i = 0; i <= d; i++) {
        for (int j = 0; j <= d; j++) {
            if (!plaquette_present(d, i, j)) {
                continue;
            }
            Stabiliser s;
            s.type = (i + j) % 2 == 0 ? CheckType::X : CheckType::Z;
            s.row = i;
            s.col = j;
            s.mask = BitVector(layout.n_data);
            const int rows[4] = {i - 1, i - 1, i, i};
            const int cols[4] = {j - 1, j, j - 1, j};
            for (size_t c = 0; c < 4; c++) {
                if (rows[c] >= 0 && rows[c] < d && cols[c] >= 0 && cols[c] < d) {
                    size_t q = layout.data_index(rows[c], cols[c]);
                    s.corners[c] = static_cast<int>(q);
                    s.support.push_back(q);
                    s.mask.set(q, true);
                } else {
                    s.corners[c] = kNoQubit;
                }
            }
            std::sort(s.support.begin(), s.support.end());
            if (s.type == CheckType::Z) {
                layout.z_stabilisers.push_back(std::move(s));
            } else {
                layout.x_stabilisers.push_back(std::move(s));
            }
        }
    }

    layout.logical_x = PauliString(layout.n_data);
    layout.logical_z = PauliString(layout.n_data);
    for (int k = 0; k < d; k++) {
        layout.logical_x.xs.set(layout.data_index(k, 0), true);
        layout.logical_z.zs.set(layout.data_index(0, k), true);
    }
    return layout;
}

PauliString CodeLayout::stabiliser_pauli(CheckType type, size_t index) const {
    PauliString p(n_data);
    const Stabiliser &s = stabilisers(type).at(index);
    if (type == CheckType::Z) {
        p.zs = s.mask;
    } else {
        p.xs = s.mask;
    }
    return p;
}

std::string CodeLayout::diagram() const {
    // Plaquette centres on odd coordinates, data qubits on even coordinates.
    int size = 2 * distance + 1;
    std::vector<std::string> grid(size, std::string(size, ' '));
    for (int r = 0; r < distance; r++) {
        for (int c = 0; c < distance; c++) {
            grid[2 * r + 1][2 * c + 1] = 'o';
        }
    }
    for (const auto *list : {&z_stabilisers, &x_stabilisers}) {
        for (const auto &s : *list) {
            grid[2 * s.row][2 * s.col] = s.type == CheckType::Z ? 'Z' : 'X';
        }
    }
    std::ostringstream out;
    out << "distance " << distance << ": " << n_data << " data qubits (o), " << z_stabilisers.size()
        << " Z checks, " << x_stabilisers.size() << " X checks\n";
    for (const auto &line : grid) {
        out << line << "\n";
    }
    return out.str();
}

Syndrome syndrome_of(const CodeLayout &layout, const PauliString &error) {
    if (error.num_qubits() != layout.n_data) {
        throw std::invalid_argument(
            "error acts on " + std::to_string(error.num_qubits()) + " qubits but layout has " +
            std::to_string(layout.n_data));
    }
    Syndrome s(layout.checks_per_type());
    for (size_t k = 0; k < layout.z_stabilisers.size(); k++) {
        s.z_checks.set(k, error.xs.and_parity(layout.z_stabilisers[k].mask));
    }
    for (size_t k = 0; k < layout.x_stabilisers.size(); k++) {
        s.x_checks.set(k, error.zs.and_parity(layout.x_stabilisers[k].mask));
    }
    return s;
}

LogicalClass logical_class(const CodeLayout &layout, const PauliString &residual) {
    if (syndrome_of(layout, residual).any()) {
        throw std::invalid_argument("logical_class needs a zero-syndrome operator; strip the pure error first");
    }
    return make_logical_class(!commutes(residual, layout.logical_z), !commutes(residual, layout.logical_x));
}

}  // namespace qecnn
