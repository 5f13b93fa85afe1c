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

#ifndef QECNN_LAYOUT_H
#define QECNN_LAYOUT_H

#include <array>
#include <string>
#include <vector>

#include "qecnn/bits.h"
#include "qecnn/pauli.h"

namespace qecnn {

/// Which Pauli a check measures. Z checks detect X errors and vice versa.
enum class CheckType : uint8_t { Z = 0, X = 1 };

/// Corner slots of a plaquette, in grid orientation (row grows downward).
enum Corner : size_t { kNorthWest = 0, kNorthEast = 1, kSouthWest = 2, kSouthEast = 3 };
inline constexpr int kNoQubit = -1;

/// One stabiliser generator of the rotated surface code.
///
/// The plaquette at (row, col), 0 <= row, col <= d, touches the data qubits
/// (row-1, col-1), (row-1, col), (row, col-1), (row, col) that exist.
struct Stabiliser {
    CheckType type;
    int row;
    int col;
    std::array<int, 4> corners;  // data qubit index per Corner, or kNoQubit
    std::vector<size_t> support; // ascending
    BitVector mask;              // length n_data

    size_t weight() const {
        return support.size();
    }
};

/// Rotated surface code on a d x d grid of data qubits.
///
/// Data qubit (r, c) has index r*d + c. Plaquette (i, j) carries an X check
/// when i+j is even and a Z check when odd. Weight-two X checks sit on the
/// top and bottom edges, weight-two Z checks on the left and right edges, so
/// X-error chains run top to bottom and Z-error chains run left to right.
/// Within each type, stabilisers are ordered row-major by plaquette.
///
/// logical_x is X on column 0; logical_z is Z on row 0.
struct CodeLayout {
    int distance = 0;
    size_t n_data = 0;
    std::vector<Stabiliser> z_stabilisers;
    std::vector<Stabiliser> x_stabilisers;
    PauliString logical_x;
    PauliString logical_z;

    size_t checks_per_type() const {
        return z_stabilisers.size();
    }
    const std::vector<Stabiliser> &stabilisers(CheckType type) const {
        return type == CheckType::Z ? z_stabilisers : x_stabilisers;
    }
    size_t data_index(int row, int col) const {
        return static_cast<size_t>(row) * distance + col;
    }
    /// The stabiliser as a PauliString over the data qubits.
    PauliString stabiliser_pauli(CheckType type, size_t index) const;

    /// ASCII picture of the lattice.
    std::string diagram() const;
};

/// Throws std::invalid_argument unless d is odd and at least 3.
CodeLayout build_layout(int d);

/// One round of check outcomes. Bit i of z_checks is 1 iff the error
/// anticommutes with z_stabilisers[i].
struct Syndrome {
    BitVector z_checks;
    BitVector x_checks;

    Syndrome() = default;
    explicit Syndrome(size_t checks_per_type) : z_checks(checks_per_type), x_checks(checks_per_type) {
    }

    const BitVector &bits(CheckType type) const {
        return type == CheckType::Z ? z_checks : x_checks;
    }
    BitVector &bits(CheckType type) {
        return type == CheckType::Z ? z_checks : x_checks;
    }
    bool any() const {
        return z_checks.any() || x_checks.any();
    }
    Syndrome &operator^=(const Syndrome &other) {
        z_checks ^= other.z_checks;
        x_checks ^= other.x_checks;
        return *this;
    }
    bool operator==(const Syndrome &other) const = default;
};

Syndrome syndrome_of(const CodeLayout &layout, const PauliString &error);

/// Coset label of an operator with zero syndrome. Throws std::invalid_argument
/// if the syndrome is nonzero.
LogicalClass logical_class(const CodeLayout &layout, const PauliString &residual);

}  // namespace qecnn

#endif
