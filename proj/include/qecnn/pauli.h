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

#ifndef QECNN_PAULI_H
#define QECNN_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "qecnn/bits.h"

namespace qecnn {

/// An n-qubit Pauli operator with the phase dropped. A qubit with both its
/// x and z bit set carries a Y.
struct PauliString {
    BitVector xs;
    BitVector zs;

    PauliString() = default;
    explicit PauliString(size_t num_qubits) : xs(num_qubits), zs(num_qubits) {
    }

    size_t num_qubits() const {
        return xs.size();
    }
    bool is_identity() const {
        return xs.none() && zs.none();
    }
    size_t weight() const;

    /// Parses e.g. "IXYZ_" ('_' and 'I' are identity).
    static PauliString from_str(std::string_view text);
    std::string str() const;

    bool operator==(const PauliString &other) const = default;
};

/// Phase-free product: XOR of the x parts and of the z parts.
PauliString multiply(const PauliString &a, const PauliString &b);
PauliString &operator*=(PauliString &a, const PauliString &b);

/// True iff the symplectic inner product a.x*b.z + a.z*b.x is even.
bool commutes(const PauliString &a, const PauliString &b);

/// Logical coset label. The underlying value packs (x_flip | z_flip << 1),
/// so the enumeration order I, X, Z, Y doubles as the network class order.
enum class LogicalClass : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr LogicalClass make_logical_class(bool x_flip, bool z_flip) {
    return static_cast<LogicalClass>(static_cast<uint8_t>(x_flip) | (static_cast<uint8_t>(z_flip) << 1));
}
inline constexpr bool x_flip(LogicalClass c) {
    return static_cast<uint8_t>(c) & 1;
}
inline constexpr bool z_flip(LogicalClass c) {
    return static_cast<uint8_t>(c) & 2;
}
inline constexpr size_t class_index(LogicalClass c) {
    return static_cast<size_t>(c);
}
/// Pauli group multiplication modulo phase (X*Z = Y, g*g = I).
inline constexpr LogicalClass compose(LogicalClass a, LogicalClass b) {
    return static_cast<LogicalClass>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
char class_char(LogicalClass c);
LogicalClass class_from_char(char c);

}  // namespace qecnn

#endif
