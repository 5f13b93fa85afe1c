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

#include "qecnn/pauli.h"

#include <stdexcept>

namespace qecnn {

namespace {

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "PauliString length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < num_qubits(); k++) {
        w += xs.get(k) || zs.get(k);
    }
    return w;
}

PauliString PauliString::from_str(std::string_view text) {
    PauliString out(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                out.xs.set(k, true);
                break;
            case 'Z':
                out.zs.set(k, true);
                break;
            case 'Y':
                out.xs.set(k, true);
                out.zs.set(k, true);
                break;
            default:
                throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[k]) + "'");
        }
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr char chars[] = "IXZY";
    std::string out(num_qubits(), 'I');
    for (size_t k = 0; k < num_qubits(); k++) {
        out[k] = chars[xs.get(k) | (zs.get(k) << 1)];
    }
    return out;
}

PauliString &operator*=(PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    a.xs ^= b.xs;
    a.zs ^= b.zs;
    return a;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    PauliString out = a;
    out *= b;
    return out;
}

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return a.xs.and_parity(b.zs) == a.zs.and_parity(b.xs);
}

char class_char(LogicalClass c) {
    static constexpr char chars[] = "IXZY";
    return chars[class_index(c)];
}

LogicalClass class_from_char(char c) {
    switch (c) {
        case 'I':
            return LogicalClass::I;
        case 'X':
            return LogicalClass::X;
        case 'Z':
            return LogicalClass::Z;
        case 'Y':
            return LogicalClass::Y;
        default:
            throw std::invalid_argument("invalid logical class '" + std::string(1, c) + "'");
    }
}

}  // namespace qecnn
