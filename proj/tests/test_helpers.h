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

#ifndef QECNN_TESTS_TEST_HELPERS_H
#define QECNN_TESTS_TEST_HELPERS_H

#include "qecnn/layout.h"
#include "qecnn/rng.h"

namespace qecnn::testing {

/// Uniformly random Pauli over n qubits (each qubit I, X, Z or Y with
/// probability 1/4).
inline PauliString random_pauli(size_t n, Rng &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t v = rng.next();
        p.xs.set(q, v & 1);
        p.zs.set(q, (v >> 1) & 1);
    }
    return p;
}

/// Single Pauli on qubit q: 'X', 'Y' or 'Z'.
inline PauliString single(size_t n, size_t q, char pauli) {
    PauliString p(n);
    p.xs.set(q, pauli == 'X' || pauli == 'Y');
    p.zs.set(q, pauli == 'Z' || pauli == 'Y');
    return p;
}

/// Independent brute-force syndrome: anticommutation with each stabiliser's
/// support written out qubit by qubit.
inline Syndrome naive_syndrome(const CodeLayout &layout, const PauliString &e) {
    Syndrome s(layout.checks_per_type());
    for (size_t k = 0; k < layout.checks_per_type(); k++) {
        bool z_bit = false;
        for (size_t q : layout.z_stabilisers[k].support) {
            z_bit ^= e.xs.get(q);
        }
        bool x_bit = false;
        for (size_t q : layout.x_stabilisers[k].support) {
            x_bit ^= e.zs.get(q);
        }
        s.z_checks.set(k, z_bit);
        s.x_checks.set(k, x_bit);
    }
    return s;
}

}  // namespace qecnn::testing

#endif
