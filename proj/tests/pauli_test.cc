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

#include <gtest/gtest.h>

#include "test_helpers.h"

using namespace qecnn;
using qecnn::testing::random_pauli;

TEST(PauliString, parse_and_print) {
    PauliString p = PauliString::from_str("IXYZ_");
    EXPECT_EQ(p.num_qubits(), 5u);
    EXPECT_EQ(p.str(), "IXYZI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_THROW(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST(PauliString, self_product_is_identity) {
    PauliString x0 = PauliString::from_str("XII");
    EXPECT_TRUE(multiply(x0, x0).is_identity());
    Rng rng(3);
    for (int t = 0; t < 100; t++) {
        PauliString p = random_pauli(17, rng);
        EXPECT_TRUE(multiply(p, p).is_identity());
    }
}

TEST(PauliString, x_times_z_is_y) {
    EXPECT_EQ(multiply(PauliString::from_str("X"), PauliString::from_str("Z")).str(), "Y");
    PauliString a = PauliString::from_str("XZ");
    a *= PauliString::from_str("ZZ");
    EXPECT_EQ(a.str(), "YI");
}

TEST(PauliString, commutation) {
    EXPECT_FALSE(commutes(PauliString::from_str("XI"), PauliString::from_str("ZI")));
    EXPECT_TRUE(commutes(PauliString::from_str("XI"), PauliString::from_str("IZ")));
    EXPECT_TRUE(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
    EXPECT_FALSE(commutes(PauliString::from_str("Y"), PauliString::from_str("X")));
    EXPECT_TRUE(commutes(PauliString::from_str("Y"), PauliString::from_str("Y")));
}

TEST(PauliString, length_mismatch_throws) {
    EXPECT_THROW(multiply(PauliString(2), PauliString(3)), std::invalid_argument);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(PauliString, commutes_matches_qubitwise_count) {
    Rng rng(5);
    for (int t = 0; t < 200; t++) {
        PauliString a = random_pauli(9, rng), b = random_pauli(9, rng);
        int anti = 0;
        for (size_t q = 0; q < 9; q++) {
            bool ax = a.xs.get(q), az = a.zs.get(q), bx = b.xs.get(q), bz = b.zs.get(q);
            bool a_id = !ax && !az, b_id = !bx && !bz;
            bool same = ax == bx && az == bz;
            anti += !(a_id || b_id || same);
        }
        EXPECT_EQ(commutes(a, b), anti % 2 == 0);
    }
}

TEST(LogicalClass, composition_is_pauli_group_mod_phase) {
    using enum LogicalClass;
    EXPECT_EQ(compose(X, Z), Y);
    EXPECT_EQ(compose(Z, X), Y);
    EXPECT_EQ(compose(Y, X), Z);
    EXPECT_EQ(compose(Y, Z), X);
    for (auto c : {I, X, Z, Y}) {
        EXPECT_EQ(compose(c, c), I);
        EXPECT_EQ(compose(c, I), c);
    }
}

TEST(LogicalClass, packing_and_chars) {
    EXPECT_EQ(make_logical_class(false, false), LogicalClass::I);
    EXPECT_EQ(make_logical_class(true, false), LogicalClass::X);
    EXPECT_EQ(make_logical_class(false, true), LogicalClass::Z);
    EXPECT_EQ(make_logical_class(true, true), LogicalClass::Y);
    for (char c : {'I', 'X', 'Z', 'Y'}) {
        EXPECT_EQ(class_char(class_from_char(c)), c);
    }
    EXPECT_THROW(class_from_char('Q'), std::invalid_argument);
}
