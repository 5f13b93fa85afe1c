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

// Circuit-level simulation: schedule structure and noiseless propagation.

#include <gtest/gtest.h>

#include <set>

#include "qecnn/noise.h"
#include "test_helpers.h"

using namespace qecnn;
using qecnn::testing::single;

class CircuitByDistance : public ::testing::TestWithParam<int> {};

TEST_P(CircuitByDistance, schedule_is_valid) {
    CodeLayout layout = build_layout(GetParam());
    CircuitSchedule schedule = build_circuit_schedule(layout);
    EXPECT_NO_THROW(validate_schedule(layout, schedule));
    EXPECT_EQ(schedule.n_qubits, layout.n_data * 2 - 1);
    EXPECT_EQ(schedule.num_steps, 6);
    for (const auto &a : schedule.ancillas) {
        const Stabiliser &s = layout.stabilisers(a.type)[a.check];
        EXPECT_EQ(a.cnots.size(), s.weight());
        for (const auto &g : a.cnots) {
            EXPECT_GE(g.step, 1);
            EXPECT_LE(g.step, 4);
        }
        EXPECT_EQ(a.prep_step, a.cnots.front().step - 1);
        EXPECT_EQ(a.meas_step, a.cnots.back().step + 1);
    }
}

TEST_P(CircuitByDistance, no_qubit_is_used_twice_in_a_step) {
    CodeLayout layout = build_layout(GetParam());
    CircuitSchedule schedule = build_circuit_schedule(layout);
    std::set<std::pair<int, size_t>> used;
    for (const auto &a : schedule.ancillas) {
        for (const auto &g : a.cnots) {
            EXPECT_TRUE(used.insert({g.step, g.control}).second);
            EXPECT_TRUE(used.insert({g.step, g.target}).second);
        }
    }
}

TEST_P(CircuitByDistance, noiseless_round_reproduces_syndrome_of_every_single_qubit_error) {
    CodeLayout layout = build_layout(GetParam());
    CircuitSchedule schedule = build_circuit_schedule(layout);
    Rng rng(1);
    for (size_t q = 0; q < layout.n_data; q++) {
        for (char pauli : {'X', 'Y', 'Z'}) {
            PauliString e = single(layout.n_data, q, pauli);
            PauliString frame(schedule.n_qubits);
            frame.xs.set(q, e.xs.get(q));
            frame.zs.set(q, e.zs.get(q));
            Syndrome s = simulate_circuit_round(layout, schedule, 0.0, frame, rng);
            ASSERT_EQ(s, syndrome_of(layout, e)) << pauli << q;
            // The data frame survives the round untouched.
            for (size_t k = 0; k < schedule.n_qubits; k++) {
                ASSERT_EQ(frame.xs.get(k), k == q && e.xs.get(q));
                ASSERT_EQ(frame.zs.get(k), k == q && e.zs.get(q));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Distances, CircuitByDistance, ::testing::Values(3, 5, 7));

TEST(Circuit, noiseless_identity_round) {
    CodeLayout layout = build_layout(3);
    CircuitSchedule schedule = build_circuit_schedule(layout);
    PauliString frame(schedule.n_qubits);
    Rng rng(2);
    EXPECT_FALSE(simulate_circuit_round(layout, schedule, 0.0, frame, rng).any());
    EXPECT_TRUE(frame.is_identity());
}

TEST(Circuit, data_x_next_to_boundary_z_check_lights_it) {
    CodeLayout layout = build_layout(3);
    CircuitSchedule schedule = build_circuit_schedule(layout);
    // Z0 is the weight-two check on qubits 0 and 3; qubit 0 touches no other Z check.
    ASSERT_EQ(layout.z_stabilisers[0].support, (std::vector<size_t>{0, 3}));
    PauliString frame(schedule.n_qubits);
    frame.xs.set(0, true);
    Rng rng(3);
    Syndrome s = simulate_circuit_round(layout, schedule, 0.0, frame, rng);
    EXPECT_EQ(s.z_checks.set_indices(), (std::vector<size_t>{0}));
    EXPECT_TRUE(s.x_checks.none());
}

TEST(Circuit, preseeded_error_repeats_every_round) {
    CodeLayout layout = build_layout(3);
    CircuitSchedule schedule = build_circuit_schedule(layout);
    Rng rng(4);
    for (size_t q = 0; q < 9; q++) {
        PauliString e = single(9, q, "XYZ"[q % 3]);
        Experiment ex = run_ft_circuit_experiment(layout, schedule, 0.0, rng, e);
        ASSERT_EQ(ex.record.rounds.size(), 4u);
        for (const auto &round : ex.record.rounds) {
            ASSERT_EQ(round, syndrome_of(layout, e));
        }
        ASSERT_EQ(ex.cumulative_error, e);
    }
}

TEST(Circuit, rejects_bad_frames_and_schedules) {
    CodeLayout layout = build_layout(3);
    CircuitSchedule schedule = build_circuit_schedule(layout);
    Rng rng(5);
    PauliString wrong(9);
    EXPECT_THROW(simulate_circuit_round(layout, schedule, 0.1, wrong, rng), std::invalid_argument);
    EXPECT_THROW(run_ft_circuit_experiment(layout, schedule, 0.0, rng, PauliString(17)), std::invalid_argument);

    CircuitSchedule clash = schedule;
    clash.ancillas[1].cnots[0].step = clash.ancillas[0].cnots[0].step;
    clash.ancillas[1].cnots[0] = clash.ancillas[0].cnots[0];
    EXPECT_THROW(validate_schedule(layout, clash), std::invalid_argument);

    CircuitSchedule missing = schedule;
    missing.ancillas[2].cnots.pop_back();
    EXPECT_THROW(validate_schedule(layout, missing), std::invalid_argument);

    EXPECT_THROW(validate_schedule(build_layout(5), schedule), std::invalid_argument);
}

TEST(Circuit, noisy_rounds_leave_ancillas_clean) {
    CodeLayout layout = build_layout(3);
    CircuitSchedule schedule = build_circuit_schedule(layout);
    Rng rng(6);
    PauliString frame(schedule.n_qubits);
    size_t lit = 0;
    for (int t = 0; t < 2000; t++) {
        lit += simulate_circuit_round(layout, schedule, 0.02, frame, rng).any();
        for (size_t a = layout.n_data; a < schedule.n_qubits; a++) {
            ASSERT_FALSE(frame.xs.get(a) || frame.zs.get(a));
        }
    }
    EXPECT_GT(lit, 0u);
}
